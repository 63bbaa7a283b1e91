#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace corona {

/// Exact complex scalar re + i*im with re, im in Q.
class GRat {
 public:
  GRat() = default;
  GRat(long re) : re_(re) {}  // NOLINT: implicit integer promotion is intended
  GRat(mpq_class re, mpq_class im = 0);

  /// Parses "p/q" (or "p") strings for each part.
  static GRat parse(const std::string& re, const std::string& im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GRat conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GRat& operator+=(const GRat& o);
  GRat& operator-=(const GRat& o);
  GRat& operator*=(const GRat& o);
  GRat& operator/=(const GRat& o);

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
  GRat operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GRat& a, const GRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

  /// Human-readable form such as "1/2", "3i", "1/2-3/4i".
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GRat& x);

/// Canonical string of a rational: "p" or "p/q".
std::string rat_str(const mpq_class& q);

/// Parses "p", "-p/q"; throws ParseError on anything else.
mpq_class parse_rational(const std::string& s);

mpq_class factorial(unsigned k);

}  // namespace corona
