#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corona/gaussian_rational.hpp"

namespace corona {

/// Dense univariate polynomial in z with Gaussian-rational coefficients.
///
/// coeffs()[j] multiplies z^j. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(GRat c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(GRat(c)) {}  // NOLINT
  explicit Poly(std::vector<GRat> coeffs);
  Poly(std::initializer_list<GRat> coeffs) : Poly(std::vector<GRat>(coeffs)) {}

  /// c * z^power
  static Poly monomial(const GRat& c, int power);
  static Poly z() { return monomial(GRat(1), 1); }

  const std::vector<GRat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of z^j (zero past the degree).
  GRat coeff(int j) const;
  GRat leading() const;
  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;

  GRat eval(const GRat& z) const;
  std::complex<double> eval(std::complex<double> z) const;

  Poly derivative() const;
  Poly conj_coeffs() const;
  /// z^deg * p(1/z) for the given deg >= degree().
  Poly reversed(int deg) const;
  /// p(z)·z^m
  Poly shift(int m) const;
  /// p(q(z)), Horner in q.
  Poly compose(const Poly& q) const;
  /// p(z^d)
  Poly inflate(int d) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GRat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GRat& s) { return a *= s; }
  friend Poly operator*(const GRat& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim();
  std::vector<GRat> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws DomainError if b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// a / b when the remainder vanishes; NonDivisibleError otherwise.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  ///< monic gcd (or 0)
  Poly s;  ///< s*a + t*b == g
  Poly t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// Multivariate extended Euclid: returns (g, u) with sum u[i]*p[i] == g == monic gcd.
std::pair<Poly, std::vector<Poly>> extended_gcd(std::span<const Poly> p);

}  // namespace corona
