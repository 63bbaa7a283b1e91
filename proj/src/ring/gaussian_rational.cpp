#include "corona/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "corona/errors.hpp"

namespace corona {

GRat::GRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GRat GRat::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

GRat& GRat::operator+=(const GRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GRat& GRat::operator-=(const GRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GRat& GRat::operator*=(const GRat& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GRat& GRat::operator/=(const GRat& o) {
  if (o.is_zero()) throw DomainError("GRat division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class d = o.norm2();
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

std::string GRat::str() const {
  if (sgn(im_) == 0) return rat_str(re_);
  std::string imag = (im_ == 1) ? "" : (im_ == -1) ? "-" : rat_str(im_);
  if (sgn(re_) == 0) return imag + "i";
  if (sgn(im_) > 0) imag = "+" + imag;
  return rat_str(re_) + imag + "i";
}

std::ostream& operator<<(std::ostream& os, const GRat& x) { return os << x.str(); }

mpq_class parse_rational(const std::string& s) {
  // digits, optional leading '-', optional single '/' followed by a nonzero denominator
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  const std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) throw ParseError("not a rational number: '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("not a rational number: '" + s + "'");
    ++i;
    const std::size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) throw ParseError("not a rational number: '" + s + "'");
  }
  std::string t = (s[0] == '+') ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("not a rational number: '" + s + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

mpq_class factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return mpq_class(f);
}

}  // namespace corona
