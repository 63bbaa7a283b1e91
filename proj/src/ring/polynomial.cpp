#include "corona/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "corona/errors.hpp"

namespace corona {

Poly::Poly(GRat c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<GRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const GRat& c, int power) {
  if (power < 0) throw DomainError("negative monomial power");
  if (c.is_zero()) return {};
  std::vector<GRat> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GRat Poly::coeff(int j) const {
  if (j < 0 || j > degree()) return {};
  return c_[static_cast<std::size_t>(j)];
}

GRat Poly::leading() const { return c_.empty() ? GRat() : c_.back(); }

int Poly::valuation() const {
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return static_cast<int>(j);
  return -1;
}

GRat Poly::eval(const GRat& z) const {
  GRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GRat> d(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * GRat(static_cast<long>(j));
  return Poly(std::move(d));
}

Poly Poly::conj_coeffs() const {
  std::vector<GRat> d;
  d.reserve(c_.size());
  for (const auto& c : c_) d.push_back(c.conj());
  return Poly(std::move(d));
}

Poly Poly::reversed(int deg) const {
  if (deg < degree()) throw DomainError("reversal degree below polynomial degree");
  std::vector<GRat> d(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= degree(); ++j) d[static_cast<std::size_t>(deg - j)] = c_[static_cast<std::size_t>(j)];
  return Poly(std::move(d));
}

Poly Poly::shift(int m) const {
  if (m < 0) throw DomainError("negative shift");
  if (is_zero() || m == 0) return *this;
  std::vector<GRat> d(static_cast<std::size_t>(m));
  d.insert(d.end(), c_.begin(), c_.end());
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::inflate(int d) const {
  if (d < 1) throw DomainError("inflation factor must be positive");
  if (is_zero()) return {};
  std::vector<GRat> v(static_cast<std::size_t>(degree() * d) + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) v[j * static_cast<std::size_t>(d)] = c_[j];
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const GRat inv = GRat(1) / leading();
  return *this * inv;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GRat> d(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(d));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GRat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool paren = !c_[j].is_real() || sgn(c_[j].re()) < 0;
    if (j == 0) {
      os << (paren ? "(" + c_[j].str() + ")" : c_[j].str());
      continue;
    }
    if (c_[j] != GRat(1)) os << (paren ? "(" + c_[j].str() + ")" : c_[j].str()) << "*";
    os << "z";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GRat> rem = a.coeffs();
  const int db = b.degree();
  const GRat inv_lead = GRat(1) / b.leading();
  std::vector<GRat> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    const GRat q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NonDivisibleError("(" + a.str() + ") is not divisible by (" + b.str() + ")");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
  Poly r0 = a, r1 = b;
  Poly s0 = GRat(1), s1, t0, t1 = GRat(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {};
  const GRat inv = GRat(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<Poly, std::vector<Poly>> extended_gcd(std::span<const Poly> p) {
  std::vector<Poly> u(p.size());
  Poly g;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (g.is_zero()) {
      const GRat inv = GRat(1) / p[i].leading();
      g = p[i] * inv;
      u[i] = Poly(inv);
      continue;
    }
    auto e = extended_gcd(g, p[i]);
    for (std::size_t j = 0; j < i; ++j) u[j] *= e.s;
    u[i] = e.t;
    g = e.g;
  }
  return {g, u};
}

}  // namespace corona
