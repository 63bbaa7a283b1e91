#include "corona/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "corona/errors.hpp"

namespace corona {

namespace {

constexpr double kUnitCircleTol = 1e-9;

// All roots of q strictly inside the open unit disk (Schur-Cohn).
bool schur_stable(Poly q) {
  while (q.degree() >= 1) {
    const int n = q.degree();
    const GRat q0 = q.coeff(0);
    const GRat qn = q.leading();
    if (qn.norm2() <= q0.norm2()) return false;
    const Poly star = q.conj_coeffs().reversed(n);
    Poly t = q * qn.conj() - star * q0;
    // constant term cancels by construction
    std::vector<GRat> c(t.coeffs().begin() + 1, t.coeffs().end());
    q = Poly(std::move(c)).monic();
  }
  return true;
}

// Floating-point root moduli, or empty if the coefficients do not fit a double.
std::vector<double> float_root_moduli(const Poly& p) {
  Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1> c(p.degree() + 1);
  const Poly m = p.monic();
  for (int j = 0; j <= m.degree(); ++j) {
    c(j) = m.coeffs()[static_cast<std::size_t>(j)].to_complex();
    if (!std::isfinite(c(j).real()) || !std::isfinite(c(j).imag())) return {};
  }
  Eigen::PolynomialSolver<std::complex<double>, Eigen::Dynamic> solver(c);
  std::vector<double> mod;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) mod.push_back(std::abs(solver.roots()(i)));
  return mod;
}

}  // namespace

bool den_admissible(const Poly& p) {
  if (p.is_zero()) throw DomainError("den_admissible: zero polynomial");
  if (p.degree() == 0) return true;
  const bool exact = !p.coeff(0).is_zero() && schur_stable(p.reversed(p.degree()));

  const auto moduli = float_root_moduli(p);
  if (moduli.empty()) return exact;
  const bool floating = std::all_of(moduli.begin(), moduli.end(), [](double r) { return r > 1.0; });
  if (floating != exact) {
    const bool near_circle = std::any_of(moduli.begin(), moduli.end(),
                                         [](double r) { return std::abs(r - 1.0) < kUnitCircleTol; });
    if (!near_circle)
      throw IndeterminateError("root-location test disagrees with the float root solve for " + p.str());
  }
  return exact;
}

RFunc RFunc::reduce(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) return RFunc();
  if (den.degree() > 0) {
    const Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const GRat d0 = den.coeff(0);
  if (d0.is_zero()) throw DomainError("pole at the origin");
  if (d0 != GRat(1)) {
    const GRat inv = GRat(1) / d0;
    num *= inv;
    den *= inv;
  }
  return RFunc(std::move(num), std::move(den), Normalized{});
}

RFunc RFunc::coprime(Poly num, Poly den) {
  if (num.is_zero()) return RFunc();
  const GRat d0 = den.coeff(0);
  if (d0.is_zero()) throw DomainError("pole at the origin");
  if (d0 != GRat(1)) {
    const GRat inv = GRat(1) / d0;
    num *= inv;
    den *= inv;
  }
  return RFunc(std::move(num), std::move(den), Normalized{});
}

RFunc RFunc::make(const Poly& num, const Poly& den) {
  RFunc f = reduce(num, den);
  if (f.den_.degree() > 0 && !den_admissible(f.den_))
    throw DomainError("denominator " + f.den_.str() + " has a root in the closed unit disk");
  return f;
}

GRat RFunc::eval_exact(const GRat& z) const {
  const GRat d = den_.eval(z);
  if (d.is_zero()) throw DomainError("pole at evaluation point");
  return num_.eval(z) / d;
}

RFunc& RFunc::operator+=(const RFunc& o) {
  if (o.is_polynomial()) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = Poly(GRat(1));
    return *this;
  }
  if (is_polynomial()) return *this = RFunc(o) += *this;
  if (den_ == o.den_) return *this = reduce(num_ + o.num_, den_);
  const Poly g = gcd(den_, o.den_);
  if (g.degree() == 0) return *this = coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  const Poly a = exact_div(den_, g);
  const Poly b = exact_div(o.den_, g);
  return *this = reduce(num_ * b + o.num_ * a, a * o.den_);
}

RFunc& RFunc::operator-=(const RFunc& o) { return *this += -o; }

RFunc& RFunc::operator*=(const RFunc& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    if (num_.is_zero()) den_ = Poly(GRat(1));
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = RFunc();
  // cross-cancel so the product needs no further gcd
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (d2.degree() > 0) {
    const Poly g = gcd(n1, d2);
    if (g.degree() > 0) n1 = exact_div(n1, g), d2 = exact_div(d2, g);
  }
  if (d1.degree() > 0) {
    const Poly g = gcd(n2, d1);
    if (g.degree() > 0) n2 = exact_div(n2, g), d1 = exact_div(d1, g);
  }
  return *this = coprime(n1 * n2, d1 * d2);
}

RFunc RFunc::operator-() const { return RFunc(-num_, den_, Normalized{}); }

std::string RFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RFunc divide(const RFunc& a, const RFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero function");
  RFunc q;
  try {
    q = RFunc::reduce(a.num_ * b.den_, a.den_ * b.num_);
  } catch (const DomainError&) {
    throw NonDivisibleError("(" + a.str() + ") / (" + b.str() + ") has a pole at the origin");
  }
  if (q.den_.degree() > 0 && !den_admissible(q.den_))
    throw NonDivisibleError("(" + a.str() + ") / (" + b.str() + ") has a pole in the closed unit disk");
  return q;
}

RFunc compose(const RFunc& f, const RFunc& g) {
  // homogenize: f(p/q) = sum n_k p^k q^(N-k) / sum d_k p^k q^(N-k)
  const int N = std::max(f.num_.degree(), f.den_.degree());
  const Poly& p = g.num_;
  const Poly& q = g.den_;
  auto homogenized = [&](const Poly& c) {
    Poly acc;
    Poly pk = GRat(1);
    for (int k = 0; k <= N; ++k) {
      if (!c.coeff(k).is_zero()) {
        Poly qpow = GRat(1);
        for (int j = 0; j < N - k; ++j) qpow *= q;
        acc += pk * qpow * c.coeff(k);
      }
      pk *= p;
    }
    return acc;
  };
  Poly num = homogenized(f.num_);
  Poly den = homogenized(f.den_);
  if (den.is_zero() || den.coeff(0).is_zero())
    throw NonDivisibleError("composition has a pole at the origin");
  RFunc r = RFunc::reduce(std::move(num), std::move(den));
  if (r.den_.degree() > 0 && !den_admissible(r.den_))
    throw NonDivisibleError("composition has a pole in the closed unit disk");
  return r;
}

RFunc pow(const RFunc& f, unsigned e) {
  RFunc result(1);
  RFunc base = f;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> eval(const RFunc& f, std::complex<double> z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("evaluation point outside the closed unit disk");
  return f.num().eval(z) / f.den().eval(z);
}

std::vector<GRat> taylor_series(const RFunc& f, int order) {
  if (order < 0) return {};
  std::vector<GRat> c(static_cast<std::size_t>(order) + 1);
  const Poly& num = f.num();
  const Poly& den = f.den();
  const GRat inv_d0 = GRat(1) / den.coeff(0);
  for (int k = 0; k <= order; ++k) {
    GRat acc = num.coeff(k);
    for (int i = 1; i <= std::min(k, den.degree()); ++i) acc -= den.coeff(i) * c[static_cast<std::size_t>(k - i)];
    c[static_cast<std::size_t>(k)] = acc * inv_d0;
  }
  return c;
}

GRat taylor_coeff(const RFunc& f, int j) {
  if (j < 0) return {};
  return taylor_series(f, j).back();
}

int order_at_zero(const RFunc& f) { return f.num().valuation(); }

RFunc divide_by_z_power(const RFunc& f, int m) {
  if (m == 0 || f.is_zero()) return f;
  if (order_at_zero(f) < m)
    throw NonDivisibleError(f.str() + " does not vanish to order " + std::to_string(m) + " at 0");
  std::vector<GRat> c(f.num().coeffs().begin() + m, f.num().coeffs().end());
  return RFunc::make(Poly(std::move(c)), f.den());
}

RFunc times_z_power(const RFunc& f, int m) { return f * RFunc(Poly::monomial(GRat(1), m)); }

RFunc inner(const VecFn& F, const VecFn& G) {
  if (F.size() != G.size()) throw DimensionError("inner product of tuples of different length");
  RFunc acc;
  for (std::size_t i = 0; i < F.size(); ++i) acc += F[i] * G[i];
  return acc;
}

VecFn operator+(const VecFn& F, const VecFn& G) {
  if (F.size() != G.size()) throw DimensionError("sum of tuples of different length");
  VecFn r(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) r[i] = F[i] + G[i];
  return r;
}

VecFn operator-(const VecFn& F, const VecFn& G) {
  if (F.size() != G.size()) throw DimensionError("difference of tuples of different length");
  VecFn r(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) r[i] = F[i] - G[i];
  return r;
}

VecFn operator*(const RFunc& s, const VecFn& F) {
  VecFn r;
  r.reserve(F.size());
  for (const auto& f : F) r.push_back(s * f);
  return r;
}

VecFn zero_vec(std::size_t n) { return VecFn(n); }

bool is_zero(const VecFn& F) {
  return std::all_of(F.begin(), F.end(), [](const RFunc& f) { return f.is_zero(); });
}

std::vector<GRat> derivative_at_zero(const VecFn& F, int k) {
  const GRat kfact(factorial(static_cast<unsigned>(k)));
  std::vector<GRat> d;
  d.reserve(F.size());
  for (const auto& f : F) d.push_back(taylor_coeff(f, k) * kfact);
  return d;
}

std::vector<GRat> value_at_zero(const VecFn& F) { return derivative_at_zero(F, 0); }

std::vector<std::complex<double>> GridSpec::points() const {
  std::vector<std::complex<double>> pts;
  pts.reserve(size());
  for (double r : radii)
    for (int k = 0; k < points_per_circle; ++k)
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * k / points_per_circle));
  return pts;
}

double sup_norm_estimate(const VecFn& F, const GridSpec& grid) {
  if (grid.size() < 64) throw DomainError("sup-norm grid needs at least 64 points");
  struct Coeffs {
    std::vector<std::complex<double>> num, den;
  };
  std::vector<Coeffs> cf;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    Coeffs c;
    for (const auto& a : f.num().coeffs()) c.num.push_back(a.to_complex());
    for (const auto& a : f.den().coeffs()) c.den.push_back(a.to_complex());
    cf.push_back(std::move(c));
  }
  auto horner = [](const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  double best = 0.0;
  for (const auto z : grid.points()) {
    double s = 0.0;
    for (const auto& c : cf) s += std::norm(horner(c.num, z) / horner(c.den, z));
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

mpq_class norm2(const std::vector<GRat>& v) {
  mpq_class s = 0;
  for (const auto& x : v) s += x.norm2();
  return s;
}

double l2_norm(const std::vector<GRat>& v) { return std::sqrt(norm2(v).get_d()); }

}  // namespace corona
