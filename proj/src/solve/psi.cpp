#include "corona/psi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "corona/errors.hpp"

namespace corona {

PsiFunction PsiFunction::power(double p) {
  if (!(p > 0) || !std::isfinite(p)) throw DomainError("power psi needs a finite exponent p > 0");
  PsiFunction f;
  f.kind_ = Kind::Power;
  f.p_ = p;
  return f;
}

PsiFunction PsiFunction::iterated_log(int levels, double epsilon) {
  if (levels < 0 || levels > 3) throw DomainError("iterated-log psi supports 0..3 levels");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw DomainError("iterated-log psi needs epsilon > 0");
  PsiFunction f;
  f.kind_ = Kind::IteratedLog;
  f.levels_ = levels;
  f.eps_ = epsilon;
  return f;
}

PsiFunction PsiFunction::user_table(std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw DomainError("psi table is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [t, v] = points[i];
    if (!(t >= 0 && t <= 1) || !(v >= 0 && v <= 1)) throw DomainError("psi table entries must lie in [0, 1]");
    if (i > 0 && (t <= points[i - 1].first || v < points[i - 1].second))
      throw DomainError("psi table must have ascending t and non-decreasing values");
  }
  PsiFunction f;
  f.kind_ = Kind::UserTable;
  f.table_ = std::move(points);
  return f;
}

double PsiFunction::operator()(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  switch (kind_) {
    case Kind::Power:
      return std::pow(t, p_);
    case Kind::IteratedLog: {
      if (t == 0.0) return 0.0;
      double c = 1.0;
      for (int i = 0; i < levels_; ++i) c = std::exp(c);
      double ell = c - 2.0 * std::log(t);
      double log_denominator = 0.0;
      for (int i = 0; i < levels_; ++i) {
        log_denominator += std::log(ell);
        ell = std::log(ell);
      }
      log_denominator += (1.0 + eps_) * std::log(ell);
      return std::exp(-log_denominator);
    }
    case Kind::UserTable: {
      if (t <= table_.front().first) return table_.front().second;
      if (t >= table_.back().first) return table_.back().second;
      const auto hi = std::upper_bound(table_.begin(), table_.end(), t,
                                       [](double x, const auto& p) { return x < p.first; });
      const auto lo = hi - 1;
      const double w = (t - lo->first) / (hi->first - lo->first);
      return lo->second + w * (hi->second - lo->second);
    }
  }
  return 0.0;
}

std::string PsiFunction::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Power:
      os << "t^" << p_;
      break;
    case Kind::IteratedLog:
      os << "iterated_log(levels=" << levels_ << ", epsilon=" << eps_ << ")";
      break;
    case Kind::UserTable:
      os << "user_table(" << table_.size() << " points)";
      break;
  }
  return os.str();
}

double PsiFunction::integrability_integral() const {
  // substitute t = e^{-s}: ∫ ψ(t)/t dt = ∫ ψ(e^{-s}) ds over [0, 12 ln 10]
  const double smax = 12.0 * std::log(10.0);
  auto f = [this](double s) { return (*this)(std::exp(-s)); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, smax, 15, 1e-10);
}

}  // namespace corona
