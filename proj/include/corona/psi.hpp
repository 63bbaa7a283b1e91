#pragma once

#include <string>
#include <utility>
#include <vector>

namespace corona {

/// Non-decreasing ψ: [0, 1] -> [0, 1] from the pointwise hypothesis FF*ψ(FF*) >= |h|.
class PsiFunction {
 public:
  enum class Kind { Power, IteratedLog, UserTable };

  /// t^p, p > 0.
  static PsiFunction power(double p);
  /// 1 / (ℓ_1 ℓ_2 ... ℓ_levels · ℓ_{levels+1}^{1+ε}) with ℓ_1 = c − 2 ln t, ℓ_{j+1} = ln ℓ_j,
  /// and c chosen so that ℓ_{levels+1}(1) = 1. Requires 0 <= levels <= 3, ε > 0.
  static PsiFunction iterated_log(int levels, double epsilon);
  /// Piecewise-linear through (t, ψ) points; clamped outside the table.
  /// Throws DomainError unless t ascends within [0, 1] and ψ is non-decreasing in [0, 1].
  static PsiFunction user_table(std::vector<std::pair<double, double>> points);

  Kind kind() const { return kind_; }
  double exponent() const { return p_; }
  int levels() const { return levels_; }
  double epsilon() const { return eps_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

  double operator()(double t) const;
  std::string describe() const;

  /// ∫ ψ(t)/t dt over [1e-12, 1] by adaptive Gauss–Kronrod quadrature.
  double integrability_integral() const;

 private:
  PsiFunction() = default;
  Kind kind_ = Kind::Power;
  double p_ = 1.0;
  int levels_ = 0;
  double eps_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

}  // namespace corona
