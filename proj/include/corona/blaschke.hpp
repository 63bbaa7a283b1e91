#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "corona/kset.hpp"
#include "corona/rational_function.hpp"

namespace corona {

/// Finite Blaschke product with zeros α (|α| < 1, repeats allowed).
///
/// Each zero contributes (α − z)/(1 − conj(α) z), except α = 0 which contributes z.
/// The unimodular normalization |α|/α is dropped so that all coefficients stay
/// Gaussian rationals; it changes B only by a unimodular constant.
class Blaschke {
 public:
  /// Throws DomainError if a zero has |α| >= 1 or the zero list is empty.
  explicit Blaschke(std::vector<GRat> zeros);

  const std::vector<GRat>& zeros() const { return zeros_; }
  /// Product of the zero factors (α − z), or z for α = 0.
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  const RFunc& as_rfunc() const { return f_; }

 private:
  std::vector<GRat> zeros_;
  Poly num_, den_;
  RFunc f_;
};

/// DomainError for |z| > 1.
std::complex<double> blaschke_eval(const Blaschke& B, std::complex<double> z);

/// g with f == B g. NonDivisibleError unless f vanishes on Z(B) with multiplicity.
RFunc divide_by_blaschke(const RFunc& f, const Blaschke& B);

/// f == Σ_{j<J} constants[j] B^j + B^J tail.
struct BAdic {
  std::vector<GRat> constants;
  RFunc tail;
};

/// NotExpandableError if some level has no constant term, DomainError unless 1 <= J <= 64.
BAdic badic_expand(const RFunc& f, const Blaschke& B, int J);
RFunc reconstruct(const BAdic& e, const Blaschke& B);

struct CPlusBMembership {
  bool member = false;
  GRat c;
  RFunc g;  ///< f == c + B g when member
  /// When not a member: the two zeros of B where f takes different values,
  /// or the same zero twice when f − f(α) fails to vanish to full multiplicity.
  std::optional<std::pair<GRat, GRat>> failing_zeros;
};

CPlusBMembership is_cplusb_member(const RFunc& f, const Blaschke& B);

/// f == Σ_{j not in K, j < k_p} a_j B^j + B^{k_p+1} g for constants a_j and g in H∞.
bool is_hkb_member(const RFunc& f, const KSet& K, const Blaschke& B);

}  // namespace corona
