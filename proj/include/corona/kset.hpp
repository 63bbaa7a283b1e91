#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "corona/rational_function.hpp"

namespace corona {

/// Finite set of positive integers, kept sorted and distinct.
class KSet {
 public:
  KSet() = default;
  /// Sorts and deduplicates; throws InvalidKError on a non-positive element.
  explicit KSet(std::vector<int> elements);

  const std::vector<int>& elements() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  bool contains(int j) const;
  /// Largest element k_p; nullopt for the empty set.
  std::optional<int> max() const;
  /// K with its largest element removed.
  KSet without_max() const;
  /// The first `count` elements {k_1, ..., k_count}.
  KSet prefix(std::size_t count) const;

  friend bool operator==(const KSet&, const KSet&) = default;

 private:
  std::vector<int> e_;
};

struct AlgebraVerdict {
  bool is_algebra = true;
  /// (j, k) with j, k not in K but j + k in K.
  std::optional<std::pair<int, int>> counterexample;
};

/// H_K is an algebra iff the complement of K in the positive integers is
/// closed under addition. Only sums up to max(K) can land in K.
AlgebraVerdict is_algebra_set(const KSet& K);

/// K - m = {j - m : j in K, j > m}. InvalidKError if m is in K or m < 1.
KSet k_minus(const KSet& K, int m);

/// Complement of an infinite K written as {n_1 d, ..., n_p d} together with
/// every multiple of d from N0 d on.
struct SemigroupData {
  int d = 1;
  std::vector<int> n_values;  ///< increasing, gcd 1
  int N0 = 1;                 ///< > n_p

  /// Whether x >= 1 lies in the complement of K.
  bool in_complement(long x) const;
};

struct Decomposition {
  SemigroupData data;
  KSet K1;  ///< gaps of the numerical semigroup generated by generators / d
};

/// Structure of K when its complement is the additive semigroup generated by
/// `complement_generators`. Throws InvalidKError on an empty or non-positive set.
Decomposition decompose(const std::vector<int>& complement_generators);

/// F1 with F1(z^d) == f. NotReducibleError if num or den is not a polynomial in z^d.
RFunc reduce_to_finite(const RFunc& f, int d);
/// f(z^d)
RFunc expand_from_finite(const RFunc& f1, int d);

/// taylor_coeff(f, j) == 0 for every j in K.
bool is_hk_member(const RFunc& f, const KSet& K);
/// Membership for an infinite K given by its decomposition.
bool is_hk_member(const RFunc& f, const Decomposition& K);

}  // namespace corona
