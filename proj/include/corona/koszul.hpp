#pragma once

#include <cstddef>
#include <vector>

#include "corona/rational_function.hpp"

namespace corona {

/// Strictly increasing k-tuples from {0..n-1} in lexicographic order.
class WedgeBasis {
 public:
  /// DimensionError unless 1 <= n and 0 <= k <= n.
  WedgeBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  /// Position of an increasing tuple. DimensionError if absent.
  std::size_t index(const std::vector<int>& tuple) const;

 private:
  int n_, k_;
  std::vector<std::vector<int>> tuples_;
};

/// Q_A^(k): grade k+1 -> grade k, stored as a coordinate list.
class QOperator {
 public:
  struct Entry {
    std::size_t row;     ///< grade-k index
    std::size_t col;     ///< grade-(k+1) index
    int sign;            ///< +1 or -1
    std::size_t source;  ///< the entry is sign * A[source]
  };

  QOperator(std::vector<GRat> A, int k);

  int grade() const { return k_; }
  int n() const { return static_cast<int>(A_.size()); }
  const std::vector<GRat>& source_vector() const { return A_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GRat value(const Entry& e) const { return e.sign > 0 ? A_[e.source] : -A_[e.source]; }
  /// Row-major dense matrix.
  std::vector<std::vector<GRat>> dense() const;
  std::vector<GRat> apply(const std::vector<GRat>& x) const;

 private:
  std::vector<GRat> A_;
  int k_;
  std::size_t rows_, cols_;
  std::vector<Entry> entries_;
};

/// Q_A^(k); DimensionError unless 0 <= k <= n-1.
inline QOperator q_matrix(const std::vector<GRat>& A, int k) { return QOperator(A, k); }

/// conj(A) ∧ w for a grade-k wedge vector w; returns grade k+1.
std::vector<GRat> q_star_apply(const std::vector<GRat>& A, const std::vector<GRat>& w, int k);

/// Q_A^(k) Q_A^(k+1) == 0 exactly. DimensionError unless k+1 <= n-1.
bool check_range_kernel(const std::vector<GRat>& A, int k);

/// (A·B) I == Bᵀ A + Q_A Q_Bᵀ exactly, with grade-1 operators.
bool check_rank_one_identity(const std::vector<GRat>& A, const std::vector<GRat>& B);

/// Q_{F(z)}^(k) X(z) for a grade-(k+1) function tuple X; result has grade k.
VecFn q_apply_vecfn(const VecFn& F, const VecFn& X, int k = 1);

/// Q_{F(z)}^(k)ᵀ Y(z) for a grade-k function tuple Y; result has grade k+1.
VecFn q_transpose_apply(const VecFn& F, const VecFn& Y, int k = 1);

}  // namespace corona
