#include "corona/koszul.hpp"

#include <algorithm>
#include <string>

#include "corona/errors.hpp"

namespace corona {

namespace {

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Calls fn(row, col, sign, i) for every pair π (grade k), σ = π ∪ {i} (grade k+1), i ∉ π.
// sign = (-1)^{#{p in π : p < i}} from moving e_i into place.
template <class Fn>
void for_each_pattern(const WedgeBasis& lo, const WedgeBasis& hi, Fn&& fn) {
  for (std::size_t r = 0; r < lo.size(); ++r) {
    const auto& pi = lo.tuples()[r];
    for (int i = 0; i < lo.n(); ++i) {
      if (std::binary_search(pi.begin(), pi.end(), i)) continue;
      std::vector<int> sigma = pi;
      const auto pos = std::lower_bound(sigma.begin(), sigma.end(), i);
      const auto before = pos - sigma.begin();
      sigma.insert(pos, i);
      fn(r, hi.index(sigma), before % 2 == 0 ? 1 : -1, static_cast<std::size_t>(i));
    }
  }
}

void check_grade(int n, int k) {
  if (n < 1) throw DimensionError("Koszul operators need n >= 1");
  if (k < 0 || k > n - 1)
    throw DimensionError("grade " + std::to_string(k) + " out of range 0.." + std::to_string(n - 1));
}

}  // namespace

WedgeBasis::WedgeBasis(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 0 || k > n) throw DimensionError("wedge basis needs 1 <= n and 0 <= k <= n");
  std::vector<int> cur;
  combinations(n, k, 0, cur, tuples_);
}

std::size_t WedgeBasis::index(const std::vector<int>& tuple) const {
  const auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
  if (it == tuples_.end() || *it != tuple) throw DimensionError("tuple is not in the wedge basis");
  return static_cast<std::size_t>(it - tuples_.begin());
}

QOperator::QOperator(std::vector<GRat> A, int k) : A_(std::move(A)), k_(k) {
  const int n = static_cast<int>(A_.size());
  check_grade(n, k);
  const WedgeBasis lo(n, k), hi(n, k + 1);
  rows_ = lo.size();
  cols_ = hi.size();
  for_each_pattern(lo, hi, [&](std::size_t r, std::size_t c, int sign, std::size_t i) {
    if (!A_[i].is_zero()) entries_.push_back({r, c, sign, i});
  });
}

std::vector<std::vector<GRat>> QOperator::dense() const {
  std::vector<std::vector<GRat>> m(rows_, std::vector<GRat>(cols_));
  for (const auto& e : entries_) m[e.row][e.col] = value(e);
  return m;
}

std::vector<GRat> QOperator::apply(const std::vector<GRat>& x) const {
  if (x.size() != cols_) throw DimensionError("Q operator applied to a vector of the wrong grade");
  std::vector<GRat> y(rows_);
  for (const auto& e : entries_) y[e.row] += value(e) * x[e.col];
  return y;
}

std::vector<GRat> q_star_apply(const std::vector<GRat>& A, const std::vector<GRat>& w, int k) {
  const int n = static_cast<int>(A.size());
  check_grade(n, k);
  const WedgeBasis lo(n, k), hi(n, k + 1);
  if (w.size() != lo.size()) throw DimensionError("wedge vector does not match the basis of its grade");
  std::vector<GRat> out(hi.size());
  for_each_pattern(lo, hi, [&](std::size_t r, std::size_t c, int sign, std::size_t i) {
    const GRat t = A[i].conj() * w[r];
    out[c] += sign > 0 ? t : -t;
  });
  return out;
}

bool check_range_kernel(const std::vector<GRat>& A, int k) {
  const int n = static_cast<int>(A.size());
  if (k + 1 > n - 1) throw DimensionError("range/kernel check needs k+1 <= n-1");
  const auto lo = q_matrix(A, k).dense();
  const auto hi = q_matrix(A, k + 1).dense();
  for (std::size_t i = 0; i < lo.size(); ++i)
    for (std::size_t j = 0; j < hi.front().size(); ++j) {
      GRat s;
      for (std::size_t l = 0; l < hi.size(); ++l) s += lo[i][l] * hi[l][j];
      if (!s.is_zero()) return false;
    }
  return true;
}

bool check_rank_one_identity(const std::vector<GRat>& A, const std::vector<GRat>& B) {
  if (A.size() != B.size()) throw DimensionError("rank-one identity needs vectors of equal length");
  const std::size_t n = A.size();
  if (n < 2) return true;
  GRat ab;
  for (std::size_t i = 0; i < n; ++i) ab += A[i] * B[i];
  const auto qa = q_matrix(A, 1).dense();
  const auto qb = q_matrix(B, 1).dense();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GRat rhs = B[i] * A[j];
      for (std::size_t l = 0; l < qa.front().size(); ++l) rhs += qa[i][l] * qb[j][l];
      if (rhs != (i == j ? ab : GRat())) return false;
    }
  return true;
}

VecFn q_apply_vecfn(const VecFn& F, const VecFn& X, int k) {
  const int n = static_cast<int>(F.size());
  check_grade(n, k);
  const WedgeBasis lo(n, k), hi(n, k + 1);
  if (X.size() != hi.size()) throw DimensionError("wedge function tuple does not match grade " + std::to_string(k + 1));
  VecFn out(lo.size());
  for_each_pattern(lo, hi, [&](std::size_t r, std::size_t c, int sign, std::size_t i) {
    if (X[c].is_zero() || F[i].is_zero()) return;
    const RFunc t = F[i] * X[c];
    if (sign > 0)
      out[r] += t;
    else
      out[r] -= t;
  });
  return out;
}

VecFn q_transpose_apply(const VecFn& F, const VecFn& Y, int k) {
  const int n = static_cast<int>(F.size());
  check_grade(n, k);
  const WedgeBasis lo(n, k), hi(n, k + 1);
  if (Y.size() != lo.size()) throw DimensionError("wedge function tuple does not match grade " + std::to_string(k));
  VecFn out(hi.size());
  for_each_pattern(lo, hi, [&](std::size_t r, std::size_t c, int sign, std::size_t i) {
    if (Y[r].is_zero() || F[i].is_zero()) return;
    const RFunc t = F[i] * Y[r];
    if (sign > 0)
      out[c] += t;
    else
      out[c] -= t;
  });
  return out;
}

}  // namespace corona
