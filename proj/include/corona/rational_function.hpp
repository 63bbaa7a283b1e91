#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "corona/polynomial.hpp"

namespace corona {

/// True iff every root of p has modulus > 1 (p must be nonzero).
///
/// Decided exactly by the Schur-Cohn recursion applied to the reversed
/// polynomial. A floating-point root solve cross-checks the verdict; a
/// disagreement that is not explained by a root within 1e-9 of the unit circle
/// raises IndeterminateError.
bool den_admissible(const Poly& p);

/// Exact rational function num/den, the desk-scale model of an H-infinity element.
///
/// Normal form: gcd(num, den) == 1, den(0) == 1, and every root of den lies
/// strictly outside the closed unit disk. Values are immutable once built.
class RFunc {
 public:
  RFunc() : den_(GRat(1)) {}
  RFunc(GRat c) : num_(std::move(c)), den_(GRat(1)) {}  // NOLINT
  RFunc(long c) : RFunc(GRat(c)) {}                    // NOLINT
  RFunc(Poly p) : num_(std::move(p)), den_(GRat(1)) {}  // NOLINT

  /// Normalizes num/den and checks the denominator is admissible
  /// (DomainError otherwise).
  static RFunc make(const Poly& num, const Poly& den);
  /// num/den with num, den already coprime and den admissible; neither is checked.
  static RFunc coprime(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value at a point where den does not vanish.
  GRat eval_exact(const GRat& z) const;

  RFunc& operator+=(const RFunc& o);
  RFunc& operator-=(const RFunc& o);
  RFunc& operator*=(const RFunc& o);
  friend RFunc operator+(RFunc a, const RFunc& b) { return a += b; }
  friend RFunc operator-(RFunc a, const RFunc& b) { return a -= b; }
  friend RFunc operator*(RFunc a, const RFunc& b) { return a *= b; }
  RFunc operator-() const;

  friend bool operator==(const RFunc& a, const RFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RFunc& a, const RFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Normalized {};
  RFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  // reduce by gcd and scale den(0) to 1; the caller vouches for admissibility
  static RFunc reduce(Poly num, Poly den);

  friend RFunc divide(const RFunc& a, const RFunc& b);
  friend RFunc compose(const RFunc& f, const RFunc& g);

  Poly num_;
  Poly den_;
};

/// a / b. Throws NonDivisibleError if the quotient leaves a pole in the closed disk.
RFunc divide(const RFunc& a, const RFunc& b);

/// f(g(z)); throws NonDivisibleError if the result has a pole in the closed disk.
RFunc compose(const RFunc& f, const RFunc& g);

/// f^e for e >= 0.
RFunc pow(const RFunc& f, unsigned e);

/// Floating-point value num(z)/den(z) for |z| <= 1 + 1e-12 (DomainError beyond).
///
/// Horner evaluation in double; relative error stays well below 2^-40 for
/// degree <= 64 with moderately sized coefficients.
std::complex<double> eval(const RFunc& f, std::complex<double> z);

/// Maclaurin coefficients 0..order of f by exact power-series division.
std::vector<GRat> taylor_series(const RFunc& f, int order);
GRat taylor_coeff(const RFunc& f, int j);

/// Order of vanishing at the origin; -1 for the zero function.
int order_at_zero(const RFunc& f);

/// f / z^m; NonDivisibleError if f does not vanish to order m at 0.
RFunc divide_by_z_power(const RFunc& f, int m);
/// z^m f
RFunc times_z_power(const RFunc& f, int m);

/// A finite tuple of functions: the row vectors F, G, V.
using VecFn = std::vector<RFunc>;

/// F·G^T = sum f_i g_i (no conjugation).
RFunc inner(const VecFn& F, const VecFn& G);
VecFn operator+(const VecFn& F, const VecFn& G);
VecFn operator-(const VecFn& F, const VecFn& G);
VecFn operator*(const RFunc& s, const VecFn& F);
VecFn zero_vec(std::size_t n);
bool is_zero(const VecFn& F);

/// F^(k)(0) entry-wise: k! times the k-th Taylor coefficient.
std::vector<GRat> derivative_at_zero(const VecFn& F, int k);
/// F(0) entry-wise.
std::vector<GRat> value_at_zero(const VecFn& F);

/// Sample points for sup-norm and hypothesis estimates: equally spaced angles
/// on each circle |z| = r.
struct GridSpec {
  std::vector<double> radii{1.0, 1.0 - 1.0 / 1024.0};
  int points_per_circle = 4096;

  std::vector<std::complex<double>> points() const;
  std::size_t size() const { return radii.size() * static_cast<std::size_t>(points_per_circle); }
};

/// Max over grid points of the l2 norm of F(z). A lower estimate of the true
/// sup norm; non-decreasing under nested refinement of the grid.
double sup_norm_estimate(const VecFn& F, const GridSpec& grid);

/// l2 norm of a constant vector.
double l2_norm(const std::vector<GRat>& v);
mpq_class norm2(const std::vector<GRat>& v);

}  // namespace corona
