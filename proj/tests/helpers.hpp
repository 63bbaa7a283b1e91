#pragma once

#include <random>
#include <vector>

#include "corona/rational_function.hpp"

namespace corona::testing {

inline GRat q(long p, long d = 1) { return GRat(mpq_class(p, d)); }
inline GRat qi(long p, long d, long ip, long id) { return GRat(mpq_class(p, d), mpq_class(ip, id)); }

inline const Poly Z = Poly::z();

inline RFunc zpow(int m) { return RFunc(Poly::monomial(GRat(1), m)); }

/// 1 / (1 - z/r), a geometric series with radius of convergence |r|.
inline RFunc geometric(const GRat& r) { return RFunc::make(GRat(1), Poly{GRat(1), -(GRat(1) / r)}); }

/// Small Gaussian rationals with numerators in [-lim, lim] and denominators in [1, 4].
inline GRat random_grat(std::mt19937_64& rng, int lim = 5, bool complex = true) {
  std::uniform_int_distribution<int> num(-lim, lim), den(1, 4);
  mpq_class re(num(rng), den(rng)), im(complex ? num(rng) : 0, den(rng));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

inline Poly random_poly(std::mt19937_64& rng, int deg, int lim = 5) {
  std::vector<GRat> c;
  for (int j = 0; j <= deg; ++j) c.push_back(random_grat(rng, lim));
  return Poly(std::move(c));
}

/// Denominator with all roots of modulus >= 3/2: product of (1 - z/r_i).
inline Poly random_admissible_den(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> pick(0, 5);
  const GRat roots[] = {q(2), q(-3, 2), qi(0, 1, 2, 1), qi(3, 2, 3, 2), q(5, 2), qi(-2, 1, 1, 1)};
  Poly p = GRat(1);
  for (int i = 0; i < deg; ++i) p *= Poly{GRat(1), -(GRat(1) / roots[pick(rng)])};
  return p;
}

inline RFunc random_rfunc(std::mt19937_64& rng, int num_deg, int den_deg) {
  return RFunc::make(random_poly(rng, num_deg), random_admissible_den(rng, den_deg));
}

}  // namespace corona::testing
