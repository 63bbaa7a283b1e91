#include <algorithm>
#include <cmath>
#include <string>

#include "corona/errors.hpp"
#include "corona/koszul.hpp"
#include "corona/solve.hpp"

namespace corona {

namespace {

bool all_zero(const std::vector<GRat>& v) {
  return std::all_of(v.begin(), v.end(), [](const GRat& x) { return x.is_zero(); });
}

Solution zero_solution(std::size_t n) {
  Solution s;
  s.branch = "zero-target";
  s.V = zero_vec(n);
  s.base = zero_vec(n);
  s.formula = "0";
  return s;
}

VecFn constants(const std::vector<GRat>& c) { return VecFn(c.begin(), c.end()); }

VecFn scaled(const RFunc& s, const VecFn& F) { return s * F; }

int z_order(const VecFn& F) {
  int m = -1;
  for (const auto& f : F)
    if (!f.is_zero()) m = m < 0 ? order_at_zero(f) : std::min(m, order_at_zero(f));
  return m;
}

// G + Q_F Q_Gᵀ conj(c)/|c|², the rank-one correction that pins V at the zeros of B.
VecFn rank_one_correction(const VecFn& F, const VecFn& G, const std::vector<GRat>& c) {
  const GRat inv(mpq_class(1) / norm2(c));
  std::vector<GRat> y;
  for (const auto& x : c) y.push_back(x.conj() * inv);
  return G + q_apply_vecfn(F, q_transpose_apply(G, constants(y), 1), 1);
}

std::vector<GRat> blaschke_constants(const VecFn& F, const Blaschke& B) {
  std::vector<GRat> c;
  for (const auto& f : F) {
    const auto m = is_cplusb_member(f, B);
    if (!m.member) throw HypothesisError("generator " + f.str() + " is not constant on the zero set of B");
    c.push_back(m.c);
  }
  return c;
}

RFunc blaschke_power(const Blaschke& B, int j) { return pow(B.as_rfunc(), static_cast<unsigned>(j)); }

RFunc divide_by_blaschke_power(const RFunc& f, const Blaschke& B, int j, const std::string& what) {
  RFunc g = f;
  try {
    for (int i = 0; i < j; ++i) g = divide_by_blaschke(g, B);
  } catch (const NonDivisibleError&) {
    throw HypothesisError(what + " is not divisible by B^" + std::to_string(j));
  }
  return g;
}

Solution shifted(Solution inner, const RFunc& factor, const std::string& branch, const std::string& formula) {
  for (auto& v : inner.V) v = factor * v;
  inner.branch = branch;
  inner.formula = formula + (inner.formula.empty() ? "" : " with " + inner.formula);
  return inner;
}

}  // namespace

Solution hinf_solve(const VecFn& F, const RFunc& h, SolveContext& ctx) {
  SolveContext::Frame frame(ctx);
  if (h.is_zero()) return zero_solution(F.size());
  Solution s;
  s.branch = "hinf";
  s.base = ctx.base(F, h);
  s.V = s.base;
  s.formula = "|G|";
  return s;
}

Solution cplusb_solve(const VecFn& F, const RFunc& h, const Blaschke& B, SolveContext& ctx) {
  SolveContext::Frame frame(ctx);
  if (h.is_zero()) return zero_solution(F.size());
  const auto Fc = blaschke_constants(F, B);
  Solution s;
  if (!all_zero(Fc)) {
    s.branch = "cplusb-rank-one";
    s.base = ctx.base(F, h);
    s.V = rank_one_correction(F, s.base, Fc);
    s.factor = 1.0 + 1.0 / norm2(Fc).get_d();
    s.stated_factor = 1.0 + 1.0 / std::sqrt(norm2(Fc).get_d());
    s.formula = "(1 + 1/|F_c|^2) |G|";
    return s;
  }
  for (const auto& a : B.zeros())
    if (!h.eval_exact(a).is_zero()) throw HypothesisError("F_c = 0 but h does not vanish at " + a.str());
  VecFn FB;
  for (const auto& f : F) FB.push_back(divide_by_blaschke(f, B));
  const RFunc hB1 = divide_by_blaschke_power(h, B, 2, "h");
  s.branch = "cplusb-factor-B";
  s.base = ctx.base(FB, hB1);
  s.V = scaled(B.as_rfunc(), s.base);
  s.formula = "|G_1|";
  return s;
}

Solution hk_solve(const VecFn& F, const RFunc& h, const KSet& K, SolveContext& ctx) {
  SolveContext::Frame frame(ctx);
  const auto F0 = value_at_zero(F);
  if (all_zero(F0)) throw DegenerateError("F(0) = 0; the vanishing-at-zero construction applies instead");
  if (h.is_zero()) return zero_solution(F.size());
  const mpq_class n2 = norm2(F0);
  Solution s;
  s.branch = "hk-induction";
  VecFn V = ctx.base(F, h);
  s.base = V;
  for (int k : K.elements()) {
    const VecFn G = V;
    const auto d = derivative_at_zero(G, k);
    Step st{"hk-correction", k, d, GRat()};
    for (std::size_t i = 0; i < d.size(); ++i) st.kernel += F0[i] * d[i];
    s.steps.push_back(st);
    if (!st.kernel.is_zero())
      throw HypothesisError("F(0)·G^(" + std::to_string(k) + ")(0) = " + st.kernel.str() + " is not zero");
    s.base = G;
    s.offset = 0;
    if (all_zero(d)) continue;
    const GRat scale(mpq_class(1) / (mpq_class(factorial(static_cast<unsigned>(k))) * n2));
    const auto w = q_star_apply(F0, d, 1);
    VecFn X;
    for (const auto& x : w) X.push_back(RFunc(Poly::monomial(x * scale, k)));
    V = G - q_apply_vecfn(F, X, 1);
    s.offset = l2_norm(d) / (factorial(static_cast<unsigned>(k)).get_d() * std::sqrt(n2.get_d()));
  }
  s.V = std::move(V);
  s.formula = K.empty() ? "|G|" : "|G| + |G^(k_p)(0)| / (k_p! |F(0)|)";
  return s;
}

Solution hk_solve_zero(const VecFn& F, const RFunc& h, const KSet& K, SolveContext& ctx) {
  SolveContext::Frame frame(ctx);
  const int m = z_order(F);
  if (m < 0) {
    if (h.is_zero()) return zero_solution(F.size());
    throw NotInIdealError("F is identically zero");
  }
  if (m == 0) throw DegenerateError("F(0) != 0; the direct construction applies");
  if (K.contains(m)) throw HypothesisError("F vanishes to order " + std::to_string(m) + " which lies in K");
  const auto kp = K.max();
  const bool case_ii = !kp || m > *kp;
  KSet Km;
  if (!case_ii) {
    Km = k_minus(K, m);
    if (!is_algebra_set(Km).is_algebra)
      throw NeitherCaseError("K - " + std::to_string(m) + " does not define an algebra and " + std::to_string(m) +
                             " < max K");
  }
  if (h.is_zero()) return zero_solution(F.size());
  if (order_at_zero(h) < 2 * m) throw HypothesisError("h is not divisible by z^" + std::to_string(2 * m));
  VecFn Fm;
  for (const auto& f : F) Fm.push_back(divide_by_z_power(f, m));
  const RFunc hm = divide_by_z_power(h, 2 * m);
  const RFunc zm(Poly::monomial(GRat(1), m));
  if (case_ii) {
    Solution s;
    s.branch = "hk-zero-beyond-K";
    s.base = ctx.base(Fm, hm);
    s.V = scaled(zm, s.base);
    s.formula = "|G_m|";
    return s;
  }
  if (!is_hk_member(hm, Km)) throw HypothesisError("h / z^(2m) is not in H_{K-m}");
  return shifted(hk_solve(Fm, hm, Km, ctx), zm, "hk-zero-shifted-algebra", "|G_m|");
}

Solution hk_periodic_solve(const VecFn& F, const RFunc& h, const Decomposition& dec, SolveContext& ctx) {
  SolveContext::Frame frame(ctx);
  const int d = dec.data.d;
  VecFn F1;
  RFunc h1;
  try {
    for (const auto& f : F) F1.push_back(reduce_to_finite(f, d));
    h1 = reduce_to_finite(h, d);
  } catch (const NotReducibleError& e) {
    throw HypothesisError(std::string("data is not a function of z^d: ") + e.what());
  }
  if (auto G = ctx.lookup(F, h)) {
    try {
      VecFn G1;
      for (const auto& g : *G) G1.push_back(reduce_to_finite(g, d));
      ctx.seed(F1, h1, std::move(G1));
    } catch (const NotReducibleError&) {
    }
  }
  Solution s = solve_in_algebra(F1, h1, HK{dec.K1}, ctx);
  for (auto& v : s.V) v = expand_from_finite(v, d);
  for (auto& g : s.base) g = expand_from_finite(g, d);
  s.branch = "hk-periodic/" + s.branch;
  s.formula = "reduced by w = z^" + std::to_string(d) + ": " + s.formula;
  return s;
}

Solution hkb_solve(const VecFn& F, const RFunc& h, const KSet& K, const Blaschke& B, SolveContext& ctx) {
  SolveContext::Frame frame(ctx);
  const auto F0 = blaschke_constants(F, B);
  if (all_zero(F0)) throw DegenerateError("F_0 = 0; the B-power construction applies instead");
  if (h.is_zero()) return zero_solution(F.size());
  Solution s;
  s.branch = "hkb-rank-one";
  VecFn V = ctx.base(F, h);
  s.base = V;
  s.formula = "|G|";
  // each pass clears at least one more B-adic level; |K| passes reach B^(k_p+1)
  for (std::size_t pass = 0; pass < K.size(); ++pass) {
    s.base = V;
    V = rank_one_correction(F, V, F0);
    s.steps.push_back({"hkb-correction", static_cast<int>(pass) + 1, {}, GRat()});
    s.factor = 1.0 + 1.0 / norm2(F0).get_d();
    s.stated_factor = 1.0 + 1.0 / std::sqrt(norm2(F0).get_d());
    s.formula = "(1 + 1/|F_0|^2) |G|";
  }
  s.V = std::move(V);
  return s;
}

Solution hkb_solve_zero(const VecFn& F, const RFunc& h, const KSet& K, const Blaschke& B, SolveContext& ctx) {
  SolveContext::Frame frame(ctx);
  if (std::all_of(F.begin(), F.end(), [](const RFunc& f) { return f.is_zero(); })) {
    if (h.is_zero()) return zero_solution(F.size());
    throw NotInIdealError("F is identically zero");
  }
  int j1 = 0;
  VecFn Fa = F;
  for (;;) {
    VecFn next;
    try {
      for (const auto& f : Fa) next.push_back(divide_by_blaschke(f, B));
    } catch (const NonDivisibleError&) {
      break;
    }
    Fa = std::move(next);
    ++j1;
  }
  if (j1 == 0) throw DegenerateError("F_0 != 0; the direct construction applies");
  if (all_zero(blaschke_constants(Fa, B)))
    throw HypothesisError("F / B^" + std::to_string(j1) + " has no nonzero B-adic constant");
  if (K.contains(j1)) throw HypothesisError("the B-order " + std::to_string(j1) + " of F lies in K");
  const auto kp = K.max();
  const bool case_ii = !kp || j1 > *kp;
  KSet Kj;
  if (!case_ii) {
    Kj = k_minus(K, j1);
    if (!is_algebra_set(Kj).is_algebra)
      throw NeitherCaseError("K - " + std::to_string(j1) + " does not define an algebra and " + std::to_string(j1) +
                             " < max K");
  }
  if (h.is_zero()) return zero_solution(F.size());
  const RFunc ha = divide_by_blaschke_power(h, B, 2 * j1, "h");
  const RFunc Bj = blaschke_power(B, j1);
  if (case_ii) {
    Solution s;
    s.branch = "hkb-zero-beyond-K";
    s.base = ctx.base(Fa, ha);
    s.V = scaled(Bj, s.base);
    s.formula = "|G_alpha|";
    return s;
  }
  if (!is_hkb_member(ha, Kj, B)) throw HypothesisError("h / B^(2 j1) is not in H_{(K-j1)(B)}");
  return shifted(hkb_solve(Fa, ha, Kj, B, ctx), Bj, "hkb-zero-shifted-algebra", "|G_alpha|");
}

Solution solve_in_algebra(const VecFn& F, const RFunc& target, const Algebra& a, SolveContext& ctx) {
  if (F.empty()) throw DimensionError("F must have at least one entry");
  if (target.is_zero()) return zero_solution(F.size());
  struct {
    const VecFn& F;
    const RFunc& h;
    SolveContext& ctx;
    Solution operator()(const Hinf&) const { return hinf_solve(F, h, ctx); }
    Solution operator()(const CPlusB& c) const { return cplusb_solve(F, h, c.B, ctx); }
    Solution operator()(const HK& k) const {
      if (k.K.empty()) return hinf_solve(F, h, ctx);
      return all_zero(value_at_zero(F)) ? hk_solve_zero(F, h, k.K, ctx) : hk_solve(F, h, k.K, ctx);
    }
    Solution operator()(const HKPeriodic& k) const { return hk_periodic_solve(F, h, k.dec, ctx); }
    Solution operator()(const HKB& k) const {
      if (k.K.empty()) return hinf_solve(F, h, ctx);
      return all_zero(blaschke_constants(F, k.B)) ? hkb_solve_zero(F, h, k.K, k.B, ctx)
                                                  : hkb_solve(F, h, k.K, k.B, ctx);
    }
  } v{F, target, ctx};
  return std::visit(v, a);
}

}  // namespace corona
