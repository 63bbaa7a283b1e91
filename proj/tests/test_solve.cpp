#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute_force.hpp"
#include "corona/errors.hpp"
#include "corona/solve.hpp"
#include "helpers.hpp"

using namespace corona;
using namespace corona::testing;

namespace {

RFunc P(std::initializer_list<GRat> c) { return RFunc(Poly(c)); }

const GridSpec kGrid{};

// Random polynomial with zero coefficients on K.
Poly random_hk_poly(std::mt19937_64& rng, int deg, const KSet& K, int lim = 3) {
  std::vector<GRat> c;
  for (int j = 0; j <= deg; ++j) c.push_back(K.contains(j) ? GRat() : random_grat(rng, lim));
  return Poly(std::move(c));
}

// Scales F by a power of 1/2 so that the grid sup-norm is at most 1.
VecFn normalized(VecFn F) {
  while (sup_norm_estimate(F, kGrid) > 1.0) F = RFunc(q(1, 2)) * F;
  return F;
}

}  // namespace

TEST_CASE("bezout oracle examples") {
  const VecFn G = bezout_oracle({RFunc(Z), P({q(1), q(-2)})}, RFunc(1));
  CHECK(G == VecFn{RFunc(2), RFunc(1)});
  const VecFn G2 = bezout_oracle({P({q(-2), q(1)})}, RFunc(1));
  CHECK(G2 == VecFn{RFunc::make(Poly{q(1)}, Poly{q(-2), q(1)})});
  CHECK_THROWS_AS(bezout_oracle({RFunc(Z), zpow(2)}, RFunc(1)), NotInIdealError);
  CHECK(bezout_oracle({RFunc(Z), zpow(2)}, RFunc(Z)) == VecFn{RFunc(1), RFunc()});
  CHECK(is_zero(bezout_oracle({RFunc(Z)}, RFunc())));
}

TEST_CASE("bezout oracle solves random coprime systems exactly") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    VecFn F;
    const int n = 1 + i % 4;
    for (int j = 0; j < n; ++j) F.push_back(random_rfunc(rng, 1 + (i + j) % 3, j % 2));
    const RFunc h = random_rfunc(rng, 3, 1);
    try {
      const VecFn G = bezout_oracle(F, h);
      CHECK(inner(F, G) == h);
    } catch (const NotInIdealError&) {
      // only when F has a common zero in the disk
      std::vector<Poly> nums;
      for (const auto& f : F) nums.push_back(f.num());
      CHECK(extended_gcd(std::span<const Poly>(nums)).first.degree() > 0);
    }
  }
}

TEST_CASE("psi functions") {
  CHECK_THROWS_AS(PsiFunction::power(0), DomainError);
  CHECK_THROWS_AS(PsiFunction::iterated_log(4, 0.5), DomainError);
  CHECK_THROWS_AS(PsiFunction::user_table({{0.5, 0.2}, {0.4, 0.3}}), DomainError);
  CHECK_THROWS_AS(PsiFunction::user_table({{0.1, 0.5}, {0.4, 0.3}}), DomainError);
  for (int levels = 0; levels <= 3; ++levels) {
    const auto psi = PsiFunction::iterated_log(levels, 0.25);
    CHECK(psi(1.0) <= 1.0);
    CHECK(psi(1.0) > 0.0);
    if (levels == 0) CHECK(psi(1.0) == doctest::Approx(1.0));
    CHECK(psi(0.0) == 0.0);
    double prev = 0;
    for (int i = 1; i <= 1000; ++i) {
      const double t = std::pow(10.0, -12.0 * (1000 - i) / 1000.0);
      const double v = psi(t);
      CHECK(v >= prev - 1e-15);
      CHECK(v <= 1.0 + 1e-15);
      prev = v;
    }
  }
  const auto table = PsiFunction::user_table({{0.0, 0.0}, {0.5, 0.25}, {1.0, 1.0}});
  CHECK(table(0.25) == doctest::Approx(0.125));
  CHECK(table(0.75) == doctest::Approx(0.625));
  // ∫ t^p / t dt over [1e-12, 1] = (1 − 1e-12p)/p
  CHECK(PsiFunction::power(0.5).integrability_integral() == doctest::Approx((1 - 1e-6) / 0.5).epsilon(1e-8));
  CHECK(table.integrability_integral() == doctest::Approx(1.0 - 0.5 * std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("hypothesis check") {
  const auto psi = PsiFunction::power(0.5);
  for (const GridSpec& g : {GridSpec{}, GridSpec{{1.0}, 64}, GridSpec{{0.5, 0.9}, 100}}) {
    const auto r = hypothesis_check({RFunc(q(1, 2))}, RFunc(), psi, g);
    CHECK(std::abs(r.margin - 0.125) < 1e-12);
    CHECK(r.ok);
  }
  const auto bad = hypothesis_check({RFunc(q(1, 2))}, RFunc(Poly{q(1), q(1)}), psi, kGrid);
  CHECK(bad.margin < 0);
  CHECK_FALSE(bad.ok);
  CHECK(std::abs(bad.worst_point - std::complex<double>(1.0, 0.0)) < 1e-9);
  const VecFn F{RFunc(Poly{q(0), q(1, 4)}), RFunc(Poly{q(1, 4), q(-1, 2)})};
  const RFunc h = RFunc(q(1, 64)) * RFunc(Poly{q(0), q(1)}) * RFunc(Poly{q(1), q(-2)});
  CHECK(hypothesis_check(F, h, psi, kGrid).margin >= 0);
  // FF* above 1 is rejected even with a generous margin
  CHECK_FALSE(hypothesis_check({RFunc(2)}, RFunc(), psi, kGrid).ok);
}

TEST_CASE("golden cases") {
  SolveContext ctx;
  ctx.seed({RFunc(1), RFunc(Z)}, zpow(2), {RFunc(), RFunc(Z)});
  const auto a = cplusb_solve({RFunc(1), RFunc(Z)}, zpow(2), Blaschke({q(0)}), ctx);
  CHECK(a.V == VecFn{zpow(2), RFunc()});
  CHECK(a.branch == "cplusb-rank-one");

  const VecFn F{P({q(1), q(0), q(1)}), zpow(3)};
  const RFunc h = P({q(0), q(0), q(1), q(0), q(1)});
  SolveContext ctx2;
  ctx2.seed(F, h, {P({q(0), q(0), q(1), q(0), q(-1)}), P({q(0), q(1), q(0), q(1)})});
  const auto b = hk_solve(F, h, KSet({1}), ctx2);
  CHECK(b.V == VecFn{zpow(2), RFunc()});
  REQUIRE(b.steps.size() == 1);
  CHECK(b.steps[0].derivative == std::vector<GRat>{q(0), q(1)});
  CHECK(b.steps[0].kernel.is_zero());
}

TEST_CASE("cplusb branches") {
  const Blaschke B0({q(0)});
  SolveContext ctx;
  ctx.seed({RFunc(1), RFunc(Z)}, RFunc(1), {RFunc(1), RFunc()});
  CHECK(cplusb_solve({RFunc(1), RFunc(Z)}, RFunc(1), B0, ctx).V == VecFn{RFunc(1), RFunc()});
  const auto z = cplusb_solve({RFunc(Z), zpow(2)}, zpow(2), B0, ctx);
  CHECK(z.branch == "cplusb-factor-B");
  CHECK(z.V == VecFn{RFunc(Z), RFunc()});
  CHECK_THROWS_AS(cplusb_solve({RFunc(Z), zpow(2)}, RFunc(Z), B0, ctx), HypothesisError);
  CHECK_THROWS_AS(cplusb_solve({RFunc(Z), zpow(2)}, RFunc(1), B0, ctx), HypothesisError);
}

TEST_CASE("cplusb random instances with multi-zero B") {
  std::mt19937_64 rng(37);
  const Blaschke B({q(1, 2), q(-1, 3), qi(0, 1, 1, 4)});
  const RFunc b = B.as_rfunc();
  const Algebra alg = CPlusB{B};
  for (int i = 0; i < 12; ++i) {
    VecFn F;
    for (int j = 0; j < 2 + i % 2; ++j) F.push_back(RFunc(random_grat(rng)) + b * random_rfunc(rng, 1, 0));
    if (i % 4 == 3)
      for (auto& f : F) f = b * (RFunc(random_grat(rng)) + b * random_rfunc(rng, 1, 0));
    F = normalized(F);
    VecFn W;
    for (std::size_t j = 0; j < F.size(); ++j) W.push_back(RFunc(random_grat(rng)) + b * random_rfunc(rng, 1, 0));
    // with F_c = 0 the target must lie in B^2 H∞
    if (i % 4 == 3)
      for (auto& w : W) w = b * random_rfunc(rng, 1, 0);
    const RFunc h = inner(F, W);
    SolveContext ctx;
    ctx.seed(F, h, W);
    const Solution s = cplusb_solve(F, h, B, ctx);
    const Certificate c = certify(s, F, h, 1, alg, kGrid);
    CHECK(c.residual_ok);
    CHECK(c.membership_ok);
    CHECK(c.norm_ok);
  }
}

TEST_CASE("hk examples") {
  SolveContext ctx;
  ctx.seed({P({q(1), q(0), q(1)}), zpow(2)}, RFunc(1), {RFunc(1), RFunc()});
  CHECK(hk_solve({P({q(1), q(0), q(1)}), zpow(2)}, RFunc(1), KSet({1}), ctx).V == VecFn{RFunc(1), RFunc()});

  const VecFn F{P({q(1), q(0), q(0), q(1)}), zpow(3)};
  const auto s = hk_solve(F, zpow(3), KSet({1, 2}), ctx);
  CHECK(inner(F, s.V) == zpow(3));
  for (const auto& v : s.V) {
    CHECK(taylor_coeff(v, 1).is_zero());
    CHECK(taylor_coeff(v, 2).is_zero());
  }
  CHECK(s.steps.size() == 2);
  for (const auto& st : s.steps) CHECK(st.kernel.is_zero());
  CHECK_THROWS_AS(hk_solve({RFunc(Z), zpow(2)}, zpow(2), KSet({1}), ctx), DegenerateError);
}

TEST_CASE("hk random instances") {
  std::mt19937_64 rng(41);
  for (const KSet& K : {KSet({1}), KSet({1, 2}), KSet({1, 3}), KSet({1, 2, 5}), KSet({1, 2, 3, 5})}) {
    REQUIRE(is_algebra_set(K).is_algebra);
    for (int i = 0; i < 4; ++i) {
      VecFn F, W;
      for (int j = 0; j < 3; ++j) {
        F.push_back(RFunc(random_hk_poly(rng, 6, K)));
        W.push_back(RFunc(random_hk_poly(rng, 4, K)));
      }
      if (value_at_zero(F)[0].is_zero()) F[0] += RFunc(1);
      F = normalized(F);
      const RFunc h = inner(F, W);
      SolveContext ctx;
      const Solution s = hk_solve(F, h, K, ctx);
      const Certificate c = certify(s, F, h, 1, HK{K}, kGrid);
      CHECK(c.residual_ok);
      CHECK(c.membership_ok);
      CHECK(c.norm_ok);
      for (const auto& st : s.steps) CHECK(st.kernel.is_zero());
    }
  }
}

TEST_CASE("hk_solve_zero") {
  SolveContext ctx;
  const auto a = hk_solve_zero({zpow(2), zpow(3)}, zpow(4), KSet({1}), ctx);
  CHECK(a.V == VecFn{zpow(2), RFunc()});
  CHECK(a.branch == "hk-zero-beyond-K");
  CHECK_THROWS_AS(hk_solve_zero({zpow(3), zpow(4)}, zpow(9), KSet({1, 2, 5}), ctx), NeitherCaseError);
  CHECK_THROWS_AS(hk_solve_zero({zpow(2), zpow(3)}, zpow(3), KSet({1}), ctx), HypothesisError);

  const VecFn F{P({q(0), q(0), q(1), q(0), q(1)}), zpow(5)};
  const RFunc h = zpow(6) + zpow(8);
  const auto b = hk_solve_zero(F, h, KSet({1, 3}), ctx);
  CHECK(b.branch == "hk-zero-shifted-algebra");
  CHECK(inner(F, b.V) == h);
  CHECK(is_member(b.V, HK{KSet({1, 3})}));
  for (const auto& st : b.steps) CHECK(st.kernel.is_zero());
  // z^5 is in H_{1,3} but z^5 / z^4 = z is not in H_{K-2} = H_{1}
  CHECK_THROWS_AS(hk_solve_zero({zpow(2), zpow(4)}, zpow(5), KSet({1, 3}), ctx), HypothesisError);
}

TEST_CASE("hk periodic") {
  const auto dec = decompose({4, 6});
  const VecFn F{RFunc(q(1, 3)) * P({q(1), q(0), q(0), q(0), q(1)}), RFunc(q(1, 3)) * zpow(6)};
  const RFunc h = RFunc(q(1, 12)) * (zpow(4) + zpow(8));
  SolveContext ctx;
  const auto s = hk_periodic_solve(F, h, dec, ctx);
  const auto c = certify(s, F, h, 1, HKPeriodic{{4, 6}, dec}, kGrid);
  CHECK(c.residual_ok);
  CHECK(c.membership_ok);
  CHECK(c.norm_ok);
  CHECK_THROWS_AS(hk_periodic_solve({RFunc(Z)}, RFunc(Z), dec, ctx), HypothesisError);
}

TEST_CASE("hkb examples") {
  const Blaschke B0({q(0)});
  SolveContext ctx;
  ctx.seed({RFunc(1), zpow(2)}, zpow(4), {RFunc(), zpow(2)});
  CHECK(hkb_solve({RFunc(1), zpow(2)}, zpow(4), KSet({1}), B0, ctx).V == VecFn{zpow(4), RFunc()});
  CHECK_THROWS_AS(hkb_solve({zpow(2), zpow(4)}, zpow(4), KSet({1}), B0, ctx), DegenerateError);
  const auto z = hkb_solve_zero({zpow(2), zpow(4)}, zpow(4), KSet({1}), B0, ctx);
  CHECK(z.V == VecFn{zpow(2), RFunc()});
  CHECK_THROWS_AS(hkb_solve_zero({zpow(3), zpow(4)}, zpow(6), KSet({1, 2, 5}), B0, ctx), NeitherCaseError);
  CHECK_THROWS_AS(hkb_solve_zero({zpow(2), zpow(4)}, zpow(3), KSet({1}), B0, ctx), HypothesisError);
}

TEST_CASE("hkb random instances with multi-zero B") {
  std::mt19937_64 rng(43);
  const Blaschke B({q(1, 2), q(-1, 3)});
  const RFunc b = B.as_rfunc();
  for (const KSet& K : {KSet({1}), KSet({1, 2}), KSet({1, 3})}) {
    auto member = [&](bool with_constant) {
      RFunc f = with_constant ? RFunc(random_grat(rng)) : RFunc();
      for (int j = 1; j < *K.max(); ++j)
        if (!K.contains(j)) f += RFunc(random_grat(rng)) * pow(b, static_cast<unsigned>(j));
      return f + pow(b, static_cast<unsigned>(*K.max() + 1)) * random_rfunc(rng, 1, 0);
    };
    for (int i = 0; i < 3; ++i) {
      VecFn F{member(true), member(i % 2 == 0)};
      F = normalized(F);
      const VecFn W{member(true), member(true)};
      const RFunc h = inner(F, W);
      // a base solution outside H_{K(B)}: W plus a kernel element of F
      const RFunc k = random_rfunc(rng, 1, 0);
      const VecFn G{W[0] - F[1] * k, W[1] + F[0] * k};
      REQUIRE(inner(F, G) == h);
      SolveContext ctx;
      ctx.seed(F, h, G);
      const Solution s = hkb_solve(F, h, K, B, ctx);
      const Certificate c = certify(s, F, h, 1, HKB{K, B}, kGrid);
      CHECK(c.residual_ok);
      CHECK(c.membership_ok);
      CHECK(c.norm_ok);
    }
  }
}

TEST_CASE("wolff cube") {
  const Blaschke B0({q(0)});
  SolveContext ctx;
  ctx.seed({RFunc(1), RFunc(Z)}, zpow(3), {zpow(3), RFunc()});
  CHECK(cplusb_solve({RFunc(1), RFunc(Z)}, zpow(3), B0, ctx).V == VecFn{zpow(3), RFunc()});

  Instance inst;
  inst.F = {RFunc(q(1, 2)), RFunc(q(1, 2)) * RFunc(Z)};
  inst.h = RFunc(q(1, 2)) * RFunc(Z);
  inst.algebra = CPlusB{B0};
  const auto out = wolff_cube_solve(inst, kGrid);
  REQUIRE(out.certificate);
  CHECK(out.certificate->ok());
  CHECK(out.certificate->target_exponent == 3);

  inst.h = RFunc();
  const auto zero = wolff_cube_solve(inst, kGrid);
  REQUIRE(zero.certificate);
  CHECK(is_zero(zero.certificate->V));

  Instance hinf;
  hinf.F = {RFunc(q(1, 2)) * RFunc(Z), RFunc(q(1, 2)) * zpow(2)};
  hinf.h = RFunc(q(1, 2)) * RFunc(Z);
  const auto o = wolff_cube_solve(hinf, kGrid);
  REQUIRE(o.certificate);
  CHECK(o.certificate->residual_ok);
}

TEST_CASE("radical witness") {
  SolveContext ctx;
  const auto w = radical_witness({zpow(2), zpow(3)}, zpow(2), HK{KSet({1})}, kGrid, std::nullopt, 1e3, ctx);
  CHECK(w.q == 1);
  CHECK(w.L == 1);
  CHECK(inner({zpow(2), zpow(3)}, w.solution.V) == zpow(4));
  CHECK(is_member(w.solution.V, HK{KSet({1})}));

  const VecFn F{RFunc(q(1, 3)) * P({q(1), q(0), q(1)}), RFunc(q(1, 3)) * zpow(3)};
  const RFunc h = RFunc(q(1, 12)) * P({q(0), q(0), q(1), q(0), q(1)});
  const auto d = radical_witness(F, h, HK{KSet({1})}, kGrid, std::nullopt, 1e3, ctx);
  CHECK(d.L == 0);
  CHECK(d.q == 1);
  CHECK(inner(F, d.solution.V) == h);

  const auto z = radical_witness(F, RFunc(), HK{KSet({1})}, kGrid, std::nullopt, 1e3, ctx);
  CHECK(z.q == 1);
  CHECK(is_zero(z.solution.V));

  // h(0) != 0 while F(0) = 0: no power of h is in the ideal
  CHECK_THROWS_AS(radical_witness({RFunc(Z)}, RFunc(1), HK{KSet({1})}, kGrid, std::nullopt, 1e3, ctx),
                  NotInIdealError);
  // h^q needs q = 2 before it fits under M|F| with small M
  const auto two = radical_witness({zpow(2)}, RFunc(Z), Hinf{}, kGrid, std::nullopt, 1e3, ctx);
  CHECK(two.q == 2);
}

TEST_CASE("solve driver") {
  Instance inst;
  inst.F = {RFunc(q(1, 2)), RFunc(q(1, 2)) * RFunc(Z)};
  inst.h = RFunc(q(1, 8)) * zpow(2);
  inst.algebra = CPlusB{Blaschke({q(0)})};
  inst.psi = PsiFunction::power(0.5);
  inst.base_solution = VecFn{RFunc(), RFunc(q(1, 4)) * RFunc(Z)};
  const auto out = solve(inst, Mode::Treil, kGrid);
  REQUIRE(out.certificate);
  CHECK(out.certificate->V == VecFn{RFunc(q(1, 4)) * zpow(2), RFunc()});
  CHECK(out.certificate->ok());

  Instance bad = inst;
  bad.base_solution = VecFn{RFunc(), RFunc(Z)};
  CHECK_THROWS_AS(solve(bad, Mode::Treil, kGrid), InvalidInputError);
  bad = inst;
  bad.algebra = HK{KSet({1})};
  CHECK_THROWS_AS(solve(bad, Mode::Treil, kGrid), InvalidInputError);
  bad = inst;
  bad.base_solution.reset();
  bad.h = RFunc(q(9, 10)) * zpow(2);
  const auto rejected = solve(bad, Mode::Treil, kGrid);
  CHECK_FALSE(rejected.hypothesis.ok);
  CHECK_FALSE(rejected.certificate);
}

TEST_CASE("certify flags tampering") {
  const VecFn F{P({q(1), q(0), q(1)}), zpow(3)};
  const RFunc h = zpow(2) + zpow(4);
  Solution s;
  s.V = {zpow(2), RFunc(1)};
  s.base = s.V;
  const auto c = certify(s, F, h, 1, HK{KSet({1})}, kGrid);
  CHECK_FALSE(c.residual_ok);
  CHECK(c.membership_ok);
  s.V = {P({q(0), q(0), q(1), q(0), q(-1)}), P({q(0), q(1), q(0), q(1)})};
  CHECK(certify(s, F, h, 1, HK{KSet({1})}, kGrid).residual_ok);
  CHECK_FALSE(certify(s, F, h, 1, HK{KSet({1})}, kGrid).membership_ok);
}

TEST_CASE("hk_solve lands in the brute-force solution space") {
  std::mt19937_64 rng(47);
  int checked = 0;
  for (const KSet& K : {KSet(), KSet({1}), KSet({1, 2}), KSet({1, 3}), KSet({1, 2, 3})}) {
    for (int i = 0; i < 6; ++i) {
      const int dF = 1 + i % 3;
      std::vector<Poly> Fp{random_hk_poly(rng, dF, K), random_hk_poly(rng, dF, K)};
      if (Fp[0].coeff(0).is_zero()) Fp[0] += Poly(GRat(1));
      if (gcd(Fp[0], Fp[1]).degree() > 0) continue;
      const Poly h = Fp[0] * random_hk_poly(rng, 6 - dF, K) + Fp[1] * random_hk_poly(rng, 6 - dF, K);
      const VecFn F{RFunc(Fp[0]), RFunc(Fp[1])};
      SolveContext ctx;
      const Solution s = K.empty() ? hinf_solve(F, RFunc(h), ctx) : hk_solve(F, RFunc(h), K, ctx);
      const BruteForceSystem sys(Fp, h, K, 10);
      CHECK(sys.consistent());
      CHECK(sys.contains(s.V));
      ++checked;
    }
  }
  CHECK(checked >= 20);
}
