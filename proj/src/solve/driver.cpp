#include <algorithm>
#include <cmath>

#include "corona/errors.hpp"
#include "corona/solve.hpp"

namespace corona {

namespace {

constexpr double kNormTolerance = 1e-6;
constexpr int kMaxRadicalExponent = 8;

int z_order(const VecFn& F) {
  int m = -1;
  for (const auto& f : F)
    if (!f.is_zero()) m = m < 0 ? order_at_zero(f) : std::min(m, order_at_zero(f));
  return m;
}

int blaschke_order(const VecFn& F, const Blaschke& B) {
  if (std::all_of(F.begin(), F.end(), [](const RFunc& f) { return f.is_zero(); })) return 0;
  int j = 0;
  VecFn cur = F;
  try {
    for (;;) {
      for (auto& f : cur) f = divide_by_blaschke(f, B);
      ++j;
    }
  } catch (const NonDivisibleError&) {
  }
  return j;
}

int depth_cap(const VecFn& F, const Algebra& a) {
  struct {
    const VecFn& F;
    int operator()(const Hinf&) const { return 0; }
    int operator()(const CPlusB&) const { return 1; }
    int operator()(const HK& k) const { return static_cast<int>(k.K.size()) + std::max(0, z_order(F)); }
    int operator()(const HKPeriodic& k) const { return static_cast<int>(k.dec.K1.size()) + std::max(0, z_order(F)); }
    int operator()(const HKB& k) const { return static_cast<int>(k.K.size()) + blaschke_order(F, k.B); }
  } v{F};
  return std::visit(v, a) + 4;
}

void validate(const Instance& inst, Mode mode) {
  if (inst.F.empty()) throw InvalidInputError("F must have at least one entry");
  for (std::size_t i = 0; i < inst.F.size(); ++i)
    if (!is_member(inst.F[i], inst.algebra))
      throw InvalidInputError("F[" + std::to_string(i) + "] = " + inst.F[i].str() + " is not in the declared " +
                              algebra_name(inst.algebra) + " algebra");
  if (!is_member(inst.h, inst.algebra))
    throw InvalidInputError("h = " + inst.h.str() + " is not in the declared " + algebra_name(inst.algebra) +
                            " algebra");
  if (mode == Mode::Radical && !std::holds_alternative<Hinf>(inst.algebra) &&
      !std::holds_alternative<HK>(inst.algebra))
    throw InvalidInputError("radical mode supports the hinf and hk algebras only");
  if (inst.q && (*inst.q < 1 || *inst.q > kMaxRadicalExponent))
    throw InvalidInputError("radical exponent q must lie in 1..8");
  if (inst.M && !(*inst.M > 0 && *inst.M <= 1e3)) throw InvalidInputError("radical constant M must lie in (0, 1000]");
}

}  // namespace

Certificate certify(const Solution& s, const VecFn& F, const RFunc& h, unsigned exponent, const Algebra& a,
                    const GridSpec& grid) {
  Certificate c;
  c.branch = s.branch;
  c.V = s.V;
  c.base = s.base;
  c.target_exponent = exponent;
  c.factor = s.factor;
  c.offset = s.offset;
  c.h_power = s.h_power;
  c.formula = s.formula;
  c.steps = s.steps;
  if (c.V.size() != F.size()) throw DimensionError("solution length does not match F");
  c.residual_ok = (inner(F, c.V) - pow(h, exponent)).is_zero();
  c.membership_ok = is_member(c.V, a);
  c.base_norm = c.base.empty() ? 0.0 : sup_norm_estimate(c.base, grid);
  c.h_norm = sup_norm_estimate({h}, grid);
  c.sup_norm_V = sup_norm_estimate(c.V, grid);
  c.bound = c.factor * std::pow(c.h_norm, c.h_power) * c.base_norm + c.offset;
  c.norm_ok = c.sup_norm_V <= c.bound + kNormTolerance;
  c.stated_bound = s.stated_factor * c.base_norm;
  return c;
}

RadicalWitness radical_witness(const VecFn& F, const RFunc& h, const Algebra& a, const GridSpec& grid,
                               std::optional<int> q_hint, double M, SolveContext& ctx) {
  KSet K;
  if (const auto* hk = std::get_if<HK>(&a))
    K = hk->K;
  else if (!std::holds_alternative<Hinf>(a))
    throw InvalidInputError("radical witness supports the hinf and hk algebras only");

  RadicalWitness w;
  if (h.is_zero()) {
    w.q = 1;
    w.solution = solve_in_algebra(F, h, a, ctx);
    return w;
  }
  std::vector<double> Fnorm, habs;
  for (const auto z : grid.points()) {
    double t = 0;
    for (const auto& f : F) t += std::norm(eval(f, z));
    Fnorm.push_back(std::sqrt(t));
    habs.push_back(std::abs(eval(h, z)));
  }
  std::vector<int> qs;
  if (q_hint)
    qs.push_back(*q_hint);
  else
    for (int q = 1; q <= kMaxRadicalExponent; ++q) qs.push_back(q);

  const bool F0_zero = std::all_of(F.begin(), F.end(), [](const RFunc& f) { return taylor_coeff(f, 0).is_zero(); });
  for (int q : qs) {
    double ratio = 0;
    for (std::size_t i = 0; i < Fnorm.size(); ++i) {
      const double hq = std::pow(habs[i], q);
      if (hq == 0) continue;
      ratio = Fnorm[i] == 0 ? INFINITY : std::max(ratio, hq / Fnorm[i]);
    }
    if (ratio > M) continue;
    const RFunc hq = pow(h, static_cast<unsigned>(q));
    try {
      w.q = q;
      w.M_required = ratio;
      if (!F0_zero || K.empty()) {
        w.L = 0;
        w.solution = solve_in_algebra(F, hq, a, ctx);
        w.solution.branch = "radical-direct/" + w.solution.branch;
        return w;
      }
      // U = h^L G lies in H_K once its order at 0, at least e·L, exceeds max K
      const VecFn G = ctx.base(F, hq);
      const int e = std::min(z_order(F), order_at_zero(h));
      if (e < 1) throw NotInIdealError("h(0) != 0 while F(0) = 0");
      w.L = *K.max() / e + 1;
      Solution s;
      s.branch = "radical-power";
      s.base = G;
      s.V = pow(h, static_cast<unsigned>(w.L)) * G;
      s.h_power = w.L;
      s.formula = "|h|^L |G|";
      w.solution = std::move(s);
      return w;
    } catch (const NotInIdealError&) {
    }
  }
  throw NotInIdealError("no exponent q <= 8 with M|F| >= |h^q| on the grid and h^q in the ideal");
}

SolveOutcome solve(const Instance& inst, Mode mode, const GridSpec& grid) {
  validate(inst, mode);
  SolveOutcome out;
  out.mode = mode;
  // [FF*]^{1/2} >= |h| is FF* ψ(FF*) >= |h|^3 with ψ(t) = t^{1/2}
  out.hypothesis = mode == Mode::Wolff3 ? hypothesis_check(inst.F, pow(inst.h, 3), PsiFunction::power(0.5), grid)
                                        : hypothesis_check(inst.F, inst.h, inst.psi, grid);
  if (mode == Mode::Radical) out.hypothesis.ok = out.hypothesis.max_FF <= 1.0 + 1e-9;
  if (!out.hypothesis.ok) return out;

  SolveContext ctx(depth_cap(inst.F, inst.algebra));
  if (mode == Mode::Radical) {
    out.radical = radical_witness(inst.F, inst.h, inst.algebra, grid, inst.q, inst.M.value_or(1e3), ctx);
    const auto exponent = static_cast<unsigned>(out.radical->q + out.radical->L);
    out.certificate = certify(out.radical->solution, inst.F, inst.h, exponent, inst.algebra, grid);
    return out;
  }
  const unsigned exponent = mode == Mode::Wolff3 ? 3 : 1;
  const RFunc target = pow(inst.h, exponent);
  if (inst.base_solution) {
    const VecFn& G = *inst.base_solution;
    if (G.size() != inst.F.size()) throw InvalidInputError("base solution length does not match F");
    if (!(inner(inst.F, G) - target).is_zero())
      throw InvalidInputError("base solution does not satisfy F·Gᵀ = " + std::string(exponent == 1 ? "h" : "h^3"));
    ctx.seed(inst.F, target, G);
  }
  const Solution s = solve_in_algebra(inst.F, target, inst.algebra, ctx);
  out.certificate = certify(s, inst.F, inst.h, exponent, inst.algebra, grid);
  return out;
}

SolveOutcome wolff_cube_solve(const Instance& inst, const GridSpec& grid) { return solve(inst, Mode::Wolff3, grid); }

}  // namespace corona
