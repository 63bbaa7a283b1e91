#include <algorithm>
#include <cmath>

#include "corona/errors.hpp"
#include "corona/solve.hpp"

namespace corona {

std::string algebra_name(const Algebra& a) {
  struct {
    std::string operator()(const Hinf&) const { return "hinf"; }
    std::string operator()(const CPlusB&) const { return "cplusb"; }
    std::string operator()(const HK&) const { return "hk"; }
    std::string operator()(const HKPeriodic&) const { return "hk_periodic"; }
    std::string operator()(const HKB&) const { return "hkb"; }
  } v;
  return std::visit(v, a);
}

bool is_member(const RFunc& f, const Algebra& a) {
  struct {
    const RFunc& f;
    bool operator()(const Hinf&) const { return true; }
    bool operator()(const CPlusB& c) const { return is_cplusb_member(f, c.B).member; }
    bool operator()(const HK& k) const { return is_hk_member(f, k.K); }
    bool operator()(const HKPeriodic& k) const { return is_hk_member(f, k.dec); }
    bool operator()(const HKB& k) const { return is_hkb_member(f, k.K, k.B); }
  } v{f};
  return std::visit(v, a);
}

bool is_member(const VecFn& F, const Algebra& a) {
  return std::all_of(F.begin(), F.end(), [&](const RFunc& f) { return is_member(f, a); });
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Treil:
      return "treil";
    case Mode::Wolff3:
      return "wolff3";
    case Mode::Radical:
      return "radical";
  }
  return "";
}

Mode parse_mode(const std::string& s) {
  if (s == "treil") return Mode::Treil;
  if (s == "wolff3") return Mode::Wolff3;
  if (s == "radical") return Mode::Radical;
  throw ParseError("unknown mode '" + s + "' (expected treil, wolff3 or radical)");
}

VecFn bezout_oracle(const VecFn& F, const RFunc& h) {
  if (F.empty()) throw DimensionError("bezout oracle needs at least one generator");
  VecFn G(F.size());
  if (h.is_zero()) return G;
  std::vector<Poly> nums;
  for (const auto& f : F) nums.push_back(f.num());
  const auto [s, u] = extended_gcd(std::span<const Poly>(nums));
  if (s.is_zero()) throw NotInIdealError("every generator is zero");
  RFunc hs;
  try {
    hs = divide(h, RFunc(s));
  } catch (const NonDivisibleError&) {
    throw NotInIdealError("generators share the zeros of " + s.str() + " in the closed disk and h does not");
  }
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (u[i].is_zero()) continue;
    G[i] = RFunc(u[i] * F[i].den()) * hs;
  }
  return G;
}

HypothesisReport hypothesis_check(const VecFn& F, const RFunc& h, const PsiFunction& psi, const GridSpec& grid) {
  if (grid.size() < 64) throw DomainError("hypothesis grid needs at least 64 points");
  HypothesisReport r;
  r.margin = INFINITY;
  for (const auto z : grid.points()) {
    double t = 0;
    for (const auto& f : F) t += std::norm(eval(f, z));
    const double m = t * psi(t) - std::abs(eval(h, z));
    if (m < r.margin) {
      r.margin = m;
      r.worst_point = z;
    }
    if (t > r.max_FF) {
      r.max_FF = t;
      r.max_FF_point = z;
    }
  }
  r.ok = r.margin >= 0 && r.max_FF <= 1.0 + 1e-9;
  return r;
}

void SolveContext::seed(const VecFn& F, const RFunc& target, VecFn G) {
  cache_.insert(cache_.begin(), {Key{F, target}, std::move(G)});
}

std::optional<VecFn> SolveContext::lookup(const VecFn& F, const RFunc& target) const {
  for (const auto& [k, G] : cache_)
    if (k.F == F && k.target == target) return G;
  return std::nullopt;
}

VecFn SolveContext::base(const VecFn& F, const RFunc& target) {
  if (auto G = lookup(F, target)) return *G;
  ++oracle_calls_;
  VecFn G = bezout_oracle(F, target);
  cache_.push_back({Key{F, target}, G});
  return G;
}

SolveContext::Frame::Frame(SolveContext& c) : c_(c) {
  if (c_.depth_ >= c_.cap_) throw DegenerateError("solver recursion exceeded its depth budget");
  ++c_.depth_;
}

}  // namespace corona
