#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "corona/blaschke.hpp"
#include "corona/kset.hpp"
#include "corona/psi.hpp"
#include "corona/rational_function.hpp"

namespace corona {

struct Hinf {};
struct CPlusB {
  Blaschke B;
};
struct HK {
  KSet K;
};
/// H_K for an infinite K whose complement is generated by `generators`.
struct HKPeriodic {
  std::vector<int> generators;
  Decomposition dec;
};
struct HKB {
  KSet K;
  Blaschke B;
};
using Algebra = std::variant<Hinf, CPlusB, HK, HKPeriodic, HKB>;

std::string algebra_name(const Algebra& a);
bool is_member(const RFunc& f, const Algebra& a);
bool is_member(const VecFn& F, const Algebra& a);

enum class Mode { Treil, Wolff3, Radical };
std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct Instance {
  VecFn F;
  RFunc h;
  Algebra algebra = Hinf{};
  PsiFunction psi = PsiFunction::power(1.0);
  std::optional<VecFn> base_solution;
  std::optional<int> q;     ///< radical exponent to try first
  std::optional<double> M;  ///< radical constant
};

/// Returns G with F·Gᵀ == h exactly.
///
/// Writes f_i = n_i/d_i, runs extended Euclid on the numerators to get
/// Σ n_i u_i = s and sets g_i = u_i d_i h/s. NotInIdealError when h/s has a
/// pole in the closed disk (a common zero of F in the disk not matched by h).
VecFn bezout_oracle(const VecFn& F, const RFunc& h);

struct HypothesisReport {
  double margin = 0;  ///< min over the grid of FF*ψ(FF*) − |h|
  std::complex<double> worst_point;
  double max_FF = 0;  ///< max over the grid of FF*
  std::complex<double> max_FF_point;
  bool ok = false;    ///< margin >= 0 and max_FF <= 1 + 1e-9
};

HypothesisReport hypothesis_check(const VecFn& F, const RFunc& h, const PsiFunction& psi, const GridSpec& grid);

/// One correction step of an H_K induction; `kernel` is F(0)·G^(k)(0)ᵀ, which must vanish.
struct Step {
  std::string kind;
  int k = 0;
  std::vector<GRat> derivative;  ///< G^(k)(0)
  GRat kernel;
};

/// Solution plus the data needed to recompute its norm bound:
/// |V(z)| <= factor · ‖h‖^h_power · ‖base‖ + offset pointwise on the grid.
struct Solution {
  std::string branch;
  VecFn V;
  VecFn base;
  double factor = 1.0;
  double offset = 0.0;
  int h_power = 0;
  std::string formula;
  std::vector<Step> steps;
  /// (1 + 1/‖c‖) for the rank-one branches, whose stated bound has ‖c‖ where the proof has ‖c‖²; 0 otherwise.
  double stated_factor = 0.0;
};

/// Base-solution cache with a recursion budget. Lookups try seeded and
/// cached pairs (F, target) before falling back to bezout_oracle.
class SolveContext {
 public:
  explicit SolveContext(int depth_cap = 64) : cap_(depth_cap) {}

  void seed(const VecFn& F, const RFunc& target, VecFn G);
  std::optional<VecFn> lookup(const VecFn& F, const RFunc& target) const;
  VecFn base(const VecFn& F, const RFunc& target);
  int oracle_calls() const { return oracle_calls_; }

  /// RAII guard; throws DegenerateError when the recursion budget runs out.
  class Frame {
   public:
    explicit Frame(SolveContext& c);
    ~Frame() { --c_.depth_; }
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;

   private:
    SolveContext& c_;
  };

 private:
  struct Key {
    VecFn F;
    RFunc target;
  };
  std::vector<std::pair<Key, VecFn>> cache_;
  int cap_;
  int depth_ = 0;
  int oracle_calls_ = 0;
};

Solution hinf_solve(const VecFn& F, const RFunc& h, SolveContext& ctx);
/// ℂ + BH∞; handles both F_c != 0 and F_c = 0.
Solution cplusb_solve(const VecFn& F, const RFunc& h, const Blaschke& B, SolveContext& ctx);
/// H_K with F(0) != 0. DegenerateError when F(0) = 0.
Solution hk_solve(const VecFn& F, const RFunc& h, const KSet& K, SolveContext& ctx);
/// H_K with F = z^m F_m, F_m(0) != 0. NeitherCaseError outside the two solvable cases.
Solution hk_solve_zero(const VecFn& F, const RFunc& h, const KSet& K, SolveContext& ctx);
/// H_K for infinite K via the z^d substitution.
Solution hk_periodic_solve(const VecFn& F, const RFunc& h, const Decomposition& dec, SolveContext& ctx);
/// H_{K(B)} with nonzero B-adic constant F_0. DegenerateError when F_0 = 0.
Solution hkb_solve(const VecFn& F, const RFunc& h, const KSet& K, const Blaschke& B, SolveContext& ctx);
/// H_{K(B)} with F = B^{j1} F_α. NeitherCaseError outside the two solvable cases.
Solution hkb_solve_zero(const VecFn& F, const RFunc& h, const KSet& K, const Blaschke& B, SolveContext& ctx);

/// Picks the solver by algebra and by whether F degenerates at the base point.
Solution solve_in_algebra(const VecFn& F, const RFunc& target, const Algebra& a, SolveContext& ctx);

struct RadicalWitness {
  int q = 0;
  int L = 0;
  double M_required = 0;  ///< max over the grid of |h^q| / ‖F‖
  Solution solution;      ///< F·Uᵀ == h^{q+L}
};

/// Tries q_hint, or q = 1..8 when absent, for M‖F‖ >= |h^q| on the grid with an
/// ideal solution; NotInIdealError if none is found.
RadicalWitness radical_witness(const VecFn& F, const RFunc& h, const Algebra& a, const GridSpec& grid,
                               std::optional<int> q_hint, double M, SolveContext& ctx);

struct Certificate {
  std::string branch;
  VecFn V;
  VecFn base;
  unsigned target_exponent = 1;
  double factor = 1.0;
  double offset = 0.0;
  int h_power = 0;
  std::string formula;
  std::vector<Step> steps;

  double base_norm = 0;
  double h_norm = 0;
  double sup_norm_V = 0;
  double bound = 0;
  double stated_bound = 0;  ///< stated_factor · ‖base‖, recorded only; not part of ok()
  bool residual_ok = false;
  bool membership_ok = false;
  bool norm_ok = false;
  bool ok() const { return residual_ok && membership_ok && norm_ok; }
};

/// Recomputes residual, membership and norms of `s` against F·Vᵀ == h^exponent.
Certificate certify(const Solution& s, const VecFn& F, const RFunc& h, unsigned exponent, const Algebra& a,
                    const GridSpec& grid);

struct SolveOutcome {
  Mode mode = Mode::Treil;
  HypothesisReport hypothesis;
  std::optional<RadicalWitness> radical;
  std::optional<Certificate> certificate;  ///< absent when the hypothesis rejects the instance
};

/// Validates `inst` (InvalidInputError on malformed data), checks the mode's
/// hypothesis, solves and certifies.
SolveOutcome solve(const Instance& inst, Mode mode, const GridSpec& grid);

/// Wolff's cube: solves F·Vᵀ == h³ under [FF*]^{1/2} >= |h|.
SolveOutcome wolff_cube_solve(const Instance& inst, const GridSpec& grid);

}  // namespace corona
