#include "corona/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "corona/errors.hpp"
#include "corona/koszul.hpp"

namespace corona::cli {

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": \"" + tok + "\" is not an integer");
    }
    if (used != tok.size()) throw ParseError(std::string(what) + ": \"" + tok + "\" is not an integer");
    v.push_back(x);
  }
  return v;
}

std::string set_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string vec_str(const std::vector<GRat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << body;
}

bool is_input_error(const std::exception& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidInputError*>(&e) ||
         dynamic_cast<const InvalidKError*>(&e) || dynamic_cast<const DimensionError*>(&e);
}

unsigned expected_exponent(Mode mode, const io::json& report) {
  if (mode == Mode::Wolff3) return 3;
  if (mode != Mode::Radical) return 1;
  const auto& r = report.at("radical");
  return r.at("q").get<unsigned>() + r.at("L").get<unsigned>();
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

}  // namespace

int cmd_check_k(const CheckKOptions& o, std::ostream& out, std::ostream& err) {
  if (o.set.has_value() == o.complement_generators.has_value()) {
    err << "check-k: give exactly one of --set and --complement-generators\n";
    return kExitInput;
  }
  io::json report;
  bool algebra = true;
  try {
    if (o.set) {
      const KSet K(parse_int_list(*o.set, "--set"));
      const auto v = is_algebra_set(K);
      algebra = v.is_algebra;
      out << "K = " << set_str(K.elements()) << "\n";
      out << "algebra: " << (algebra ? "true" : "false") << "\n";
      report["K"] = K.elements();
      report["algebra"] = algebra;
      if (v.counterexample) {
        const auto [j, k] = *v.counterexample;
        out << "counterexample: " << j << " + " << k << " = " << j + k << " lies in K\n";
        report["counterexample"] = {j, k};
      }
    } else {
      const auto gens = parse_int_list(*o.complement_generators, "--complement-generators");
      const Decomposition dec = decompose(gens);
      out << "complement generated by " << set_str(gens) << "\n";
      out << "algebra: true\n";
      out << "d = " << dec.data.d << "\n";
      out << "n = " << set_str(dec.data.n_values) << "\n";
      out << "N0 = " << dec.data.N0 << "\n";
      out << "K1 = " << set_str(dec.K1.elements()) << "\n";
      report["complement_generators"] = gens;
      report["algebra"] = true;
      report["semigroup"] = {{"d", dec.data.d}, {"n_values", dec.data.n_values}, {"N0", dec.data.N0}};
      report["K1"] = dec.K1.elements();
    }
    if (o.out) write_file(*o.out, io::dump(report));
  } catch (const Error& e) {
    err << "check-k: " << e.what() << "\n";
    return kExitInput;
  }
  return algebra ? kExitOk : kExitFailed;
}

SolveResult solve_report(const io::InstanceFile& file, Mode mode, std::uint64_t seed) {
  SolveResult r;
  io::json& rep = r.report;
  rep["report_version"] = 1;
  rep["mode"] = mode_name(mode);
  rep["seed"] = seed;
  rep["description"] = file.description;
  rep["instance"] = io::instance_to_json(file.instance);
  rep["grid"] = io::to_json(file.grid);
  if (file.instance.psi.kind() == PsiFunction::Kind::UserTable)
    rep["advisory"] = {{"psi", file.instance.psi.describe()},
                       {"psi_integral_1e-12_to_1", file.instance.psi.integrability_integral()}};
  try {
    const SolveOutcome o = solve(file.instance, mode, file.grid);
    rep["hypothesis"] = io::to_json(o.hypothesis);
    if (o.radical)
      rep["radical"] = {{"q", o.radical->q}, {"L", o.radical->L}, {"M_required", o.radical->M_required}};
    if (!o.certificate) {
      rep["status"] = "hypothesis-rejected";
      r.exit_code = kExitFailed;
      return r;
    }
    rep["certificate"] = io::to_json(*o.certificate);
    rep["status"] = o.certificate->ok() ? "certified" : "certificate-failed";
    r.exit_code = o.certificate->ok() ? kExitOk : kExitFailed;
  } catch (const NeitherCaseError& e) {
    rep["status"] = "neither-case";
    rep["error"] = e.what();
    r.exit_code = kExitNeither;
  } catch (const Error& e) {
    if (is_input_error(e)) throw;
    rep["status"] = "no-solution";
    rep["error"] = e.what();
    r.exit_code = kExitFailed;
  }
  return r;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult r;
  try {
    io::InstanceFile file = io::instance_file_from_json(io::read_json_file(o.instance_file));
    if (o.grid_points) {
      if (*o.grid_points < 1) throw InvalidInputError("--grid-points must be positive");
      file.grid.points_per_circle = *o.grid_points;
    }
    if (file.grid.size() < 64) throw InvalidInputError("the grid needs at least 64 points");
    const Mode mode = o.mode ? parse_mode(*o.mode) : file.mode.value_or(Mode::Treil);
    r = solve_report(file, mode, o.seed);
    if (o.out) write_file(*o.out, io::dump(r.report));
  } catch (const Error& e) {
    err << "solve: " << e.what() << "\n";
    return is_input_error(e) ? kExitInput : kExitFailed;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (!o.out) {
    out << io::dump(r.report);
    return r.exit_code;
  }
  const auto& rep = r.report;
  out << "status: " << rep["status"].get<std::string>() << "\n";
  if (rep.contains("hypothesis")) {
    const auto& h = rep["hypothesis"];
    out << "hypothesis margin: " << h["margin"].get<double>() << " at z = (" << h["worst_point"][0].get<double>()
        << ", " << h["worst_point"][1].get<double>() << ")\n";
    if (h["max_FF"].get<double>() > 1.0 + 1e-9)
      out << "FF* = " << h["max_FF"].get<double>() << " exceeds 1 at z = (" << h["max_FF_point"][0].get<double>()
          << ", " << h["max_FF_point"][1].get<double>() << ")\n";
  }
  if (rep.contains("error")) out << "error: " << rep["error"].get<std::string>() << "\n";
  if (rep.contains("certificate")) {
    const auto& c = rep["certificate"];
    out << "branch: " << c["branch"].get<std::string>() << "\n";
    out << "residual_ok: " << c["residual_ok"] << ", membership_ok: " << c["membership_ok"]
        << ", norm_ok: " << c["norm_ok"] << "\n";
    out << "sup|V| = " << c["sup_norm_V"].get<double>() << " <= " << c["bound"].get<double>() << " ("
        << c["bound_formula"].get<std::string>() << ")\n";
  }
  out << "time: " << ms << " ms\n";
  return r.exit_code;
}

std::optional<KoszulFailure> koszul_trials(int n, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  auto scalar = [&] {
    mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    return GRat(re, im);
  };
  for (int t = 0; t < trials; ++t) {
    std::vector<GRat> A(static_cast<std::size_t>(n)), B(static_cast<std::size_t>(n));
    for (auto& a : A) a = scalar();
    for (auto& b : B) b = scalar();
    for (int k = 0; k + 1 <= n - 1; ++k)
      if (!check_range_kernel(A, k)) return KoszulFailure{A, B, k};
    if (!check_rank_one_identity(A, B)) return KoszulFailure{A, B, -1};
  }
  return std::nullopt;
}

int cmd_koszul_verify(const KoszulOptions& o, std::ostream& out, std::ostream& err) {
  if (o.dim < 2 || o.dim > 8) {
    err << "koszul verify: --dim must lie in 2..8, got " << o.dim << "\n";
    return kExitInput;
  }
  if (o.trials < 1) {
    err << "koszul verify: --trials must be positive\n";
    return kExitInput;
  }
  const auto fail = koszul_trials(o.dim, o.trials, o.seed);
  if (fail) {
    out << "FAIL n = " << o.dim << "\n";
    out << "A = " << vec_str(fail->A) << "\n";
    out << "B = " << vec_str(fail->B) << "\n";
    if (fail->grade < 0)
      out << "rank-one identity (A.B) I = B^T A + Q_A Q_B^T fails\n";
    else
      out << "range/kernel fails at grade " << fail->grade << "\n";
    return kExitFailed;
  }
  out << "ok n = " << o.dim << ", " << o.trials << " trials, seed " << o.seed << "\n";
  return kExitOk;
}

VerifyResult verify_report(const io::json& report) {
  if (!report.is_object() || !report.contains("instance")) throw ParseError("report has no instance section");
  if (!report.contains("certificate")) throw ParseError("report has no certificate section (no V to verify)");
  const Instance inst = io::instance_from_json(report["instance"], "$.instance");
  const GridSpec grid = report.contains("grid") ? io::grid_from_json(report["grid"], "$.grid") : GridSpec{};
  const Mode mode = parse_mode(report.value("mode", std::string("treil")));
  const io::json& stored = report["certificate"];
  const Solution s = io::solution_from_certificate_json(stored, "$.certificate");

  VerifyResult r;
  unsigned exponent = 0;
  try {
    exponent = expected_exponent(mode, report);
  } catch (const io::json::exception&) {
    throw ParseError("radical report lacks radical.q / radical.L");
  }
  if (stored.value("target_exponent", 0u) != exponent)
    r.diffs.push_back("target_exponent: stored " + stored.value("target_exponent", io::json()).dump() +
                      ", expected " + std::to_string(exponent) + " for mode " + mode_name(mode));
  const Certificate c = certify(s, inst.F, inst.h, exponent, inst.algebra, grid);
  const io::json fresh = io::to_json(c);
  for (const char* key : {"residual_ok", "membership_ok", "norm_ok", "ok"}) {
    if (!stored.contains(key) || stored[key] != fresh[key])
      r.diffs.push_back(std::string(key) + ": stored " + (stored.contains(key) ? stored[key].dump() : "missing") +
                        ", recomputed " + fresh[key].dump());
  }
  for (const char* key : {"base_norm", "h_norm", "sup_norm_V", "bound"}) {
    if (!stored.contains(key) || !stored[key].is_number() || !close(stored[key].get<double>(), fresh[key].get<double>()))
      r.diffs.push_back(std::string(key) + ": stored " + (stored.contains(key) ? stored[key].dump() : "missing") +
                        ", recomputed " + fresh[key].dump());
  }
  for (const char* key : {"residual_ok", "membership_ok", "norm_ok"})
    if (!fresh[key].get<bool>()) r.diffs.push_back(std::string(key) + ": recomputed certificate check fails");
  r.recomputed = c;
  r.exit_code = r.diffs.empty() ? kExitOk : kExitFailed;
  return r;
}

int cmd_verify(const std::string& report_file, std::ostream& out, std::ostream& err) {
  VerifyResult r;
  try {
    r = verify_report(io::read_json_file(report_file));
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return is_input_error(e) ? kExitInput : kExitFailed;
  }
  if (r.exit_code == kExitOk) {
    out << "ok: certificate reproduces (" << r.recomputed->branch << ")\n";
    return kExitOk;
  }
  out << "mismatch:\n";
  for (const auto& d : r.diffs) out << "  " << d << "\n";
  return r.exit_code;
}

}  // namespace corona::cli
