#include "corona/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "corona/errors.hpp"

namespace corona::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

mpq_class rational(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

// Shortest continued-fraction convergent that converts back to x exactly.
mpq_class rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot be written as a rational");
  const mpq_class exact(x);
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  mpq_class r = exact;
  for (int i = 0; i < 64; ++i) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    const mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    mpq_class c(h1, k1);
    c.canonicalize();
    if (c.get_d() == x) return c;
    r -= a;
    if (r == 0) break;
    r = 1 / r;
  }
  return exact;
}

json rational_json(double x) { return rat_str(rational_from_double(x)); }

double rational_double(const json& j, const std::string& path) { return rational(j, path).get_d(); }

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

double number(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::string text(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

}  // namespace

GRat grat_from_json(const json& j, const std::string& path) {
  if (j.is_string()) return GRat(rational(j, path));
  if (j.is_array() && j.size() == 2) return GRat(rational(j[0], path + "[0]"), rational(j[1], path + "[1]"));
  fail(path, "expected \"re\" or [\"re\", \"im\"]");
}

json to_json(const GRat& x) { return json::array({rat_str(x.re()), rat_str(x.im())}); }

Poly poly_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a coefficient array");
  std::vector<GRat> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(grat_from_json(j[i], at(path, i)));
  return Poly(std::move(c));
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

RFunc rfunc_from_json(const json& j, const std::string& path) {
  if (j.is_array()) return RFunc(poly_from_json(j, path));
  const Poly num = poly_from_json(field(j, "num", path), path + ".num");
  const Poly den = j.contains("den") ? poly_from_json(j["den"], path + ".den") : Poly(GRat(1));
  if (den.is_zero()) fail(path + ".den", "zero denominator");
  try {
    return RFunc::make(num, den);
  } catch (const DomainError& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

json to_json(const RFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

VecFn vecfn_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of functions");
  VecFn F;
  for (std::size_t i = 0; i < j.size(); ++i) F.push_back(rfunc_from_json(j[i], at(path, i)));
  return F;
}

json to_json(const VecFn& F) {
  json a = json::array();
  for (const auto& f : F) a.push_back(to_json(f));
  return a;
}

Blaschke blaschke_from_json(const json& j, const std::string& path) {
  const json& zs = field(j, "zeros", path);
  if (!zs.is_array()) fail(path + ".zeros", "expected an array");
  std::vector<GRat> zeros;
  for (std::size_t i = 0; i < zs.size(); ++i) zeros.push_back(grat_from_json(zs[i], at(path + ".zeros", i)));
  try {
    return Blaschke(std::move(zeros));
  } catch (const DomainError& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

json to_json(const Blaschke& B) {
  json zs = json::array();
  for (const auto& a : B.zeros()) zs.push_back(to_json(a));
  return {{"zeros", zs}};
}

std::vector<int> int_list_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an integer array");
  std::vector<int> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer(j[i], at(path, i)));
  return v;
}

Algebra algebra_from_json(const json& j, const std::string& path) {
  const std::string type = text(j, "type", path);
  auto kset = [&]() -> KSet {
    try {
      return KSet(int_list_from_json(field(j, "K", path), path + ".K"));
    } catch (const InvalidKError& e) {
      throw InvalidInputError(path + ".K: " + e.what());
    }
  };
  if (type == "hinf") return Hinf{};
  if (type == "cplusb") return CPlusB{blaschke_from_json(field(j, "blaschke", path), path + ".blaschke")};
  if (type == "hk") {
    const json& k = field(j, "K", path);
    if (k.is_object()) {
      auto gens = int_list_from_json(field(k, "complement_generators", path + ".K"),
                                     path + ".K.complement_generators");
      try {
        auto dec = decompose(gens);
        return HKPeriodic{std::move(gens), std::move(dec)};
      } catch (const InvalidKError& e) {
        throw InvalidInputError(path + ".K: " + e.what());
      }
    }
    KSet K = kset();
    const auto v = is_algebra_set(K);
    if (!v.is_algebra)
      throw InvalidInputError(path + ".K: not an algebra set, " + std::to_string(v.counterexample->first) + " + " +
                              std::to_string(v.counterexample->second) + " lies in K");
    return HK{std::move(K)};
  }
  if (type == "hkb") {
    KSet K = kset();
    if (!is_algebra_set(K).is_algebra) throw InvalidInputError(path + ".K: not an algebra set");
    return HKB{std::move(K), blaschke_from_json(field(j, "blaschke", path), path + ".blaschke")};
  }
  fail(path + ".type", "unknown algebra \"" + type + "\" (expected hinf, cplusb, hk or hkb)");
}

json to_json(const Algebra& a) {
  struct {
    json operator()(const Hinf&) const { return {{"type", "hinf"}}; }
    json operator()(const CPlusB& c) const { return {{"type", "cplusb"}, {"blaschke", to_json(c.B)}}; }
    json operator()(const HK& k) const { return {{"type", "hk"}, {"K", k.K.elements()}}; }
    json operator()(const HKPeriodic& k) const {
      return {{"type", "hk"}, {"K", {{"complement_generators", k.generators}}}};
    }
    json operator()(const HKB& k) const {
      return {{"type", "hkb"}, {"K", k.K.elements()}, {"blaschke", to_json(k.B)}};
    }
  } v;
  return std::visit(v, a);
}

PsiFunction psi_from_json(const json& j, const std::string& path) {
  const std::string kind = text(j, "kind", path);
  try {
    if (kind == "power") return PsiFunction::power(rational_double(field(j, "p", path), path + ".p"));
    if (kind == "iterated_log")
      return PsiFunction::iterated_log(integer(field(j, "levels", path), path + ".levels"),
                                       rational_double(field(j, "epsilon", path), path + ".epsilon"));
    if (kind == "user_table") {
      const json& pts = field(j, "points", path);
      if (!pts.is_array()) fail(path + ".points", "expected an array of [t, psi] pairs");
      std::vector<std::pair<double, double>> table;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string p = at(path + ".points", i);
        if (!pts[i].is_array() || pts[i].size() != 2) fail(p, "expected a [t, psi] pair");
        table.emplace_back(rational_double(pts[i][0], p + "[0]"), rational_double(pts[i][1], p + "[1]"));
      }
      return PsiFunction::user_table(std::move(table));
    }
  } catch (const DomainError& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
  fail(path + ".kind", "unknown psi kind \"" + kind + "\" (expected power, iterated_log or user_table)");
}

json to_json(const PsiFunction& psi) {
  switch (psi.kind()) {
    case PsiFunction::Kind::Power:
      return {{"kind", "power"}, {"p", rational_json(psi.exponent())}};
    case PsiFunction::Kind::IteratedLog:
      return {{"kind", "iterated_log"}, {"levels", psi.levels()}, {"epsilon", rational_json(psi.epsilon())}};
    case PsiFunction::Kind::UserTable: {
      json pts = json::array();
      for (const auto& [t, v] : psi.table()) pts.push_back({rational_json(t), rational_json(v)});
      return {{"kind", "user_table"}, {"points", pts}};
    }
  }
  return {};
}

GridSpec grid_from_json(const json& j, const std::string& path) {
  GridSpec g;
  if (j.contains("circles")) {
    const json& c = j["circles"];
    if (!c.is_array() || c.empty()) fail(path + ".circles", "expected a non-empty array of radii");
    g.radii.clear();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const mpq_class r = rational(c[i], at(path + ".circles", i));
      if (r <= 0 || r > 1) throw InvalidInputError(at(path + ".circles", i) + ": radius must lie in (0, 1]");
      g.radii.push_back(r.get_d());
    }
  }
  if (j.contains("points_per_circle")) {
    g.points_per_circle = integer(j["points_per_circle"], path + ".points_per_circle");
    if (g.points_per_circle < 1) throw InvalidInputError(path + ".points_per_circle: must be positive");
  }
  return g;
}

json to_json(const GridSpec& g) {
  json radii = json::array();
  for (double r : g.radii) radii.push_back(rational_json(r));
  return {{"circles", radii}, {"points_per_circle", g.points_per_circle}};
}

Instance instance_from_json(const json& j, const std::string& path) {
  Instance inst;
  inst.F = vecfn_from_json(field(j, "F", path), path + ".F");
  inst.h = rfunc_from_json(field(j, "h", path), path + ".h");
  inst.algebra = algebra_from_json(field(j, "algebra", path), path + ".algebra");
  if (j.contains("psi")) inst.psi = psi_from_json(j["psi"], path + ".psi");
  if (j.contains("base_solution")) inst.base_solution = vecfn_from_json(j["base_solution"], path + ".base_solution");
  if (j.contains("q")) inst.q = integer(j["q"], path + ".q");
  if (j.contains("M")) inst.M = rational_double(j["M"], path + ".M");
  return inst;
}

json instance_to_json(const Instance& inst) {
  json j{{"F", to_json(inst.F)}, {"h", to_json(inst.h)}, {"algebra", to_json(inst.algebra)}, {"psi", to_json(inst.psi)}};
  if (inst.base_solution) j["base_solution"] = to_json(*inst.base_solution);
  if (inst.q) j["q"] = *inst.q;
  if (inst.M) j["M"] = rational_json(*inst.M);
  return j;
}

InstanceFile instance_file_from_json(const json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  if (integer(field(j, "version", "$"), "$.version") != 1) fail("$.version", "only version 1 is supported");
  InstanceFile f;
  if (j.contains("description")) f.description = text(j, "description", "$");
  if (j.contains("mode")) {
    try {
      f.mode = parse_mode(text(j, "mode", "$"));
    } catch (const ParseError& e) {
      fail("$.mode", e.what());
    }
  }
  f.instance = instance_from_json(field(j, "instance", "$"), "$.instance");
  if (j.contains("grid")) f.grid = grid_from_json(j["grid"], "$.grid");
  return f;
}

json to_json(const InstanceFile& f) {
  json j{{"version", 1}, {"instance", instance_to_json(f.instance)}, {"grid", to_json(f.grid)}};
  if (!f.description.empty()) j["description"] = f.description;
  if (f.mode) j["mode"] = mode_name(*f.mode);
  return j;
}

json to_json(const HypothesisReport& h) {
  return {{"margin", h.margin},
          {"worst_point", {h.worst_point.real(), h.worst_point.imag()}},
          {"max_FF", h.max_FF},
          {"max_FF_point", {h.max_FF_point.real(), h.max_FF_point.imag()}},
          {"ok", h.ok}};
}

json to_json(const Step& s) {
  json d = json::array();
  for (const auto& c : s.derivative) d.push_back(to_json(c));
  return {{"kind", s.kind}, {"k", s.k}, {"derivative", d}, {"kernel", to_json(s.kernel)}};
}

Step step_from_json(const json& j, const std::string& path) {
  Step s;
  s.kind = text(j, "kind", path);
  s.k = integer(field(j, "k", path), path + ".k");
  const json& d = field(j, "derivative", path);
  if (!d.is_array()) fail(path + ".derivative", "expected an array");
  for (std::size_t i = 0; i < d.size(); ++i) s.derivative.push_back(grat_from_json(d[i], at(path + ".derivative", i)));
  s.kernel = grat_from_json(field(j, "kernel", path), path + ".kernel");
  return s;
}

json to_json(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  json j{{"branch", c.branch},
          {"V", to_json(c.V)},
          {"base", to_json(c.base)},
          {"target_exponent", c.target_exponent},
          {"factor", c.factor},
          {"offset", c.offset},
          {"h_power", c.h_power},
          {"bound_formula", c.formula},
          {"steps", steps},
          {"base_norm", c.base_norm},
          {"h_norm", c.h_norm},
          {"sup_norm_V", c.sup_norm_V},
          {"bound", c.bound},
          {"residual_ok", c.residual_ok},
          {"membership_ok", c.membership_ok},
          {"norm_ok", c.norm_ok},
          {"ok", c.ok()}};
  if (c.stated_bound > 0) j["stated_bound"] = c.stated_bound;
  return j;
}

Solution solution_from_certificate_json(const json& j, const std::string& path) {
  Solution s;
  s.branch = text(j, "branch", path);
  s.V = vecfn_from_json(field(j, "V", path), path + ".V");
  s.base = vecfn_from_json(field(j, "base", path), path + ".base");
  s.factor = number(j, "factor", path);
  s.offset = number(j, "offset", path);
  s.h_power = integer(field(j, "h_power", path), path + ".h_power");
  s.formula = text(j, "bound_formula", path);
  const json& steps = field(j, "steps", path);
  if (!steps.is_array()) fail(path + ".steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) s.steps.push_back(step_from_json(steps[i], at(path + ".steps", i)));
  return s;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace corona::io
