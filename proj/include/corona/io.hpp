#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "corona/solve.hpp"

namespace corona::io {

using nlohmann::json;

// Scalars travel as rational strings so instance data stays bit-exact.
// A GRat is ["re", "im"] or a bare "re"; a Poly is a coefficient array in
// ascending powers; an RFunc is {"num": [...], "den": [...]} or a bare array.
// Every parser throws ParseError naming the offending path.

GRat grat_from_json(const json& j, const std::string& path);
json to_json(const GRat& x);
Poly poly_from_json(const json& j, const std::string& path);
json to_json(const Poly& p);
RFunc rfunc_from_json(const json& j, const std::string& path);
json to_json(const RFunc& f);
VecFn vecfn_from_json(const json& j, const std::string& path);
json to_json(const VecFn& F);

Blaschke blaschke_from_json(const json& j, const std::string& path);
json to_json(const Blaschke& B);
std::vector<int> int_list_from_json(const json& j, const std::string& path);

Algebra algebra_from_json(const json& j, const std::string& path);
json to_json(const Algebra& a);
PsiFunction psi_from_json(const json& j, const std::string& path);
json to_json(const PsiFunction& psi);
GridSpec grid_from_json(const json& j, const std::string& path);
json to_json(const GridSpec& g);

/// Parsed instance file: {version: 1, description, mode, instance: {...}, grid: {...}}.
struct InstanceFile {
  std::string description;
  std::optional<Mode> mode;
  Instance instance;
  GridSpec grid;
};

InstanceFile instance_file_from_json(const json& j);
json to_json(const InstanceFile& f);
json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j, const std::string& path);

json to_json(const HypothesisReport& h);
json to_json(const Step& s);
Step step_from_json(const json& j, const std::string& path);
json to_json(const Certificate& c);
/// The Solution part of a stored certificate (no recomputed fields).
Solution solution_from_certificate_json(const json& j, const std::string& path);

/// Reads a JSON document; ParseError on I/O or syntax problems.
json read_json_file(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace corona::io
