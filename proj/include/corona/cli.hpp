#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "corona/io.hpp"

namespace corona::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNeither = 3;

struct CheckKOptions {
  std::optional<std::string> set;                    ///< "1,2,5"
  std::optional<std::string> complement_generators;  ///< "4,6"
  std::optional<std::string> out;
};
int cmd_check_k(const CheckKOptions& o, std::ostream& out, std::ostream& err);

struct SolveOptions {
  std::string instance_file;
  std::optional<std::string> mode;
  std::optional<std::string> out;
  std::optional<int> grid_points;
  std::uint64_t seed = 0;
};

/// Report document plus the exit code it implies.
struct SolveResult {
  int exit_code = kExitOk;
  io::json report;
};

/// Solves a parsed instance file and builds its report. Input errors raise.
SolveResult solve_report(const io::InstanceFile& file, Mode mode, std::uint64_t seed);
int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err);

struct KoszulFailure {
  std::vector<GRat> A, B;
  int grade = 0;  ///< grade of the failing range/kernel check; -1 for the rank-one identity
};
/// Random seeded pairs (A, B) in dimension n; nullopt when every identity holds.
std::optional<KoszulFailure> koszul_trials(int n, int trials, std::uint64_t seed);

struct KoszulOptions {
  int dim = 2;
  int trials = 100;
  std::uint64_t seed = 0;
};
int cmd_koszul_verify(const KoszulOptions& o, std::ostream& out, std::ostream& err);

/// Field-level differences between a stored report and its recomputation.
struct VerifyResult {
  int exit_code = kExitOk;
  std::vector<std::string> diffs;
  std::optional<Certificate> recomputed;
};
/// Recomputes the certificate of a report; ParseError when the instance or V is missing.
VerifyResult verify_report(const io::json& report);
int cmd_verify(const std::string& report_file, std::ostream& out, std::ostream& err);

}  // namespace corona::cli
