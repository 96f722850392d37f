#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opxlab/coeffs.hpp"
#include "opxlab/cpoly.hpp"

namespace opxlab::cli {

enum class Command { Recur, Szego, Map, Verify };
enum class Format { Csv, Json };
enum class Suite { Algebraic, Asymptotic, Map, Examples, All };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalid = 2;

inline constexpr int kMaxDegree = 200;

struct RunConfig {
  Command command = Command::Recur;
  std::string seq_path;
  std::string preset;  // alternative to seq_path; random presets use `seed`
  int nmax = 20;
  std::size_t grid_M = 1024;
  double tol = 1e-9;
  std::string out_path;  // empty: stdout
  Format format = Format::Csv;
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  std::vector<cplx> z;
};

std::string_view command_name(Command c) noexcept;
std::string_view format_name(Format f) noexcept;
std::string_view suite_name(Suite s) noexcept;
Suite suite_from_name(std::string_view name);

/// Throws Error(InvalidArgument) on nmax > 200, non-power-of-two grid, tol <= 0.
void check_config(const RunConfig& cfg);

/// "re,im;re,im;..." (a bare "re" means a real point).
std::vector<cplx> parse_z_list(std::string_view text);

/// Compact JSON echo of every config field.
std::string config_json(const RunConfig& cfg);

std::string_view version() noexcept;

/// Sequence named by --seq or --preset; nullopt if neither was given.
std::optional<VerblunskySequence> load_input(const RunConfig& cfg);

std::string cmd_recur(const RunConfig& cfg, const VerblunskySequence& seq);
std::string cmd_szego(const RunConfig& cfg, const VerblunskySequence& seq);

struct MapOutput {
  std::string recurrence;  // n,b_n,c_n,delta_n (or the whole JSON document)
  std::string polys;       // n,power,coeff (empty for JSON)
};
MapOutput cmd_map(const RunConfig& cfg, const VerblunskySequence& seq);

struct CheckResult {
  std::string check_id;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  bool pass() const noexcept { return measured <= threshold; }
};

struct VerifyReport {
  std::vector<CheckResult> results;  // sorted by check_id
  std::string config_echo;
  std::string version;
  bool all_pass() const noexcept;
};

/// Runs the selected suite; with a user sequence, adds SEQ.* identity checks on it.
VerifyReport cmd_verify(const RunConfig& cfg, const std::optional<VerblunskySequence>& user = std::nullopt);
std::string render_report(const VerifyReport& report, Format f);

/// Check ids belonging to a suite, in order.
std::vector<std::string> suite_checks(Suite s);

/// Full front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opxlab::cli
