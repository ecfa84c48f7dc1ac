#ifndef OTALG_CLI_REPORT_HPP
#define OTALG_CLI_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/cli/json_io.hpp"

namespace otalg::cli {

inline constexpr int kReportSchemaVersion = 1;

// Raised for unknown check names or flat indices; the tool maps it to exit 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sorted.
const std::vector<std::string>& check_names();

struct ReportOptions {
  std::optional<unsigned> degree;  // default_degree(A) when unset
  std::uint64_t seed = 1;
  // Lattice ids (as printed by `arr flats`) for the per-flat checks; all
  // flats when unset.
  std::optional<std::vector<std::size_t>> flats;
};

// Fragment status:
//   "ok"         assertions held; "verdict" is the mathematical answer
//   "violation"  a theorem-backed identity or agreement failed
//   "skipped"    the input does not meet the check's precondition
//   "error"      anything else thrown, message embedded
struct Report {
  json body;
  std::size_t violations = 0;
  std::size_t errors = 0;
  int exit_code() const { return violations > 0 ? 2 : 0; }
};

// Checks run concurrently; fragments are ordered by check name, then by
// the order they were generated in (ascending flat id, hyperplane, ...).
Report run_report(const Arrangement& a, const std::vector<std::string>& checks, const ReportOptions& options);

// Arrangement summary used by the report and by `arr info`.
json arrangement_summary(const Arrangement& a);

// The report without wall-clock fields, for determinism comparisons.
json strip_timings(json report);

}  // namespace otalg::cli

#endif  // OTALG_CLI_REPORT_HPP
