#ifndef SEGREREG_CLI_HPP
#define SEGREREG_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace segrereg::cli {

// process exit codes
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kHypothesisViolation = 3;
inline constexpr int kCrosscheckFailure = 4;

enum class OutputFormat { Table, Json, Csv };
enum class Mode { Exact, Bound, Oracle, Diagnose };

/// One parsed invocation.  Veronese/shift lists, when present, must match
/// the number of input factors; every Veronese index must be ≥ 1.
struct JobSpec {
  std::string subcommand;
  std::vector<std::string> input_paths;
  std::uint32_t characteristic = 0;
  std::vector<long long> veronese; // n_i, empty = all 1
  std::vector<long long> shift;    // τ_i, empty = all 0
  OutputFormat format = OutputFormat::Table;
  Mode mode = Mode::Exact;
  int max_vertices = 16;

  void validate(std::size_t factor_count) const;
};

/// Parse argv (without the program name), run the job, write the result to
/// `out` and complaints to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace segrereg::cli

#endif
