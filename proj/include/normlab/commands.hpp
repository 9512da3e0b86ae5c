#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normlab/family_io.hpp"
#include "normlab/suites.hpp"

namespace normlab {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // usage, I/O or parse failure
inline constexpr int kExitViolation = 2;   // verified numerical-chain violation

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::optional<double> tol;  // overrides the comparison slacks when set
  bool quiet = false;

  Tolerances tolerances() const;
};

int cmd_bounds(const std::string& input_path, const std::string& output_path,
               ReportFormat format, const GlobalOptions& global, std::ostream& out,
               std::ostream& err);

struct CheckOptions {
  Suite suite = Suite::all;
  int trials = 100;
  int dim_min = 1;
  int dim_max = 8;
  int size_min = 1;
  int size_max = 12;
  std::string witness_dir;  // empty: no witness files
};

int cmd_check(const CheckOptions& options, const GlobalOptions& global, std::ostream& out,
              std::ostream& err);

struct GapOptions {
  std::vector<int> n_values;
  int dim = 1;
  std::string output_csv;
};

int cmd_gap(const GapOptions& options, const GlobalOptions& global, std::ostream& out,
            std::ostream& err);

struct DemoOptions {
  std::string family;  // scalar | orthogonal | random | near_orthogonal
  int n = 1;
  int dim = 1;                  // block_dim for orthogonal
  std::vector<double> norms;    // orthogonal only; defaults to all ones
  std::string kind = "general";  // random only: general | psd
  double eps = 0.05;            // near_orthogonal only
  std::string output;
};

int cmd_demo(const DemoOptions& options, const GlobalOptions& global, std::ostream& out,
             std::ostream& err);

/// "8:256:x2" (multiplicative), "1:9:+2" (additive), "1,2,4" or "4".
/// Empty optional on malformed input.
std::optional<std::vector<int>> parse_n_spec(const std::string& spec);

}  // namespace normlab
