#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "normlab/commands.hpp"

namespace {

bool parse_range(const std::string& text, int& lo, int& hi) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, colon));
      hi = std::stoi(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator-norm bound laboratory: almost-orthogonality bounds on finite-"
               "dimensional operator families, randomized lemma checks and gap tables"};
  app.require_subcommand(1);
  app.fallthrough();

  normlab::GlobalOptions global;
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Override the comparison slacks");
  app.add_option("--seed", global.seed, "Base seed for everything random");
  app.add_flag("--quiet", global.quiet, "Suppress progress output");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the full bound chain for a family file");
  std::string input_path;
  std::string output_path;
  std::string format_name = "json";
  bounds->add_option("--input,-i", input_path, "Family file to read")->required();
  bounds->add_option("--output,-o", output_path, "Report file to write")->required();
  bounds->add_option("--format", format_name, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // check
  auto* check = app.add_subcommand("check", "Run randomized verification suites");
  std::string suite_name = "all";
  normlab::CheckOptions check_options;
  std::string dims = "1:8";
  std::string sizes = "1:12";
  check->add_option("--suite", suite_name,
                    "all, half_power, positive_sum, abs_value, norm_identity, mixed_schwarz, "
                    "improved, cotlar_stein or chain");
  check->add_option("--trials", check_options.trials, "Trials per check");
  check->add_option("--dims", dims, "Dimension range lo:hi");
  check->add_option("--sizes", sizes, "Family size range lo:hi");
  check->add_option("--witness-dir", check_options.witness_dir,
                    "Directory for failure witness files");

  // gap
  auto* gap = app.add_subcommand("gap", "Tabulate the Cotlar-Stein vs improved-bound gap");
  normlab::GapOptions gap_options;
  std::string n_spec;
  gap->add_option("--n", n_spec, "n values: '4', '1,2,4', '8:256:x2' or '1:9:+2'")->required();
  gap->add_option("--dim", gap_options.dim, "Member dimension");
  gap->add_option("--output,-o", gap_options.output_csv, "CSV file to write")->required();

  // demo
  auto* demo = app.add_subcommand("demo", "Write a generated family file");
  normlab::DemoOptions demo_options;
  std::string norms_spec;
  demo->add_option("--family", demo_options.family,
                   "scalar, orthogonal, random or near_orthogonal")
      ->required();
  demo->add_option("--n", demo_options.n, "Family size");
  demo->add_option("--dim", demo_options.dim, "Member dimension (block dimension for orthogonal)");
  demo->add_option("--norms", norms_spec, "Comma-separated member norms (orthogonal)");
  demo->add_option("--kind", demo_options.kind, "general or psd (random)");
  demo->add_option("--eps", demo_options.eps, "Perturbation scale (near_orthogonal)");
  demo->add_option("--output,-o", demo_options.output, "Family file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return normlab::kExitUsage;
  }

  if (*tol_opt) {
    if (!(tol_value > 0.0)) {
      std::cerr << "error: --tol must be positive\n";
      return normlab::kExitUsage;
    }
    global.tol = tol_value;
  }

  if (bounds->parsed()) {
    const auto format =
        format_name == "csv" ? normlab::ReportFormat::csv : normlab::ReportFormat::json;
    return normlab::cmd_bounds(input_path, output_path, format, global, std::cout, std::cerr);
  }

  if (check->parsed()) {
    const auto suite = normlab::suite_from_string(suite_name);
    if (!suite) {
      std::cerr << "error: unknown suite '" << suite_name << "'\n";
      return normlab::kExitUsage;
    }
    check_options.suite = *suite;
    if (!parse_range(dims, check_options.dim_min, check_options.dim_max)) {
      std::cerr << "error: bad --dims range '" << dims << "'\n";
      return normlab::kExitUsage;
    }
    if (!parse_range(sizes, check_options.size_min, check_options.size_max)) {
      std::cerr << "error: bad --sizes range '" << sizes << "'\n";
      return normlab::kExitUsage;
    }
    return normlab::cmd_check(check_options, global, std::cout, std::cerr);
  }

  if (gap->parsed()) {
    const auto n_values = normlab::parse_n_spec(n_spec);
    if (!n_values) {
      std::cerr << "error: bad --n spec '" << n_spec << "'\n";
      return normlab::kExitUsage;
    }
    gap_options.n_values = *n_values;
    return normlab::cmd_gap(gap_options, global, std::cout, std::cerr);
  }

  if (demo->parsed()) {
    if (!norms_spec.empty()) {
      std::stringstream stream(norms_spec);
      std::string part;
      while (std::getline(stream, part, ',')) {
        try {
          demo_options.norms.push_back(std::stod(part));
        } catch (const std::exception&) {
          std::cerr << "error: bad --norms entry '" << part << "'\n";
          return normlab::kExitUsage;
        }
      }
    }
    return normlab::cmd_demo(demo_options, global, std::cout, std::cerr);
  }

  return normlab::kExitUsage;
}
