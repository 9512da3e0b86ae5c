#include "normlab/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "normlab/bounds.hpp"
#include "normlab/generators.hpp"

namespace normlab {

Tolerances GlobalOptions::tolerances() const {
  Tolerances t{};
  if (tol) {
    t.single_check = *tol;
    t.chain_check = *tol;
  }
  return t;
}

int cmd_bounds(const std::string& input_path, const std::string& output_path,
               ReportFormat format, const GlobalOptions& global, std::ostream& out,
               std::ostream& err) {
  OperatorFamily family({ComplexMatrix::identity(1)});
  try {
    family = read_family_file(input_path);
  } catch (const FileFormatError& e) {
    err << "error: " << input_path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  const Tolerances tol = global.tolerances();
  const BoundReport report = full_report(family, tol);

  ReportMeta meta;
  meta.label = family.label();
  meta.seed = global.seed;
  meta.tol = tol;
  try {
    write_report_file(output_path, report, meta, format);
  } catch (const FileFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!global.quiet) {
    out << "lhs_sq=" << format_double(report.lhs_sq)
        << " absolute_value=" << format_double(report.absolute_value)
        << " refined=" << format_double(report.refined)
        << " improved=" << format_double(report.improved)
        << " cotlar_stein=" << format_double(report.cotlar_stein)
        << " chain_ok=" << (report.chain_ok ? "true" : "false") << "\n";
  }
  return report.chain_ok ? kExitOk : kExitViolation;
}

int cmd_check(const CheckOptions& options, const GlobalOptions& global, std::ostream& out,
              std::ostream& err) {
  if (options.trials < 1) {
    err << "error: --trials must be >= 1\n";
    return kExitUsage;
  }
  if (options.dim_min < 1 || options.dim_max < options.dim_min) {
    err << "error: bad dimension range\n";
    return kExitUsage;
  }
  if (options.size_min < 1 || options.size_max < options.size_min) {
    err << "error: bad family size range\n";
    return kExitUsage;
  }

  SuiteConfig config;
  config.trials = options.trials;
  config.dim_min = options.dim_min;
  config.dim_max = options.dim_max;
  config.size_min = options.size_min;
  config.size_max = options.size_max;
  config.seed = global.seed;
  config.tol = global.tolerances();

  const std::vector<VerificationResult> results = run_suite(options.suite, config);

  // Per-check tallies in name order; results are ordered (trial, name).
  std::map<std::string, std::pair<int, int>> tally;  // name -> (passed, total)
  std::map<std::string, int> occurrence;             // name -> next trial index
  bool all_passed = true;
  for (const VerificationResult& r : results) {
    auto& [passed, total] = tally[r.check_name];
    ++total;
    if (r.passed) {
      ++passed;
    } else {
      all_passed = false;
    }
    const int trial = occurrence[r.check_name]++;
    if (!r.passed && !options.witness_dir.empty() && r.witness) {
      std::error_code ec;
      std::filesystem::create_directories(options.witness_dir, ec);
      const std::filesystem::path path = std::filesystem::path(options.witness_dir) /
                                         (r.check_name + "_t" + std::to_string(trial) + ".json");
      std::ofstream file(path, std::ios::binary);
      if (!file) {
        err << "error: cannot write witness " << path.string() << "\n";
        return kExitUsage;
      }
      file << *r.witness;
      if (!global.quiet) {
        out << "witness: " << path.string() << " (seed " << r.seed << ")\n";
      }
    }
  }

  for (const auto& [name, counts] : tally) {
    out << name << ": " << counts.first << "/" << counts.second << " passed\n";
  }
  out << "total: " << std::count_if(results.begin(), results.end(),
                                    [](const VerificationResult& r) { return r.passed; })
      << "/" << results.size() << " passed\n";
  return all_passed ? kExitOk : kExitViolation;
}

int cmd_gap(const GapOptions& options, const GlobalOptions& global, std::ostream& out,
            std::ostream& err) {
  if (options.n_values.empty()) {
    err << "error: no n values given\n";
    return kExitUsage;
  }
  for (int n : options.n_values) {
    if (n < 1) {
      err << "error: n values must be >= 1\n";
      return kExitUsage;
    }
  }
  if (options.dim < 1) {
    err << "error: --dim must be >= 1\n";
    return kExitUsage;
  }
  const std::vector<GapRow> rows = gap_experiment(options.n_values, options.dim,
                                                  global.tolerances());
  try {
    write_gap_csv(options.output_csv, rows);
  } catch (const FileFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!global.quiet) {
    out << "wrote " << rows.size() << " rows to " << options.output_csv << "\n";
  }
  return kExitOk;
}

int cmd_demo(const DemoOptions& options, const GlobalOptions& global, std::ostream& out,
             std::ostream& err) {
  if (options.n < 1 || options.dim < 1) {
    err << "error: --n and --dim must be >= 1\n";
    return kExitUsage;
  }

  OperatorFamily family({ComplexMatrix::identity(1)});
  try {
    if (options.family == "scalar") {
      family = scalar_family(options.n, options.dim);
    } else if (options.family == "orthogonal") {
      std::vector<double> norms = options.norms;
      if (norms.empty()) norms.assign(static_cast<std::size_t>(options.n), 1.0);
      family = orthogonal_family(options.n, options.dim, norms);
    } else if (options.family == "random") {
      FamilyKind kind;
      if (options.kind == "general") {
        kind = FamilyKind::general;
      } else if (options.kind == "psd") {
        kind = FamilyKind::psd;
      } else {
        err << "error: --kind must be general or psd\n";
        return kExitUsage;
      }
      family = random_family(options.n, options.dim, global.seed, kind);
    } else if (options.family == "near_orthogonal") {
      RandomFamilyOptions rf;
      rf.near_orthogonal_eps = options.eps;
      family = random_family(options.n, options.dim, global.seed,
                             FamilyKind::near_orthogonal, rf);
    } else {
      err << "error: --family must be scalar, orthogonal, random or near_orthogonal\n";
      return kExitUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    write_family_file(options.output, family);
  } catch (const FileFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!global.quiet) {
    out << "wrote " << family.size() << " operators of dimension " << family.dim() << " to "
        << options.output << "\n";
  }
  return kExitOk;
}

std::optional<std::vector<int>> parse_n_spec(const std::string& spec) {
  if (spec.empty()) return std::nullopt;

  auto parse_int = [](const std::string& s, int& value) {
    try {
      std::size_t used = 0;
      value = std::stoi(s, &used);
      return used == s.size();
    } catch (const std::exception&) {
      return false;
    }
  };

  if (spec.find(':') != std::string::npos) {  // range: lo:hi[:+s|xk]
    std::vector<std::string> parts;
    std::stringstream stream(spec);
    std::string part;
    while (std::getline(stream, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
    int lo = 0;
    int hi = 0;
    if (!parse_int(parts[0], lo) || !parse_int(parts[1], hi)) return std::nullopt;
    if (lo < 1 || hi < lo) return std::nullopt;

    bool multiplicative = false;
    int step = 1;
    if (parts.size() == 3) {
      if (parts[2].size() < 2 || (parts[2][0] != '+' && parts[2][0] != 'x')) return std::nullopt;
      multiplicative = parts[2][0] == 'x';
      if (!parse_int(parts[2].substr(1), step) || step < 1) return std::nullopt;
      if (multiplicative && step < 2) return std::nullopt;
    }
    std::vector<int> values;
    for (long long v = lo; v <= hi; v = multiplicative ? v * step : v + step) {
      values.push_back(static_cast<int>(v));
    }
    return values;
  }

  // comma list or single value
  std::vector<int> values;
  std::stringstream stream(spec);
  std::string part;
  while (std::getline(stream, part, ',')) {
    int v = 0;
    if (!parse_int(part, v) || v < 1) return std::nullopt;
    values.push_back(v);
  }
  if (values.empty()) return std::nullopt;
  return values;
}

}  // namespace normlab
