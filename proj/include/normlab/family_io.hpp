#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "normlab/bounds.hpp"
#include "normlab/operator_family.hpp"
#include "normlab/suites.hpp"
#include "normlab/tolerances.hpp"

namespace normlab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kFamilyFileSchemaVersion = 1;

/// Malformed or unreadable input document; what() names the offending
/// field/position.
class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON text for a family: {schema_version, dim, count, label, operators}
/// with each operator a row-major list of [re, im] pairs. Doubles render
/// with round-trip precision, so read(write(F)) is lossless.
std::string family_to_json(const OperatorFamily& family);
OperatorFamily family_from_json(const std::string& text);

void write_family_file(const std::filesystem::path& path, const OperatorFamily& family);
OperatorFamily read_family_file(const std::filesystem::path& path);

enum class ReportFormat { json, csv };

struct ReportMeta {
  std::string tool_version = kToolVersion;
  std::string label;
  std::uint64_t seed = 0;
  Tolerances tol{};
};

/// Flat key-value report document carrying every BoundReport field (the a/b
/// matrices appear as indexed keys in csv form) plus the meta block.
std::string render_report(const BoundReport& report, const ReportMeta& meta, ReportFormat format);
void write_report_file(const std::filesystem::path& path, const BoundReport& report,
                       const ReportMeta& meta, ReportFormat format);

/// CSV with header n,lhs_sq,improved,cotlar_stein,ratio and one row per n.
/// '.' decimal separator, '\n' line endings, round-trip precision.
std::string gap_csv(const std::vector<GapRow>& rows);
void write_gap_csv(const std::filesystem::path& path, const std::vector<GapRow>& rows);

/// Shortest round-trip decimal rendering of a double (locale-independent).
std::string format_double(double value);

}  // namespace normlab
