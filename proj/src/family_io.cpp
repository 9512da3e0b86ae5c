#include "normlab/family_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace normlab {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string family_to_json(const OperatorFamily& family) {
  ordered_json doc;
  doc["schema_version"] = kFamilyFileSchemaVersion;
  doc["dim"] = family.dim();
  doc["count"] = family.size();
  doc["label"] = family.label();
  ordered_json operators = ordered_json::array();
  for (const ComplexMatrix& m : family.members()) {
    ordered_json entries = ordered_json::array();
    for (const Complex& z : m.entries()) {
      entries.push_back(ordered_json::array({z.real(), z.imag()}));
    }
    operators.push_back(std::move(entries));
  }
  doc["operators"] = std::move(operators);
  return doc.dump(1) + "\n";
}

namespace {

const ordered_json& require_field(const ordered_json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw FileFormatError(std::string("missing field: ") + name);
  }
  return *it;
}

int require_int(const ordered_json& doc, const char* name) {
  const ordered_json& field = require_field(doc, name);
  if (!field.is_number_integer()) {
    throw FileFormatError(std::string("field is not an integer: ") + name);
  }
  return field.get<int>();
}

}  // namespace

OperatorFamily family_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FileFormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FileFormatError("top-level value must be an object");

  const int schema = require_int(doc, "schema_version");
  if (schema != kFamilyFileSchemaVersion) {
    throw FileFormatError("unsupported schema_version " + std::to_string(schema) +
                          " (expected " + std::to_string(kFamilyFileSchemaVersion) + ")");
  }
  const int dim = require_int(doc, "dim");
  const int count = require_int(doc, "count");
  if (dim < 1) throw FileFormatError("field out of range: dim must be >= 1");
  if (count < 1) throw FileFormatError("field out of range: count must be >= 1");

  const ordered_json& label_field = require_field(doc, "label");
  if (!label_field.is_string()) throw FileFormatError("field is not a string: label");

  const ordered_json& operators = require_field(doc, "operators");
  if (!operators.is_array()) throw FileFormatError("field is not an array: operators");
  if (static_cast<int>(operators.size()) != count) {
    throw FileFormatError("count is " + std::to_string(count) + " but operators has " +
                          std::to_string(operators.size()) + " entries");
  }

  std::vector<ComplexMatrix> members;
  members.reserve(operators.size());
  const std::size_t expected = static_cast<std::size_t>(dim) * dim;
  for (std::size_t k = 0; k < operators.size(); ++k) {
    const ordered_json& op = operators[k];
    const std::string where = "operators[" + std::to_string(k) + "]";
    if (!op.is_array() || op.size() != expected) {
      throw FileFormatError(where + " must be an array of " + std::to_string(expected) +
                            " [re, im] pairs");
    }
    std::vector<Complex> entries;
    entries.reserve(expected);
    for (const ordered_json& pair : op) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw FileFormatError(where + " entries must be [re, im] number pairs");
      }
      entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    try {
      members.emplace_back(dim, dim, std::move(entries));
    } catch (const std::exception& e) {
      throw FileFormatError(where + ": " + e.what());
    }
  }
  return OperatorFamily(std::move(members), label_field.get<std::string>());
}

void write_family_file(const std::filesystem::path& path, const OperatorFamily& family) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open for writing: " + path.string());
  out << family_to_json(family);
  out.flush();
  if (!out) throw FileFormatError("write failed: " + path.string());
}

OperatorFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("cannot open for reading: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw FileFormatError("read failed: " + path.string());
  return family_from_json(text.str());
}

namespace {

std::vector<std::pair<std::string, std::string>> report_key_values(const BoundReport& report,
                                                                   const ReportMeta& meta) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("tool_version", meta.tool_version);
  kv.emplace_back("label", meta.label);
  kv.emplace_back("seed", std::to_string(meta.seed));
  kv.emplace_back("tol_hermitian_input", format_double(meta.tol.hermitian_input));
  kv.emplace_back("tol_psd_clamp", format_double(meta.tol.psd_clamp));
  kv.emplace_back("tol_polar_cutoff", format_double(meta.tol.polar_cutoff));
  kv.emplace_back("tol_reconstruction", format_double(meta.tol.reconstruction));
  kv.emplace_back("tol_single_check", format_double(meta.tol.single_check));
  kv.emplace_back("tol_chain_check", format_double(meta.tol.chain_check));
  kv.emplace_back("lhs_norm", format_double(report.lhs_norm));
  kv.emplace_back("lhs_sq", format_double(report.lhs_sq));
  kv.emplace_back("absolute_value", format_double(report.absolute_value));
  kv.emplace_back("refined", format_double(report.refined));
  kv.emplace_back("improved", format_double(report.improved));
  kv.emplace_back("cotlar_stein", format_double(report.cotlar_stein));
  kv.emplace_back("schur_factor_a", format_double(report.schur_factor_a));
  kv.emplace_back("schur_factor_b", format_double(report.schur_factor_b));
  kv.emplace_back("chain_ok", report.chain_ok ? "true" : "false");
  for (std::size_t i = 0; i < report.slacks.size(); ++i) {
    kv.emplace_back("slack_" + std::to_string(i), format_double(report.slacks[i]));
  }
  return kv;
}

void append_matrix_keys(std::vector<std::pair<std::string, std::string>>& kv,
                        const std::string& prefix, const ComplexMatrix& m) {
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k)
      kv.emplace_back(prefix + "_" + std::to_string(j) + "_" + std::to_string(k),
                      format_double(m(j, k).real()));
}

}  // namespace

std::string render_report(const BoundReport& report, const ReportMeta& meta,
                          ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["tool_version"] = meta.tool_version;
    doc["label"] = meta.label;
    doc["seed"] = meta.seed;
    doc["tol_hermitian_input"] = meta.tol.hermitian_input;
    doc["tol_psd_clamp"] = meta.tol.psd_clamp;
    doc["tol_polar_cutoff"] = meta.tol.polar_cutoff;
    doc["tol_reconstruction"] = meta.tol.reconstruction;
    doc["tol_single_check"] = meta.tol.single_check;
    doc["tol_chain_check"] = meta.tol.chain_check;
    doc["lhs_norm"] = report.lhs_norm;
    doc["lhs_sq"] = report.lhs_sq;
    doc["absolute_value"] = report.absolute_value;
    doc["refined"] = report.refined;
    doc["improved"] = report.improved;
    doc["cotlar_stein"] = report.cotlar_stein;
    doc["schur_factor_a"] = report.schur_factor_a;
    doc["schur_factor_b"] = report.schur_factor_b;
    doc["chain_ok"] = report.chain_ok;
    doc["slacks"] = report.slacks;
    ordered_json a_rows = ordered_json::array();
    ordered_json b_rows = ordered_json::array();
    for (int j = 0; j < report.a_matrix.rows(); ++j) {
      ordered_json a_row = ordered_json::array();
      ordered_json b_row = ordered_json::array();
      for (int k = 0; k < report.a_matrix.cols(); ++k) {
        a_row.push_back(report.a_matrix(j, k).real());
        b_row.push_back(report.b_matrix(j, k).real());
      }
      a_rows.push_back(std::move(a_row));
      b_rows.push_back(std::move(b_row));
    }
    doc["a_matrix"] = std::move(a_rows);
    doc["b_matrix"] = std::move(b_rows);
    return doc.dump(1) + "\n";
  }

  // csv: one key,value line per field
  std::string out = "key,value\n";
  auto kv = report_key_values(report, meta);
  append_matrix_keys(kv, "a_matrix", report.a_matrix);
  append_matrix_keys(kv, "b_matrix", report.b_matrix);
  for (const auto& [key, value] : kv) {
    out += key;
    out += ',';
    out += value;
    out += '\n';
  }
  return out;
}

void write_report_file(const std::filesystem::path& path, const BoundReport& report,
                       const ReportMeta& meta, ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open for writing: " + path.string());
  out << render_report(report, meta, format);
  out.flush();
  if (!out) throw FileFormatError("write failed: " + path.string());
}

std::string gap_csv(const std::vector<GapRow>& rows) {
  std::string out = "n,lhs_sq,improved,cotlar_stein,ratio\n";
  for (const GapRow& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_double(row.lhs_sq);
    out += ',';
    out += format_double(row.improved);
    out += ',';
    out += format_double(row.cotlar_stein);
    out += ',';
    out += format_double(row.ratio_cs_over_improved);
    out += '\n';
  }
  return out;
}

void write_gap_csv(const std::filesystem::path& path, const std::vector<GapRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open for writing: " + path.string());
  out << gap_csv(rows);
  out.flush();
  if (!out) throw FileFormatError("write failed: " + path.string());
}

}  // namespace normlab
