#include "grothsp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "grothsp/errors.hpp"

namespace grothsp::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Matrix matrix_from(const json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data")) {
    throw InputError("matrix JSON must be an object with rows, cols and data");
  }
  try {
    const auto rows = doc.at("rows").get<std::int64_t>();
    const auto cols = doc.at("cols").get<std::int64_t>();
    if (rows < 0 || cols < 0) throw InputError("matrix JSON: negative dimension");
    const auto data = doc.at("data").get<std::vector<double>>();
    return from_row_major(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), data);
  } catch (const json::exception& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  }
}

json matrix_json(const Matrix& a) {
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", to_row_major(a)}};
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_csv(const std::filesystem::path& path) { return path.extension() == ".csv"; }

}  // namespace

Matrix parse_matrix_json(std::string_view text) { return matrix_from(parse_json(text)); }

Matrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> grid;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const std::string t = trim(cell);
      double x = 0.0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
      if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(x)) {
        throw InputError("CSV: not a number: '" + t + "'");
      }
      row.push_back(x);
    }
    if (!grid.empty() && row.size() != grid.front().size()) throw InputError("CSV: ragged rows");
    grid.push_back(std::move(row));
  }
  if (grid.empty()) throw InputError("CSV: no data");
  std::vector<double> flat;
  for (const auto& row : grid) flat.insert(flat.end(), row.begin(), row.end());
  return from_row_major(grid.size(), grid.front().size(), flat);
}

VectorFamily parse_family_json(std::string_view text) {
  const json doc = parse_json(text);
  Matrix columns = matrix_from(doc);
  if (doc.contains("half_dim")) {
    std::int64_t half = 0;
    try {
      half = doc.at("half_dim").get<std::int64_t>();
    } catch (const json::exception& e) {
      throw InputError(std::string("family JSON: ") + e.what());
    }
    if (half < 1 || 2 * half != columns.rows()) throw InputError("family JSON: half_dim does not match rows");
  }
  return make_family(std::move(columns));
}

std::string matrix_to_json(const Matrix& a) { return matrix_json(a).dump(); }

std::string family_to_json(const VectorFamily& family) {
  json doc = matrix_json(family.columns);
  doc["half_dim"] = family.ambient.half_dim;
  return doc.dump();
}

std::string matrix_to_csv(const Matrix& a) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ',';
      out << a(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return is_csv(path) ? parse_matrix_csv(text) : parse_matrix_json(text);
}

VectorFamily read_family_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return is_csv(path) ? make_family(parse_matrix_csv(text)) : parse_family_json(text);
}

std::string report_to_json(const SweepReport& report) {
  json rows = json::array();
  for (const SweepRow& r : report.rows) {
    rows.push_back({{"parameter", r.parameter},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"ratio", r.ratio},
                    {"holds", r.holds},
                    {"runtime_ms", r.runtime_ms},
                    {"note", r.note}});
  }
  json by_parameter = json::array();
  for (const auto& [p, c] : report.empirical_cn_by_parameter) by_parameter.push_back({{"parameter", p}, {"cn", c}});
  const json doc{{"kind", report.kind},
                 {"kg_used", report.kg_used},
                 {"rows", rows},
                 {"max_ratio", report.max_ratio},
                 {"min_ratio", report.min_ratio},
                 {"all_hold", report.all_hold},
                 {"empirical_cn", report.empirical_cn},
                 {"empirical_cn_by_parameter", by_parameter}};
  return doc.dump(2);
}

SweepReport report_from_json(std::string_view text) {
  const json doc = parse_json(text);
  SweepReport report;
  try {
    report.kind = doc.at("kind").get<std::string>();
    report.kg_used = doc.at("kg_used").get<double>();
    for (const json& r : doc.at("rows")) {
      report.rows.push_back({r.at("parameter").get<double>(), r.at("lhs").get<double>(), r.at("rhs").get<double>(),
                             r.at("ratio").get<double>(), r.at("holds").get<bool>(),
                             r.at("runtime_ms").get<double>(), r.at("note").get<std::string>()});
    }
    report.max_ratio = doc.at("max_ratio").get<double>();
    report.min_ratio = doc.at("min_ratio").get<double>();
    report.all_hold = doc.at("all_hold").get<bool>();
    report.empirical_cn = doc.at("empirical_cn").get<double>();
    for (const json& p : doc.at("empirical_cn_by_parameter")) {
      report.empirical_cn_by_parameter.emplace_back(p.at("parameter").get<double>(), p.at("cn").get<double>());
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  }
  return report;
}

std::string report_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "parameter,lhs,rhs,ratio,holds,runtime_ms,note\n";
  for (const SweepRow& r : report.rows) {
    out << r.parameter << ',' << r.lhs << ',' << r.rhs << ',' << r.ratio << ',' << (r.holds ? "true" : "false")
        << ',' << r.runtime_ms << ",\"" << r.note << "\"\n";
  }
  return out.str();
}

}  // namespace grothsp::io
