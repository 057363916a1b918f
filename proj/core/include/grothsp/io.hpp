#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "grothsp/experiments.hpp"
#include "grothsp/linalg.hpp"
#include "grothsp/symplectic.hpp"

namespace grothsp::io {

// Matrix files are JSON objects {"rows": r, "cols": c, "data": [row-major]};
// vector families add "half_dim": n and store the vectors as columns. The CSV
// alternative is a plain rectangular numeric grid (columns are the vectors of
// a family). Every parse failure throws InputError.

Matrix parse_matrix_json(std::string_view text);
Matrix parse_matrix_csv(std::string_view text);
VectorFamily parse_family_json(std::string_view text);

std::string matrix_to_json(const Matrix& a);
std::string family_to_json(const VectorFamily& family);
std::string matrix_to_csv(const Matrix& a);

/// Dispatches on the extension: ".csv" is CSV, anything else JSON.
Matrix read_matrix_file(const std::filesystem::path& path);
VectorFamily read_family_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

std::string report_to_json(const SweepReport& report);
SweepReport report_from_json(std::string_view text);
std::string report_to_csv(const SweepReport& report);

}  // namespace grothsp::io
