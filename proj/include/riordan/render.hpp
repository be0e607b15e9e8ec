#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "riordan/riordan.hpp"

namespace riordan {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

/// A Riordan array prepared for output: coefficient lists and matrix
/// truncated to `rows`.
struct ArrayReport {
    std::vector<Rational> g;
    std::vector<Rational> f;
    TriangleMatrix matrix;
    std::size_t precision = 0;
    std::size_t rows = 0;
};

ArrayReport make_report(const RiordanArray& a, std::size_t rows, std::size_t precision);

/// text: "g:" / "f:" lists and an aligned grid; json: {"g", "f", "matrix",
/// "meta": {"precision", "rows"}}; csv: the matrix only.
std::string render(const ArrayReport& report, Format format);

/// Right-aligned columns, one line per row.
std::string render_grid(const TriangleMatrix& m);

/// One row per line, comma separated.
std::string render_csv(const TriangleMatrix& m);

std::string join(const std::vector<Rational>& values, std::string_view sep = ", ");

/// Rationals are JSON strings ("n" or "p/q"), never numbers.
nlohmann::json to_json(const std::vector<Rational>& values);
nlohmann::json to_json(const TriangleMatrix& m);
nlohmann::json to_json(const ArrayReport& report);

std::vector<Rational> rationals_from_json(const nlohmann::json& j);
TriangleMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace riordan
