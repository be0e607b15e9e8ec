#include "riordan/render.hpp"

#include <algorithm>

namespace riordan {

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    return std::nullopt;
}

ArrayReport make_report(const RiordanArray& a, std::size_t rows, std::size_t precision) {
    ArrayReport r;
    const Series g = a.g().truncated(rows);
    const Series f = a.f().truncated(rows);
    r.g.assign(g.coeffs().begin(), g.coeffs().end());
    r.f.assign(f.coeffs().begin(), f.coeffs().end());
    r.matrix = expand(a, rows);
    r.precision = precision;
    r.rows = rows;
    return r;
}

std::string join(const std::vector<Rational>& values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].str();
    }
    return out;
}

std::string render_grid(const TriangleMatrix& m) {
    std::vector<std::size_t> width(m.size(), 0);
    for (const auto& row : m.rows())
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].str().size());
    std::string out;
    for (const auto& row : m.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            const std::string s = row[k].str();
            if (k) out += ' ';
            out.append(width[k] - s.size(), ' ');
            out += s;
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(const TriangleMatrix& m) {
    std::string out;
    for (const auto& row : m.rows()) {
        out += join(row, ",");
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const std::vector<Rational>& values) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : values) j.push_back(v.str());
    return j;
}

nlohmann::json to_json(const TriangleMatrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m.rows()) j.push_back(to_json(row));
    return j;
}

nlohmann::json to_json(const ArrayReport& report) {
    return {{"g", to_json(report.g)},
            {"f", to_json(report.f)},
            {"matrix", to_json(report.matrix)},
            {"meta", {{"precision", report.precision}, {"rows", report.rows}}}};
}

std::string render(const ArrayReport& report, Format format) {
    switch (format) {
        case Format::Json: return to_json(report).dump(2) + "\n";
        case Format::Csv: return render_csv(report.matrix);
        case Format::Text: break;
    }
    return "g: " + join(report.g) + "\nf: " + join(report.f) + "\n" + render_grid(report.matrix);
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(Rational::parse(v.get<std::string>()));
    return out;
}

TriangleMatrix matrix_from_json(const nlohmann::json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) rows.push_back(rationals_from_json(row));
    return TriangleMatrix(std::move(rows));
}

}  // namespace riordan
