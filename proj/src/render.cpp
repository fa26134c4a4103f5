#include "knomial/render.hpp"

#include <json.hpp>

#include <algorithm>

namespace knomial {

std::optional<Format> parse_format(std::string_view name) noexcept {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return std::nullopt;
}

std::string render_csv(const Row& line) {
    std::string out;
    bool first = true;
    for (const BigInt& value : line.coefficients()) {
        if (!first) out += ',';
        out += to_decimal(value);
        first = false;
    }
    return out;
}

std::string render_json(const Row& line) {
    // ordered_json keeps k, n, coefficients in insertion order.
    nlohmann::ordered_json doc;
    doc["k"] = line.k();
    doc["n"] = line.n();
    auto& coefficients = doc["coefficients"] = nlohmann::ordered_json::array();
    for (const BigInt& value : line.coefficients()) coefficients.push_back(to_decimal(value));
    return doc.dump();
}

namespace {

std::size_t digits(std::int64_t value) { return std::to_string(value).size(); }

std::size_t widest_entry(const Row& line) {
    std::size_t widest = 1;
    for (const BigInt& value : line.coefficients()) widest = std::max(widest, to_decimal(value).size());
    return widest;
}

}  // namespace

TextLayout TextLayout::for_triangle(std::int64_t k, std::int64_t n_max) {
    const Row last = row(k, n_max);
    return TextLayout{widest_entry(last) + 1, last.size(), digits(n_max)};
}

TextLayout TextLayout::for_line(const Row& line) {
    return TextLayout{widest_entry(line) + 1, line.size(), digits(line.n())};
}

std::string render_text(const Row& line, const TextLayout& layout) {
    std::string label = std::to_string(line.n());
    std::string out = "line " + std::string(layout.label_width - std::min(layout.label_width, label.size()), ' ') +
                      label + ":";

    const std::size_t missing = layout.widest_line > line.size() ? layout.widest_line - line.size() : 0;
    out.append(missing * layout.cell_width / 2, ' ');
    for (const BigInt& value : line.coefficients()) {
        const std::string cell = to_decimal(value);
        out.append(layout.cell_width - std::min(layout.cell_width, cell.size()), ' ');
        out += cell;
    }
    return out;
}

}  // namespace knomial
