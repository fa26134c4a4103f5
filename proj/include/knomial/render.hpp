#pragma once

#include "knomial/triangle.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace knomial {

enum class Format { text, csv, json };
enum class Alignment { center };

struct RenderSpec {
    Format format = Format::text;
    Alignment alignment = Alignment::center;
};

std::optional<Format> parse_format(std::string_view name) noexcept;

/// `1,2,3` with no trailing newline.
std::string render_csv(const Row& line);

/// `{"k":5,"n":2,"coefficients":["1",...]}`, compact, no trailing newline.
std::string render_json(const Row& line);

/// Fixed-cell layout shared by every line of a text triangle, so each line
/// sits centered under the widest one.
struct TextLayout {
    std::size_t cell_width = 1;    // widest entry plus one separating space
    std::size_t widest_line = 1;   // entry count of the widest line
    std::size_t label_width = 1;   // digits of the largest line index

    /// Layout for lines 0..n_max. The largest entry is the middle of line
    /// n_max, which is computed here.
    static TextLayout for_triangle(std::int64_t k, std::int64_t n_max);
    static TextLayout for_line(const Row& line);
};

/// `line n: ` followed by the entries, left-padded to center the line.
std::string render_text(const Row& line, const TextLayout& layout);

}  // namespace knomial
