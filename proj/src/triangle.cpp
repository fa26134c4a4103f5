#include "knomial/triangle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace knomial {

KNomialParams make_params(std::int64_t k) {
    if (k < 2) throw std::domain_error("order k must be at least 2, got " + std::to_string(k));
    return KNomialParams(k);
}

std::int64_t row_width(const KNomialParams& params, std::int64_t n) {
    if (n < 0) throw std::domain_error("line index n must be non-negative, got " + std::to_string(n));
    return (params.k() - 1) * n + 1;
}

BigInt Row::at(std::int64_t h) const {
    if (h < 0 || h >= static_cast<std::int64_t>(coefficients_.size())) return BigInt{0};
    return coefficients_[static_cast<std::size_t>(h)];
}

Row Row::first(const KNomialParams& params) { return Row(params, 0, std::vector<BigInt>{BigInt{1}}); }

namespace detail {

void window_sum(std::span<const BigInt> previous, std::int64_t k, std::vector<BigInt>& out) {
    const std::size_t old_width = previous.size();
    const std::size_t window = static_cast<std::size_t>(k);
    const std::size_t width = old_width + window - 1;
    out.resize(width);

    // out[h] = out[h-1] + previous[h] - previous[h-k], reading 0 outside previous.
    out[0] = previous[0];
    for (std::size_t h = 1; h < width; ++h) {
        BigInt& cell = out[h];
        if (h < old_width) {
            cell = out[h - 1] + previous[h];
        } else {
            cell = out[h - 1];
        }
        if (h >= window) cell -= previous[h - window];
    }
}

}  // namespace detail

Row next_row(const KNomialParams& params, const Row& current) {
    if (current.k() != params.k()) {
        throw std::invalid_argument("row of order " + std::to_string(current.k()) +
                                    " passed with order " + std::to_string(params.k()));
    }
    std::vector<BigInt> out;
    detail::window_sum(current.coefficients(), params.k(), out);
    return Row(params, current.n() + 1, std::move(out));
}

Row row(std::int64_t k, std::int64_t n) {
    const KNomialParams params = make_params(k);
    const auto width = static_cast<std::size_t>(row_width(params, n));

    std::vector<BigInt> current{BigInt{1}};
    std::vector<BigInt> scratch;
    current.reserve(width);
    scratch.reserve(width);
    for (std::int64_t line = 0; line < n; ++line) {
        detail::window_sum(current, k, scratch);
        std::swap(current, scratch);
    }
    return Row(params, n, std::move(current));
}

BigInt coefficient(const CoefficientQuery& query) {
    const KNomialParams params = make_params(query.k);
    const std::int64_t width = row_width(params, query.n);
    if (query.h < 0 || query.h >= width) return BigInt{0};
    return row(query.k, query.n).at(query.h);
}

Triangle::Triangle(std::int64_t k, std::int64_t n_max) : params_(make_params(k)), n_max_(n_max) {
    if (n_max < 0) throw std::domain_error("n_max must be non-negative, got " + std::to_string(n_max));
}

Triangle::iterator& Triangle::iterator::operator++() {
    if (current_.n() >= n_max_) {
        done_ = true;
    } else {
        current_ = next_row(params_, current_);
    }
    return *this;
}

}  // namespace knomial
