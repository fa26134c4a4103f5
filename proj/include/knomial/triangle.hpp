#pragma once

// Triangle of numbers of order k: line n holds the coefficients of
// (1 + x + ... + x^(k-1))^n, built line by line with a k-term window sum.

#include "knomial/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace knomial {

enum class Parity { odd, even };

/// Validated order of the k-nomial. Only obtainable through make_params,
/// so holding one means k >= 2.
class KNomialParams {
public:
    [[nodiscard]] std::int64_t k() const noexcept { return k_; }
    /// p = k div 2; odd k is 2p + 1, even k is 2p.
    [[nodiscard]] std::int64_t half_width() const noexcept { return k_ / 2; }
    [[nodiscard]] Parity parity() const noexcept { return k_ % 2 == 1 ? Parity::odd : Parity::even; }

    friend bool operator==(const KNomialParams&, const KNomialParams&) = default;

private:
    explicit KNomialParams(std::int64_t k) noexcept : k_(k) {}
    friend KNomialParams make_params(std::int64_t k);

    std::int64_t k_;
};

/// Throws std::domain_error for k < 2.
KNomialParams make_params(std::int64_t k);

/// Number of entries on line n: (k-1)n + 1. Throws std::domain_error for n < 0.
std::int64_t row_width(const KNomialParams& params, std::int64_t n);

/// One line of the triangle. Immutable once built.
class Row {
public:
    [[nodiscard]] const KNomialParams& params() const noexcept { return params_; }
    [[nodiscard]] std::int64_t k() const noexcept { return params_.k(); }
    [[nodiscard]] std::int64_t n() const noexcept { return n_; }
    [[nodiscard]] std::span<const BigInt> coefficients() const& noexcept { return coefficients_; }
    // A span into a temporary row would dangle.
    std::span<const BigInt> coefficients() const&& = delete;
    [[nodiscard]] std::size_t size() const noexcept { return coefficients_.size(); }

    /// Entry h with the zero convention outside [0, (k-1)n].
    [[nodiscard]] BigInt at(std::int64_t h) const;

    /// Line 0, the single entry 1.
    static Row first(const KNomialParams& params);

    friend bool operator==(const Row&, const Row&) = default;

private:
    Row(KNomialParams params, std::int64_t n, std::vector<BigInt> coefficients)
        : params_(params), n_(n), coefficients_(std::move(coefficients)) {}

    friend Row next_row(const KNomialParams&, const Row&);
    friend Row row(std::int64_t, std::int64_t);

    KNomialParams params_;
    std::int64_t n_;
    std::vector<BigInt> coefficients_;
};

/// Line n+1 from line n. Each entry is the sum of the k entries of `current`
/// ending at the same index, maintained as a running window (one add, one
/// subtract per entry). Throws std::invalid_argument if `current` belongs to
/// a different order.
Row next_row(const KNomialParams& params, const Row& current);

/// Line n, computed from line 0 while holding at most two lines.
Row row(std::int64_t k, std::int64_t n);

struct CoefficientQuery {
    std::int64_t k;
    std::int64_t n;
    std::int64_t h;

    friend bool operator==(const CoefficientQuery&, const CoefficientQuery&) = default;
};

/// Ck_n^h. Out-of-range h (negative or past (k-1)n) yields 0; invalid k or
/// negative n throw std::domain_error.
BigInt coefficient(const CoefficientQuery& query);

namespace detail {
// Writes the window sums of `previous` into `out`, reusing out's storage.
void window_sum(std::span<const BigInt> previous, std::int64_t k, std::vector<BigInt>& out);
}  // namespace detail

/// Lazy input range over lines 0..n_max. Each increment builds the next line
/// from the current one; nothing older is kept.
class Triangle {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Row;
        using difference_type = std::ptrdiff_t;
        using reference = const Row&;
        using pointer = const Row*;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

    private:
        friend class Triangle;
        iterator(KNomialParams params, std::int64_t n_max)
            : params_(params), n_max_(n_max), current_(Row::first(params)) {}

        KNomialParams params_ = make_params(2);
        std::int64_t n_max_ = 0;
        Row current_ = Row::first(make_params(2));
        bool done_ = false;
    };

    Triangle(std::int64_t k, std::int64_t n_max);

    [[nodiscard]] iterator begin() const { return iterator(params_, n_max_); }
    [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }
    [[nodiscard]] const KNomialParams& params() const noexcept { return params_; }
    [[nodiscard]] std::int64_t n_max() const noexcept { return n_max_; }

private:
    KNomialParams params_;
    std::int64_t n_max_;
};

inline Triangle triangle(std::int64_t k, std::int64_t n_max) { return Triangle(k, n_max); }

}  // namespace knomial
