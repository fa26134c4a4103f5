#include "knomial/identities.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>
#include <utility>

namespace knomial {

// ---------------------------------------------------------------------------
// DensePolynomial and the oracles
// ---------------------------------------------------------------------------

DensePolynomial::DensePolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

DensePolynomial DensePolynomial::k_nomial(const KNomialParams& params) {
    return DensePolynomial(std::vector<BigInt>(static_cast<std::size_t>(params.k()), BigInt{1}));
}

BigInt DensePolynomial::coefficient(std::int64_t power) const {
    if (power < 0 || power > degree()) return BigInt{0};
    return coefficients_[static_cast<std::size_t>(power)];
}

DensePolynomial operator*(const DensePolynomial& lhs, const DensePolynomial& rhs) {
    if (lhs.coefficients_.empty() || rhs.coefficients_.empty()) return {};
    std::vector<BigInt> product(lhs.coefficients_.size() + rhs.coefficients_.size() - 1);
    for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
            product[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
        }
    }
    return DensePolynomial(std::move(product));
}

DensePolynomial expand_power_oracle(std::int64_t k, std::int64_t n) {
    const KNomialParams params = make_params(k);
    if (n < 0) throw std::domain_error("line index n must be non-negative, got " + std::to_string(n));
    const DensePolynomial factor = DensePolynomial::k_nomial(params);
    DensePolynomial result(std::vector<BigInt>{BigInt{1}});
    for (std::int64_t i = 0; i < n; ++i) result = result * factor;
    return result;
}

BigInt closed_form_coefficient(std::int64_t k, std::int64_t n, std::int64_t h) {
    const KNomialParams params = make_params(k);
    if (n < 0 || h < 0 || h > (params.k() - 1) * n) {
        throw std::domain_error("closed form needs n >= 0 and 0 <= h <= (k-1)n");
    }
    // The only admissible h on line 0 is 0; C(-1, -1) has no agreed value.
    if (n == 0) return BigInt{1};

    BigInt total{0};
    for (std::int64_t j = 0; j <= n && k * j <= h; ++j) {
        BigInt term = big_binomial(n, j) * big_binomial(n - 1 + h - k * j, n - 1);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Property names
// ---------------------------------------------------------------------------

std::string_view property_name(PropertyId id) noexcept {
    switch (id) {
        case PropertyId::P1: return "P1";
        case PropertyId::P2: return "P2";
        case PropertyId::P3: return "P3";
        case PropertyId::P4: return "P4";
        case PropertyId::P5: return "P5";
        case PropertyId::P6: return "P6";
        case PropertyId::P7: return "P7";
        case PropertyId::P8: return "P8";
        case PropertyId::P9: return "P9";
        case PropertyId::oracle: return "ORACLE";
        case PropertyId::closed_form: return "CLOSED_FORM";
    }
    return "?";
}

std::string_view property_description(PropertyId id) noexcept {
    switch (id) {
        case PropertyId::P1: return "line n has (k-1)n+1 elements";
        case PropertyId::P2: return "entry = sum of k entries above";
        case PropertyId::P3: return "line is symmetric";
        case PropertyId::P4: return "line n starts 1, n";
        case PropertyId::P5: return "line n = coefficients of P(x)^n";
        case PropertyId::P6: return "line n sums to k^n";
        case PropertyId::P7: return "alternating sum = P(-1)^n";
        case PropertyId::P8: return "Vandermonde convolution";
        case PropertyId::P9: return "sum of squares = middle of line 2n";
        case PropertyId::oracle: return "oracle degree (k-1)n, entries positive";
        case PropertyId::closed_form: return "inclusion-exclusion closed form";
    }
    return "";
}

std::optional<PropertyId> parse_property(std::string_view name) noexcept {
    for (PropertyId id : all_properties) {
        if (property_name(id) == name) return id;
    }
    return std::nullopt;
}

bool VerificationReport::all_passed() const noexcept {
    return std::all_of(results.begin(), results.end(), [](const auto& entry) { return entry.second.passed(); });
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

namespace {

// Records the first disagreement between an expectation and an observed
// value. `bias` is added to every expectation (zero outside fault injection).
class Comparison {
public:
    explicit Comparison(long bias = 0) : bias_(bias) {}

    bool expect(const CoefficientQuery& query, BigInt expected, const BigInt& actual, std::string_view detail) {
        if (failed()) return false;
        expected += bias_;
        if (expected != actual) {
            result_.counterexample = Counterexample{query, std::move(expected), actual, std::string(detail)};
            return false;
        }
        return true;
    }

    [[nodiscard]] bool failed() const noexcept { return !result_.passed(); }
    [[nodiscard]] CheckResult result() && { return std::move(result_); }

private:
    long bias_;
    CheckResult result_;
};

void require_positive_line(std::int64_t n, std::string_view what) {
    if (n < 1) throw std::domain_error(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

BigInt naive_window(const Row& previous, std::int64_t k, std::int64_t h) {
    BigInt sum{0};
    for (std::int64_t i = 0; i < k; ++i) sum += previous.at(h - i);
    return sum;
}

CheckResult width_impl(const Row& line, long bias) {
    Comparison cmp(bias);
    cmp.expect({line.k(), line.n(), 0}, BigInt{(line.k() - 1) * line.n() + 1},
               BigInt{static_cast<long>(line.size())}, "number of elements");
    return std::move(cmp).result();
}

CheckResult recurrence_impl(const Row& previous, const Row& line, long bias) {
    Comparison cmp(bias);
    const std::int64_t k = line.k();
    const auto width = static_cast<std::int64_t>(line.size());
    // One position past each end checks that the zero convention is honored.
    for (std::int64_t h = -1; h <= width && !cmp.failed(); ++h) {
        cmp.expect({k, line.n(), h}, naive_window(previous, k, h), line.at(h), "k-fold sum over previous line");
    }
    return std::move(cmp).result();
}

CheckResult symmetry_impl(const Row& line, long bias) {
    Comparison cmp(bias);
    const auto last = static_cast<std::int64_t>(line.size()) - 1;
    for (std::int64_t h = 0; h <= last && !cmp.failed(); ++h) {
        cmp.expect({line.k(), line.n(), h}, line.at(last - h), line.at(h), "mirror entry");
    }
    return std::move(cmp).result();
}

CheckResult first_elements_impl(const Row& line, long bias) {
    Comparison cmp(bias);
    cmp.expect({line.k(), line.n(), 0}, BigInt{1}, line.at(0), "first element");
    cmp.expect({line.k(), line.n(), 1}, BigInt{static_cast<long>(line.n())}, line.at(1), "second element");
    return std::move(cmp).result();
}

CheckResult oracle_equivalence_impl(const Row& line, const DensePolynomial& oracle, long bias) {
    Comparison cmp(bias);
    const std::int64_t top = std::max<std::int64_t>(static_cast<std::int64_t>(line.size()), oracle.degree() + 1);
    for (std::int64_t h = 0; h <= top && !cmp.failed(); ++h) {
        cmp.expect({line.k(), line.n(), h}, oracle.coefficient(h), line.at(h), "coefficient of x^h in P(x)^n");
    }
    return std::move(cmp).result();
}

CheckResult row_sum_impl(const Row& line, long bias) {
    Comparison cmp(bias);
    BigInt sum{0};
    for (const BigInt& value : line.coefficients()) sum += value;
    cmp.expect({line.k(), line.n(), 0}, big_pow(line.k(), line.n()), sum, "sum of line equals k^n");
    return std::move(cmp).result();
}

CheckResult alternating_sum_impl(const Row& line, long bias) {
    Comparison cmp(bias);
    BigInt alternating{0};
    const auto coefficients = line.coefficients();
    for (std::size_t h = 0; h < coefficients.size(); ++h) {
        if (h % 2 == 0) {
            alternating += coefficients[h];
        } else {
            alternating -= coefficients[h];
        }
    }
    // P(-1) is 1 for odd k and 0 for even k.
    const bool expect_one = line.params().parity() == Parity::odd || line.n() == 0;
    cmp.expect({line.k(), line.n(), 0}, BigInt{expect_one ? 1 : 0}, alternating, "alternating sum of line");
    return std::move(cmp).result();
}

CheckResult vandermonde_impl(const Row& left, const Row& right, const Row& combined, std::int64_t h, long bias) {
    Comparison cmp(bias);
    BigInt convolution{0};
    for (std::int64_t i = 0; i <= h; ++i) convolution += left.at(i) * right.at(h - i);
    cmp.expect({combined.k(), combined.n(), h}, combined.at(h), convolution,
               "convolution of lines " + std::to_string(left.n()) + " and " + std::to_string(right.n()));
    return std::move(cmp).result();
}

CheckResult sum_of_squares_impl(const Row& line, const Row& doubled, long bias) {
    Comparison cmp(bias);
    BigInt squares{0};
    for (const BigInt& value : line.coefficients()) squares += value * value;
    const std::int64_t middle = (line.k() - 1) * line.n();
    cmp.expect({doubled.k(), doubled.n(), middle}, doubled.at(middle), squares, "sum of squares of line n");
    return std::move(cmp).result();
}

CheckResult oracle_shape_impl(const DensePolynomial& oracle, std::int64_t k, std::int64_t n, long bias) {
    Comparison cmp(bias);
    cmp.expect({k, n, 0}, BigInt{(k - 1) * n}, BigInt{static_cast<long>(oracle.degree())}, "oracle degree");
    for (std::int64_t h = 0; h <= oracle.degree() && !cmp.failed(); ++h) {
        const BigInt value = oracle.coefficient(h);
        // A non-positive coefficient is reported against the smallest acceptable value.
        if (value <= 0) cmp.expect({k, n, h}, BigInt{1}, value, "oracle coefficient not positive");
    }
    return std::move(cmp).result();
}

CheckResult closed_form_impl(const Row& line, long bias) {
    Comparison cmp(bias);
    for (std::int64_t h = 0; h < static_cast<std::int64_t>(line.size()) && !cmp.failed(); ++h) {
        cmp.expect({line.k(), line.n(), h}, closed_form_coefficient(line.k(), line.n(), h), line.at(h),
                   "inclusion-exclusion closed form");
    }
    return std::move(cmp).result();
}

}  // namespace

CheckResult check_width(std::int64_t k, std::int64_t n) { return width_impl(row(k, n), 0); }

CheckResult check_recurrence(std::int64_t k, std::int64_t n) {
    require_positive_line(n, "recurrence check");
    return recurrence_impl(row(k, n - 1), row(k, n), 0);
}

CheckResult check_symmetry(std::int64_t k, std::int64_t n) { return symmetry_impl(row(k, n), 0); }

CheckResult check_first_elements(std::int64_t k, std::int64_t n) {
    require_positive_line(n, "first-elements check");
    return first_elements_impl(row(k, n), 0);
}

CheckResult check_oracle_equivalence(std::int64_t k, std::int64_t n) {
    return oracle_equivalence_impl(row(k, n), expand_power_oracle(k, n), 0);
}

CheckResult check_row_sum(std::int64_t k, std::int64_t n) { return row_sum_impl(row(k, n), 0); }

CheckResult check_alternating_sum(std::int64_t k, std::int64_t n) { return alternating_sum_impl(row(k, n), 0); }

CheckResult check_vandermonde(std::int64_t k, std::int64_t n, std::int64_t m, std::int64_t h) {
    return vandermonde_impl(row(k, n), row(k, m), row(k, n + m), h, 0);
}

CheckResult check_sum_of_squares(std::int64_t k, std::int64_t n) {
    return sum_of_squares_impl(row(k, n), row(k, 2 * n), 0);
}

// ---------------------------------------------------------------------------
// Aggregate
// ---------------------------------------------------------------------------

VerificationReport verify_all(std::int64_t k, std::int64_t n_max, std::int64_t m_max, const VerifyOptions& options) {
    const KNomialParams params = make_params(k);
    if (n_max < 0 || m_max < 0) throw std::domain_error("n_max and m_max must be non-negative");

    // Lines 0..max(2 n_max, 2 m_max) cover every line any property touches.
    std::vector<Row> lines;
    for (const Row& line : triangle(k, std::max(2 * n_max, 2 * m_max))) lines.push_back(line);
    const auto line = [&lines](std::int64_t n) -> const Row& { return lines[static_cast<std::size_t>(n)]; };

    const auto bias_for = [&options](PropertyId id) -> long {
        return options.corrupt_expectation == id ? 1 : 0;
    };

    // Runs `check(n)` for n in [from, n_max] and keeps the first failure.
    const auto over_lines = [n_max](std::int64_t from, const std::function<CheckResult(std::int64_t)>& check) {
        for (std::int64_t n = from; n <= n_max; ++n) {
            CheckResult result = check(n);
            if (!result.passed()) return result;
        }
        return CheckResult{};
    };

    std::map<PropertyId, std::function<CheckResult()>> tasks;
    tasks[PropertyId::P1] = [&, b = bias_for(PropertyId::P1)] {
        return over_lines(0, [&](std::int64_t n) { return width_impl(line(n), b); });
    };
    tasks[PropertyId::P2] = [&, b = bias_for(PropertyId::P2)] {
        return over_lines(1, [&](std::int64_t n) { return recurrence_impl(line(n - 1), line(n), b); });
    };
    tasks[PropertyId::P3] = [&, b = bias_for(PropertyId::P3)] {
        return over_lines(0, [&](std::int64_t n) { return symmetry_impl(line(n), b); });
    };
    tasks[PropertyId::P4] = [&, b = bias_for(PropertyId::P4)] {
        return over_lines(1, [&](std::int64_t n) { return first_elements_impl(line(n), b); });
    };
    tasks[PropertyId::P5] = [&, b = bias_for(PropertyId::P5)] {
        // Oracle powers are built incrementally; each is still a plain product.
        const DensePolynomial factor = DensePolynomial::k_nomial(params);
        DensePolynomial power(std::vector<BigInt>{BigInt{1}});
        return over_lines(0, [&](std::int64_t n) {
            if (n > 0) power = power * factor;
            return oracle_equivalence_impl(line(n), power, b);
        });
    };
    tasks[PropertyId::P6] = [&, b = bias_for(PropertyId::P6)] {
        return over_lines(0, [&](std::int64_t n) { return row_sum_impl(line(n), b); });
    };
    tasks[PropertyId::P7] = [&, b = bias_for(PropertyId::P7)] {
        return over_lines(0, [&](std::int64_t n) { return alternating_sum_impl(line(n), b); });
    };
    tasks[PropertyId::P8] = [&, b = bias_for(PropertyId::P8)] {
        for (std::int64_t n = 0; n <= m_max; ++n) {
            for (std::int64_t m = 0; m <= m_max; ++m) {
                const std::int64_t top = (k - 1) * (n + m) + 1;
                for (std::int64_t h = -1; h <= top; ++h) {
                    CheckResult result = vandermonde_impl(line(n), line(m), line(n + m), h, b);
                    if (!result.passed()) return result;
                }
            }
        }
        return CheckResult{};
    };
    tasks[PropertyId::P9] = [&, b = bias_for(PropertyId::P9)] {
        return over_lines(0, [&](std::int64_t n) { return sum_of_squares_impl(line(n), line(2 * n), b); });
    };
    tasks[PropertyId::oracle] = [&, b = bias_for(PropertyId::oracle)] {
        const DensePolynomial factor = DensePolynomial::k_nomial(params);
        DensePolynomial power(std::vector<BigInt>{BigInt{1}});
        return over_lines(0, [&](std::int64_t n) {
            if (n > 0) power = power * factor;
            return oracle_shape_impl(power, k, n, b);
        });
    };
    tasks[PropertyId::closed_form] = [&, b = bias_for(PropertyId::closed_form)] {
        return over_lines(0, [&](std::int64_t n) { return closed_form_impl(line(n), b); });
    };

    VerificationReport report{k, n_max, m_max, {}};
    if (options.parallel) {
        std::map<PropertyId, std::future<CheckResult>> pending;
        for (auto& [id, task] : tasks) pending.emplace(id, std::async(std::launch::async, task));
        for (auto& [id, future] : pending) report.results.emplace(id, future.get());
    } else {
        for (auto& [id, task] : tasks) report.results.emplace(id, task());
    }
    return report;
}

}  // namespace knomial
