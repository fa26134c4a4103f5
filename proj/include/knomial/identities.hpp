#pragma once

// Independent ground truth for the triangle and one check per identity of
// the triangle of numbers of order k.
//
// Every check recomputes its expectation without going through the window
// sum where it can: naive k-fold sums, repeated polynomial multiplication,
// exact powers, and an inclusion-exclusion closed form.

#include "knomial/bigint.hpp"
#include "knomial/triangle.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knomial {

/// Polynomial with exact coefficients, index = degree. Normalized so the
/// last coefficient is nonzero; the zero polynomial has no coefficients.
class DensePolynomial {
public:
    DensePolynomial() = default;
    explicit DensePolynomial(std::vector<BigInt> coefficients);

    /// 1 + x + ... + x^(k-1)
    static DensePolynomial k_nomial(const KNomialParams& params);

    [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
    /// -1 for the zero polynomial.
    [[nodiscard]] std::int64_t degree() const noexcept {
        return static_cast<std::int64_t>(coefficients_.size()) - 1;
    }
    [[nodiscard]] BigInt coefficient(std::int64_t power) const;

    /// Schoolbook product, every pair of terms multiplied.
    friend DensePolynomial operator*(const DensePolynomial& lhs, const DensePolynomial& rhs);
    friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

private:
    std::vector<BigInt> coefficients_;
};

/// (1 + x + ... + x^(k-1))^n by n successive schoolbook multiplications.
DensePolynomial expand_power_oracle(std::int64_t k, std::int64_t n);

/// Inclusion-exclusion: sum_j (-1)^j C(n,j) C(n-1+h-kj, n-1).
/// Requires 0 <= h <= (k-1)n; throws std::domain_error otherwise.
BigInt closed_form_coefficient(std::int64_t k, std::int64_t n, std::int64_t h);

enum class PropertyId { P1, P2, P3, P4, P5, P6, P7, P8, P9, oracle, closed_form };

inline constexpr std::array<PropertyId, 11> all_properties{
    PropertyId::P1, PropertyId::P2, PropertyId::P3, PropertyId::P4, PropertyId::P5,     PropertyId::P6,
    PropertyId::P7, PropertyId::P8, PropertyId::P9, PropertyId::oracle, PropertyId::closed_form};

std::string_view property_name(PropertyId id) noexcept;
std::string_view property_description(PropertyId id) noexcept;
std::optional<PropertyId> parse_property(std::string_view name) noexcept;

struct Counterexample {
    CoefficientQuery query;
    BigInt expected;
    BigInt actual;
    std::string detail;
};

struct CheckResult {
    std::optional<Counterexample> counterexample;

    [[nodiscard]] bool passed() const noexcept { return !counterexample.has_value(); }
    explicit operator bool() const noexcept { return passed(); }
};

/// P1: line n has (k-1)n + 1 entries.
CheckResult check_width(std::int64_t k, std::int64_t n);
/// P2: every entry of line n (and one past each end) is the k-fold sum over line n-1. n >= 1.
CheckResult check_recurrence(std::int64_t k, std::int64_t n);
/// P3: line n is a palindrome.
CheckResult check_symmetry(std::int64_t k, std::int64_t n);
/// P4: line n starts 1, n. n >= 1.
CheckResult check_first_elements(std::int64_t k, std::int64_t n);
/// P5: line n equals the oracle expansion.
CheckResult check_oracle_equivalence(std::int64_t k, std::int64_t n);
/// P6: line n sums to k^n.
CheckResult check_row_sum(std::int64_t k, std::int64_t n);
/// P7: sum_h (-1)^h Ck_n^h is 1 for odd k or n = 0, and 0 for even k with n >= 1.
CheckResult check_alternating_sum(std::int64_t k, std::int64_t n);
/// P8: sum_i Ck_n^i Ck_m^(h-i) = Ck_(n+m)^h for any integer h.
CheckResult check_vandermonde(std::int64_t k, std::int64_t n, std::int64_t m, std::int64_t h);
/// P9: sum of squares of line n equals the middle entry of line 2n.
CheckResult check_sum_of_squares(std::int64_t k, std::int64_t n);

struct VerificationReport {
    std::int64_t k = 0;
    std::int64_t n_max = 0;
    std::int64_t m_max = 0;
    std::map<PropertyId, CheckResult> results;

    [[nodiscard]] bool all_passed() const noexcept;
};

struct VerifyOptions {
    /// Adds one to every expectation of this property before comparing.
    /// Exercises the failure path; never set in normal runs.
    std::optional<PropertyId> corrupt_expectation;
    /// Evaluate properties on separate threads.
    bool parallel = true;
};

/// Runs every property for lines 0..n_max (checks that need n >= 1 start at
/// 1). P8 runs over all n, m <= m_max and every h from -1 to one past the
/// end of line n+m. Each failed property carries its first counterexample.
VerificationReport verify_all(std::int64_t k, std::int64_t n_max, std::int64_t m_max,
                              const VerifyOptions& options = {});

}  // namespace knomial
