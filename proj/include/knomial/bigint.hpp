#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace knomial {

// Exact integer type used for every coefficient. Values grow like k^n, so
// nothing here ever narrows to a machine word.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

inline BigInt big_pow(std::int64_t base, std::int64_t exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exponent));
    return result;
}

// binomial(n, r) with the combinatorial convention that it is 0 whenever
// r < 0 or r > n (and for n < 0).
inline BigInt big_binomial(std::int64_t n, std::int64_t r) {
    BigInt result{0};
    if (n < 0 || r < 0 || r > n) return result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return result;
}

}  // namespace knomial
