#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace leecodes {

// All combinatorial quantities (sphere sizes, volumes, code counts) are kept
// in exact arbitrary-precision integers. No floating point.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_pow(std::int64_t base, unsigned long exp) {
    return big_pow(BigInt(static_cast<long>(base)), exp);
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Exact quotient; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("exact_div by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div: division is not exact");
    return q;
}

inline bool fits_u64(const BigInt& v) { return v >= 0 && v.fits_ulong_p(); }

inline std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw std::overflow_error("BigInt does not fit in 64 bits");
    return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace leecodes
