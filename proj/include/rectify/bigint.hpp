#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rectify {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Number of bits in |a|; 0 for a == 0.
inline unsigned long bit_length(const Int& a) {
    if (a == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline Int mod_reduce(const Int& a, const Int& p) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

/// Inverse of a modulo p; throws if gcd(a, p) != 1.
inline Int mod_inverse(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: element not invertible modulo " + p.get_str());
    return r;
}

inline bool is_probable_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

/// Exact integer quotient; throws if b does not divide a.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("div_exact: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("div_exact: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// True iff 0 <= value <= base^exp, decided without materializing base^exp.
/// Requires base >= 2. The comparison is exact.
inline bool leq_pow(const Int& value, const Int& base, const Int& exp) {
    if (value <= 1) return true;
    if (exp <= 0) return false;
    // value <= base^exp  iff  ceil(log_base(value)) fits below exp, checked
    // by narrowing with powers of two: base >= 2^lo and base <= 2^hi.
    unsigned long lo = bit_length(base) - 1;           // 2^lo <= base
    unsigned long vbits = bit_length(value);           // value < 2^vbits
    if (lo > 0 && Int(vbits) <= exp * Int(lo)) return true;  // value < 2^(lo*exp) <= base^exp
    // Fall back to exact computation when the exponent is small enough.
    if (mpz_fits_ulong_p(exp.get_mpz_t())) {
        Int rhs = pow_int(base, exp.get_ui());
        return value <= rhs;
    }
    // exp is astronomically large and base >= 2: base^exp > 2^exp > value.
    return true;
}

}  // namespace rectify
