#pragma once

// Coefficient-domain adapters: exact rings sharing one small interface so the
// polynomial and matrix kernels can run over Z, Q, F_p, Z[x...] or a tower.
// A domain provides: Elem, zero/one/from_int, add/sub/mul/neg, is_zero/eq,
// exact_div (must succeed whenever the quotient exists in the domain), and
// div/inv when is_field() is true.

#include <stdexcept>
#include <vector>

#include "rectify/intpoly.hpp"

namespace rectify {

struct ZDomain {
    using Elem = Int;
    static constexpr bool is_field() { return false; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& a) const { return a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem exact_div(const Elem& a, const Elem& b) const { return div_exact(a, b); }
};

struct QDomain {
    using Elem = Rat;
    static constexpr bool is_field() { return true; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& a) const { return Rat(a); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("QDomain: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
    Elem exact_div(const Elem& a, const Elem& b) const { return div(a, b); }
};

/// Prime field F_p, elements kept reduced into [0, p).
struct FpDomain {
    Int p;
    explicit FpDomain(Int prime) : p(std::move(prime)) {
        if (p < 2) throw std::invalid_argument("FpDomain: modulus must be >= 2");
    }
    using Elem = Int;
    static constexpr bool is_field() { return true; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& a) const { return mod_reduce(a, p); }
    Elem add(const Elem& a, const Elem& b) const { return mod_reduce(a + b, p); }
    Elem sub(const Elem& a, const Elem& b) const { return mod_reduce(a - b, p); }
    Elem mul(const Elem& a, const Elem& b) const { return mod_reduce(a * b, p); }
    Elem neg(const Elem& a) const { return mod_reduce(-a, p); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem inv(const Elem& a) const { return mod_inverse(a, p); }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem exact_div(const Elem& a, const Elem& b) const { return div(a, b); }
};

/// Multivariate polynomial ring Z[x1..xn] as a coefficient domain.
struct PolyDomain {
    int nvars;
    explicit PolyDomain(int n) : nvars(n) {}
    using Elem = IntPoly;
    static constexpr bool is_field() { return false; }
    Elem zero() const { return IntPoly::zero(nvars); }
    Elem one() const { return IntPoly::constant(1, nvars); }
    Elem from_int(const Int& a) const { return IntPoly::constant(a, nvars); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem exact_div(const Elem& a, const Elem& b) const {
        IntPoly q(nvars);
        if (!try_exact_div(a, b, q)) throw std::domain_error("PolyDomain: inexact division");
        return q;
    }
};

/// F_p[x1..xn]; coefficients of every element kept reduced into [0, p).
struct PolyModDomain {
    int nvars;
    Int p;
    PolyModDomain(int n, Int prime) : nvars(n), p(std::move(prime)) {}
    using Elem = IntPoly;
    static constexpr bool is_field() { return false; }
    Elem reduce(const IntPoly& f) const {
        IntPoly out(nvars);
        for (const auto& [m, c] : f.terms()) out.add_term(m, mod_reduce(c, p));
        return out;
    }
    Elem zero() const { return IntPoly::zero(nvars); }
    Elem one() const { return IntPoly::constant(1, nvars); }
    Elem from_int(const Int& a) const { return IntPoly::constant(mod_reduce(a, p), nvars); }
    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return reduce(-a); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem exact_div(const Elem& a, const Elem& b) const {
        IntPoly q(nvars);
        if (!try_exact_div(a, b, q, &p)) throw std::domain_error("PolyModDomain: inexact division");
        return q;
    }
};

}  // namespace rectify
