#include "rectify/qfactor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rectify/bigint.hpp"

namespace rectify {

namespace {

using ZPoly = DomainPoly<ZDomain>;
using FpPoly = DomainPoly<FpDomain>;

Int content(const ZPoly& f) {
    Int g = 0;
    for (const auto& c : f.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Clears denominators and content; result has positive leading coefficient.
ZPoly primitive_part(const QPoly& f) {
    Int l = 1;
    for (const auto& c : f.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly g;
    g.coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) {
        Rat scaled = c * l;
        g.coeffs.push_back(scaled.get_num());
    }
    Int cont = content(g);
    if (cont == 0) return g;
    if (g.coeffs.back() < 0) cont = -cont;
    for (auto& c : g.coeffs) c = div_exact(c, cont);
    return g;
}

QPoly to_q(const ZPoly& f) {
    QPoly g;
    g.coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) g.coeffs.emplace_back(c);
    return g;
}

FpPoly to_fp(const FpDomain& fp, const ZPoly& f) {
    std::vector<Int> c;
    c.reserve(f.coeffs.size());
    for (const auto& e : f.coeffs) c.push_back(fp.from_int(e));
    return dp_from(fp, std::move(c));
}

Int symmetric_rep(const Int& a, const Int& p) {
    Int r = mod_reduce(a, p);
    if (2 * r > p) r -= p;
    return r;
}

FpPoly powmod(const FpDomain& fp, FpPoly base, Int e, const FpPoly& mod) {
    FpPoly acc = dp_constant(fp, fp.one());
    base = dp_divmod(fp, base, mod).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            acc = dp_divmod(fp, dp_mul(fp, acc, base), mod).second;
        base = dp_divmod(fp, dp_mul(fp, base, base), mod).second;
        e >>= 1;
    }
    return acc;
}

// Distinct-degree decomposition: list of (product of the degree-d irreducible
// factors, d) for a monic squarefree f.
std::vector<std::pair<FpPoly, int>> distinct_degree(const FpDomain& fp, FpPoly f) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly x = dp_from(fp, {fp.zero(), fp.one()});
    FpPoly h = x;
    int d = 0;
    while (f.deg() >= 2 * (d + 1)) {
        ++d;
        h = powmod(fp, h, fp.p, f);
        FpPoly g = dp_gcd_euclid(fp, dp_sub(fp, h, x), f);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            f = dp_divmod(fp, f, g).first;
            h = dp_divmod(fp, h, f).second;
        }
    }
    if (f.deg() > 0) out.emplace_back(f, static_cast<int>(f.deg()));
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a product of degree-d factors.
void equal_degree(const FpDomain& fp, const FpPoly& f, int d, gmp_randclass& rng,
                  std::vector<FpPoly>& out) {
    const long n = f.deg();
    if (n == d) {
        out.push_back(dp_monic(fp, f));
        return;
    }
    Int e = (pow_int(fp.p, static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        std::vector<Int> rc(static_cast<std::size_t>(n));
        for (auto& c : rc) c = rng.get_z_range(fp.p);
        FpPoly a = dp_from(fp, std::move(rc));
        if (a.deg() < 1) continue;
        FpPoly g = dp_gcd_euclid(fp, a, f);
        if (g.deg() == 0) {
            FpPoly b = powmod(fp, a, e, f);
            b = dp_sub(fp, b, dp_constant(fp, fp.one()));
            g = dp_gcd_euclid(fp, b, f);
        }
        if (g.deg() > 0 && g.deg() < n) {
            equal_degree(fp, g, d, rng, out);
            equal_degree(fp, dp_divmod(fp, f, g).first, d, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> factor_mod_p(const FpDomain& fp, const ZPoly& f) {
    FpPoly g = dp_monic(fp, to_fp(fp, f));
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260826ul);
    std::vector<FpPoly> out;
    for (const auto& [part, d] : distinct_degree(fp, g)) equal_degree(fp, part, d, rng, out);
    return out;
}

// Mignotte-style bound: coefficients of any divisor of f (scaled to leading
// coefficient lc(f)) are below 2^(n+1) * ||f||_2 * |lc(f)|.
Int coefficient_bound(const ZPoly& f) {
    Int sq = 0;
    for (const auto& c : f.coeffs) sq += c * c;
    Int norm2 = sqrt(sq) + 1;
    return (Int(1) << static_cast<unsigned long>(f.deg() + 1)) * norm2 * abs_int(f.coeffs.back());
}

// Factors a primitive squarefree polynomial in Z[x] with positive leading
// coefficient into monic irreducibles over Q.
std::vector<QPoly> factor_squarefree(ZPoly f) {
    QDomain q;
    if (f.deg() <= 0) return {};
    if (f.deg() == 1) return {dp_monic(q, to_q(f))};

    // A prime beyond twice the divisor coefficient bound, not dividing the
    // leading coefficient, with f squarefree mod p.  One prime then suffices:
    // true factors lift directly from subsets of the modular ones.
    Int lc = f.coeffs.back();
    Int p = 2 * coefficient_bound(f) + 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mod_reduce(lc, p) == 0) continue;
        FpDomain fp(p);
        FpPoly g = to_fp(fp, f);
        if (dp_gcd_euclid(fp, g, dp_derivative(fp, g)).deg() == 0) break;
    }
    FpDomain fp(p);

    std::vector<FpPoly> modular = factor_mod_p(fp, f);
    std::sort(modular.begin(), modular.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
        return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                            b.coeffs.end());
    });

    std::vector<QPoly> found;
    std::vector<bool> used(modular.size(), false);
    std::size_t live = modular.size();

    auto try_subset = [&](const std::vector<std::size_t>& idx) -> bool {
        // Candidate = primitive part of the symmetric lift of lc(f) * prod.
        FpPoly prod = dp_constant(fp, fp.from_int(f.coeffs.back()));
        for (std::size_t i : idx) prod = dp_mul(fp, prod, modular[i]);
        ZPoly cand;
        cand.coeffs.reserve(prod.coeffs.size());
        for (const auto& c : prod.coeffs) cand.coeffs.push_back(symmetric_rep(c, fp.p));
        Int cont = content(cand);
        if (cand.coeffs.back() < 0) cont = -cont;
        for (auto& c : cand.coeffs) c = div_exact(c, cont);
        auto [quo, rem] = dp_divmod(q, to_q(f), to_q(cand));
        if (!rem.is_zero()) return false;
        found.push_back(dp_monic(q, to_q(cand)));
        f = primitive_part(quo);
        for (std::size_t i : idx) {
            used[i] = true;
            --live;
        }
        return true;
    };

    std::size_t sz = 1;
    while (live > 0) {
        if (2 * sz > live) {  // what is left of f is irreducible
            found.push_back(dp_monic(q, to_q(f)));
            break;
        }
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < modular.size(); ++i)
            if (!used[i]) avail.push_back(i);
        std::vector<std::size_t> pick(sz);
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                std::size_t start) -> bool {
            if (pos == sz) return try_subset(pick);
            for (std::size_t i = start; i + (sz - pos) <= avail.size(); ++i) {
                pick[pos] = avail[i];
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        if (!rec(0, 0)) ++sz;
    }
    return found;
}

}  // namespace

std::vector<QFactor> factor_over_q(const QPoly& f) {
    QDomain q;
    if (f.is_zero()) throw std::invalid_argument("factor_over_q: zero polynomial");
    if (f.deg() == 0) return {};

    // Yun's squarefree decomposition over Q, then modular factorization of
    // each squarefree part.
    QPoly a = dp_monic(q, f);
    QPoly d = dp_derivative(q, a);
    QPoly g = dp_gcd_euclid(q, a, d);
    QPoly w = dp_divmod(q, a, g).first;
    QPoly y = dp_divmod(q, d, g).first;
    std::vector<QFactor> out;
    int mult = 0;
    while (w.deg() > 0) {
        ++mult;
        QPoly z = dp_sub(q, y, dp_derivative(q, w));
        QPoly h = dp_gcd_euclid(q, w, z);  // product of the multiplicity-mult factors
        if (h.deg() > 0)
            for (const auto& irr : factor_squarefree(primitive_part(h)))
                out.push_back({irr, mult});
        w = dp_divmod(q, w, h).first;
        y = dp_divmod(q, z, h).first;
    }
    std::sort(out.begin(), out.end(), [](const QFactor& x, const QFactor& y2) {
        if (x.factor.coeffs.size() != y2.factor.coeffs.size())
            return x.factor.coeffs.size() < y2.factor.coeffs.size();
        return std::lexicographical_compare(x.factor.coeffs.begin(), x.factor.coeffs.end(),
                                            y2.factor.coeffs.begin(), y2.factor.coeffs.end());
    });
    return out;
}

bool is_irreducible_over_q(const QPoly& f) {
    if (f.deg() < 1) return false;
    auto fac = factor_over_q(f);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

}  // namespace rectify
