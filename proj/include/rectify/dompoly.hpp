#pragma once

// Univariate polynomials over a domain adapter, Sylvester matrices,
// resultants and subresultant sequences.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <tuple>
#include <utility>
#include <vector>

#include "rectify/domain.hpp"

namespace rectify {

/// Dense univariate polynomial; coeffs[i] is the coefficient of x^i.
/// The zero polynomial is the empty vector (deg = -infinity).
template <class D>
struct DomainPoly {
    using Elem = typename D::Elem;
    std::vector<Elem> coeffs;

    DomainPoly() = default;
    explicit DomainPoly(std::vector<Elem> c) : coeffs(std::move(c)) {}

    bool is_zero() const { return coeffs.empty(); }
    long deg() const { return static_cast<long>(coeffs.size()) - 1; }
    const Elem& lc() const { return coeffs.back(); }
    Elem coeff(const D& dom, long i) const {
        if (i < 0 || i > deg()) return dom.zero();
        return coeffs[i];
    }
    void normalize(const D& dom) {
        while (!coeffs.empty() && dom.is_zero(coeffs.back())) coeffs.pop_back();
    }
};

template <class D>
DomainPoly<D> dp_from(const D& dom, std::vector<typename D::Elem> c) {
    DomainPoly<D> f(std::move(c));
    f.normalize(dom);
    return f;
}

template <class D>
DomainPoly<D> dp_constant(const D& dom, const typename D::Elem& c) {
    DomainPoly<D> f;
    if (!dom.is_zero(c)) f.coeffs.push_back(c);
    return f;
}

template <class D>
DomainPoly<D> dp_add(const D& dom, const DomainPoly<D>& a, const DomainPoly<D>& b) {
    std::vector<typename D::Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), dom.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = dom.add(c[i], a.coeffs[i]);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = dom.add(c[i], b.coeffs[i]);
    return dp_from(dom, std::move(c));
}

template <class D>
DomainPoly<D> dp_neg(const D& dom, const DomainPoly<D>& a) {
    DomainPoly<D> out = a;
    for (auto& c : out.coeffs) c = dom.neg(c);
    return out;
}

template <class D>
DomainPoly<D> dp_sub(const D& dom, const DomainPoly<D>& a, const DomainPoly<D>& b) {
    return dp_add(dom, a, dp_neg(dom, b));
}

template <class D>
DomainPoly<D> dp_mul(const D& dom, const DomainPoly<D>& a, const DomainPoly<D>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<typename D::Elem> c(a.coeffs.size() + b.coeffs.size() - 1, dom.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = dom.add(c[i + j], dom.mul(a.coeffs[i], b.coeffs[j]));
    return dp_from(dom, std::move(c));
}

template <class D>
DomainPoly<D> dp_scale(const D& dom, const DomainPoly<D>& a, const typename D::Elem& s) {
    if (dom.is_zero(s)) return {};
    DomainPoly<D> out = a;
    for (auto& c : out.coeffs) c = dom.mul(c, s);
    return out;
}

template <class D>
bool dp_eq(const D& dom, const DomainPoly<D>& a, const DomainPoly<D>& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (!dom.eq(a.coeffs[i], b.coeffs[i])) return false;
    return true;
}

template <class D>
typename D::Elem dp_eval(const D& dom, const DomainPoly<D>& f, const typename D::Elem& x) {
    typename D::Elem acc = dom.zero();
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = dom.add(dom.mul(acc, x), *it);
    return acc;
}

template <class D>
DomainPoly<D> dp_derivative(const D& dom, const DomainPoly<D>& f) {
    if (f.deg() <= 0) return {};
    std::vector<typename D::Elem> c(f.coeffs.size() - 1, dom.zero());
    for (std::size_t i = 1; i < f.coeffs.size(); ++i)
        c[i - 1] = dom.mul(f.coeffs[i], dom.from_int(Int(static_cast<long>(i))));
    return dp_from(dom, std::move(c));
}

/// Division with remainder over a field.
template <class D>
std::pair<DomainPoly<D>, DomainPoly<D>> dp_divmod(const D& dom, const DomainPoly<D>& a,
                                                  const DomainPoly<D>& b) {
    static_assert(D::is_field());
    if (b.is_zero()) throw std::domain_error("dp_divmod: division by zero polynomial");
    DomainPoly<D> r = a;
    if (a.deg() < b.deg()) return {{}, r};
    std::vector<typename D::Elem> q(a.deg() - b.deg() + 1, dom.zero());
    auto lcinv = dom.inv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        long k = r.deg() - b.deg();
        auto c = dom.mul(r.lc(), lcinv);
        q[k] = c;
        for (long i = 0; i <= b.deg(); ++i)
            r.coeffs[i + k] = dom.sub(r.coeffs[i + k], dom.mul(c, b.coeffs[i]));
        r.normalize(dom);
    }
    return {dp_from(dom, std::move(q)), r};
}

template <class D>
DomainPoly<D> dp_monic(const D& dom, const DomainPoly<D>& f) {
    static_assert(D::is_field());
    if (f.is_zero()) return f;
    return dp_scale(dom, f, dom.inv(f.lc()));
}

/// Euclidean gcd over a field, monic; gcd(0, 0) = 0.
template <class D>
DomainPoly<D> dp_gcd_euclid(const D& dom, DomainPoly<D> a, DomainPoly<D> b) {
    while (!b.is_zero()) {
        auto r = dp_divmod(dom, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return dp_monic(dom, a);
}

/// Extended gcd over a field: returns (g, s, t) with g = s*a + t*b, g monic.
template <class D>
std::tuple<DomainPoly<D>, DomainPoly<D>, DomainPoly<D>> dp_xgcd(const D& dom, DomainPoly<D> a,
                                                                DomainPoly<D> b) {
    DomainPoly<D> s0 = dp_constant(dom, dom.one()), s1{};
    DomainPoly<D> t0{}, t1 = dp_constant(dom, dom.one());
    while (!b.is_zero()) {
        auto [q, r] = dp_divmod(dom, a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = dp_sub(dom, s0, dp_mul(dom, q, s1));
        auto t2 = dp_sub(dom, t0, dp_mul(dom, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    auto li = dom.inv(a.lc());
    return {dp_scale(dom, a, li), dp_scale(dom, s0, li), dp_scale(dom, t0, li)};
}

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
template <class D>
std::pair<DomainPoly<D>, DomainPoly<D>> dp_pseudo_divmod(const D& dom, const DomainPoly<D>& a,
                                                         const DomainPoly<D>& b) {
    if (b.is_zero()) throw std::domain_error("dp_pseudo_divmod: division by zero polynomial");
    DomainPoly<D> r = a, q{};
    long steps = a.deg() - b.deg() + 1;
    if (steps <= 0) return {{}, r};
    std::vector<typename D::Elem> qc(steps, dom.zero());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        long k = r.deg() - b.deg();
        auto c = r.lc();
        for (auto& e : qc) e = dom.mul(e, b.lc());
        qc[k] = dom.add(qc[k], c);
        r = dp_sub(dom, dp_scale(dom, r, b.lc()),
                   dp_mul(dom, dp_from(dom, [&] {
                              std::vector<typename D::Elem> mono(k + 1, dom.zero());
                              mono[k] = c;
                              return mono;
                          }()),
                          b));
        --steps;
    }
    // Account for remaining multiplications so the identity holds exactly.
    for (long i = 0; i < steps; ++i) {
        for (auto& e : qc) e = dom.mul(e, b.lc());
        r = dp_scale(dom, r, b.lc());
    }
    return {dp_from(dom, std::move(qc)), r};
}

/// Composition f(x + c) for c in the coefficient field, via Horner.
template <class D>
DomainPoly<D> dp_compose_shift(const D& dom, const DomainPoly<D>& f, const typename D::Elem& c) {
    DomainPoly<D> acc;
    DomainPoly<D> shift = dp_from(dom, {c, dom.one()});
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = dp_add(dom, dp_mul(dom, acc, shift), dp_constant(dom, *it));
    return acc;
}

/// The ring Base[x] as a coefficient domain (Base must be a field so that the
/// exact divisions inside Bareiss elimination can be carried out).
template <class Base>
struct PolyRingDomain {
    Base base;
    explicit PolyRingDomain(Base b) : base(std::move(b)) {}
    using Elem = DomainPoly<Base>;
    static constexpr bool is_field() { return false; }
    Elem zero() const { return {}; }
    Elem one() const { return dp_constant(base, base.one()); }
    Elem from_int(const Int& a) const { return dp_constant(base, base.from_int(a)); }
    Elem add(const Elem& a, const Elem& b) const { return dp_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return dp_sub(base, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return dp_mul(base, a, b); }
    Elem neg(const Elem& a) const { return dp_neg(base, a); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return dp_eq(base, a, b); }
    Elem exact_div(const Elem& a, const Elem& b) const {
        auto [q, r] = dp_divmod(base, a, b);
        if (!r.is_zero()) throw std::domain_error("PolyRingDomain: inexact division");
        return q;
    }
};

// ---------------------------------------------------------------------------
// Determinants over a domain (fraction-free Bareiss with row pivoting).

template <class D>
using DomainMatrix = std::vector<std::vector<typename D::Elem>>;

template <class D>
typename D::Elem det_bareiss(const D& dom, DomainMatrix<D> m) {
    const std::size_t n = m.size();
    if (n == 0) return dom.one();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix not square");
    typename D::Elem prev = dom.one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && dom.is_zero(m[piv][k])) ++piv;
        if (piv == n) return dom.zero();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = dom.sub(dom.mul(m[i][j], m[k][k]), dom.mul(m[i][k], m[k][j]));
                m[i][j] = dom.exact_div(num, prev);
            }
        prev = m[k][k];
    }
    auto d = m[n - 1][n - 1];
    return sign < 0 ? dom.neg(d) : d;
}

/// Division-free determinant by minor expansion, with one shared minor per
/// column subset.  Exponential in the dimension, but far cheaper than Bareiss
/// for small matrices over polynomial rings, where exact division dominates.
template <class D>
typename D::Elem det_expand(const D& dom, const DomainMatrix<D>& m) {
    const std::size_t n = m.size();
    if (n == 0) return dom.one();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_expand: matrix not square");
    std::unordered_map<std::uint64_t, typename D::Elem> minors;
    minors.emplace(0u, dom.one());
    for (std::size_t i = 0; i < n; ++i) {
        std::unordered_map<std::uint64_t, typename D::Elem> next;
        for (const auto& [mask, minor] : minors) {
            if (dom.is_zero(minor)) continue;
            int below = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint64_t bit = std::uint64_t(1) << j;
                if (mask & bit) {
                    ++below;
                    continue;
                }
                if (dom.is_zero(m[i][j])) continue;
                auto term = dom.mul(m[i][j], minor);
                if ((static_cast<int>(i) - below) % 2) term = dom.neg(term);
                auto [it, fresh] = next.emplace(mask | bit, term);
                if (!fresh) it->second = dom.add(it->second, term);
            }
        }
        minors = std::move(next);
        if (minors.empty()) return dom.zero();
    }
    return minors.at(n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1));
}

/// Determinant dispatcher for the resultant helpers: over a field Bareiss is
/// fast (division is cheap); over polynomial rings minor expansion avoids the
/// costly exact divisions whenever the dimension allows it.
template <class D>
typename D::Elem det_auto(const D& dom, DomainMatrix<D> m) {
    if (!D::is_field() && m.size() <= 18) return det_expand(dom, m);
    return det_bareiss(dom, std::move(m));
}

// ---------------------------------------------------------------------------
// Sylvester matrix, resultant, subresultants.

template <class D>
DomainMatrix<D> sylvester(const D& dom, const DomainPoly<D>& f, const DomainPoly<D>& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("sylvester: inputs must be non-zero");
    const long p = f.deg(), q = g.deg();
    if (p == 0 && q == 0) return {{dom.one()}};
    DomainMatrix<D> s(p + q, std::vector<typename D::Elem>(p + q, dom.zero()));
    for (long r = 0; r < q; ++r)
        for (long j = 0; j <= p; ++j) s[r][r + j] = f.coeffs[p - j];
    for (long r = 0; r < p; ++r)
        for (long j = 0; j <= q; ++j) s[q + r][r + j] = g.coeffs[q - j];
    return s;
}

/// res(f, g); by convention res(0, h) = res(h, 0) = 0.
template <class D>
typename D::Elem resultant(const D& dom, const DomainPoly<D>& f, const DomainPoly<D>& g) {
    if (f.is_zero() || g.is_zero()) return dom.zero();
    return det_auto(dom, sylvester(dom, f, g));
}

/// s_ij(f, g): determinant of the submatrix of the Sylvester matrix with rows
/// 1..q-i, q+1..q+p-i and columns 1..p+q-2i-1, p+q-i-j (1-based, from the
/// determinantal definition).  Requires non-zero f, g and not (i == p == q).
template <class D>
typename D::Elem subresultant_coeff(const D& dom, const DomainPoly<D>& f, const DomainPoly<D>& g,
                                    long i, long j) {
    const long p = f.deg(), q = g.deg();
    if (i == p && i == q) throw std::invalid_argument("subresultant_coeff: i == p == q undefined");
    auto S = sylvester(dom, f, g);
    std::vector<long> rows, cols;
    for (long r = 1; r <= q - i; ++r) rows.push_back(r - 1);
    for (long r = q + 1; r <= q + p - i; ++r) rows.push_back(r - 1);
    for (long c = 1; c <= p + q - 2 * i - 1; ++c) cols.push_back(c - 1);
    cols.push_back(p + q - i - j - 1);
    DomainMatrix<D> sub(rows.size(), std::vector<typename D::Elem>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) sub[a][b] = S[rows[a]][cols[b]];
    return det_auto(dom, std::move(sub));
}

template <class D>
struct SubresultantSeq {
    std::vector<DomainPoly<D>> entries;  // entries[i] = S_i, 0 <= i <= min(p, q)
};

/// S_i(f, g) for one index i, honoring the special cases of the definition.
template <class D>
DomainPoly<D> subresultant(const D& dom, const DomainPoly<D>& f, const DomainPoly<D>& g, long i) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("subresultant: both inputs zero");
    if (g.is_zero()) return subresultant(dom, f, f, i);
    if (f.is_zero()) return subresultant(dom, g, g, i);
    const long p = f.deg(), q = g.deg();
    if (p == 0 && q == 0) return dp_constant(dom, dom.one());  // S_0(f, g) = 1
    if (i == p && i == q) return g;                            // S_q(f, g) = g when p = q
    std::vector<typename D::Elem> c(i + 1, dom.zero());
    for (long j = 0; j <= i; ++j) c[j] = subresultant_coeff(dom, f, g, i, j);
    return dp_from(dom, std::move(c));
}

template <class D>
SubresultantSeq<D> subresultants(const D& dom, const DomainPoly<D>& f, const DomainPoly<D>& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("subresultants: both inputs zero");
    const DomainPoly<D>& a = f.is_zero() ? g : f;
    const DomainPoly<D>& b = g.is_zero() ? (f.is_zero() ? g : f) : g;
    long top = std::min(a.deg(), b.deg());
    SubresultantSeq<D> seq;
    for (long i = 0; i <= top; ++i) seq.entries.push_back(subresultant(dom, a, b, i));
    return seq;
}

/// Monic gcd over a field via the subresultant sequence: the normalization of
/// S_k for the minimal k with s_kk != 0.  gcd(h, 0) = gcd(0, h) = monic h.
template <class D>
DomainPoly<D> gcd_subresultant(const D& dom, const DomainPoly<D>& f, const DomainPoly<D>& g) {
    static_assert(D::is_field());
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd_subresultant: both inputs zero");
    if (g.is_zero()) return dp_monic(dom, f);
    if (f.is_zero()) return dp_monic(dom, g);
    const long top = std::min(f.deg(), g.deg());
    for (long k = 0; k <= top; ++k) {
        auto S = subresultant(dom, f, g, k);
        if (S.deg() == k) return dp_monic(dom, S);
    }
    throw std::logic_error("gcd_subresultant: no non-zero principal subresultant coefficient");
}

// ---------------------------------------------------------------------------
// Multi-polynomial resultant (the F1/F2 aggregation).

struct MultiResultant {
    IntPoly value;   // polynomial in the original variables (minus var) and y_3..y_m
    int base_nvars;  // original variable count
    int y_count;     // number of fresh y variables appended (m - 2 when m >= 2)
    IntPoly f1;      // F_1 in the extended ring
    IntPoly f2;      // F_2 = f_2 + y_3 f_3 + ... + y_m f_m in the extended ring
};

/// res_var(f_1, ..., f_m) with F_1 := f_1, F_2 := f_2 + y_3 f_3 + ... + y_m f_m.
/// m = 1 gives 0 (res(h, 0) = 0).  Fresh y_j live at index base_nvars + (j-3).
MultiResultant multi_resultant(const std::vector<IntPoly>& fs, int var);

}  // namespace rectify
