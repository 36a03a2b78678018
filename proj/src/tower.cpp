#include "rectify/tower.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "rectify/qfactor.hpp"

namespace rectify {

namespace {

bool elem_is_zero(const TowerElem& a) {
    if (a.level == 0) return a.scalar == 0;
    for (const auto& c : a.coeffs)
        if (!elem_is_zero(c)) return false;
    return true;
}

void trim(TowerElem& a) {
    if (a.level == 0) return;
    for (auto& c : a.coeffs) trim(c);
    while (!a.coeffs.empty() && elem_is_zero(a.coeffs.back())) a.coeffs.pop_back();
}

TowerElem zero_at(int level) {
    TowerElem z;
    z.level = level;
    return z;
}

/// View an element at level l+1 as a polynomial in generator l+1 over K_l.
TowerPoly to_poly(const TowerDomain& sub, const TowerElem& a) {
    TowerPoly f;
    f.coeffs = a.coeffs;
    for (auto& c : f.coeffs)
        if (c.level != sub.level) throw std::logic_error("tower: element level mismatch");
    f.normalize(sub);
    return f;
}

TowerElem from_poly(int level, TowerPoly f) {
    TowerElem a;
    a.level = level;
    a.coeffs = std::move(f.coeffs);
    trim(a);
    return a;
}

TowerPoly minpoly_as_poly(const Tower& tw, int i) {
    TowerDomain sub(tw, i - 1);
    TowerPoly m;
    m.coeffs = tw.minpoly(i);
    m.normalize(sub);
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tower

Tower::Tower(Int p) : p_(std::move(p)) {
    if (!is_probable_prime(p_)) throw std::invalid_argument("Tower: modulus must be prime");
}

Int Tower::degree() const {
    Int d = 1;
    for (const auto& m : minpolys_) d *= static_cast<long>(m.size()) - 1;
    return d;
}

TowerElem Tower::from_rat_at(const Rat& a, int level) const {
    TowerElem e;
    e.level = 0;
    e.scalar = a;
    for (int l = 1; l <= level; ++l) {
        TowerElem up;
        up.level = l;
        if (!elem_is_zero(e)) up.coeffs.push_back(std::move(e));
        e = std::move(up);
    }
    return e;
}

TowerElem Tower::from_rat(const Rat& a) const { return from_rat_at(a, levels()); }

TowerElem Tower::generator(int i) const {
    if (i < 1 || i > levels()) throw std::out_of_range("Tower::generator");
    TowerElem g;
    g.level = i;
    g.coeffs.push_back(zero_at(i - 1));
    g.coeffs.push_back(from_rat_at(1, i - 1));
    return lift(g);
}

TowerElem Tower::lift(const TowerElem& a) const {
    TowerElem e = a;
    trim(e);
    while (e.level < levels()) {
        TowerElem up;
        up.level = e.level + 1;
        if (!elem_is_zero(e)) up.coeffs.push_back(std::move(e));
        e = std::move(up);
    }
    return e;
}

void Tower::adjoin(std::vector<TowerElem> minpoly_coeffs, const Int& anchor) {
    const int lvl = levels();
    if (minpoly_coeffs.size() < 3)
        throw std::invalid_argument("Tower::adjoin: minimal polynomial must have degree >= 2");
    for (auto& c : minpoly_coeffs) {
        trim(c);
        if (c.level != lvl) throw std::invalid_argument("Tower::adjoin: coefficient level mismatch");
    }
    TowerDomain top(*this, lvl);
    if (elem_is_zero(minpoly_coeffs.back()))
        throw std::invalid_argument("Tower::adjoin: zero leading coefficient");
    // Normalize to monic.
    TowerElem li = top.inv(minpoly_coeffs.back());
    for (auto& c : minpoly_coeffs) c = top.mul(c, li);
    // The anchor must be a root of the sigma image mod p.
    Int r = mod_reduce(anchor, p_);
    Int acc = 0;
    for (auto it = minpoly_coeffs.rbegin(); it != minpoly_coeffs.rend(); ++it)
        acc = mod_reduce(acc * r + apply_anchor(*it), p_);
    if (acc != 0)
        throw std::invalid_argument("Tower::adjoin: anchor is not a root of the minimal polynomial mod p");
    minpolys_.push_back(std::move(minpoly_coeffs));
    anchors_.push_back(r);
}

Int Tower::apply_anchor(const TowerElem& a) const {
    if (a.level == 0) {
        Int den = mod_reduce(a.scalar.get_den(), p_);
        if (den == 0) throw std::domain_error("Tower::apply_anchor: denominator divisible by p");
        return mod_reduce(a.scalar.get_num() * mod_inverse(den, p_), p_);
    }
    const Int& r = anchors_.at(a.level - 1);
    Int acc = 0;
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it)
        acc = mod_reduce(acc * r + apply_anchor(*it), p_);
    return acc;
}

std::string Tower::describe() const {
    std::ostringstream os;
    os << "Q";
    for (int i = 1; i <= levels(); ++i) {
        os << " <= Q(a1";
        for (int j = 2; j <= i; ++j) os << ",a" << j;
        os << ")";
    }
    os << " over F_" << p_.get_str() << "\n";
    for (int i = 1; i <= levels(); ++i) {
        os << "  a" << i << ": minimal polynomial";
        const auto& m = minpoly(i);
        for (std::size_t j = 0; j < m.size(); ++j)
            os << (j ? " + (" : " (") << tower_elem_to_string(m[j]) << ")*a" << i << "^" << j;
        os << ", anchor " << anchor(i).get_str() << "\n";
    }
    return os.str();
}

std::string tower_elem_to_string(const TowerElem& a) {
    if (a.level == 0) return a.scalar.get_str();
    if (elem_is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
        if (elem_is_zero(a.coeffs[j])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << tower_elem_to_string(a.coeffs[j]) << ")";
        if (j >= 1) {
            os << "*a" << a.level;
            if (j >= 2) os << "^" << j;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// TowerDomain

TowerElem TowerDomain::zero() const { return tw->from_rat_at(0, level); }
TowerElem TowerDomain::one() const { return tw->from_rat_at(1, level); }
TowerElem TowerDomain::from_int(const Int& a) const { return tw->from_rat_at(Rat(a), level); }

TowerElem TowerDomain::add(const Elem& a, const Elem& b) const {
    if (a.level != level || b.level != level) throw std::logic_error("tower: element level mismatch");
    if (level == 0) {
        TowerElem r;
        r.scalar = a.scalar + b.scalar;
        return r;
    }
    TowerDomain sub(*tw, level - 1);
    TowerElem r;
    r.level = level;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), sub.zero());
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        const TowerElem& x = i < a.coeffs.size() ? a.coeffs[i] : sub.zero();
        const TowerElem& y = i < b.coeffs.size() ? b.coeffs[i] : sub.zero();
        r.coeffs[i] = sub.add(x, y);
    }
    trim(r);
    return r;
}

TowerElem TowerDomain::neg(const Elem& a) const {
    if (level == 0) {
        TowerElem r;
        r.scalar = -a.scalar;
        return r;
    }
    TowerDomain sub(*tw, level - 1);
    TowerElem r = a;
    for (auto& c : r.coeffs) c = sub.neg(c);
    return r;
}

TowerElem TowerDomain::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

TowerElem TowerDomain::mul(const Elem& a, const Elem& b) const {
    if (a.level != level || b.level != level) throw std::logic_error("tower: element level mismatch");
    if (level == 0) {
        TowerElem r;
        r.scalar = a.scalar * b.scalar;
        return r;
    }
    TowerDomain subd(*tw, level - 1);
    TowerPoly prod = dp_mul(subd, to_poly(subd, a), to_poly(subd, b));
    TowerPoly m = minpoly_as_poly(*tw, level);
    TowerPoly rem = dp_divmod(subd, prod, m).second;
    return from_poly(level, std::move(rem));
}

bool TowerDomain::is_zero(const Elem& a) const { return elem_is_zero(a); }

bool TowerDomain::eq(const Elem& a, const Elem& b) const { return elem_is_zero(sub(a, b)); }

TowerElem TowerDomain::inv(const Elem& a) const {
    if (elem_is_zero(a)) throw std::domain_error("TowerDomain: inverse of zero");
    if (level == 0) {
        TowerElem r;
        r.scalar = 1 / a.scalar;
        return r;
    }
    TowerDomain subd(*tw, level - 1);
    auto [g, s, t] = dp_xgcd(subd, to_poly(subd, a), minpoly_as_poly(*tw, level));
    if (g.deg() != 0)
        throw std::logic_error("TowerDomain: minimal polynomial is reducible");
    TowerPoly r = dp_divmod(subd, s, minpoly_as_poly(*tw, level)).second;
    return from_poly(level, std::move(r));
}

// ---------------------------------------------------------------------------
// Factorization over the tower (Trager reduction).

namespace {

std::vector<TowerFactor> factor_squarefree_tower(const TowerDomain& K, const TowerPoly& f);

std::vector<TowerFactor> factor_squarefree_base(const TowerDomain& K, const TowerPoly& f) {
    QPoly g;
    g.coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) g.coeffs.push_back(c.scalar);
    std::vector<TowerFactor> out;
    for (const auto& [irr, mult] : factor_over_q(g)) {
        (void)mult;  // squarefree input: all multiplicities are 1
        TowerPoly h;
        h.coeffs.reserve(irr.coeffs.size());
        for (const auto& c : irr.coeffs) {
            TowerElem e;
            e.scalar = c;
            h.coeffs.push_back(std::move(e));
        }
        out.push_back({std::move(h), 1});
    }
    return out;
}

/// Norm from K_l = K_{l-1}(a_l) down to K_{l-1}: res_{a_l}(m(a_l), f(x, a_l)).
TowerPoly tower_norm(const TowerDomain& K, const TowerPoly& f) {
    TowerDomain subd(*K.tw, K.level - 1);
    PolyRingDomain<TowerDomain> pr(subd);
    using PRPoly = DomainPoly<PolyRingDomain<TowerDomain>>;

    // f as a polynomial in a_l with coefficients in K_{l-1}[x].
    TowerPoly m = minpoly_as_poly(*K.tw, K.level);
    std::vector<DomainPoly<TowerDomain>> by_gen(static_cast<std::size_t>(m.deg()));
    for (auto& e : by_gen) e.coeffs.resize(f.coeffs.size(), subd.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < f.coeffs[i].coeffs.size(); ++j)
            by_gen[j].coeffs[i] = f.coeffs[i].coeffs[j];
    PRPoly fa;
    fa.coeffs = std::move(by_gen);
    for (auto& e : fa.coeffs) e.normalize(subd);
    fa.normalize(pr);

    PRPoly ma;
    ma.coeffs.reserve(m.coeffs.size());
    for (const auto& c : m.coeffs) ma.coeffs.push_back(dp_constant(subd, c));
    ma.normalize(pr);

    return resultant(pr, ma, fa);
}

std::vector<TowerFactor> factor_squarefree_tower(const TowerDomain& K, const TowerPoly& f) {
    if (f.deg() == 1) return {{dp_monic(K, f), 1}};
    if (K.level == 0) return factor_squarefree_base(K, f);

    TowerDomain subd(*K.tw, K.level - 1);
    TowerElem alpha;  // generator a_l at level l
    alpha.level = K.level;
    alpha.coeffs.push_back(subd.zero());
    alpha.coeffs.push_back(subd.one());

    for (long s = 0;; ++s) {
        TowerElem shift = K.mul(K.from_int(-s), alpha);
        TowerPoly fs = dp_compose_shift(K, f, shift);  // fs(x) = f(x - s*a_l)
        TowerPoly norm = tower_norm(K, fs);
        if (dp_gcd_euclid(subd, norm, dp_derivative(subd, norm)).deg() != 0) continue;

        std::vector<TowerFactor> out;
        TowerElem unshift = K.mul(K.from_int(s), alpha);
        for (const auto& [h, mult] : factor_squarefree_tower(subd, dp_monic(subd, norm))) {
            (void)mult;
            TowerPoly hl;  // lift h from K_{l-1}[x] into K_l[x]
            hl.coeffs.reserve(h.coeffs.size());
            for (const auto& c : h.coeffs) {
                TowerElem e;
                e.level = K.level;
                if (!elem_is_zero(c)) e.coeffs.push_back(c);
                hl.coeffs.push_back(std::move(e));
            }
            TowerPoly g = dp_gcd_euclid(K, fs, hl);
            if (g.deg() > 0) out.push_back({dp_compose_shift(K, g, unshift), 1});
        }
        return out;
    }
}

}  // namespace

std::vector<TowerFactor> factor_univariate(const TowerDomain& K, const TowerPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
    if (f.deg() == 0) return {};

    // Yun's squarefree decomposition (characteristic zero), then Trager on
    // each squarefree part.
    TowerPoly a = dp_monic(K, f);
    TowerPoly d = dp_derivative(K, a);
    TowerPoly g = dp_gcd_euclid(K, a, d);
    TowerPoly w = dp_divmod(K, a, g).first;
    TowerPoly y = dp_divmod(K, d, g).first;
    std::vector<TowerFactor> out;
    int mult = 0;
    while (w.deg() > 0) {
        ++mult;
        TowerPoly z = dp_sub(K, y, dp_derivative(K, w));
        TowerPoly h = dp_gcd_euclid(K, w, z);
        if (h.deg() > 0)
            for (auto& fac : factor_squarefree_tower(K, h)) out.push_back({fac.factor, mult});
        w = dp_divmod(K, w, h).first;
        y = dp_divmod(K, z, h).first;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Roots in F_p.

namespace {

using FpPoly = DomainPoly<FpDomain>;

FpPoly fp_powmod(const FpDomain& fp, FpPoly base, Int e, const FpPoly& mod) {
    FpPoly acc = dp_constant(fp, fp.one());
    base = dp_divmod(fp, base, mod).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = dp_divmod(fp, dp_mul(fp, acc, base), mod).second;
        base = dp_divmod(fp, dp_mul(fp, base, base), mod).second;
        e >>= 1;
    }
    return acc;
}

void split_linear(const FpDomain& fp, const FpPoly& f, std::vector<Int>& roots) {
    if (f.deg() == 0) return;
    if (f.deg() == 1) {
        roots.push_back(fp.neg(fp.div(f.coeffs[0], f.coeffs[1])));
        return;
    }
    Int e = (fp.p - 1) / 2;
    for (Int c = 0;; ++c) {
        FpPoly xc = dp_from(fp, {fp.from_int(c), fp.one()});
        FpPoly b = fp_powmod(fp, xc, e, f);
        b = dp_sub(fp, b, dp_constant(fp, fp.one()));
        FpPoly g = dp_gcd_euclid(fp, b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            split_linear(fp, g, roots);
            split_linear(fp, dp_divmod(fp, f, g).first, roots);
            return;
        }
    }
}

}  // namespace

std::vector<Int> fp_roots(const Int& p, const FpPoly& f) {
    FpDomain fp(p);
    std::vector<Int> roots;
    if (f.is_zero()) throw std::invalid_argument("fp_roots: zero polynomial");
    if (p == 2) {
        for (Int r = 0; r < 2; ++r)
            if (dp_eval(fp, f, r) == 0) roots.push_back(r);
        return roots;
    }
    FpPoly x = dp_from(fp, {fp.zero(), fp.one()});
    FpPoly xp = fp_powmod(fp, x, p, f);
    FpPoly lin = dp_gcd_euclid(fp, dp_sub(fp, xp, x), f);
    split_linear(fp, dp_monic(fp, lin), roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

DomainPoly<FpDomain> sigma_poly(const Tower& tw, const TowerPoly& f) {
    FpDomain fp(tw.prime());
    std::vector<Int> c;
    c.reserve(f.coeffs.size());
    for (const auto& e : f.coeffs) c.push_back(tw.apply_anchor(e));
    return dp_from(fp, std::move(c));
}

}  // namespace rectify
