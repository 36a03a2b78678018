#pragma once

// Finite algebraic extension towers over Q: Q = K_0 <= K_1 <= ... <= K_r with
// K_i = K_{i-1}(a_i), each generator given by a monic irreducible minimal
// polynomial over the level below.  A tower also carries an "anchor": a residue
// in F_p for each generator, inducing a partial ring homomorphism
// sigma: (tower elements with p-integral coordinates) -> F_p.

#include <string>
#include <vector>

#include "rectify/dompoly.hpp"

namespace rectify {

/// A tower element in recursive dense form.  level == 0 holds a rational in
/// `scalar`; level k > 0 holds dense coefficients (in the k-th generator) one
/// level down, trailing zeros trimmed, empty meaning zero.
struct TowerElem {
    int level = 0;
    Rat scalar = 0;
    std::vector<TowerElem> coeffs;
};

class Tower {
public:
    explicit Tower(Int p);

    const Int& prime() const { return p_; }
    int levels() const { return static_cast<int>(minpolys_.size()); }
    /// Absolute degree [K_r : Q] = product of the generator degrees.
    Int degree() const;
    /// Minimal polynomial of generator i (1-based), dense coefficients at
    /// level i-1, monic.
    const std::vector<TowerElem>& minpoly(int i) const { return minpolys_.at(i - 1); }
    const Int& anchor(int i) const { return anchors_.at(i - 1); }

    TowerElem from_rat(const Rat& a) const;
    TowerElem from_rat_at(const Rat& a, int level) const;
    /// Generator a_i lifted to the top level.
    TowerElem generator(int i) const;
    /// Raise an element from its own level to the top level.
    TowerElem lift(const TowerElem& a) const;

    /// Extends the tower by a root of `minpoly_coeffs` (dense, at the current
    /// top level, degree >= 2) whose image under sigma is `anchor`; the anchor
    /// must be a root of the sigma-image of the minimal polynomial mod p.
    void adjoin(std::vector<TowerElem> minpoly_coeffs, const Int& anchor);

    /// sigma: substitute the anchors for the generators and reduce mod p.
    /// Throws std::domain_error if a denominator is divisible by p.
    Int apply_anchor(const TowerElem& a) const;

    std::string describe() const;

private:
    Int p_;
    std::vector<std::vector<TowerElem>> minpolys_;
    std::vector<Int> anchors_;
};

/// Field adapter for K_level inside a tower (level = number of generators in
/// scope; elements must be at exactly this level).
struct TowerDomain {
    const Tower* tw;
    int level;
    explicit TowerDomain(const Tower& t) : tw(&t), level(t.levels()) {}
    TowerDomain(const Tower& t, int lvl) : tw(&t), level(lvl) {}

    using Elem = TowerElem;
    static constexpr bool is_field() { return true; }
    Elem zero() const;
    Elem one() const;
    Elem from_int(const Int& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem exact_div(const Elem& a, const Elem& b) const { return div(a, b); }
};

std::string tower_elem_to_string(const TowerElem& a);

using TowerPoly = DomainPoly<TowerDomain>;

struct TowerFactor {
    TowerPoly factor;  // monic irreducible over the domain's field
    int multiplicity;
};

/// Monic irreducible factorization over K_level (Trager's norm reduction down
/// the tower, rational factorization at the base).
std::vector<TowerFactor> factor_univariate(const TowerDomain& K, const TowerPoly& f);

/// All roots of f in F_p, sorted ascending.
std::vector<Int> fp_roots(const Int& p, const DomainPoly<FpDomain>& f);

/// Coefficient-wise sigma image of a polynomial over the tower.
DomainPoly<FpDomain> sigma_poly(const Tower& tw, const TowerPoly& f);

}  // namespace rectify
