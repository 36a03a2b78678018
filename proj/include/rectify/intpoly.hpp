#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers.
// Terms are kept in descending graded-lexicographic order, which fixes a
// canonical form: equal polynomials have identical term maps.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectify/bigint.hpp"

namespace rectify {

using Monomial = std::vector<unsigned>;

inline long mono_degree(const Monomial& m) {
    long d = 0;
    for (unsigned e : m) d += e;
    return d;
}

/// Graded-lexicographic order, descending (leading term first in the map).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponent vectors, x1 heaviest
    }
};

struct BoundProfile {
    Int k;  // L1 norm cap, >= 1
    Int t;  // total degree cap, >= 1
};

class IntPoly {
  public:
    using TermMap = std::map<Monomial, Int, GrlexGreater>;

    IntPoly() : nvars_(0) {}
    explicit IntPoly(int nvars) : nvars_(nvars) {}

    static IntPoly zero(int nvars) { return IntPoly(nvars); }
    static IntPoly constant(const Int& c, int nvars);
    static IntPoly variable(int i, int nvars);
    static IntPoly term(const Monomial& m, const Int& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term (0 if absent).
    Int constant_term() const;
    std::size_t nterms() const { return terms_.size(); }

    Int l1_norm() const;
    Int linf_norm() const;
    /// Total degree; std::nullopt encodes deg(0) = -infinity.
    std::optional<long> degree() const;
    long degree_in(int var) const;  // -1 when the polynomial is 0 or var absent? see impl
    bool is_bounded(const BoundProfile& b) const;

    /// Coefficient of var^power, as a polynomial in the remaining variables
    /// (same variable count, exponent of var identically zero).
    IntPoly coefficient_poly(int var, unsigned power) const;

    /// Adds c * x^m; drops the term if the sum cancels.
    void add_term(const Monomial& m, const Int& c);

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator*(const Int& c) const;
    IntPoly pow(unsigned e) const;

    bool operator==(const IntPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }
    /// Arbitrary strict order, used only for set/map containers.
    bool operator<(const IntPoly& o) const;

    /// Leading term with respect to grlex (throws on the zero polynomial).
    const std::pair<const Monomial, Int>& leading() const;

    /// Negates the polynomial when the grlex-leading coefficient is negative.
    IntPoly sign_canonical() const;

    /// Re-embeds into a ring with more variables (existing indices unchanged).
    IntPoly extended(int new_nvars) const;

    /// Generic exact evaluation over a domain adapter.
    template <class D>
    typename D::Elem evaluate(const std::vector<typename D::Elem>& point, const D& dom) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluate: point length != nvars");
        typename D::Elem acc = dom.zero();
        for (const auto& [m, c] : terms_) {
            typename D::Elem t = dom.from_int(c);
            for (int i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < m[i]; ++e) t = dom.mul(t, point[i]);
            acc = dom.add(acc, t);
        }
        return acc;
    }

    std::string to_string(int var_base = 1, char var_letter = 'x') const;
    /// Parses "x2^2 + 1" style syntax; round-trips with to_string.
    static IntPoly parse(const std::string& text, int nvars = -1, int var_base = 1,
                         char var_letter = 'x');

  private:
    int nvars_;
    TermMap terms_;
};

/// Exact quotient f / g in Z[x...]; returns false when g does not divide f.
/// When mod != nullptr, works over F_mod[x...] instead.
bool try_exact_div(const IntPoly& f, const IntPoly& g, IntPoly& out, const Int* mod = nullptr);

/// All non-zero (k,t)-bounded polynomials in n variables, one per sign class,
/// in a fixed deterministic order.
std::vector<IntPoly> enumerate_bounded(int n, const BoundProfile& b);

/// Streaming variant of enumerate_bounded; stops early when fn returns false.
void enumerate_bounded_visit(int n, const BoundProfile& b,
                             const std::function<bool(const IntPoly&)>& fn);

/// Partition of enumerate_bounded(|A|, b) by vanishing at A over F_p.
struct SplitRelations {
    std::vector<IntPoly> vanishing;      // L1
    std::vector<IntPoly> non_vanishing;  // L2
};
SplitRelations split_relations(const std::vector<Int>& A, const Int& p, const BoundProfile& b);

}  // namespace rectify
