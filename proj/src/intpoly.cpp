#include "rectify/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace rectify {

IntPoly IntPoly::constant(const Int& c, int nvars) {
    IntPoly f(nvars);
    if (c != 0) f.terms_.emplace(Monomial(nvars, 0), c);
    return f;
}

IntPoly IntPoly::variable(int i, int nvars) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("IntPoly::variable: index out of range");
    IntPoly f(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    f.terms_.emplace(std::move(m), 1);
    return f;
}

IntPoly IntPoly::term(const Monomial& m, const Int& c) {
    IntPoly f(static_cast<int>(m.size()));
    if (c != 0) f.terms_.emplace(m, c);
    return f;
}

bool IntPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Int IntPoly::constant_term() const {
    Monomial one(nvars_, 0);
    auto it = terms_.find(one);
    return it == terms_.end() ? Int(0) : it->second;
}

Int IntPoly::l1_norm() const {
    Int s = 0;
    for (const auto& [m, c] : terms_) s += abs_int(c);
    return s;
}

Int IntPoly::linf_norm() const {
    Int s = 0;
    for (const auto& [m, c] : terms_) s = std::max(s, abs_int(c));
    return s;
}

std::optional<long> IntPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return mono_degree(terms_.begin()->first);  // leading term has max total degree
}

long IntPoly::degree_in(int var) const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
    return d;
}

bool IntPoly::is_bounded(const BoundProfile& b) const {
    auto d = degree();
    if (!d) return true;  // deg(0) = -infinity
    return l1_norm() <= b.k && Int(*d) <= b.t;
}

IntPoly IntPoly::coefficient_poly(int var, unsigned power) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("coefficient_poly: bad variable");
    IntPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != power) continue;
        Monomial m2 = m;
        m2[var] = 0;
        out.terms_.emplace(std::move(m2), c);
    }
    return out;
}

void IntPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::operator-() const {
    IntPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("IntPoly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("IntPoly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("IntPoly: variable count mismatch");
    IntPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

IntPoly IntPoly::operator*(const Int& c) const {
    IntPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::constant(1, nvars_);
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    GrlexGreater gt;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (gt(it->first, jt->first)) return true;
        if (gt(jt->first, it->first)) return false;
        int c = cmp(it->second, jt->second);
        if (c != 0) return c < 0;
    }
    return it == terms_.end() && jt != o.terms_.end();
}

const std::pair<const Monomial, Int>& IntPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return *terms_.begin();
}

IntPoly IntPoly::sign_canonical() const {
    if (terms_.empty() || terms_.begin()->second > 0) return *this;
    return -*this;
}

IntPoly IntPoly::extended(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("extended: cannot shrink variable count");
    IntPoly out(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.resize(new_nvars, 0);
        out.terms_.emplace(std::move(m2), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string IntPoly::to_string(int var_base, char var_letter) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = abs_int(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = mono_degree(m) > 0;
        if (a != 1 || !any_var) os << a.get_str();
        bool star = (a != 1);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (star) os << "*";
            os << var_letter << (static_cast<long>(i) + var_base);
            if (m[i] > 1) os << "^" << m[i];
            star = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    char letter;
    int base;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("polynomial parse error: digit expected");
        return Int(s.substr(start, pos - start));
    }
    // term := [coeff] [* var [^exp]]* ; returns (coefficient, exponent list)
    std::pair<Int, std::vector<std::pair<long, unsigned>>> term() {
        skip_ws();
        Int coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = number();
            have_coeff = true;
        }
        std::vector<std::pair<long, unsigned>> vars;
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos >= s.size() || s[pos] != letter) break;
            ++pos;
            Int idx = number();
            long v = idx.get_si() - base;
            if (v < 0) throw std::invalid_argument("polynomial parse error: variable index below base");
            unsigned e = 1;
            if (eat('^')) e = static_cast<unsigned>(number().get_ui());
            vars.emplace_back(v, e);
        }
        if (!have_coeff && vars.empty())
            throw std::invalid_argument("polynomial parse error: empty term");
        return {coeff, vars};
    }
};

}  // namespace

IntPoly IntPoly::parse(const std::string& text, int nvars, int var_base, char var_letter) {
    Parser P{text, 0, var_letter, var_base};
    struct RawTerm {
        Int c;
        std::vector<std::pair<long, unsigned>> vars;
    };
    std::vector<RawTerm> raw;
    long max_var = -1;
    int sign = 1;
    P.skip_ws();
    if (P.eat('-')) sign = -1;
    for (;;) {
        auto [c, vars] = P.term();
        raw.push_back({c * sign, vars});
        for (auto& [v, e] : vars) max_var = std::max(max_var, v);
        P.skip_ws();
        if (P.eat('+'))
            sign = 1;
        else if (P.eat('-'))
            sign = -1;
        else
            break;
    }
    P.skip_ws();
    if (P.pos != P.s.size()) throw std::invalid_argument("polynomial parse error: trailing input");
    int n = nvars >= 0 ? nvars : static_cast<int>(max_var + 1);
    if (max_var >= n) throw std::invalid_argument("polynomial parse error: variable index out of range");
    IntPoly f(n);
    for (auto& rt : raw) {
        Monomial m(n, 0);
        for (auto& [v, e] : rt.vars) m[v] += e;
        f.add_term(m, rt.c);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Exact division

bool try_exact_div(const IntPoly& f, const IntPoly& g, IntPoly& out, const Int* mod) {
    if (g.is_zero()) throw std::domain_error("try_exact_div: division by zero polynomial");
    const int n = f.nvars();
    if (g.nvars() != n) throw std::invalid_argument("try_exact_div: variable count mismatch");
    IntPoly q(n);
    IntPoly r = f;
    const auto& [gm, gc] = g.leading();
    Int gc_inv;
    if (mod) gc_inv = mod_inverse(gc, *mod);
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        Monomial qm(n);
        for (int i = 0; i < n; ++i) {
            if (rm[i] < gm[i]) return false;
            qm[i] = rm[i] - gm[i];
        }
        Int qc;
        if (mod) {
            qc = mod_reduce(rc * gc_inv, *mod);
        } else {
            if (!mpz_divisible_p(rc.get_mpz_t(), gc.get_mpz_t())) return false;
            qc = div_exact(rc, gc);
        }
        IntPoly step = IntPoly::term(qm, qc);
        q += step;
        r -= step * g;
        if (mod) {
            IntPoly rr(n);
            for (const auto& [m, c] : r.terms()) rr.add_term(m, mod_reduce(c, *mod));
            r = rr;
        }
    }
    out = q;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration of bounded polynomials

namespace {

/// Monomials of total degree <= t in n variables, descending grlex.
std::vector<Monomial> monomials_up_to(int n, long t) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    std::function<void(int, long)> rec = [&](int var, long budget) {
        if (var == n) {
            out.push_back(cur);
            return;
        }
        for (long e = 0; e <= budget; ++e) {
            cur[var] = static_cast<unsigned>(e);
            rec(var + 1, budget - e);
        }
        cur[var] = 0;
    };
    rec(0, t);
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
}

}  // namespace

void enumerate_bounded_visit(int n, const BoundProfile& b,
                             const std::function<bool(const IntPoly&)>& fn) {
    if (b.k < 1 || b.t < 1) throw std::invalid_argument("enumerate_bounded: k, t must be >= 1");
    const long t = b.t.get_si();
    const long k = b.k.get_si();
    std::vector<Monomial> monos = monomials_up_to(n, t);
    IntPoly cur(n);
    bool stop = false;
    // Assign coefficients monomial by monomial (descending grlex).  The sign
    // of the first non-zero coefficient is forced positive, halving the count.
    std::function<void(std::size_t, long, bool)> rec = [&](std::size_t i, long budget,
                                                           bool leading_placed) {
        if (stop) return;
        if (i == monos.size()) {
            if (!cur.is_zero() && !fn(cur)) stop = true;
            return;
        }
        // coefficient 0
        rec(i + 1, budget, leading_placed);
        for (long c = 1; c <= budget && !stop; ++c) {
            cur.add_term(monos[i], c);
            rec(i + 1, budget - c, true);
            cur.add_term(monos[i], -c);
            if (leading_placed) {
                cur.add_term(monos[i], -c);
                rec(i + 1, budget - c, true);
                cur.add_term(monos[i], c);
            }
        }
    };
    rec(0, k, false);
}

std::vector<IntPoly> enumerate_bounded(int n, const BoundProfile& b) {
    std::vector<IntPoly> out;
    enumerate_bounded_visit(n, b, [&](const IntPoly& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

SplitRelations split_relations(const std::vector<Int>& A, const Int& p, const BoundProfile& b) {
    if (!is_probable_prime(p)) throw std::invalid_argument("split_relations: p is not prime");
    SplitRelations out;
    const int n = static_cast<int>(A.size());
    std::vector<Int> pt;
    pt.reserve(A.size());
    for (const Int& a : A) pt.push_back(mod_reduce(a, p));
    enumerate_bounded_visit(n, b, [&](const IntPoly& f) {
        Int v = 0;
        for (const auto& [m, c] : f.terms()) {
            Int t = c;
            for (int i = 0; i < n; ++i)
                for (unsigned e = 0; e < m[i]; ++e) t = mod_reduce(t * pt[i], p);
            v = mod_reduce(v + t, p);
        }
        (v == 0 ? out.vanishing : out.non_vanishing).push_back(f);
        return true;
    });
    return out;
}

}  // namespace rectify
