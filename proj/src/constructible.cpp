#include "rectify/constructible.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "rectify/domain.hpp"

namespace rectify {

namespace {

IntPoly var_of(int idx, int nvars) { return IntPoly::variable(idx, nvars); }

/// Appends a_i := f(a_0, ..., a_{i-1}) and returns the new value's index.
std::size_t push_step(Chain& c, IntPoly f) {
    const ZDomain z;
    std::vector<Int> point;
    point.reserve(f.nvars());
    for (int j = 0; j < f.nvars(); ++j) point.push_back(c.steps[j].value);
    Int v = f.evaluate(point, z);
    if (v < 0) throw std::logic_error("build_chain: negative intermediate value");
    c.steps.push_back({std::move(v), std::move(f)});
    return c.steps.size() - 1;
}

/// Counter phase a_i = a_{i-1} + 1 up to target (inclusive).
void push_counter(Chain& c, unsigned long upto) {
    for (unsigned long i = 1; i <= upto; ++i) {
        int nv = static_cast<int>(i);
        push_step(c, var_of(nv - 1, nv) + IntPoly::constant(Int(1), nv));
    }
}

Chain chain_start(const Int& k, const Int& t) {
    Chain c;
    c.profile = BoundProfile{k, t};
    c.steps.push_back({Int(0), IntPoly::zero(0)});
    return c;
}

}  // namespace

Chain build_chain(const Int& r, const Int& k) {
    if (r < 0) throw std::invalid_argument("build_chain: r must be non-negative");
    if (k < 2) throw std::invalid_argument("build_chain: k must be >= 2");
    Chain c = chain_start(k, k);
    if (r < 16) {  // unary fallback: the s-formula needs log2 log2 r to bite
        push_counter(c, r.get_ui());
        return c;
    }

    const double kd = k.get_d();
    const double L = std::log2(mpz_get_d(r.get_mpz_t()));
    long s = static_cast<long>(std::ceil(std::log2(L / (kd * std::log2(L)))));
    if (s < 1) s = 1;
    const unsigned long sk = static_cast<unsigned long>(s) * k.get_ui();
    const unsigned long N = bit_length(r) - 1;  // floor(log2 r)
    const unsigned long ell = (N + 1 + sk - 1) / sk;
    const unsigned long pow2s = 1ul << s;

    // Base-2^s digits p_ij of the base-2^(sk) blocks p_i of r.
    auto digit = [&](unsigned long i, unsigned long j) -> unsigned long {
        unsigned long lo = i * sk + j * static_cast<unsigned long>(s);
        unsigned long d = 0;
        for (long b = s - 1; b >= 0; --b)
            d = (d << 1) | mpz_tstbit(r.get_mpz_t(), lo + static_cast<unsigned long>(b));
        return d;
    };

    push_counter(c, pow2s);  // a_i = i for i <= 2^s

    // Block assembly: a_{2^s+1+i} = sum_j a_{2^s}^j a_{p_ij} = p_i.
    const std::size_t top = pow2s;  // index of the value 2^s
    for (unsigned long i = 0; i < ell; ++i) {
        const int nv = static_cast<int>(c.steps.size());
        IntPoly f(nv);
        for (unsigned long j = 0; j < k.get_ui(); ++j)
            f += var_of(static_cast<int>(top), nv).pow(static_cast<unsigned>(j)) *
                 var_of(static_cast<int>(digit(i, j)), nv);
        push_step(c, std::move(f));
    }

    if (ell == 1) {
        if (c.value() != r) throw std::logic_error("build_chain: final value mismatch");
        return c;
    }

    // Power/accumulate ladder: pw(i) = 2^(ski), acc(i) = sum_{j<=i} 2^(skj) p_j.
    std::size_t pw1 = 0, pw_prev = 0, acc_prev = 0;
    for (unsigned long i = 1; i < ell; ++i) {
        std::size_t pw;
        {
            const int nv = static_cast<int>(c.steps.size());
            IntPoly f = (i == 1)
                            ? var_of(static_cast<int>(top), nv).pow(
                                  static_cast<unsigned>(k.get_ui()))
                            : var_of(static_cast<int>(pw_prev), nv) *
                                  var_of(static_cast<int>(pw1), nv);
            pw = push_step(c, std::move(f));
            if (i == 1) pw1 = pw;
        }
        {
            const int nv = static_cast<int>(c.steps.size());
            IntPoly f =
                (i == 1) ? var_of(static_cast<int>(pw1), nv) * var_of(static_cast<int>(top + 2), nv) +
                               var_of(static_cast<int>(top + 1), nv)
                         : var_of(static_cast<int>(pw), nv) *
                                   var_of(static_cast<int>(top + i + 1), nv) +
                               var_of(static_cast<int>(acc_prev), nv);
            acc_prev = push_step(c, std::move(f));
        }
        pw_prev = pw;
    }

    if (c.value() != r) throw std::logic_error("build_chain: final value mismatch");
    // Step count is 2^s + ell + 2(ell - 1) = 2^s + 3*ell - 2 by construction.
    return c;
}

Chain build_special_chain(const Int& p, SpecialForm form) {
    Chain c = chain_start(2, 2);
    if (form == SpecialForm::mersenne) {
        Int q = p + 1;
        if (p < 3 || mpz_popcount(q.get_mpz_t()) != 1)
            throw std::invalid_argument("build_special_chain: p is not of the form 2^n - 1");
        const unsigned long n = bit_length(q) - 1;  // p = 2^n - 1
        push_counter(c, 2);                         // 0, 1, 2
        // Squaring ladder: value 2^(2^t) at sq[t].
        std::vector<std::size_t> sq{2};  // index of 2 = 2^(2^0)
        for (unsigned long t = 1; (1ul << t) <= n; ++t) {
            const int nv = static_cast<int>(c.steps.size());
            sq.push_back(push_step(
                c, var_of(static_cast<int>(sq.back()), nv) * var_of(static_cast<int>(sq.back()), nv)));
        }
        // Multiply the powers selected by the binary representation of n.
        std::size_t acc = 0;
        bool have = false;
        for (unsigned long t = 0; (1ul << t) <= n; ++t) {
            if (!(n & (1ul << t))) continue;
            if (!have) {
                acc = sq[t];
                have = true;
                continue;
            }
            const int nv = static_cast<int>(c.steps.size());
            acc = push_step(c, var_of(static_cast<int>(acc), nv) * var_of(static_cast<int>(sq[t]), nv));
        }
        const int nv = static_cast<int>(c.steps.size());
        push_step(c, var_of(static_cast<int>(acc), nv) - IntPoly::constant(Int(1), nv));
    } else {
        Int q = p - 1;
        if (p < 5 || mpz_popcount(q.get_mpz_t()) != 1 ||
            mpz_popcount(Int(bit_length(q) - 1).get_mpz_t()) != 1)
            throw std::invalid_argument("build_special_chain: p is not of the form 2^(2^n) + 1");
        const unsigned long m = bit_length(q) - 1;  // p = 2^m + 1, m = 2^n
        push_counter(c, 2);
        std::size_t cur = 2;  // value 2 = 2^(2^0)
        for (unsigned long e = 1; e < m; e *= 2) {
            const int nv = static_cast<int>(c.steps.size());
            cur = push_step(c, var_of(static_cast<int>(cur), nv) * var_of(static_cast<int>(cur), nv));
        }
        const int nv = static_cast<int>(c.steps.size());
        push_step(c, var_of(static_cast<int>(cur), nv) + IntPoly::constant(Int(1), nv));
    }
    if (c.value() != p) throw std::logic_error("build_special_chain: final value mismatch");
    return c;
}

bool verify_chain(const Chain& c) {
    if (c.steps.empty()) return false;
    if (c.steps[0].value != 0 || !c.steps[0].f.is_zero()) return false;
    const ZDomain z;
    for (std::size_t i = 1; i < c.steps.size(); ++i) {
        const IntPoly& f = c.steps[i].f;
        if (f.nvars() > static_cast<int>(i)) return false;
        if (!f.is_bounded(c.profile)) return false;
        if (c.steps[i].value < 0) return false;
        std::vector<Int> point;
        point.reserve(f.nvars());
        for (int j = 0; j < f.nvars(); ++j) point.push_back(c.steps[j].value);
        if (f.evaluate(point, z) != c.steps[i].value) return false;
    }
    return true;
}

CountBound count_constructible_upper(const Int& n, const Int& k) {
    if (n < 0 || k < 2) throw std::invalid_argument("count_constructible_upper: need n >= 0, k >= 2");
    if (n > 1000000) throw std::invalid_argument("count_constructible_upper: n too large to enumerate");
    CountBound b;
    b.product = 1;
    const unsigned long ku = k.get_ui();
    for (Int i = 1; i <= n; ++i) b.product *= pow_int(3 * k * i, ku);
    b.n_bound_holds = n >= 3 * k;
    b.n_power = 0;
    if (b.n_bound_holds) {
        const unsigned long e = 2 * ku * n.get_ui();
        if (static_cast<double>(e) * static_cast<double>(bit_length(n)) < 1e8)
            b.n_power = pow_int(n, e);
    }
    return b;
}

AdversarialSet adversarial_set(const Int& p, const Int& k) {
    if (k < 3) throw std::invalid_argument("adversarial_set: k must be >= 3");
    if (!is_probable_prime(p)) throw std::invalid_argument("adversarial_set: p must be prime");
    AdversarialSet out;
    out.witness = build_chain(p, k - 1);
    std::set<Int> residues;
    for (const auto& st : out.witness.steps) residues.insert(mod_reduce(st.value, p));
    out.A.assign(residues.begin(), residues.end());
    // The endpoints a_0 = 0 and a_m = p always collide mod p, so the residue
    // set is strictly smaller than the chain.
    if (out.A.size() >= out.witness.steps.size())
        throw std::logic_error("adversarial_set: no collision among chain residues");
    return out;
}

}  // namespace rectify
