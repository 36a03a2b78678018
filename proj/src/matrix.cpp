#include "rectify/matrix.hpp"

#include <algorithm>

#include "rectify/domain.hpp"
#include "rectify/dompoly.hpp"

namespace rectify {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_int_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_int_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
    }
    return m;
}

bool ExactMatrix::is_integer() const {
    for (const auto& row : e_)
        for (const auto& x : row)
            if (x.get_den() != 1) return false;
    return true;
}

Rat det_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    // Scale each row to integers, run Bareiss, divide the scale back out.
    Int scale = 1;
    DomainMatrix<ZDomain> zm(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            Int d = m.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = m.at(i, j) * Rat(l);
            zm[i][j] = v.get_num();
        }
        scale *= l;
    }
    ZDomain dom;
    Int d = det_bareiss(dom, std::move(zm));
    return Rat(d) / Rat(scale);
}

std::size_t rank_over_q(const ExactMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][col] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        Rat inv = 1 / a[rank][col];
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] * inv;
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

RankPair rank_pair(const ExactMatrix& m, const Int& p) {
    if (!m.is_integer()) throw std::invalid_argument("rank_pair: integer entries required");
    if (!is_probable_prime(p)) throw std::invalid_argument("rank_pair: p is not prime");
    RankPair out;
    out.rank_q = rank_over_q(m);

    // Gaussian elimination mod p, greedy partial pivoting by first non-zero
    // entry, recording pivot rows/columns as the witness submatrix.
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mod_reduce(m.at(i, j).get_num(), p);
    std::vector<std::size_t> row_of(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) row_of[i] = i;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][col] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        std::swap(row_of[piv], row_of[rank]);
        Int inv = mod_inverse(a[rank][col], p);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            Int f = mod_reduce(a[i][col] * inv, p);
            for (std::size_t j = col; j < m.cols(); ++j)
                a[i][j] = mod_reduce(a[i][j] - f * a[rank][j], p);
        }
        out.witness_rows.push_back(row_of[rank]);
        out.witness_cols.push_back(col);
        ++rank;
    }
    out.rank_p = rank;
    std::sort(out.witness_rows.begin(), out.witness_rows.end());
    return out;
}

// ---------------------------------------------------------------------------

bool in_localization(const Rat& x, const Int& p) {
    Int d = x.get_den();
    return !mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t());
}

Int localize_mod(const Rat& x, const Int& p) {
    if (!in_localization(x, p))
        throw std::domain_error("localize_mod: denominator divisible by p");
    Int num = mod_reduce(x.get_num(), p);
    Int den = mod_reduce(x.get_den(), p);
    return mod_reduce(num * mod_inverse(den, p), p);
}

namespace {

/// Row (c_1..c_n) and rhs -c_0 of a linear polynomial.
std::pair<std::vector<Int>, Int> linear_row(const IntPoly& f) {
    const int n = f.nvars();
    std::vector<Int> row(n, 0);
    Int rhs = 0;
    for (const auto& [m, c] : f.terms()) {
        long d = mono_degree(m);
        if (d > 1) throw std::invalid_argument("lift_linear: non-linear polynomial in L1/L2");
        if (d == 0) {
            rhs = -c;
            continue;
        }
        for (int i = 0; i < n; ++i)
            if (m[i] == 1) row[i] = c;
    }
    return {row, rhs};
}

}  // namespace

std::vector<Rat> lift_linear(const std::vector<Int>& A, const std::vector<IntPoly>& L1,
                             const std::vector<IntPoly>& L2, const Int& p,
                             const LinearLiftOptions& opt) {
    const int n = static_cast<int>(A.size());
    if (!is_probable_prime(p)) throw std::invalid_argument("lift_linear: p is not prime");

    Int k = 1;
    for (const auto& f : L1) k = std::max(k, f.l1_norm());
    for (const auto& f : L2) k = std::max(k, f.l1_norm());
    if (pow_int(k, n + 1) >= p && !opt.force)
        throw std::domain_error("lift_linear: bound k^(n+1) < p violated (pass force to override)");

    std::vector<Int> a;
    for (const Int& x : A) a.push_back(mod_reduce(x, p));

    // L1 as M x = b.
    const std::size_t m = L1.size();
    ExactMatrix M(m, n), Maug(m, n + 1);
    std::vector<Int> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto [row, rhs] = linear_row(L1[i]);
        // precondition: f vanishes at A mod p
        Int v = -rhs;
        for (int j = 0; j < n; ++j) v += row[j] * a[j];
        if (mod_reduce(v, p) != 0)
            throw std::invalid_argument("lift_linear: member of L1 does not vanish at A mod p");
        for (int j = 0; j < n; ++j) {
            M.at(i, j) = Rat(row[j]);
            Maug.at(i, j) = Rat(row[j]);
        }
        Maug.at(i, n) = Rat(rhs);
        b[i] = rhs;
    }

    RankPair rp = rank_pair(M, p);
    RankPair rpa = rank_pair(Maug, p);
    if (rp.rank_q != rp.rank_p || rpa.rank_q != rpa.rank_p || rpa.rank_p != rp.rank_p)
        throw std::logic_error("lift_linear: inconsistent system (rank mismatch)");
    const std::size_t t = rp.rank_p;

    // Pivot submatrix M1 (t x t), full rank mod p and hence over Q.
    ExactMatrix M1(t, t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            M1.at(i, j) = M.at(rp.witness_rows[i], rp.witness_cols[j]);
    Rat det1 = det_exact(M1);
    if (det1 == 0) throw std::logic_error("lift_linear: witness submatrix singular over Q");

    std::vector<bool> is_pivot(n, false);
    for (auto c : rp.witness_cols) is_pivot[c] = true;

    // Free variables take integer lifts.
    std::vector<Rat> x(n);
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) x[j] = Rat(a[j]);

    if (t > 0) {
        // Solve M1 * x_pivot = b1 - M2 * x_free by Cramer's rule (equivalent
        // to the adjugate expression M1* rhs / det(M1)).
        std::vector<Rat> rhs(t);
        for (std::size_t i = 0; i < t; ++i) {
            Rat v = Rat(b[rp.witness_rows[i]]);
            for (int j = 0; j < n; ++j)
                if (!is_pivot[j]) v -= M.at(rp.witness_rows[i], j) * x[j];
            rhs[i] = v;
        }
        for (std::size_t jc = 0; jc < t; ++jc) {
            ExactMatrix Mj = M1;
            for (std::size_t i = 0; i < t; ++i) Mj.at(i, jc) = rhs[i];
            x[rp.witness_cols[jc]] = det_exact(Mj) / det1;
        }
    }

    // Post-conditions, asserted per call.
    QDomain q;
    for (int j = 0; j < n; ++j) {
        if (!in_localization(x[j], p) || localize_mod(x[j], p) != a[j])
            throw std::logic_error("lift_linear: lift does not reduce to A");
    }
    for (const auto& f : L1)
        if (f.evaluate(x, q) != 0) throw std::logic_error("lift_linear: L1 member non-zero over Q");
    for (const auto& f : L2)
        if (f.evaluate(x, q) == 0) throw std::logic_error("lift_linear: L2 member vanishes over Q");
    return x;
}

LinearRectification rectify_linear(const std::vector<Int>& A, const Int& p, const Int& k,
                                   bool force) {
    const int n = static_cast<int>(A.size());
    BoundProfile prof{2 * k, 1};
    auto split = split_relations(A, p, prof);
    LinearLiftOptions opt;
    opt.force = force;
    auto lifted = lift_linear(A, split.vanishing, split.non_vanishing, p, opt);

    Int l = 1;
    for (const auto& x : lifted) {
        Int d = x.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    // Smallest positive multiple of l congruent to 1 mod p.
    Int mult = l * mod_inverse(mod_reduce(l, p), p);
    if (mult == 0) mult = 1;

    LinearRectification out;
    out.localized = lifted;
    out.multiplier = mult;
    for (const auto& x : lifted) {
        Rat scaled = x * Rat(mult);
        if (scaled.get_den() != 1) throw std::logic_error("rectify_linear: denominators survive");
        out.points.push_back(scaled.get_num());
    }
    // guarantee gate: |A| < log_{2k} p - 1  <=>  (2k)^(n+1) < p
    out.guaranteed = pow_int(2 * k, n + 1) < p;
    return out;
}

}  // namespace rectify
