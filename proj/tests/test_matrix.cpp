#include <doctest.h>

#include <random>
#include <set>

#include "rectify/domain.hpp"
#include "rectify/matrix.hpp"

using namespace rectify;

namespace {

// Independent cofactor-expansion determinant oracle.
Rat det_cofactor(const ExactMatrix& m) {
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rat acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        ExactMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) sub.at(r - 1, cc++) = m.at(r, c);
        }
        Rat term = m.at(0, j) * det_cofactor(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("det_exact equals cofactor expansion on 100 seeded rational matrices") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> dc(-9, 9), dd(1, 4);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = 1 + rng() % 4;
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rat v(dc(rng), dd(rng));
                v.canonicalize();
                m.at(i, j) = v;
            }
        CHECK(det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant norm bounds: L1 of rows <= k gives |det| <= k^n (500 seeded)") {
    std::mt19937_64 rng(606);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 1 + rng() % 4;
        long k = 2 + static_cast<long>(rng() % 3);
        ExactMatrix m(n, n);
        Int row_norm_product = 1;
        for (std::size_t i = 0; i < n; ++i) {
            // Random integer row with L1 norm <= k.
            long budget = k;
            Int row_norm = 0;
            for (std::size_t j = 0; j < n; ++j) {
                long c = static_cast<long>(rng() % (budget + 1));
                if (rng() % 2) c = -c;
                m.at(i, j) = Rat(c);
                budget -= std::abs(c);
                row_norm += abs_int(Int(c));
            }
            row_norm_product *= row_norm > 0 ? row_norm : Int(1);
        }
        Rat d = det_exact(m);
        REQUIRE(d.get_den() == 1);
        Int dn = abs_int(d.get_num());
        CHECK(dn <= pow_int(Int(k), static_cast<unsigned long>(n)));
        CHECK(dn <= row_norm_product);
    }
}

TEST_CASE("rank_pair: witness submatrix is non-singular mod p and over Q") {
    std::mt19937_64 rng(707);
    Int p = 13;
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
        std::vector<std::vector<Int>> e(rows, std::vector<Int>(cols));
        for (auto& r : e)
            for (auto& v : r) v = Int(static_cast<long>(rng() % 26)) - 13;
        ExactMatrix m = ExactMatrix::from_int_rows(e);
        RankPair rp = rank_pair(m, p);
        CHECK(rp.rank_p <= rp.rank_q);
        CHECK(rp.rank_q == rank_over_q(m));
        REQUIRE(rp.witness_rows.size() == rp.rank_p);
        REQUIRE(rp.witness_cols.size() == rp.rank_p);
        if (rp.rank_p > 0) {
            ExactMatrix w(rp.rank_p, rp.rank_p);
            for (std::size_t i = 0; i < rp.rank_p; ++i)
                for (std::size_t j = 0; j < rp.rank_p; ++j)
                    w.at(i, j) = m.at(rp.witness_rows[i], rp.witness_cols[j]);
            Rat d = det_exact(w);
            REQUIRE(d != 0);
            CHECK(mod_reduce(d.get_num(), p) != 0);  // integer entries: den = 1
        }
    }
}

TEST_CASE("localization membership and reduction") {
    Int p = 7;
    CHECK(in_localization(Rat(3, 5), p));
    CHECK_FALSE(in_localization(Rat(3, 7), p));
    CHECK(localize_mod(Rat(3, 5), p) == mod_reduce(Int(3) * mod_inverse(5, p), p));
    CHECK(localize_mod(Rat(10), p) == 3);
}

TEST_CASE("lift_linear aborts on the bound unless forced") {
    // |A| = n with k^(n+1) >= p must abort by default.
    std::vector<Int> A{1, 2, 3};
    BoundProfile b{4, 1};
    auto sr = split_relations(A, Int(11), b);
    CHECK_THROWS_AS(lift_linear(A, sr.vanishing, sr.non_vanishing, Int(11)), std::domain_error);
}

TEST_CASE("rectify_linear: 100 seeded instances are exact integer lifts") {
    std::mt19937_64 rng(808);
    std::vector<Int> primes{100003, 500009, 999983};
    for (int iter = 0; iter < 100; ++iter) {
        Int p = primes[rng() % primes.size()];
        std::size_t n = 1 + rng() % 4;
        std::vector<Int> A;
        std::set<Int> used;
        while (A.size() < n) {
            Int a = Int(static_cast<unsigned long>(rng())) % p;
            if (used.insert(a).second) A.push_back(a);
        }
        Int k = 2;
        LinearRectification lr = rectify_linear(A, p, k);
        REQUIRE(lr.points.size() == n);
        // Points reduce to A and the multiplier is 1 mod p.
        for (std::size_t i = 0; i < n; ++i) CHECK(mod_reduce(lr.points[i], p) == A[i]);
        CHECK(mod_reduce(lr.multiplier, p) == 1);
        // Exhaustive 2k-bounded linear relation check, both directions.
        BoundProfile lin{2 * k.get_si(), 1};
        FpDomain fp(p);
        ZDomain z;
        enumerate_bounded_visit(static_cast<int>(n), lin, [&](const IntPoly& f) {
            bool van_p = f.evaluate(A, fp) == 0;
            bool van_z = f.evaluate(lr.points, z) == 0;
            CHECK(van_p == van_z);
            return true;
        });
    }
}
