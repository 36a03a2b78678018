#include <doctest.h>

#include <random>
#include <set>

#include "rectify/rectifier.hpp"

using namespace rectify;

TEST_CASE("bound ledger matches the closed form v_i = 2^(2^i - 1) t^(2^i)") {
    for (long t : {2, 3, 4}) {
        BoundLedger led = bound_sequence(Int(2), Int(t), 6);
        REQUIRE(led.v.size() == 7);
        for (int i = 0; i <= 6; ++i) {
            Int expect = pow_int(Int(2), (1UL << i) - 1) * pow_int(Int(t), 1UL << i);
            CHECK(led.v[i] == expect);
        }
        // u recurrence: u_0 = k, u_i = u_{i-1}^(2 v_{i-1}) * v_{i-1}^(v_{i-1}).
        CHECK(led.u[0] == 2);
        for (int i = 1; i <= 3; ++i) {
            Int expect = pow_int(led.u[i - 1], 2 * led.v[i - 1].get_ui()) *
                         pow_int(led.v[i - 1], led.v[i - 1].get_ui());
            CHECK(led.u[i] == expect);
        }
    }
}

TEST_CASE("u_n stays below the closed-form cap (2kt)^((2t)^(2^(n+1)))") {
    for (long k : {2, 3}) {
        for (long t : {2, 3}) {
            BoundLedger led = bound_sequence(Int(k), Int(t), 3);
            for (int n = 0; n <= 3; ++n) {
                Int base = Int(2) * k * t;
                Int ex = pow_int(Int(2) * t, 1UL << (n + 1));
                CHECK(leq_pow(led.u[n], base, ex));
            }
        }
    }
}

TEST_CASE("guarantee gate: triple-log condition fails at desk scale") {
    GuaranteeGate g = guarantee_gate(2, Int(2), Int(2), Int(13));
    CHECK_FALSE(g.guaranteed);
    // Gigantic p satisfies the gate for n = 0, k = t = 2: p > (2*2*2)^((2*2)^2) = 8^16.
    Int huge = pow_int(Int(8), 16) + 1;
    CHECK(guarantee_gate(0, Int(2), Int(2), huge).guaranteed);
}

TEST_CASE("golden: {1,5} in F_13 rectifies onto Q(i) with degree 2") {
    RectifiedSet rs = rectify::rectify({1, 5}, Int(13), Int(2));
    CHECK(rs.verified);
    CHECK(rs.tower.degree() == 2);
    CHECK(rs.tower.degree() <= 256);  // (2k)^(2^n) = 4^4
    REQUIRE(rs.points.size() == 2);
    TowerDomain K(rs.tower);
    // b_1 = 1 and b_2^2 = -1.
    CHECK(K.eq(rs.points[0], K.one()));
    CHECK(K.eq(K.mul(rs.points[1], rs.points[1]), K.neg(K.one())));
    CHECK(rs.tower.apply_anchor(rs.points[0]) == 1);
    CHECK(rs.tower.apply_anchor(rs.points[1]) == 5);
}

TEST_CASE("golden: {3,7} in F_11 rectifies with a rational point pair") {
    RectifiedSet rs = rectify::rectify({3, 7}, Int(11), Int(2));
    CHECK(rs.verified);
    CHECK(rs.tower.degree() == 1);
    REQUIRE(rs.points.size() == 2);
    // x1*x2 + 1 vanishes at (3, 7) mod 11 and must vanish exactly.
    TowerDomain K(rs.tower);
    CHECK(K.eq(K.mul(rs.points[0], rs.points[1]), K.neg(K.one())));
    CHECK(rs.tower.apply_anchor(rs.points[0]) == 3);
    CHECK(rs.tower.apply_anchor(rs.points[1]) == 7);
}

TEST_CASE("golden: singleton {2} in F_7") {
    RectifiedSet rs = rectify::rectify({2}, Int(7), Int(2));
    CHECK(rs.verified);
    REQUIRE(rs.points.size() == 1);
    CHECK(rs.tower.apply_anchor(rs.points[0]) == 2);
}

TEST_CASE("verify_ring_isomorphism accepts and rejects rational candidates") {
    // (3, 7) mod 11 vs the exact pair (-1/2, 2): 2*x1 + 1 and x1*x2 + 1 vanish
    // on both sides, and no other 2-bounded relation separates them.
    VerifyReport ok = verify_ring_isomorphism({3, 7}, Int(11), std::vector<Rat>{Rat(-1, 2), Rat(2)},
                                              Int(2));
    CHECK(ok.pass);
    CHECK(ok.checked > 0);
    // (3, 8) breaks x1*x2 + 1 (3*8 + 1 = 25 != 0 mod 11... and over Q).
    VerifyReport bad = verify_ring_isomorphism({3, 7}, Int(11), std::vector<Rat>{Rat(3), Rat(8)},
                                               Int(2));
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.first_discrepancy.empty());
}

TEST_CASE("bound abort on a genuinely obstructed instance") {
    // At k = 3 the relations x1 + x2 + 1 and x1*x2 + 1 and x1^2 + 2 all vanish
    // at (3, 7) mod 11 but are jointly unsatisfiable in characteristic zero.
    CHECK_THROWS_AS(rectify::rectify({3, 7}, Int(11), Int(3)), BoundAbortError);
    // force pushes through; final verification then arbitrates.
    RectifiedSet forced = rectify::rectify({3, 7}, Int(11), Int(3), true);
    CHECK(forced.chain.forced_drop);
    CHECK_FALSE(forced.verified);
}

TEST_CASE("seeded end-to-end property: verified or exact-bound abort") {
    std::mt19937_64 rng(314159);
    std::vector<Int> primes{101, 211, 499, 1009, 2003, 4001, 8009, 10007};
    int verified = 0, aborted = 0;
    for (int iter = 0; iter < 30; ++iter) {
        Int p = primes[rng() % primes.size()];
        int n = 1 + static_cast<int>(rng() % 3);
        long k = 2 + static_cast<long>(rng() % 2);
        std::vector<Int> A;
        std::set<Int> used;
        while (static_cast<int>(A.size()) < n) {
            Int a = Int(static_cast<unsigned long>(rng())) % p;
            if (used.insert(a).second) A.push_back(a);
        }
        try {
            RectifiedSet rs = rectify::rectify(A, p, Int(k));
            CHECK(rs.verified);
            CHECK(leq_pow(rs.tower.degree(), Int(2 * k), pow_int(Int(2), n)));
            for (int i = 0; i < n; ++i) CHECK(rs.tower.apply_anchor(rs.points[i]) == A[i]);
            ++verified;
        } catch (const BoundAbortError&) {
            ++aborted;  // legitimate outcome: the exact bound genuinely failed
        }
    }
    CHECK(verified + aborted == 30);
    CHECK(verified > 0);
}

TEST_CASE("rectify with t > k widens the verified relation set") {
    RectifiedSet rs = rectify::rectify({1, 5}, Int(13), Int(2), false, Int(3));
    CHECK(rs.verified);
    RectifiedSet base = rectify::rectify({1, 5}, Int(13), Int(2));
    CHECK(rs.relations_checked > base.relations_checked);
}
