#include <doctest.h>

#include <random>

#include "rectify/qfactor.hpp"

using namespace rectify;

namespace {

QPoly qpoly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return dp_from(QDomain{}, std::move(c));
}

QPoly reconstruct(const QPoly& f, const std::vector<QFactor>& fs) {
    QDomain q;
    QPoly acc = dp_constant(q, f.lc());
    for (const auto& [fac, mult] : fs)
        for (int i = 0; i < mult; ++i) acc = dp_mul(q, acc, fac);
    return acc;
}

}  // namespace

TEST_CASE("factor_over_q goldens") {
    QDomain q;
    auto fs = factor_over_q(qpoly({-1, 0, 1}));  // x^2 - 1
    REQUIRE(fs.size() == 2);
    for (const auto& f : fs) {
        CHECK(f.factor.deg() == 1);
        CHECK(f.multiplicity == 1);
    }

    auto irr = factor_over_q(qpoly({1, 0, 1}));  // x^2 + 1
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].factor.deg() == 2);
    CHECK(is_irreducible_over_q(qpoly({1, 0, 1})));
    CHECK_FALSE(is_irreducible_over_q(qpoly({-1, 0, 1})));

    auto sq = factor_over_q(qpoly({1, -2, 1}));  // (x - 1)^2
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].multiplicity == 2);
    CHECK(dp_eq(q, sq[0].factor, qpoly({-1, 1})));
}

TEST_CASE("factor_over_q: random products reconstruct and factors are irreducible") {
    QDomain q;
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<long> dc(-5, 5);
    for (int iter = 0; iter < 40; ++iter) {
        // Product of 2-3 random small non-zero polynomials of degree 1-2.
        QPoly f = dp_constant(q, Rat(1));
        int parts = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < parts; ++i) {
            std::vector<Rat> c(2 + rng() % 2);
            for (auto& v : c) v = dc(rng);
            c.back() = dc(rng) | 1;  // non-zero leading coefficient
            f = dp_mul(q, f, dp_from(q, std::move(c)));
        }
        auto fs = factor_over_q(f);
        CHECK(dp_eq(q, reconstruct(f, fs), f));
        for (const auto& fac : fs) {
            CHECK(q.eq(fac.factor.lc(), Rat(1)));
            CHECK(is_irreducible_over_q(fac.factor));
        }
    }
}
