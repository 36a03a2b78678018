#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "rectify/constructible.hpp"

using namespace rectify;

namespace {

// Step-count cap 2^s + 3l - 2 from the construction's own parameters.
long step_cap(const Int& r, long k) {
    if (r < 16) return r.get_si();  // unary fallback
    double lg = std::log2(mpz_get_d(r.get_mpz_t()));
    double loglog = std::log2(lg);
    long s = std::max(1L, static_cast<long>(std::ceil(std::log2(lg / (k * loglog)))));
    long N = static_cast<long>(mpz_sizeinbase(r.get_mpz_t(), 2)) - 1;
    long l = (N + 1 + s * k - 1) / (s * k);
    return (1L << s) + 3 * l - 2;
}

}  // namespace

TEST_CASE("build_chain: small targets via the unary fallback") {
    Chain c = build_chain(Int(5), Int(2));
    CHECK(verify_chain(c));
    CHECK(c.value() == 5);
    CHECK(c.steps.front().value == 0);
    CHECK(c.step_count() <= 5);
}

TEST_CASE("build_chain: 20 seeded targets up to 10^9 verify with bounded step count") {
    std::mt19937_64 rng(161803);
    for (int iter = 0; iter < 20; ++iter) {
        Int r = Int(static_cast<unsigned long>(rng()) % 999999000UL) + 1000;
        long k = 2 + static_cast<long>(rng() % 2);
        Chain c = build_chain(r, Int(k));
        CHECK(verify_chain(c));
        CHECK(c.value() == r);
        CHECK(c.step_count() <= step_cap(r, k));
    }
}

TEST_CASE("special chains: Mersenne 127 and Fermat 257") {
    Chain m = build_special_chain(Int(127), SpecialForm::mersenne);
    CHECK(verify_chain(m));
    CHECK(m.value() == 127);
    CHECK(m.step_count() <= 7);

    Chain f = build_special_chain(Int(257), SpecialForm::fermat);
    CHECK(verify_chain(f));
    CHECK(f.value() == 257);
    CHECK(f.step_count() <= 6);
}

TEST_CASE("special chains: length <= 4 * log2 log2 p across small Mersenne/Fermat primes") {
    for (unsigned long e : {3UL, 5UL, 7UL, 13UL, 17UL, 19UL, 31UL, 61UL, 89UL, 107UL, 127UL,
                            521UL, 607UL}) {
        Int p = pow_int(Int(2), e) - 1;
        Chain c = build_special_chain(p, SpecialForm::mersenne);
        CHECK(verify_chain(c));
        CHECK(c.value() == p);
        double loglog = std::log2(static_cast<double>(mpz_sizeinbase(p.get_mpz_t(), 2)));
        CHECK(c.step_count() <= static_cast<long>(4.0 * loglog) + 4);
    }
    for (unsigned long n : {1UL, 2UL, 3UL, 4UL}) {
        Int p = pow_int(Int(2), 1UL << n) + 1;
        Chain c = build_special_chain(p, SpecialForm::fermat);
        CHECK(verify_chain(c));
        CHECK(c.value() == p);
    }
}

TEST_CASE("verify_chain rejects tampered and overweight chains") {
    Chain c = build_chain(Int(1000003), Int(2));
    REQUIRE(verify_chain(c));

    Chain tampered = c;
    tampered.steps[tampered.steps.size() / 2].value += 1;
    CHECK_FALSE(verify_chain(tampered));

    Chain overweight = c;
    overweight.profile.k = 1;  // declared bound no longer admits the used polynomials
    CHECK_FALSE(verify_chain(overweight));

    Chain wrong_start = c;
    wrong_start.steps[0].value = 1;
    CHECK_FALSE(verify_chain(wrong_start));
}

TEST_CASE("count_constructible_upper goldens") {
    CountBound one = count_constructible_upper(Int(1), Int(2));
    CHECK(one.product == 36);  // (3 * 2 * 1)^2
    CHECK_FALSE(one.n_bound_holds);

    CountBound six = count_constructible_upper(Int(6), Int(2));
    Int expect = 1;
    for (long i = 1; i <= 6; ++i) expect *= pow_int(Int(6 * i), 2);
    CHECK(six.product == expect);
    CHECK(six.n_bound_holds);
    CHECK(six.product <= six.n_power);
    CHECK(six.n_power == pow_int(Int(6), 24));
}

TEST_CASE("pigeonhole certificate: not every residue mod 10^9 is 2-constructible in few steps") {
    // With p = 10^9 and k = 2, at n = 4 the count bound is already below p, so
    // some integer in [1, p] is not (2,2)-constructible in <= 4 steps.
    Int p = pow_int(Int(10), 9);
    CountBound cb = count_constructible_upper(Int(4), Int(2));
    CHECK(cb.product < p);
}

TEST_CASE("adversarial sets for p in {127, 8191}, k = 3") {
    for (long pv : {127L, 8191L}) {
        AdversarialSet adv = adversarial_set(Int(pv), Int(3));
        CHECK(verify_chain(adv.witness));
        CHECK(adv.witness.value() == pv);
        // Residue set strictly smaller than the chain's value count: the
        // endpoints 0 and p always collide mod p.
        CHECK(adv.A.size() < adv.witness.steps.size());
        // A is exactly the residue set of the chain values.
        std::set<Int> residues;
        for (const auto& s : adv.witness.steps) residues.insert(mod_reduce(s.value, Int(pv)));
        CHECK(std::set<Int>(adv.A.begin(), adv.A.end()) == residues);
        // The witness polynomials obey the (k-1)-bound.
        CHECK(adv.witness.profile.k == 2);
    }
}
