// Acceptance gate: ten criteria, one pass/fail line each, exact arithmetic
// throughout (tolerance = exact equality).  Exit status 0 iff all pass.

#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "rectify/constructible.hpp"
#include "rectify/demos.hpp"
#include "rectify/matrix.hpp"
#include "rectify/qfactor.hpp"
#include "rectify/rectifier.hpp"

using namespace rectify;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass) {
    std::printf("criterion %2d [%s]: %s\n", idx, name, pass ? "PASS" : "FAIL");
    if (!pass) ++failures;
}

// --------------------------------------------------------------------------
// 1 + 2: end-to-end rectification on seeded instances and goldens; degree
// bound (2k)^(2^n) on every success.

void criteria_1_2() {
    bool end_to_end = true, degree_bound = true;
    auto run = [&](const std::vector<Int>& A, const Int& p, long k) {
        try {
            RectifiedSet rs = rectify::rectify(A, p, Int(k));
            end_to_end = end_to_end && rs.verified;
            degree_bound = degree_bound &&
                           leq_pow(rs.tower.degree(), Int(2 * k),
                                   pow_int(Int(2), static_cast<unsigned long>(A.size())));
        } catch (const BoundAbortError&) {
            // Exact-bound abort is an accepted outcome.
        } catch (...) {
            end_to_end = false;
        }
    };

    std::mt19937_64 rng(20260826);
    std::vector<Int> primes{101, 211, 499, 1009, 2003, 4001, 8009, 10007};
    for (int iter = 0; iter < 50; ++iter) {
        Int p = primes[rng() % primes.size()];
        int n = 1 + static_cast<int>(rng() % 3);
        long k = 2 + static_cast<long>(rng() % 2);
        std::vector<Int> A;
        std::set<Int> used;
        while (static_cast<int>(A.size()) < n) {
            Int a = Int(static_cast<unsigned long>(rng())) % p;
            if (used.insert(a).second) A.push_back(a);
        }
        run(A, p, k);
    }
    run({3, 7}, Int(11), 2);
    run({1, 5}, Int(13), 2);

    // Golden degree: {1,5} in F_13 lands on a degree-2 extension.
    RectifiedSet golden = rectify::rectify({1, 5}, Int(13), Int(2));
    end_to_end = end_to_end && golden.verified;
    degree_bound = degree_bound && golden.tower.degree() == 2 && golden.tower.degree() <= 256;

    report(1, "end-to-end rectification", end_to_end);
    report(2, "tower degree bound", degree_bound);
}

// --------------------------------------------------------------------------
// 3: subresultant gcd == Euclidean gcd on 200 seeded pairs over Q.

void criterion_3() {
    QDomain q;
    std::mt19937_64 rng(30303);
    std::uniform_int_distribution<int> dd(0, 6), dc(-20, 20);
    bool pass = true;
    int done = 0;
    while (done < 200) {
        auto rnd = [&]() {
            std::vector<Rat> c(dd(rng) + 1);
            for (auto& v : c) v = dc(rng);
            return dp_from(q, std::move(c));
        };
        QPoly f = rnd(), g = rnd();
        if (f.is_zero() && g.is_zero()) continue;
        ++done;
        pass = pass && dp_eq(q, gcd_subresultant(q, f, g), dp_gcd_euclid(q, f, g));
    }
    report(3, "subresultant gcd oracle equivalence", pass);
}

// --------------------------------------------------------------------------
// 4: resultant root criterion and multi-resultant specialization over F_q,
// exhaustive-search oracles, 200 seeded instances each.

void criterion_4() {
    bool pass = true;
    std::mt19937_64 rng(40404);
    std::vector<Int> primes{5, 7, 11, 101};

    int done = 0;
    while (done < 200) {
        FpDomain fp(primes[rng() % primes.size()]);
        auto rnd = [&]() {
            std::uniform_int_distribution<long> dd(1, 4), dc(0, fp.p.get_si() - 1);
            std::vector<Int> c(dd(rng) + 1);
            for (auto& v : c) v = dc(rng);
            return dp_from(fp, std::move(c));
        };
        auto f = rnd(), g = rnd();
        if (f.is_zero() || g.is_zero() || f.deg() < 1 || g.deg() < 1) continue;
        ++done;
        bool res_zero = resultant(fp, f, g) == 0;
        bool gcd_nonconst = dp_gcd_euclid(fp, f, g).deg() >= 1;
        pass = pass && (res_zero == gcd_nonconst);
        bool common_root = false;  // exhaustive search over F_q
        for (Int a = 0; a < fp.p; ++a)
            if (dp_eval(fp, f, a) == 0 && dp_eval(fp, g, a) == 0) common_root = true;
        if (common_root) pass = pass && res_zero;
    }

    // Multi-resultant specialization: res_x1(F1, F2)(b, y) = 0 identically in y
    // iff a completing x1-root exists in F_q or its small extensions (the gcd of
    // the specialized system has positive degree).
    done = 0;
    std::vector<Int> small{5, 7, 11};
    while (done < 200) {
        FpDomain fp(small[rng() % small.size()]);
        std::uniform_int_distribution<long> dc(0, fp.p.get_si() - 1);
        auto rnd2 = [&]() {
            IntPoly f(2);
            for (unsigned e1 = 0; e1 <= 2; ++e1)
                for (unsigned e2 = 0; e2 + e1 <= 2; ++e2)
                    if (rng() % 2) f.add_term({e1, e2}, Int(dc(rng)));
            return f;
        };
        IntPoly f1 = rnd2().coefficient_poly(0, 0) +
                     rnd2().coefficient_poly(0, 1) * IntPoly::variable(0, 2) +
                     IntPoly::variable(0, 2).pow(2);
        std::vector<IntPoly> fs{f1, rnd2(), rnd2()};
        if (fs[1].degree_in(0) < 1 || fs[2].degree_in(0) < 1) continue;
        ++done;
        MultiResultant mr = multi_resultant(fs, 0);
        Int b = Int(rng() % fp.p.get_ui());
        DomainPoly<FpDomain> gcd{};
        for (const auto& f : fs) {
            std::vector<Int> c(f.degree_in(0) + 1, 0);
            for (long e = 0; e <= f.degree_in(0); ++e)
                c[e] = f.coefficient_poly(0, static_cast<unsigned>(e)).evaluate({Int(0), b}, fp);
            auto fx = dp_from(fp, std::move(c));
            gcd = gcd.is_zero() ? fx : (fx.is_zero() ? gcd : dp_gcd_euclid(fp, gcd, fx));
        }
        bool completing = !gcd.is_zero() && gcd.deg() >= 1;
        bool res_vanishes = true;
        for (Int y = 0; y < fp.p && res_vanishes; ++y)
            res_vanishes = mr.value.evaluate({Int(0), b, y}, fp) == 0;
        pass = pass && (res_vanishes == completing);
    }
    report(4, "resultant root criterion and specialization", pass);
}

// --------------------------------------------------------------------------
// 5: determinant norm bounds on 500 random matrices with row L1 norms <= k.

void criterion_5() {
    bool pass = true;
    std::mt19937_64 rng(50505);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 1 + rng() % 4;
        long k = 2 + static_cast<long>(rng() % 3);
        ExactMatrix m(n, n);
        Int row_norm_product = 1;
        for (std::size_t i = 0; i < n; ++i) {
            long budget = k;
            Int row_norm = 0;
            for (std::size_t j = 0; j < n; ++j) {
                long c = static_cast<long>(rng() % (budget + 1));
                if (rng() % 2) c = -c;
                m.at(i, j) = Rat(c);
                budget -= std::labs(c);
                row_norm += abs_int(Int(c));
            }
            row_norm_product *= row_norm > 0 ? row_norm : Int(1);
        }
        Rat d = det_exact(m);
        Int dn = abs_int(d.get_num());
        pass = pass && d.get_den() == 1 &&
               dn <= pow_int(Int(k), static_cast<unsigned long>(n)) && dn <= row_norm_product;
    }
    report(5, "determinant norm bounds", pass);
}

// --------------------------------------------------------------------------
// 6: linear rectification on 100 seeded instances, |A| <= 4, k = 2, p <= 10^6.

void criterion_6() {
    bool pass = true;
    std::mt19937_64 rng(60606);
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
        LinearRectification lr = rectify_linear(A, p, Int(2));
        for (std::size_t i = 0; i < n; ++i) pass = pass && mod_reduce(lr.points[i], p) == A[i];
        FpDomain fp(p);
        ZDomain z;
        enumerate_bounded_visit(static_cast<int>(n), BoundProfile{4, 1}, [&](const IntPoly& f) {
            pass = pass && (f.evaluate(A, fp) == 0) == (f.evaluate(lr.points, z) == 0);
            return pass;
        });
        if (!pass) break;
    }
    report(6, "linear rectification", pass);
}

// --------------------------------------------------------------------------
// 7: bound ledger closed forms, exact big-integer comparisons.

void criterion_7() {
    bool pass = true;
    for (long t : {2, 3, 4}) {
        BoundLedger led = bound_sequence(Int(2), Int(t), 6);
        for (int i = 0; i <= 6; ++i)
            pass = pass &&
                   led.v[i] == pow_int(Int(2), (1UL << i) - 1) * pow_int(Int(t), 1UL << i);
    }
    for (long k : {2, 3}) {
        for (long t : {2, 3}) {
            BoundLedger led = bound_sequence(Int(k), Int(t), 3);
            for (int n = 0; n <= 3; ++n)
                pass = pass &&
                       leq_pow(led.u[n], Int(2) * k * t, pow_int(Int(2) * t, 1UL << (n + 1)));
        }
    }
    report(7, "bound ledger closed forms", pass);
}

// --------------------------------------------------------------------------
// 8: constructibility chains and the pigeonhole certificate.

void criterion_8() {
    bool pass = true;
    std::mt19937_64 rng(80808);
    for (int iter = 0; iter < 20; ++iter) {
        Int r = Int(static_cast<unsigned long>(rng()) % 999999000UL) + 1000;
        long k = 2 + static_cast<long>(rng() % 2);
        Chain c = build_chain(r, Int(k));
        pass = pass && verify_chain(c) && c.value() == r;
    }
    Chain m = build_special_chain(Int(127), SpecialForm::mersenne);
    pass = pass && verify_chain(m) && m.value() == 127 && m.step_count() <= 7;
    Chain f = build_special_chain(Int(257), SpecialForm::fermat);
    pass = pass && verify_chain(f) && f.value() == 257 && f.step_count() <= 6;
    // Pigeonhole for p = 10^9, k = 2: the 4-step count bound is below p.
    pass = pass && count_constructible_upper(Int(4), Int(2)).product < pow_int(Int(10), 9);
    report(8, "constructibility chains", pass);
}

// --------------------------------------------------------------------------
// 9: adversarial sets for p in {127, 8191}, k = 3.

void criterion_9() {
    bool pass = true;
    for (long pv : {127L, 8191L}) {
        AdversarialSet adv = adversarial_set(Int(pv), Int(3));
        pass = pass && verify_chain(adv.witness) && adv.witness.value() == pv &&
               adv.A.size() < adv.witness.steps.size();
    }
    report(9, "adversarial sets", pass);
}

// --------------------------------------------------------------------------
// 10: demos.

void criterion_10() {
    bool pass = true;
    for (long n : {8L, 64L, 512L}) {
        PointLineConfig cfg = sharpness_lattice(n);
        QDomain q;
        long r = 1;
        while ((2 * (r + 1)) * (2 * (r + 1)) * (2 * (r + 1)) <= n) ++r;  // floor(n^(1/3) / 2)
        pass = pass && count_incidences(cfg, q) == r * r * r * r;
    }
    TransferReport sp = transfer_report({2, 3}, Int(1009), TransferMode::sumproduct);
    pass = pass && sp.all_equal && sp.result.verified;
    TransferReport inv = transfer_report({2, 3}, Int(1009), TransferMode::inverse);
    pass = pass && inv.all_equal;
    std::mt19937_64 rng(101010);
    std::uniform_int_distribution<long> dc(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        IntPoly f(1);
        int terms = static_cast<int>(rng() % 6);
        for (int i = 0; i < terms; ++i)
            f.add_term({static_cast<unsigned>(rng() % 12)}, Int(dc(rng)));
        auto [nf, nf2] = sparse_square_terms(f);
        pass = pass && nf == static_cast<long>(f.nterms()) &&
               nf2 == static_cast<long>((f * f).nterms());
    }
    report(10, "application demos", pass);
}

}  // namespace

int main() {
    criteria_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
