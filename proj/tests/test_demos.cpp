#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "rectify/demos.hpp"
#include "rectify/domain.hpp"

using namespace rectify;

TEST_CASE("count_incidences basics") {
    QDomain q;
    CHECK(count_incidences(PointLineConfig{}, q) == 0);
    PointLineConfig one;
    one.points.push_back({Int(1), Int(2)});
    one.lines.push_back({Int(1), Int(-2), Int(0)});  // y = 2x passes through (1, 2)
    CHECK(count_incidences(one, q) == 1);
}

TEST_CASE("sharpness lattice: exactly r^4 incidences") {
    struct Expect {
        long n, r, points, lines;
    };
    for (auto [n, r, points, lines] : {Expect{8, 1, 2, 1}, Expect{64, 2, 16, 8},
                                       Expect{512, 4, 128, 64}}) {
        PointLineConfig cfg = sharpness_lattice(n);
        CHECK(static_cast<long>(cfg.points.size()) == points);
        CHECK(static_cast<long>(cfg.lines.size()) == lines);
        QDomain q;
        CHECK(count_incidences(cfg, q) == r * r * r * r);
    }
    CHECK_THROWS(sharpness_lattice(7));
}

TEST_CASE("sparse_square_terms goldens") {
    auto check = [](const char* text, long nf, long nf2) {
        auto [a, b] = sparse_square_terms(IntPoly::parse(text, 1));
        CHECK(a == nf);
        CHECK(b == nf2);
    };
    check("x1 + 1", 2, 3);
    check("x1^2 + x1 + 1", 3, 5);
    check("0", 0, 0);
}

TEST_CASE("sparse_square_terms matches independent convolution on 100 random polynomials") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long> dc(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        IntPoly f(1);
        int terms = static_cast<int>(rng() % 6);
        for (int i = 0; i < terms; ++i)
            f.add_term({static_cast<unsigned>(rng() % 12)}, Int(dc(rng)));
        auto [nf, nf2] = sparse_square_terms(f);
        CHECK(nf == static_cast<long>(f.nterms()));
        // Independent convolution of the coefficient map.
        std::map<unsigned, Int> conv;
        for (const auto& [ma, ca] : f.terms())
            for (const auto& [mb, cb] : f.terms()) conv[ma[0] + mb[0]] += ca * cb;
        long expect = 0;
        for (const auto& [e, c] : conv)
            if (c != 0) ++expect;
        CHECK(nf2 == expect);
    }
}

TEST_CASE("transfer_report sumproduct golden: {2,3} in F_1009") {
    TransferReport rep = transfer_report({2, 3}, Int(1009), TransferMode::sumproduct);
    CHECK(rep.result.verified);
    CHECK(rep.all_equal);
    REQUIRE(rep.entries.size() == 2);
    // A + A = {4, 5, 6}, A * A = {4, 6, 9}.
    for (const auto& e : rep.entries) {
        CHECK(e.fp_count == 3);
        CHECK(e.tower_count == 3);
    }
}

TEST_CASE("transfer_report singleton: all set sizes 1") {
    TransferReport rep = transfer_report({5}, Int(1009), TransferMode::sumproduct);
    CHECK(rep.all_equal);
    for (const auto& e : rep.entries) {
        CHECK(e.fp_count == 1);
        CHECK(e.tower_count == 1);
    }
}

TEST_CASE("transfer_report inverse mode preserves |A^-1 + A^-1|") {
    TransferReport rep = transfer_report({2, 3}, Int(1009), TransferMode::inverse);
    CHECK(rep.result.verified);
    CHECK(rep.all_equal);
    REQUIRE(!rep.entries.empty());
    CHECK(rep.entries.back().fp_count == 3);  // 1, 5/6, 2/3 stay distinct mod 1009
    CHECK_THROWS_AS(transfer_report({0, 3}, Int(1009), TransferMode::inverse),
                    std::invalid_argument);
}

TEST_CASE("transfer_report polynomial image mode with the default f = x^2") {
    TransferReport rep = transfer_report({2, 3}, Int(1009), TransferMode::polynomial_image);
    CHECK(rep.result.verified);
    CHECK(rep.all_equal);
    // f(A) = {4, 9}: f(A) + f(A) = {8, 13, 18}.
    CHECK(rep.entries.back().fp_count == 3);
}

TEST_CASE("transfer_report incidence mode: counts agree across the lift") {
    TransferReport rep = transfer_report({2, 3}, Int(1009), TransferMode::incidence);
    CHECK(rep.result.verified);
    CHECK(rep.all_equal);
    REQUIRE(!rep.entries.empty());
    CHECK(rep.entries.back().fp_count == rep.entries.back().tower_count);
}

TEST_CASE("transfer over a genuine extension: {1,5} in F_13 at the product set") {
    // Rectifies onto Q(i); |A * A| must agree between F_13 and the tower.
    RectifiedSet rs = rectify::rectify({1, 5}, Int(13), Int(2));
    REQUIRE(rs.verified);
    TowerDomain K(rs.tower);
    FpDomain fp(Int(13));
    std::set<std::string> tower_products;
    std::set<Int> fp_products;
    std::vector<Int> A{1, 5};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            tower_products.insert(tower_elem_to_string(K.mul(rs.points[i], rs.points[j])));
            fp_products.insert(fp.mul(A[i], A[j]));
        }
    CHECK(tower_products.size() == fp_products.size());
}
