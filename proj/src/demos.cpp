#include "rectify/demos.hpp"

#include <set>
#include <stdexcept>

namespace rectify {

PointLineConfig sharpness_lattice(long n) {
    if (n < 8) throw std::invalid_argument("sharpness_lattice: n must be >= 8");
    Int root;
    mpz_root(root.get_mpz_t(), Int(n).get_mpz_t(), 3);
    const long r = root.get_si() / 2;  // floor(n^(1/3) / 2)
    PointLineConfig cfg;
    for (long x = 1; x <= r; ++x)
        for (long y = 1; y <= 2 * r * r; ++y) cfg.points.emplace_back(x, y);
    for (long m = 1; m <= r; ++m)
        for (long b = 1; b <= r * r; ++b)
            cfg.lines.push_back({Int(1), Int(-m), Int(-b)});  // y - mx - b = 0
    return cfg;
}

namespace {

Int mode_k(TransferMode mode) {
    return mode == TransferMode::incidence ? 3 : 4;
}

/// Distinct-value counters for both sides of the lift.
struct SideSets {
    std::set<Int> fp;
    std::set<std::string> tower;
    long fp_count() const { return static_cast<long>(fp.size()); }
    long tower_count() const { return static_cast<long>(tower.size()); }
};

}  // namespace

TransferReport transfer_report(const std::vector<Int>& A, const Int& p, TransferMode mode,
                               const IntPoly* image_poly) {
    std::vector<Int> a;
    a.reserve(A.size());
    for (const auto& x : A) a.push_back(mod_reduce(x, p));
    if (mode == TransferMode::inverse)
        for (const auto& x : a)
            if (x == 0) throw std::invalid_argument("transfer_report: inverse mode requires 0 not in A");

    IntPoly f = image_poly ? *image_poly : IntPoly::variable(0, 1).pow(2);
    if (mode == TransferMode::polynomial_image) {
        if (f.nvars() != 1) throw std::invalid_argument("transfer_report: image polynomial must be univariate");
        if (!f.is_bounded({2, 2}))
            throw std::invalid_argument("transfer_report: image polynomial must be 2-bounded");
    }

    TransferReport rep{mode, mode_k(mode), rectify::rectify(A, p, mode_k(mode)), {}, false};
    const Tower& tw = rep.result.tower;
    TowerDomain K(tw);
    FpDomain fp(p);
    const std::vector<TowerElem>& b = rep.result.points;
    const int n = static_cast<int>(a.size());

    auto key = [&](const TowerElem& e) { return tower_elem_to_string(e); };

    auto pairwise = [&](const std::string& name, auto&& fp_op, auto&& tw_op) {
        SideSets s;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                s.fp.insert(fp_op(a[i], a[j]));
                s.tower.insert(key(tw_op(b[i], b[j])));
            }
        rep.entries.push_back({name, s.fp_count(), s.tower_count()});
    };

    switch (mode) {
        case TransferMode::sumproduct:
            pairwise("sumset", [&](const Int& x, const Int& y) { return fp.add(x, y); },
                     [&](const TowerElem& x, const TowerElem& y) { return K.add(x, y); });
            pairwise("productset", [&](const Int& x, const Int& y) { return fp.mul(x, y); },
                     [&](const TowerElem& x, const TowerElem& y) { return K.mul(x, y); });
            break;
        case TransferMode::inverse: {
            std::vector<Int> ai(n);
            std::vector<TowerElem> bi;
            for (int i = 0; i < n; ++i) {
                ai[i] = fp.inv(a[i]);
                bi.push_back(K.inv(b[i]));
            }
            SideSets s;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    s.fp.insert(fp.add(ai[i], ai[j]));
                    s.tower.insert(key(K.add(bi[i], bi[j])));
                }
            rep.entries.push_back({"inverse-sumset", s.fp_count(), s.tower_count()});
            break;
        }
        case TransferMode::polynomial_image: {
            std::vector<Int> fa(n);
            std::vector<TowerElem> fb;
            for (int i = 0; i < n; ++i) {
                fa[i] = f.evaluate(std::vector<Int>{a[i]}, fp);
                fb.push_back(f.evaluate(std::vector<TowerElem>{b[i]}, K));
            }
            SideSets s;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    s.fp.insert(fp.add(fa[i], fa[j]));
                    s.tower.insert(key(K.add(fb[i], fb[j])));
                }
            rep.entries.push_back({"image-sumset", s.fp_count(), s.tower_count()});
            break;
        }
        case TransferMode::incidence: {
            // The coordinate encoding: points (a_i, a_j), lines y = a_m x + a_l;
            // p-side and tower-side incidences must agree since the defining
            // relation x_j - x_m x_i - x_l is 3-bounded.
            long cf = 0, ct = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int m = 0; m < n; ++m)
                        for (int l = 0; l < n; ++l) {
                            if (fp.is_zero(fp.sub(a[j], fp.add(fp.mul(a[m], a[i]), a[l])))) ++cf;
                            if (K.is_zero(K.sub(b[j], K.add(K.mul(b[m], b[i]), b[l])))) ++ct;
                        }
            rep.entries.push_back({"incidences", cf, ct});
            break;
        }
    }

    rep.all_equal = true;
    for (const auto& e : rep.entries)
        if (e.fp_count != e.tower_count) rep.all_equal = false;
    return rep;
}

std::pair<long, long> sparse_square_terms(const IntPoly& f) {
    return {static_cast<long>(f.nterms()), static_cast<long>((f * f).nterms())};
}

}  // namespace rectify
