#include "rectify/dompoly.hpp"

namespace rectify {

MultiResultant multi_resultant(const std::vector<IntPoly>& fs, int var) {
    if (fs.empty()) throw std::invalid_argument("multi_resultant: empty input list");
    const int n = fs.front().nvars();
    for (const auto& f : fs)
        if (f.nvars() != n) throw std::invalid_argument("multi_resultant: variable count mismatch");
    if (var < 0 || var >= n) throw std::invalid_argument("multi_resultant: bad variable index");
    const int m = static_cast<int>(fs.size());
    if (m == 1) return {IntPoly::zero(n), n, 0, fs[0], IntPoly::zero(n)};

    const int yc = m - 2;
    const int total = n + yc;
    PolyDomain dom(total);

    IntPoly F1 = fs[0].extended(total);
    IntPoly F2 = fs[1].extended(total);
    for (int j = 3; j <= m; ++j)
        F2 += IntPoly::variable(n + (j - 3), total) * fs[j - 1].extended(total);

    auto as_dompoly = [&](const IntPoly& f) {
        std::vector<IntPoly> c(f.degree_in(var) + 1, dom.zero());
        for (long e = 0; e <= f.degree_in(var); ++e)
            c[e] = f.coefficient_poly(var, static_cast<unsigned>(e));
        return dp_from(dom, std::move(c));
    };
    auto P1 = as_dompoly(F1);
    auto P2 = as_dompoly(F2);
    IntPoly value = resultant(dom, P1, P2);
    return {value, n, yc, F1, F2};
}

}  // namespace rectify
