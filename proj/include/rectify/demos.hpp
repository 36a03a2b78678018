#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rectify/rectifier.hpp"

namespace rectify {

/// A finite point-line configuration with integer coordinates; lines are
/// coefficient triples (a, b, c) representing a*y + b*x + c = 0, pairwise
/// non-proportional.
struct PointLineConfig {
    std::vector<std::pair<Int, Int>> points;     // (x, y)
    std::vector<std::array<Int, 3>> lines;       // (a, b, c)
};

/// Brute-force incidence count of the configuration mapped into D via
/// from_int.
template <class D>
long count_incidences(const PointLineConfig& cfg, const D& dom) {
    long count = 0;
    for (const auto& [x, y] : cfg.points) {
        auto xe = dom.from_int(x), ye = dom.from_int(y);
        for (const auto& [a, b, c] : cfg.lines) {
            auto v = dom.add(dom.add(dom.mul(dom.from_int(a), ye), dom.mul(dom.from_int(b), xe)),
                             dom.from_int(c));
            if (dom.is_zero(v)) ++count;
        }
    }
    return count;
}

/// The extremal lattice: with r = floor(n^(1/3) / 2), points [1..r] x
/// [1..2r^2] and lines y = mx + b for 1 <= m <= r, 1 <= b <= r^2; every line
/// meets every column, for exactly r^4 incidences.
PointLineConfig sharpness_lattice(long n);

enum class TransferMode { sumproduct, incidence, inverse, polynomial_image };

/// One named set cardinality (or incidence count), measured in F_p and over
/// the rectified tower.
struct TransferEntry {
    std::string name;
    long fp_count = 0;
    long tower_count = 0;
};

struct TransferReport {
    TransferMode mode;
    Int k;
    RectifiedSet result;  // the underlying rectification
    std::vector<TransferEntry> entries;
    bool all_equal = false;
};

/// Rectifies A with the mode's k and compares the mode's derived set sizes on
/// both sides of the lift.  Modes: sumproduct (k=4, |A+A| and |A*A|),
/// incidence (k=3, incidences of the A-coordinate configuration), inverse
/// (k=4, |A^-1 + A^-1|, requires 0 not in A), polynomial_image (k=4,
/// |f(A)+f(A)| for the given 2-bounded f, default x^2).
TransferReport transfer_report(const std::vector<Int>& A, const Int& p, TransferMode mode,
                               const IntPoly* image_poly = nullptr);

/// Exact term counts (N(f), N(f^2)) of a univariate integer polynomial.
std::pair<long, long> sparse_square_terms(const IntPoly& f);

}  // namespace rectify
