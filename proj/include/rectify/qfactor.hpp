#pragma once

// Univariate factorization over Q: squarefree split, then a single-big-prime
// modular factorization with subset recombination.  Desk scale only; inputs of
// large degree will work but were never the target.

#include <vector>

#include "rectify/dompoly.hpp"

namespace rectify {

using QPoly = DomainPoly<QDomain>;

struct QFactor {
    QPoly factor;  // monic irreducible over Q
    int multiplicity;
};

/// Monic irreducible factorization of a non-zero f in Q[x]; the product of
/// factor^multiplicity times lc(f) reconstructs f.
std::vector<QFactor> factor_over_q(const QPoly& f);

bool is_irreducible_over_q(const QPoly& f);

}  // namespace rectify
