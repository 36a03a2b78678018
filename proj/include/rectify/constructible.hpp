#pragma once

#include <utility>
#include <vector>

#include "rectify/intpoly.hpp"

namespace rectify {

/// One step of a constructibility chain: the value a_i together with the
/// bounded polynomial f_i (in variables x1..xi, standing for a_0..a_{i-1})
/// that produced it from the earlier values.
struct ChainStep {
    Int value;
    IntPoly f;
};

/// A (k,t)-constructibility chain 0 = a_0, a_1, ..., a_m = target with
/// a_i = f_i(a_0, ..., a_{i-1}) and every f_i (k,t)-bounded.  steps[0] is the
/// start value 0 with no polynomial (f empty in zero variables).
struct Chain {
    std::vector<ChainStep> steps;
    BoundProfile profile;

    const Int& value() const { return steps.back().value; }
    /// Number of construction steps (chain length minus the start value).
    int step_count() const { return static_cast<int>(steps.size()) - 1; }
};

/// Builds a (k,k)-chain reaching r: counter phase up to 2^s, base-2^s digit
/// block assembly, then the power/accumulate ladder.  Small targets (r < 16)
/// fall back to the unary counter chain.
Chain build_chain(const Int& r, const Int& k);

enum class SpecialForm { mersenne, fermat };

/// Short (2,2)-chain for p = 2^n - 1 (squaring ladder on the exponent's
/// binary representation) or p = 2^(2^n) + 1 (repeated squaring).
Chain build_special_chain(const Int& p, SpecialForm form);

/// Independent check of the chain invariants: a_0 = 0, every f_i is bounded
/// by the chain's profile and uses only x1..xi, and a_i = f_i(a_0..a_{i-1}).
bool verify_chain(const Chain& c);

/// Upper bound on the count of integers (k,k)-constructible in <= n steps.
struct CountBound {
    Int product;         // prod_{i=1}^n (3ki)^k
    bool n_bound_holds;  // n >= 3k, so product <= n^(2kn) applies
    Int n_power;         // n^(2kn) when it applies (0 otherwise)
};
CountBound count_constructible_upper(const Int& n, const Int& k);

/// Residues mod p of a (k-1,k-1)-chain for p: a subset of F_p that no
/// k-bounded-relation-preserving lift can separate from the chain collapse
/// (the endpoints 0 and p always collide).  Requires k >= 3.
struct AdversarialSet {
    std::vector<Int> A;  // sorted distinct residues
    Chain witness;
};
AdversarialSet adversarial_set(const Int& p, const Int& k);

}  // namespace rectify
