#pragma once

// The main pipeline: forward elimination of the bounded vanishing relations of
// A over F_p, then backward substitution building an extension tower of Q and
// points b_1..b_n that satisfy exactly the same bounded relations.

#include <stdexcept>
#include <string>
#include <vector>

#include "rectify/tower.hpp"

namespace rectify {

// ---------------------------------------------------------------------------
// Bound ledger.

struct BoundLedger {
    Int k, t;
    std::vector<Int> u;  // u_0 = k, u_i = u_{i-1}^(2 v_{i-1}) * v_{i-1}^(v_{i-1})
    std::vector<Int> v;  // v_0 = t, v_i = 2 v_{i-1}^2
};

/// Ledger through index n, with the closed form v_i = 2^(2^i - 1) t^(2^i)
/// cross-checked at every step.  Requires k, t >= 2, n >= 0.
BoundLedger bound_sequence(const Int& k, const Int& t, int n);

struct GuaranteeGate {
    bool guaranteed;  // the triple-logarithm size gate: p > (2kt)^((2t)^(2^(n+1)))
    bool exact_ok;    // the condition actually consumed downstream: u_n < p
};
GuaranteeGate guarantee_gate(int n, const Int& k, const Int& t, const Int& p);

// ---------------------------------------------------------------------------
// Forward elimination.

struct EliminationLevel {
    std::vector<IntPoly> L;      // L^i, polynomials in x_(i+1)..x_n (n-variable ring)
    std::vector<IntPoly> A_mod;  // the truncations f_j', pivot first; empty if no pivot
    int pivot = -1;              // index into L of the pivot f_1' source, -1 if none
    long delta = -1;             // minimal j with sigma_i(s_jj) != 0; -1 if no pivot
    int y_count = 0;             // fresh y variables used by the aggregated F_2
};

struct EliminationChain {
    Int p;
    std::vector<Int> anchors;  // A = (a_1..a_n), reduced mod p
    BoundLedger ledger;
    int n = 0;
    int r = 0;                            // stop level
    std::vector<EliminationLevel> levels;  // levels[0..r]; levels[r] holds L^r only
    bool exact_ok_held = true;            // all u_i < p along the run (informational)
    bool forced_drop = false;             // a non-zero constant survivor was dropped (force)
};

/// Raised when elimination meets a non-zero integer constant whose residue
/// vanishes: the exact-bound conclusion "f = 0" genuinely fails, so the run
/// aborts (unless forced).
struct BoundAbortError : std::runtime_error {
    explicit BoundAbortError(const std::string& what) : std::runtime_error(what) {}
};

/// Forward elimination.  Every member of L1 must be (k,t)-bounded
/// and vanish at A mod p (asserted).  With force, non-zero constant survivors
/// are dropped instead of aborting and final verification arbitrates.
EliminationChain eliminate_forward(const std::vector<IntPoly>& L1, const std::vector<Int>& A,
                                   const Int& p, const BoundProfile& profile, bool force = false);

// ---------------------------------------------------------------------------
// Backward substitution and the end-to-end pipeline.

struct RectifiedSet {
    Tower tower;
    std::vector<TowerElem> points;  // b_1..b_n at the tower's top level
    bool guaranteed = false;        // triple-log gate held (informational)
    bool verified = false;          // exhaustive bounded-relation check passed
    GuaranteeGate gate{};
    EliminationChain chain;
    std::string verify_message;     // first discrepancy, empty on pass
    Int relations_checked = 0;
};

/// Walks the chain from the top level down, extending the tower as needed.
/// The returned set has verified = false; callers run the verifier.
RectifiedSet back_substitute(const EliminationChain& chain);

/// Extends the tower by a compatible root of G: factors G, selects the
/// irreducible factor of least degree whose anchor image vanishes at a, and
/// returns the root as a top-level element (adjoining a generator unless the
/// factor is linear).
TowerElem select_compatible_root(Tower& tower, const TowerPoly& G, const Int& a);

struct VerifyReport {
    bool pass = false;
    Int checked = 0;
    std::string first_discrepancy;  // polynomial text + direction, empty on pass
};

/// Exhaustive check that f(A) = 0 mod p iff f(points) = 0 over the tower, for
/// every k-bounded f (one representative per sign class).
VerifyReport verify_ring_isomorphism(const std::vector<Int>& A, const Int& p,
                                     const std::vector<TowerElem>& points, const Tower& tower,
                                     const Int& k, const Int& t = 0);  // t <= 0 means t = k
/// Same, for candidate points given as rationals (trivial tower).
VerifyReport verify_ring_isomorphism(const std::vector<Int>& A, const Int& p,
                                     const std::vector<Rat>& points, const Int& k,
                                     const Int& t = 0);

/// split_relations -> eliminate_forward -> back_substitute -> verify.
RectifiedSet rectify(const std::vector<Int>& A, const Int& p, const Int& k, bool force = false,
                     const Int& t = 0);  // t <= 0 means t = k

}  // namespace rectify
