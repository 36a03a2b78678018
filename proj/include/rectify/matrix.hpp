#pragma once

// Exact linear algebra over Q / F_p: Bareiss determinants, ranks over Q and
// mod p with a witness submatrix, and the linear lifting of bounded relations.

#include <vector>

#include "rectify/intpoly.hpp"

namespace rectify {

class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows, std::vector<Rat>(cols, Rat(0))) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_int_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i][j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i][j]; }

    bool is_integer() const;

  private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rat>> e_;
};

/// Exact determinant (fraction-free Bareiss on the integer-scaled matrix).
Rat det_exact(const ExactMatrix& m);

struct RankPair {
    std::size_t rank_q;
    std::size_t rank_p;
    // Row/column indices of a maximal square submatrix non-singular mod p
    // (hence non-singular over Q as well).
    std::vector<std::size_t> witness_rows;
    std::vector<std::size_t> witness_cols;
};

/// Ranks over Q and over F_p of an integer matrix, with a mod-p witness.
RankPair rank_pair(const ExactMatrix& m, const Int& p);

std::size_t rank_over_q(const ExactMatrix& m);

// ---------------------------------------------------------------------------
// Linear rectification (bounded linear relations).

/// Checks membership in Z_(p): reduced denominator coprime to p.
bool in_localization(const Rat& x, const Int& p);

/// Canonical reduction Z_(p) -> F_p.
Int localize_mod(const Rat& x, const Int& p);

struct LinearLiftOptions {
    bool force = false;  // run even when the k^(n+1) < p guarantee fails
};

/// Linear lift: b_1..b_n in Z_(p) reducing to A, with every f in L1
/// vanishing exactly over Q and every f in L2 non-vanishing.
std::vector<Rat> lift_linear(const std::vector<Int>& A, const std::vector<IntPoly>& L1,
                             const std::vector<IntPoly>& L2, const Int& p,
                             const LinearLiftOptions& opt = {});

struct LinearRectification {
    std::vector<Int> points;     // integers reducing to A mod p
    std::vector<Rat> localized;  // the pre-scaling Z_(p) lift
    Int multiplier;              // denominator-clearing integer, == 1 mod p
    bool guaranteed;             // |A| < log_{2k} p - 1
};

/// Full linear pipeline: enumerate 2k-bounded linear relations, lift, clear
/// denominators with the smallest positive multiple of their lcm that is
/// congruent to 1 mod p.
LinearRectification rectify_linear(const std::vector<Int>& A, const Int& p, const Int& k,
                                   bool force = false);

}  // namespace rectify
