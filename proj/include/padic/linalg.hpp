#pragma once

#include <vector>

#include "padic/padic_number.hpp"

namespace padic {

// Small dense matrices over PadicNumber, row-major.  Elimination pivots on
// the entry of minimal valuation, which is the numerically stable choice in
// the p-adic metric.
using PMat = std::vector<std::vector<PadicNumber>>;

// Determinant (with sign) via valuation-pivoted elimination.  Returns a
// flagged zero when the matrix is singular at the working precision.
PadicNumber padic_det(PMat m);

struct RankInfo {
    int rank = 0;
    // True when a zero/nonzero decision fell inside the safety margin: some
    // discarded entry was only known to absolute precision < zero_threshold,
    // or a pivot had valuation >= zero_threshold.
    bool ambiguous = false;
};

// Rank with full pivoting.  zero_threshold is the digit count below which a
// valuation is no longer trusted to be meaningfully nonzero.
RankInfo padic_rank(PMat m, long zero_threshold);

// Solves m * x = rhs for square m.  Throws DivisionByIndistinguishableZero
// when no usable pivot remains.
std::vector<PadicNumber> padic_solve(PMat m, std::vector<PadicNumber> rhs);

}  // namespace padic
