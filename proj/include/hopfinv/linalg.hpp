#pragma once

/*
 * linalg.hpp - small exact dense linear algebra over CycNumber.
 * Plain Gaussian elimination with first-nonzero pivoting; everything here
 * is a field so no fraction-free machinery is needed.
 */

#include "hopfinv/cyclo.hpp"

#include <optional>
#include <vector>

namespace hopfinv {

using CycMatrix = std::vector<std::vector<CycNumber>>;
using CycVector = std::vector<CycNumber>;

CycMatrix identity_matrix(long n, long conductor);
CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b);
CycVector mat_vec(const CycMatrix& a, const CycVector& v);

long rank(CycMatrix a);
bool invertible(const CycMatrix& a);
std::optional<CycMatrix> inverse(const CycMatrix& a);

// Solves A x = b for square or tall A; nullopt when inconsistent or
// underdetermined. A is n_rows x n_cols, b length n_rows.
std::optional<CycVector> solve(CycMatrix a, CycVector b);

} // namespace hopfinv
