#pragma once

/*
 * json_io.hpp - JSON schemas for hand-entered algebras, invariant results,
 * and fusion rings.
 *
 * Algebra schema:
 *   {"dim": n, "conductor": m, "labels": [...],
 *    "mult":    [[i, j, k, "coef"], ...],   // b_i b_j = sum coef b_k
 *    "comult":  [[i, j, k, "coef"], ...],   // Delta(b_i) = sum coef b_j (x) b_k
 *    "counit":  ["coef", ...],
 *    "antipode":[[i, j, "coef"], ...],      // S(b_i) = sum coef b_j
 *    "unit":    ["coef", ...]}
 * Coefficients are "a/b*z^k+..." strings over zeta_conductor.
 */

#include "hopfinv/invariants.hpp"
#include "hopfinv/reprings.hpp"

#include "json.hpp"

namespace hopfinv {

nlohmann::json algebra_to_json(const HopfAlgebraData& H);
HopfAlgebraData algebra_from_json(const nlohmann::json& j);

// {"algebra", "degree", "path", "conductor", "roots": [{"exp","mult"}],
//  "phi": [{"h","e"}] or "factor_failure", "coeffs": ["...", ...]}
nlohmann::json invariant_to_json(const InvariantResult& r);

// {"labels", "dims", "unit", "star", "N": [[i,j,k,N_ijk], ...]}
nlohmann::json fusion_to_json(const FusionRing& f);

} // namespace hopfinv
