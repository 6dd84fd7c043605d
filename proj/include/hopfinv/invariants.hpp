#pragma once

/*
 * invariants.hpp - the polynomial invariants P_A^(d)(x): one root
 * (x - dim/d) per braiding structure and per degree-d simple, assembled
 * either by the generic engine (Drinfel'd traces / dual Drinfel'd
 * evaluations) or by the families' closed exponent formulas.  The two
 * paths share no arithmetic and check each other.
 */

#include "hopfinv/catalog.hpp"
#include "hopfinv/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfinv {

enum class Path { Generic, Closed, Both };

struct InvariantResult {
    std::string algebra;
    long degree = 1;
    RootMultiset roots;
    FactorResult factorization;
    Path path = Path::Generic;
    // For a comodule-side bundle that is not self-dual the computed product
    // is the invariant of the dual Hopf algebra.
    bool of_dual = false;
};

// One root per braiding; each certified a root of unity.  Throws
// std::logic_error with diagnostics if a normalized dimension is not one.
RootMultiset invariant_for_module(const AlgebraBundle& b, const Character& simple);

RootMultiset generic_invariant(const AlgebraBundle& b, long d);
// Closed exponent formulas; nullopt when the family provides none (or, for
// the comodule-side family, when the algebra is not self-dual).
std::optional<RootMultiset> closed_invariant(const AlgebraBundle& b, long d);

// path = Both computes generic and closed and throws on disagreement.
InvariantResult invariant_for_degree(const AlgebraBundle& b, long d, Path path = Path::Generic);

struct DegreeVerdict {
    long degree;
    bool equal;
    std::optional<RootOfUnity> witness;  // a root of one side only, when distinct
};

struct CompareResult {
    std::string left, right;
    std::vector<DegreeVerdict> degrees;
    bool any_distinct = false;  // true => not monoidally Morita equivalent
};

// Refuses comodule-side bundles that are not self-dual (their computed
// product is the dual's invariant, so a verdict would be unsound).
CompareResult compare(const AlgebraBundle& A, const AlgebraBundle& B,
                      const std::vector<long>& degrees, Path path = Path::Generic);

std::string root_to_string(const RootOfUnity& r);

} // namespace hopfinv
