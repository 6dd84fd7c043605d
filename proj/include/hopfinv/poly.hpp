#pragma once

/*
 * poly.hpp - polynomial invariants as multisets of roots of unity.
 *
 * An invariant is stored as a RootMultiset: exponent -> multiplicity at a
 * fixed conductor.  Expansion to coefficients and factorization into
 * cyclotomic polynomials are views of that multiset; factorization is
 * exact bucketing of roots by order, never polynomial factoring.
 */

#include "hopfinv/cyclo.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace hopfinv {

struct RootMultiset {
    long conductor = 1;
    std::map<long, long> counts;  // exponent in [0, conductor) -> multiplicity >= 1

    long degree() const;
    void add(const RootOfUnity& r, long mult = 1);
    RootMultiset lifted(long M) const;  // conductor | M
    bool operator==(const RootMultiset& o) const;

    static RootMultiset from_roots(const std::vector<RootOfUnity>& roots);
    // Product of the two polynomials; lifts to the lcm conductor.
    friend RootMultiset merge(const RootMultiset& a, const RootMultiset& b);
};

struct CycloFactorization {
    std::map<long, long> factors;  // h -> exponent e_h >= 1
    long degree() const;
    bool operator==(const CycloFactorization& o) const { return factors == o.factors; }
};

struct FactorFailure {
    long order = 0;                   // first order h whose primitive class is uneven
    std::map<long, long> profile;     // exponent -> multiplicity seen within that class
    std::string describe() const;
};

using FactorResult = std::variant<CycloFactorization, FactorFailure>;

struct ExpandedPoly {
    long conductor = 1;
    std::vector<CycNumber> coeffs;           // ascending degree, monic
    bool all_rational = false;
    bool all_integral = false;
    std::vector<Rational> rational_coeffs;   // valid iff all_rational
};

// Groups roots by exact order; succeeds iff every primitive class present
// is complete with one common multiplicity.
FactorResult factor_cyclotomic(const RootMultiset& rs);

// All phi(h) primitive h-th roots with multiplicity e, for each factor.
RootMultiset reconstruct(const CycloFactorization& f);

// Exact product of (x - zeta^k) over the multiset.  Uses the integer
// Phi-product when the multiset factors cyclotomically, the direct
// coefficient product otherwise; both routes are exact.
ExpandedPoly expand(const RootMultiset& rs);
// Direct product over CycNumber coefficients, no factorization shortcut.
ExpandedPoly expand_direct(const RootMultiset& rs);

enum class RenderStyle { Phi, Coeffs, Roots };

// Phi style: "Phi8 Phi2^2 Phi1^2", descending h; empty factorization -> "1".
std::string render_phi(const CycloFactorization& f);
// Coeffs style: "x^8-2x^6+2x^4-2x^2+1"; requires a rational expansion.
std::string render_coeffs(const ExpandedPoly& p);
// Roots style: "(x-1)^3 (x+1)", ascending exponent at the multiset conductor.
std::string render_roots(const RootMultiset& rs);

} // namespace hopfinv
