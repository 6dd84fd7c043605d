#pragma once

/*
 * reprings.hpp - representation (fusion) rings, presented-ring checks,
 * group-like groups of duals, Gram non-degeneracy of braidings, and
 * self-duality reports.
 */

#include "hopfinv/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfinv {

struct FusionRing {
    long rank = 0;
    std::vector<std::string> labels;
    std::vector<long> dims;
    std::vector<std::vector<std::vector<long>>> nmat;  // nmat[i][j][k]
    long unit = 0;
    std::vector<long> star;  // permutation of simples
};

// Structure constants from exact character decomposition of pairwise
// tensor products (characters multiply by convolution); star from the
// contragredient.  Requires the bundle's module side.
FusionRing fusion_ring(const AlgebraBundle& b);

// Ring-element helpers over the simple basis.
std::vector<long> ring_mul(const FusionRing& f, const std::vector<long>& x,
                           const std::vector<long>& y);
std::vector<long> ring_basis(const FusionRing& f, long i);

// Verifies the presented-ring relations for Rep of G_Nn / A_Nn with the
// generator map a = [chi_100], b = [chi_010], c = [chi_002],
// x_i = [rho_{i, i mod 2}], including the star behavior.
ValidationReport check_presentation(long N, long n, const FusionRing& ring);

// Frobenius-Perron identity sum_k N[i][j][k] d_k = d_i d_j for all i, j.
ValidationReport check_frobenius_perron(const FusionRing& ring);
// unit row/column, nonnegativity, star anti-automorphism and involutivity.
ValidationReport check_fusion_axioms(const FusionRing& ring);

struct GroupTable {
    std::vector<std::string> labels;
    std::vector<std::vector<long>> table;  // Cayley table, index form
    bool commutative = true;
    std::string identified;  // canonical: "C_k", "C_2 x C_k", or "SA_k"
};

// Group-like elements of the (comodule-side) bundle algebra, closed under
// multiplication.
GroupTable grouplikes(const AlgebraBundle& b);
// Group-likes of the dual = algebra maps A -> k under convolution; the
// candidate list depends on (lambda, parity of n), each candidate is
// verified to be an algebra map, and the set is closed under convolution.
GroupTable dual_grouplikes(const AlgebraBundle& b);

// Exact Gaussian-elimination rank of the (4nN)^2 Gram matrix of
// sigma_{alpha,beta}.
bool gram_nondegenerate(const SuzukiParams& p, long long alpha_exp, long long beta_exp);
// The primitivity criterion: alpha beta a primitive N-th root of unity and
// alpha/beta a primitive n-th root of lambda (false outright for
// lambda = +1 with n even, where all braidings degenerate).
bool gram_criterion(const SuzukiParams& p, long long alpha_exp, long long beta_exp);

struct SelfDualityReport {
    long N = 1, n = 2;
    int lambda = -1;
    bool self_dual = false;
    std::string detail;
    std::optional<std::pair<long, long>> witness;  // (alpha_exp, beta_exp)
};
SelfDualityReport self_duality_report(long N, long n, int lambda);

} // namespace hopfinv
