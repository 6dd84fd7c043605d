#pragma once

/*
 * catalog.hpp - constructors for the algebra families, each bundled with
 * its full quasitriangular/braiding enumeration, simple module or comodule
 * list, and closed-form cross-check data.
 *
 * Group-type algebras (C_m, C_m x C_n, G_Nn) are built on primitive
 * idempotent bases of their maximal commutative subgroups so that R-matrix
 * entries are scaled roots of unity; the dim-8 algebras and the 4nN-dim
 * family A_Nn^{+lambda} (nu = +1) use group bases.
 */

#include "hopfinv/hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfinv {

struct SuzukiParams {
    long N = 1;   // odd
    long n = 2;   // >= 2
    int lambda = -1;  // +1 or -1; nu is fixed to +1
};

struct AlgebraBundle {
    HopfAlgebraData algebra;
    bool comodule_side = false;  // braidings/comodule characters instead of R-matrices/modules

    std::vector<RMatrix> rmatrices;        // module side
    std::vector<ModuleRep> modules;        // simple left modules
    std::vector<Character> module_chars;   // characters of `modules`, parallel

    std::vector<BraidingForm> braidings;       // comodule side
    std::vector<Character> comodule_chars;     // chi_V as elements of the algebra

    std::string family;  // C | CxC | D8 | Q8 | K8 | G | A
    long par_m = 0, par_n = 0;  // family parameters (m | m,n | N,n)
    int par_lambda = 0;         // A family only
    bool self_dual = true;      // comodule-side product equals the algebra's own invariant
    std::string closed_form;    // tag naming the closed-form set; empty if none

    // closed-form cross-check data (empty when the family provides none)
    std::vector<Elem> closed_drinfeld;  // parallel to rmatrices
    CycMatrix closed_dims;              // [braiding or R index][simple index]

    long braid_count() const {
        return comodule_side ? static_cast<long>(braidings.size())
                             : static_cast<long>(rmatrices.size());
    }
    // Characters of the degree-d simples, on the side the bundle carries.
    std::vector<Character> simples_of_degree(long d) const;
    std::string display_name() const;
};

AlgebraBundle build_cyclic(long m);
AlgebraBundle build_abelian_product(long m, long n);

enum class Dim8 { D8, Q8, K8 };
AlgebraBundle build_dim8(Dim8 which);

AlgebraBundle build_group_GNn(long N, long n);

AlgebraBundle build_suzuki(const SuzukiParams& p);

// Full Suzuki realization: the bundle plus the generator elements and the
// x-basis written in the group basis (the base change of the presentation).
struct SuzukiRealization {
    AlgebraBundle bundle;
    Elem x11, x12, x21, x22;
    // x-basis: first 2N*n entries are x11^s chi22^t (s = 1..2N outer,
    // t = 0..n-1 inner), then x12^s chi21^t in the same order.
    std::vector<Elem> xbasis;
    CycMatrix base_change;  // column a = coordinates of xbasis[a]
};
SuzukiRealization build_suzuki_full(const SuzukiParams& p);

// sigma_{alpha,beta} on the group basis, pure exponent arithmetic.
// alpha = zeta^alpha_exp, beta = zeta^beta_exp at conductor 4nN.
// Requires (alpha beta)^N = 1 and (alpha beta^-1)^n = lambda.
BraidingForm sigma_group_values(const SuzukiParams& p, long long alpha_exp, long long beta_exp);

// The parameter pairs (alpha_exp, beta_exp) of I_{+lambda} and, for n = 2,
// the (gamma_exp, xi_sign) pairs of J.
std::vector<std::pair<long, long>> sigma_parameter_pairs(const SuzukiParams& p);
std::vector<std::pair<long, int>> tau_parameter_pairs(const SuzukiParams& p);

// Catalog naming grammar: C_m, CxC_m_n, D8, Q8, K8, G_N_n, A_N_n_lambda
// (lambda in {+,-}); A_N_n picks the conventional lambda (- for even n,
// + for odd n).  Enforces N odd, n >= 2 and refuses 4nN > 200.
AlgebraBundle build_from_name(const std::string& name);
std::vector<std::string> catalog_families_help();

} // namespace hopfinv
