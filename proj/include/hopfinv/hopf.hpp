#pragma once

/*
 * hopf.hpp - generic finite-dimensional Hopf algebra engine over Q(zeta_m).
 *
 * Structure tensors are stored sparsely: the catalog's algebras have
 * group-law multiplication (single entry per pair) and short coproduct
 * rows, and every validator below walks nonzero entries only.  This is
 * what keeps the exhaustive O(n^3)/O(n^4) axiom sweeps cheap at n <= 80.
 *
 * All data is immutable after construction; every operation is pure.
 */

#include "hopfinv/cyclo.hpp"
#include "hopfinv/linalg.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace hopfinv {

struct SparseEntry {
    long index;
    CycNumber c;
};
using SparseElem = std::vector<SparseEntry>;
using Elem = std::vector<CycNumber>;  // dense coefficient vector

struct ComultTerm {
    CycNumber c;
    long left, right;
};

using SparseTensor2 = std::map<std::pair<long, long>, CycNumber>;
using SparseTensor3 = std::map<std::tuple<long, long, long>, CycNumber>;

struct HopfAlgebraData {
    std::string name;
    long dim = 0;
    long conductor = 1;
    std::vector<std::vector<SparseElem>> mult;  // mult[i][j] = b_i * b_j
    Elem unit;
    std::vector<std::vector<ComultTerm>> comult;
    Elem counit;
    std::vector<SparseElem> antipode;  // antipode[i] = S(b_i)
    std::vector<std::string> labels;

    Elem zero_elem() const { return Elem(dim, CycNumber::zero(conductor)); }
    Elem basis_elem(long i) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem apply_antipode(const Elem& a) const;
    CycNumber counit_of(const Elem& a) const;
    SparseTensor2 comult_of(const Elem& a) const;
    std::string label(long i) const;
};

void tensor_add(SparseTensor2& t, long i, long j, const CycNumber& c);
// Product in A (x) A of two sparse tensors, walking nonzero mult rows only.
SparseTensor2 tensor_mult(const HopfAlgebraData& H, const SparseTensor2& a,
                          const SparseTensor2& b);
SparseTensor2 tensor_of(const Elem& a, const Elem& b);  // outer product

bool elem_is_zero(const Elem& a);
bool elem_equal(const Elem& a, const Elem& b);
Elem elem_add(const Elem& a, const Elem& b);
Elem elem_sub(const Elem& a, const Elem& b);
Elem elem_scale(const CycNumber& c, const Elem& a);
// f(a) for a linear functional f given by its values on the basis.
CycNumber functional_apply(const Elem& f, const Elem& a);

struct ValidationReport {
    bool ok = true;
    std::string detail;
    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string d) { return {false, std::move(d)}; }
};

struct RMatrix {
    std::string label;
    CycMatrix entries;  // R = sum entries[i][j] b_i (x) b_j
};

struct BraidingForm {
    std::string label;
    CycMatrix sigma;  // sigma[i][j] = sigma(b_i, b_j)
};

struct ModuleRep {
    std::string label;
    long dim = 0;
    std::vector<CycMatrix> action;  // action[i] = rho(b_i), dim x dim
};

// Used both for module characters (values[i] = tr rho(b_i), a functional)
// and for comodule characters (values = coordinates of chi_V as an element
// of the algebra); the consuming operation determines the reading.
struct Character {
    std::string label;
    long dim = 0;
    Elem values;
};

ValidationReport validate_hopf(const HopfAlgebraData& H);
ValidationReport validate_r_matrix(const HopfAlgebraData& H, const RMatrix& R);
ValidationReport validate_braiding(const HopfAlgebraData& H, const BraidingForm& s);
ValidationReport validate_module(const HopfAlgebraData& H, const ModuleRep& M);

// u = sum S(beta_i) alpha_i; verifies centrality and invertibility and
// throws std::logic_error on failure (catalog inconsistency).
Elem drinfeld_element(const HopfAlgebraData& H, const RMatrix& R);

CycNumber r_dimension(const HopfAlgebraData& H, const RMatrix& R, const ModuleRep& M);
// Same trace through a precomputed u and a module character.
CycNumber r_dimension_from_u(const Elem& u, const Character& module_char);

// mu(a) = sum sigma(a_(2), S(a_(1))); the dual Drinfel'd functional.
Elem dual_drinfeld(const HopfAlgebraData& H, const BraidingForm& s);
// Convolution inverse of a functional (exact linear solve); nullopt if not
// convolution-invertible.
std::optional<Elem> convolution_inverse(const HopfAlgebraData& H, const Elem& f);
// dim_sigma V = mu(chi_V) for a comodule character chi_V in the basis of H.
CycNumber braided_dimension(const Elem& mu, const Character& comodule_char);

Character module_character(const HopfAlgebraData& H, const ModuleRep& M);
ModuleRep tensor_module(const HopfAlgebraData& H, const ModuleRep& M, const ModuleRep& N);
ModuleRep dual_module(const HopfAlgebraData& H, const ModuleRep& M);

// Exact solve of chi = sum c_i chi_i; nullopt when the system is
// inconsistent; throws std::logic_error when a solution exists but has a
// negative or non-integer coefficient (wrong simple list).
std::optional<std::vector<long>> decompose_character(const HopfAlgebraData& H,
                                                     const Character& chi,
                                                     const std::vector<Character>& simples);

// (f.g)(a) = sum f(a_(1)) g(a_(2)) on functionals given by basis values.
Elem convolution_product(const HopfAlgebraData& H, const Elem& f, const Elem& g);

// The dual Hopf algebra on the dual basis (structure tensors transposed).
HopfAlgebraData dual_hopf(const HopfAlgebraData& H);
// A braiding of H, read as a universal R-matrix of the dual Hopf algebra
// (used by tests and validation).
RMatrix braiding_as_dual_rmatrix(const BraidingForm& s);

} // namespace hopfinv
