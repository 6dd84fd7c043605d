#include "doctest.h"

#include "hopfinv/hopf.hpp"

using namespace hopfinv;

namespace {

// k[C2] on the group basis {1, g}; everything checked by hand.
HopfAlgebraData c2_group_basis() {
    HopfAlgebraData H;
    H.name = "C2(group basis)";
    H.dim = 2;
    H.conductor = 2;
    CycNumber one = CycNumber::one(2);
    H.mult.assign(2, std::vector<SparseElem>(2));
    H.mult[0][0].push_back({0, one});
    H.mult[0][1].push_back({1, one});
    H.mult[1][0].push_back({1, one});
    H.mult[1][1].push_back({0, one});
    H.unit = {one, CycNumber::zero(2)};
    H.comult.assign(2, {});
    H.comult[0].push_back({one, 0, 0});
    H.comult[1].push_back({one, 1, 1});
    H.counit = {one, one};
    H.antipode.assign(2, {});
    H.antipode[0].push_back({0, one});
    H.antipode[1].push_back({1, one});
    H.labels = {"1", "g"};
    return H;
}

RMatrix c2_rmatrix(int d) {
    // R_0 = 1(x)1, R_1 = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g)
    CycNumber one = CycNumber::one(2), half = CycNumber::mono(2, rat(1, 2), 0),
              mhalf = CycNumber::mono(2, rat(-1, 2), 0), z = CycNumber::zero(2);
    RMatrix R;
    R.label = "R_" + std::to_string(d);
    if (d == 0)
        R.entries = {{one, z}, {z, z}};
    else
        R.entries = {{half, half}, {half, mhalf}};
    return R;
}

ModuleRep c2_module(int sign) {
    ModuleRep M;
    M.label = sign ? "chi_1" : "chi_0";
    M.dim = 1;
    M.action.assign(2, CycMatrix(1, CycVector(1, CycNumber::one(2))));
    if (sign) M.action[1][0][0] = -CycNumber::one(2);
    return M;
}

} // namespace

TEST_CASE("hand-built k[C2]: axioms, R-matrices, Drinfel'd elements") {
    HopfAlgebraData H = c2_group_basis();
    CHECK(validate_hopf(H).ok);

    RMatrix R0 = c2_rmatrix(0), R1 = c2_rmatrix(1);
    CHECK(validate_r_matrix(H, R0).ok);
    CHECK(validate_r_matrix(H, R1).ok);

    // trivial R of a cocommutative algebra has u = 1
    Elem u0 = drinfeld_element(H, R0);
    CHECK(elem_equal(u0, H.unit));
    // u_1 = g
    Elem u1 = drinfeld_element(H, R1);
    CHECK(elem_equal(u1, H.basis_elem(1)));

    ModuleRep triv = c2_module(0), sgn = c2_module(1);
    CHECK(validate_module(H, triv).ok);
    CHECK(validate_module(H, sgn).ok);
    CHECK(r_dimension(H, R0, triv).is_one());
    CHECK(r_dimension(H, R1, triv).is_one());           // eps(u) = 1 always
    CHECK(r_dimension(H, R1, sgn) == -CycNumber::one(2));

    // the sum of two valid R-matrices violates (eps (x) id) R = 1
    RMatrix bad;
    bad.label = "R_0 + R_1";
    bad.entries = R0.entries;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) bad.entries[i][j] += R1.entries[i][j];
    auto rep = validate_r_matrix(H, bad);
    CHECK(!rep.ok);
    CHECK(rep.detail.find("(eps(x)id)R != 1") != std::string::npos);
}

TEST_CASE("hand-built k[C2]: braidings, dual Drinfel'd, dual correspondence") {
    HopfAlgebraData H = c2_group_basis();
    for (int sign = 0; sign < 2; ++sign) {
        BraidingForm s;
        s.label = sign ? "sigma_-" : "sigma_+";
        CycNumber one = CycNumber::one(2);
        s.sigma = {{one, one}, {one, sign ? -one : one}};
        CHECK(validate_braiding(H, s).ok);
        Elem mu = dual_drinfeld(H, s);
        CHECK(mu[0].is_one());
        CHECK(mu[1] == s.sigma[1][1]);  // mu(g) = sigma(g, S(g)) = sigma(g, g)
        auto mu_inv = convolution_inverse(H, mu);
        REQUIRE(mu_inv.has_value());
        Elem conv = convolution_product(H, mu, *mu_inv);
        CHECK(elem_equal(conv, H.counit));
        // braiding of H <-> universal R-matrix of H*
        CHECK(validate_r_matrix(dual_hopf(H), braiding_as_dual_rmatrix(s)).ok);

        // braided dimension of the sign comodule chi = g: mu(g)
        Character cg{"kg", 1, H.basis_elem(1)};
        CHECK(braided_dimension(mu, cg) == mu[1]);
    }
    // zeroing one entry breaks (B2)
    BraidingForm broken;
    broken.label = "broken";
    CycNumber one = CycNumber::one(2);
    broken.sigma = {{one, one}, {one, CycNumber::zero(2)}};
    auto rep = validate_braiding(H, broken);
    CHECK(!rep.ok);
}

TEST_CASE("dual Hopf algebra of a hand-built algebra is a Hopf algebra") {
    HopfAlgebraData H = c2_group_basis();
    HopfAlgebraData D = dual_hopf(H);
    CHECK(validate_hopf(D).ok);
    CHECK(validate_hopf(dual_hopf(D)).ok);
}

TEST_CASE("tensor, dual, character machinery on k[C2]") {
    HopfAlgebraData H = c2_group_basis();
    ModuleRep triv = c2_module(0), sgn = c2_module(1);
    ModuleRep t2 = tensor_module(H, sgn, sgn);
    CHECK(validate_module(H, t2).ok);
    Character chi = module_character(H, t2);
    CHECK(chi.values[0].is_one());
    CHECK(chi.values[1].is_one());  // sgn (x) sgn = trivial
    std::vector<Character> simples{module_character(H, triv), module_character(H, sgn)};
    auto mults = decompose_character(H, chi, simples);
    REQUIRE(mults.has_value());
    CHECK(*mults == std::vector<long>{1, 0});
    // dual of the sign module is the sign module
    Character dchi = module_character(H, dual_module(H, sgn));
    CHECK(elem_equal(dchi.values, module_character(H, sgn).values));
    // convolution: eps * f = f
    Elem f = {CycNumber::one(2), CycNumber::mono(2, rat(5), 0)};
    CHECK(elem_equal(convolution_product(H, H.counit, f), f));
}

TEST_CASE("decompose_character rejects a wrong simple list") {
    HopfAlgebraData H = c2_group_basis();
    ModuleRep sgn = c2_module(1);
    Character chi = module_character(H, sgn);
    // doubled character in the list forces a non-integer solution
    Character half = chi;
    half.values = elem_scale(CycNumber::mono(2, rat(2), 0), chi.values);
    CHECK_THROWS_AS(decompose_character(H, chi, {half}), std::logic_error);
}
