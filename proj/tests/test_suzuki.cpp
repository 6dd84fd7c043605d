#include "doctest.h"

#include "hopfinv/catalog.hpp"

using namespace hopfinv;

namespace {

long xa_idx(const SuzukiParams& p, long s, long t) { return (s - 1) * p.n + t; }
long xb_idx(const SuzukiParams& p, long s, long t) {
    return 2 * p.N * p.n + (s - 1) * p.n + t;
}

// sigma as a bilinear form on elements
CycNumber sigma_on(const HopfAlgebraData& H, const BraidingForm& s, const Elem& x,
                   const Elem& y) {
    CycNumber r = CycNumber::zero(H.conductor);
    for (long i = 0; i < H.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (long j = 0; j < H.dim; ++j)
            if (!y[j].is_zero() && !s.sigma[i][j].is_zero()) r += x[i] * y[j] * s.sigma[i][j];
    }
    return r;
}

} // namespace

TEST_CASE("Suzuki algebras satisfy the Hopf axioms on every parity combination") {
    for (auto [N, n, lam] : {std::tuple<long, long, int>{1, 2, -1},
                             {1, 2, +1},
                             {1, 3, +1},
                             {1, 3, -1},
                             {3, 2, -1}}) {
        AlgebraBundle b = build_suzuki(SuzukiParams{N, n, lam});
        INFO(b.algebra.name);
        CHECK(b.algebra.dim == 4 * n * N);
        CHECK(validate_hopf(b.algebra).ok);
    }
}

TEST_CASE("the x generators satisfy the defining relations") {
    // both parity classes of the underlying group: w^n = h^N and w^n = 1
    for (auto [N, n, lam] : {std::tuple<long, long, int>{1, 2, -1},
                             {1, 3, +1},
                             {3, 2, -1},
                             {3, 3, +1},
                             {1, 2, +1},
                             {1, 3, -1}}) {
        SuzukiParams p{N, n, lam};
        SuzukiRealization R = build_suzuki_full(p);
        const HopfAlgebraData& H = R.bundle.algebra;
        INFO(H.name);
        const Elem &x11 = R.x11, &x12 = R.x12, &x21 = R.x21, &x22 = R.x22;
        // epsilon(x_ij) = delta_ij
        CHECK(H.counit_of(x11).is_one());
        CHECK(H.counit_of(x22).is_one());
        CHECK(H.counit_of(x12).is_zero());
        CHECK(H.counit_of(x21).is_zero());
        // Delta(x_ij) = x_i1 (x) x_1j + x_i2 (x) x_2j
        auto dcheck = [&](const Elem& x, const Elem& a1, const Elem& b1, const Elem& a2,
                          const Elem& b2) {
            SparseTensor2 expect = tensor_of(a1, b1);
            for (const auto& [ij, c] : tensor_of(a2, b2)) tensor_add(expect, ij.first, ij.second, c);
            for (auto it = expect.begin(); it != expect.end();)
                it = it->second.is_zero() ? expect.erase(it) : std::next(it);
            CHECK(H.comult_of(x) == expect);
        };
        dcheck(x11, x11, x11, x12, x21);
        dcheck(x12, x11, x12, x12, x22);
        dcheck(x21, x21, x11, x22, x21);
        dcheck(x22, x21, x12, x22, x22);
        // S(x_ij) = x_ji^{2N-1}
        auto pw = [&](const Elem& x, long e) {
            Elem r = H.unit;
            for (long i = 0; i < e; ++i) r = H.mul(r, x);
            return r;
        };
        CHECK(elem_equal(H.apply_antipode(x11), pw(x11, 2 * N - 1)));
        CHECK(elem_equal(H.apply_antipode(x12), pw(x21, 2 * N - 1)));
        CHECK(elem_equal(H.apply_antipode(x21), pw(x12, 2 * N - 1)));
        CHECK(elem_equal(H.apply_antipode(x22), pw(x22, 2 * N - 1)));
        // squares central and paired; mixed-parity products vanish
        CHECK(elem_equal(H.mul(x11, x11), H.mul(x22, x22)));
        CHECK(elem_equal(H.mul(x12, x12), H.mul(x21, x21)));
        CHECK(elem_is_zero(H.mul(x11, x12)));
        CHECK(elem_is_zero(H.mul(x21, x22)));
        CHECK(elem_is_zero(H.mul(x11, x21)));
        // x11^{2N} + x12^{2N} = 1 (nu = +1)
        CHECK(elem_equal(elem_add(pw(x11, 2 * N), pw(x12, 2 * N)), H.unit));
        // alternating-word relations of length n
        Elem w1 = H.unit, w2 = H.unit, w3 = H.unit, w4 = H.unit;
        for (long f = 1; f <= n; ++f) {
            w1 = H.mul(w1, f % 2 ? x11 : x22);
            w2 = H.mul(w2, f % 2 ? x22 : x11);
            w3 = H.mul(w3, f % 2 ? x12 : x21);
            w4 = H.mul(w4, f % 2 ? x21 : x12);
        }
        CHECK(elem_equal(w1, w2));
        CHECK(elem_equal(w4, elem_scale(CycNumber::from_rational(rat(lam), H.conductor), w3)));
        // (x11 x22)^n = x11^{2n} and (x21 x12)^n = lambda x12^{2n}
        Elem a = H.unit, c = H.unit;
        for (long f = 0; f < n; ++f) {
            a = H.mul(a, H.mul(x11, x22));
            c = H.mul(c, H.mul(x21, x12));
        }
        CHECK(elem_equal(a, pw(x11, 2 * n)));
        CHECK(elem_equal(c, elem_scale(CycNumber::from_rational(rat(lam), H.conductor),
                                       pw(x12, 2 * n))));
        // x11^N = (h^N + 1)/2 w t  (part of the presentation's base change)
        auto by_label = [&](const std::string& lab) {
            for (long i = 0; i < H.dim; ++i)
                if (H.label(i) == lab) return H.basis_elem(i);
            FAIL("missing basis label ", lab);
            return H.zero_elem();
        };
        Elem bh = by_label("h"), bw = by_label("w"), bt = by_label("t");
        Elem hNel = H.unit;
        for (long f = 0; f < N; ++f) hNel = H.mul(hNel, bh);
        Elem wt = H.mul(bw, bt);
        Elem e0wt = elem_scale(CycNumber::mono(H.conductor, rat(1, 2), 0),
                               H.mul(elem_add(H.unit, hNel), wt));
        CHECK(elem_equal(pw(x11, N), e0wt));
        // base change is invertible
        CHECK(invertible(R.base_change));
    }
}

TEST_CASE("braiding enumeration counts and validation") {
    struct Case { long N, n; int lam; long count; };
    for (Case c : {Case{1, 2, -1, 8}, Case{1, 3, +1, 6}, Case{3, 2, -1, 24}}) {
        AlgebraBundle b = build_suzuki(SuzukiParams{c.N, c.n, c.lam});
        INFO(b.algebra.name);
        CHECK(static_cast<long>(b.braidings.size()) == c.count);
        for (const auto& s : b.braidings) {
            auto rep = validate_braiding(b.algebra, s);
            INFO(s.label, ": ", rep.detail);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("sigma on the group basis: pinned values and the base-change recovery") {
    SuzukiParams p{1, 2, -1};
    SuzukiRealization R = build_suzuki_full(p);
    const HopfAlgebraData& H = R.bundle.algebra;
    auto pairs = sigma_parameter_pairs(p);
    REQUIRE(pairs.size() == 4);
    for (auto [ae, be] : pairs) {
        BraidingForm s = sigma_group_values(p, ae, be);
        // sigma(h, h) = (alpha beta)^2
        auto by_label = [&](const std::string& lab) {
            for (long i = 0; i < H.dim; ++i)
                if (H.label(i) == lab) return H.basis_elem(i);
            return H.zero_elem();
        };
        Elem bh = by_label("h");
        CHECK(sigma_on(H, s, bh, bh) == CycNumber::root(H.conductor, 2LL * (ae + be)));
        // the x-basis recovery of the generator table: sigma(x12, x12) = alpha,
        // sigma(x12, x21) = beta, sigma(x11, anything) = 0
        CHECK(sigma_on(H, s, R.x12, R.x12) == CycNumber::root(H.conductor, ae));
        CHECK(sigma_on(H, s, R.x12, R.x21) == CycNumber::root(H.conductor, be));
        CHECK(sigma_on(H, s, R.x21, R.x12) == CycNumber::root(H.conductor, be));
        CHECK(sigma_on(H, s, R.x21, R.x21) == CycNumber::root(H.conductor, ae));
        CHECK(sigma_on(H, s, R.x11, R.x11).is_zero());
        CHECK(sigma_on(H, s, R.x11, R.x22).is_zero());
        CHECK(sigma_on(H, s, R.x22, R.x22).is_zero());
    }
    CHECK_THROWS_AS(sigma_group_values(p, 1, 0), std::invalid_argument);
}

TEST_CASE("dual Drinfel'd functional matches the printed closed form") {
    for (auto [N, n, lam] : {std::tuple<long, long, int>{1, 2, -1}, {1, 3, +1}, {3, 2, -1}}) {
        SuzukiParams p{N, n, lam};
        SuzukiRealization R = build_suzuki_full(p);
        const HopfAlgebraData& H = R.bundle.algebra;
        long cond = H.conductor;
        for (auto [ae, be] : sigma_parameter_pairs(p)) {
            BraidingForm s = sigma_group_values(p, ae, be);
            Elem mu = dual_drinfeld(H, s);
            long long xi = ae + be;
            for (long sdeg = 1; sdeg <= 2 * N; ++sdeg)
                for (long t = 0; t < n; ++t) {
                    CycNumber got_a = functional_apply(mu, R.xbasis[xa_idx(p, sdeg, t)]);
                    CycNumber got_b = functional_apply(mu, R.xbasis[xb_idx(p, sdeg, t)]);
                    CHECK(got_b.is_zero());  // mu(x12^s chi21^t) = 0
                    long long e;
                    if (sdeg % 2 == 0)
                        e = xi * (-(long long)sdeg * sdeg / 2 - (long long)sdeg * t -
                                  (long long)t * t) +
                            (long long)ae * t * t;
                    else
                        e = xi * ((-1 - (long long)sdeg * sdeg) / 2 - t -
                                  (long long)sdeg * t - (long long)t * t) +
                            (long long)ae * (t + 1) * (t + 1);
                    INFO(H.name, " s=", sdeg, " t=", t);
                    CHECK(got_a == CycNumber::root(cond, e));
                }
        }
    }
}

TEST_CASE("tau braidings of A_N2: closed mu and closed dimensions") {
    for (auto [N, lam] : {std::pair<long, int>{1, -1}, {3, -1}, {1, +1}}) {
        SuzukiParams p{N, 2, lam};
        SuzukiRealization R = build_suzuki_full(p);
        const HopfAlgebraData& H = R.bundle.algebra;
        long cond = H.conductor;
        long nsigma = static_cast<long>(sigma_parameter_pairs(p).size());
        auto taus = tau_parameter_pairs(p);
        REQUIRE(static_cast<long>(R.bundle.braidings.size()) == nsigma + static_cast<long>(taus.size()));
        for (size_t ti = 0; ti < taus.size(); ++ti) {
            const BraidingForm& s = R.bundle.braidings[nsigma + ti];
            auto rep = validate_braiding(H, s);
            INFO(H.name, " ", s.label, ": ", rep.detail);
            CHECK(rep.ok);
            // mu_tau(x11^s chi22^t) = gamma^{-(s+t)^2} lambda^{[s,t odd]}
            Elem mu = dual_drinfeld(H, s);
            long ge = taus[ti].first;
            for (long sdeg = 1; sdeg <= 2 * N; ++sdeg)
                for (long t = 0; t < 2; ++t) {
                    CycNumber expect = CycNumber::root(cond, -(long long)(sdeg + t) * (sdeg + t) * ge);
                    if (sdeg % 2 == 1 && t == 1)
                        expect = scale(rat(lam), expect);
                    INFO(H.name, " ", s.label, " s=", sdeg, " t=", t);
                    CHECK(functional_apply(mu, R.xbasis[xa_idx(p, sdeg, t)]) == expect);
                    CHECK(functional_apply(mu, R.xbasis[xb_idx(p, sdeg, t)]).is_zero());
                }
        }
    }
}

TEST_CASE("comodule characters: group-likes and the braided dimension table") {
    for (auto [N, n, lam] : {std::tuple<long, long, int>{1, 2, -1}, {1, 3, +1}, {3, 2, -1}}) {
        SuzukiParams p{N, n, lam};
        AlgebraBundle b = build_suzuki(p);
        const HopfAlgebraData& H = b.algebra;
        INFO(H.name);
        long onedim = 0, twodim = 0;
        std::vector<Elem> seen;
        for (const auto& chi : b.comodule_chars) {
            if (chi.dim == 1) {
                ++onedim;
                // group-like: Delta(g) = g (x) g, eps(g) = 1
                CHECK(H.comult_of(chi.values) == tensor_of(chi.values, chi.values));
                CHECK(H.counit_of(chi.values).is_one());
                for (const auto& s : seen) CHECK(!elem_equal(s, chi.values));
                seen.push_back(chi.values);
            } else {
                ++twodim;
            }
        }
        CHECK(onedim == 4 * N);
        CHECK(twodim == N * (n - 1));
        // generic braided dimensions match the closed table on every pair
        for (size_t r = 0; r < b.braidings.size(); ++r) {
            Elem mu = dual_drinfeld(H, b.braidings[r]);
            for (size_t c = 0; c < b.comodule_chars.size(); ++c) {
                INFO(b.braidings[r].label, " on ", b.comodule_chars[c].label);
                CHECK(braided_dimension(mu, b.comodule_chars[c]) == b.closed_dims[r][c]);
            }
        }
    }
}

TEST_CASE("comodules read as modules over the dual give the same dimensions") {
    // V_{01} of A_1_2^- as a left module over the dual algebra; its R-dimension
    // under each braiding-as-dual-R equals mu(chi_V)
    SuzukiParams p{1, 2, -1};
    SuzukiRealization R = build_suzuki_full(p);
    const HopfAlgebraData& H = R.bundle.algebra;
    HopfAlgebraData D = dual_hopf(H);
    // coaction coefficients of V_{01} = span{x22, x21}: rho(v_b) = sum_a v_a (x) t_ab
    Elem x11 = R.x11, x12 = R.x12, x21 = R.x21, x22 = R.x22;
    std::vector<std::vector<Elem>> t = {{x22, x21}, {x12, x11}};
    ModuleRep M;
    M.label = "V(0,1) over the dual";
    M.dim = 2;
    M.action.assign(D.dim, CycMatrix(2, CycVector(2, CycNumber::zero(D.conductor))));
    for (long i = 0; i < D.dim; ++i)
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < 2; ++b) M.action[i][a][b] = t[a][b][i];
    CHECK(validate_module(D, M).ok);
    Character chiM = module_character(D, M);
    const Character& chiV = R.bundle.comodule_chars.back();
    REQUIRE(chiV.dim == 2);
    for (const auto& s : R.bundle.braidings) {
        Elem u = drinfeld_element(D, braiding_as_dual_rmatrix(s));
        Elem mu = dual_drinfeld(H, s);
        INFO(s.label);
        CHECK(r_dimension_from_u(u, chiM) == braided_dimension(mu, chiV));
    }
}

TEST_CASE("a braiding of A is a universal R-matrix of the dual") {
    SuzukiParams p{1, 2, -1};
    AlgebraBundle b = build_suzuki(p);
    HopfAlgebraData D = dual_hopf(b.algebra);
    CHECK(validate_hopf(D).ok);
    for (const auto& s : b.braidings) {
        auto rep = validate_r_matrix(D, braiding_as_dual_rmatrix(s));
        INFO(s.label, ": ", rep.detail);
        CHECK(rep.ok);
    }
    // and a corrupted braiding is not
    BraidingForm bad = b.braidings[0];
    bad.sigma[3][5] = CycNumber::zero(b.algebra.conductor);
    CHECK(!validate_braiding(b.algebra, bad).ok);
    CHECK(!validate_r_matrix(D, braiding_as_dual_rmatrix(bad)).ok);
}
