#include "hopfinv/catalog.hpp"

#include <stdexcept>

namespace hopfinv {

namespace {

// Basis words s^a t^b, index a*2+b.  Conductor 8, zeta4 = z^2, omega = z.
constexpr long kDim = 8;
constexpr long kCond = 8;

long widx(long a, long b) { return mod_pos(a, 4) * 2 + mod_pos(b, 2); }

HopfAlgebraData group_algebra_8(bool quaternion, const std::string& name) {
    HopfAlgebraData H;
    H.name = name;
    H.dim = kDim;
    H.conductor = kCond;
    H.mult.assign(kDim, std::vector<SparseElem>(kDim));
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 2; ++b)
            for (long c = 0; c < 4; ++c)
                for (long d = 0; d < 2; ++d) {
                    // t s^c = s^-c t; in Q8 additionally t^2 = s^2
                    long e = a + (b ? -c : c);
                    if (quaternion && b == 1 && d == 1) e += 2;
                    H.mult[widx(a, b)][widx(c, d)].push_back(
                        {widx(e, b + d), CycNumber::one(kCond)});
                }
    H.unit.assign(kDim, CycNumber::zero(kCond));
    H.unit[widx(0, 0)] = CycNumber::one(kCond);
    H.counit.assign(kDim, CycNumber::one(kCond));
    H.labels.assign(kDim, "");
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 2; ++b) {
            std::string lab = a == 0 && b == 0 ? "1" : "";
            if (a == 1) lab += "s";
            if (a > 1) lab += "s^" + std::to_string(a);
            if (b) lab += "t";
            H.labels[widx(a, b)] = lab;
        }
    return H;
}

// group coalgebra structure: Delta(g) = g(x)g, S(g) = g^-1
void group_coalgebra(HopfAlgebraData& H, bool quaternion) {
    H.comult.assign(kDim, {});
    H.antipode.assign(kDim, {});
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 2; ++b) {
            long i = widx(a, b);
            H.comult[i].push_back({CycNumber::one(kCond), i, i});
            // (s^a t^b)^-1
            long inv_a, inv_b = b;
            if (b == 0) inv_a = -a;
            else inv_a = quaternion ? a + 2 : a;  // (s^a t)^2 = t^2 resp. 1
            H.antipode[i].push_back({widx(inv_a, inv_b), CycNumber::one(kCond)});
        }
}

Elem word(const HopfAlgebraData& H, long a, long b) { return H.basis_elem(widx(a, b)); }

Elem epow(const HopfAlgebraData& H, const Elem& x, long e) {
    Elem r = H.unit;
    for (long i = 0; i < e; ++i) r = H.mul(r, x);
    return r;
}

CycNumber zeta4(long k) { return CycNumber::root(kCond, 2LL * k); }

void comult_from_tensors(HopfAlgebraData& H, const SparseTensor2& ds, const SparseTensor2& dt) {
    H.comult.assign(kDim, {});
    SparseTensor2 one = tensor_of(H.unit, H.unit);
    for (long a = 0; a < 4; ++a) {
        SparseTensor2 row = one;
        for (long i = 0; i < a; ++i) row = tensor_mult(H, row, ds);
        for (long b = 0; b < 2; ++b) {
            SparseTensor2 full = b ? tensor_mult(H, row, dt) : row;
            for (const auto& [ij, c] : full) H.comult[widx(a, b)].push_back({c, ij.first, ij.second});
        }
    }
}

void antipode_from_elems(HopfAlgebraData& H, const Elem& Ss, const Elem& St) {
    H.antipode.assign(kDim, {});
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 2; ++b) {
            Elem v = b ? St : H.unit;        // anti-map: S(s^a t^b) = S(t)^b S(s)^a
            v = H.mul(v, epow(H, Ss, a));
            for (long i = 0; i < kDim; ++i)
                if (!v[i].is_zero()) H.antipode[widx(a, b)].push_back({i, v[i]});
        }
}

RMatrix from_tensor(std::string label, const SparseTensor2& t) {
    RMatrix R;
    R.label = std::move(label);
    R.entries.assign(kDim, CycVector(kDim, CycNumber::zero(kCond)));
    for (const auto& [ij, c] : t) R.entries[ij.first][ij.second] = c;
    return R;
}

ModuleRep one_dim_module(long i, long j) {
    // rho(s) = (-1)^i, rho(t) = (-1)^j on basis words s^a t^b
    ModuleRep M;
    M.label = "V" + std::to_string(i) + std::to_string(j);
    M.dim = 1;
    M.action.assign(kDim, CycMatrix(1, CycVector(1, CycNumber::zero(kCond))));
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 2; ++b)
            M.action[widx(a, b)][0][0] =
                CycNumber::mono(kCond, rat((i * a + j * b) % 2 ? -1 : 1), 0);
    return M;
}

ModuleRep two_dim_module(const CycMatrix& rs, const CycMatrix& rt) {
    ModuleRep M;
    M.label = "V";
    M.dim = 2;
    M.action.assign(kDim, CycMatrix(2, CycVector(2, CycNumber::zero(kCond))));
    CycMatrix acc = identity_matrix(2, kCond);
    for (long a = 0; a < 4; ++a) {
        M.action[widx(a, 0)] = acc;
        M.action[widx(a, 1)] = mat_mul(acc, rt);
        acc = mat_mul(acc, rs);
    }
    return M;
}

void attach_modules(AlgebraBundle& b, const CycMatrix& rs, const CycMatrix& rt) {
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) {
            ModuleRep M = one_dim_module(i, j);
            b.module_chars.push_back(module_character(b.algebra, M));
            b.modules.push_back(std::move(M));
        }
    ModuleRep V = two_dim_module(rs, rt);
    b.module_chars.push_back(module_character(b.algebra, V));
    b.modules.push_back(std::move(V));
}

Elem half_mix(const HopfAlgebraData& H, long k1, long k2) {
    // (1/2)(1+zeta4^k1) + (1/2)(1+zeta4^k2) s^2
    Elem u = H.zero_elem();
    u[widx(0, 0)] = scale(rat(1, 2), CycNumber::one(kCond) + zeta4(k1));
    u[widx(2, 0)] = scale(rat(1, 2), CycNumber::one(kCond) + zeta4(k2));
    return u;
}

} // namespace

AlgebraBundle build_dim8(Dim8 which) {
    AlgebraBundle b;
    bool quaternion = which == Dim8::Q8;
    std::string name = which == Dim8::D8 ? "D8" : which == Dim8::Q8 ? "Q8" : "K8";
    b.algebra = group_algebra_8(which == Dim8::Q8, name);
    b.family = name;
    b.closed_form = "dim8";
    HopfAlgebraData& H = b.algebra;

    if (which != Dim8::K8) {
        group_coalgebra(H, quaternion);
        // (i) R-matrices of k[<s>]: R_d = 1/4 sum zeta^{-ik} s^k (x) s^{di}
        for (long d = 0; d < 4; ++d) {
            SparseTensor2 t;
            for (long i = 0; i < 4; ++i)
                for (long k = 0; k < 4; ++k)
                    tensor_add(t, widx(k, 0), widx(d * i, 0), scale(rat(1, 4), zeta4(-i * k)));
            b.rmatrices.push_back(from_tensor("R_" + std::to_string(d), t));
        }
        if (which == Dim8::D8) {
            // (ii) from k[<t, s^2>], (iii) from k[<ts, s^2>]
            for (int fam = 0; fam < 2; ++fam) {
                Elem gen = fam == 0 ? word(H, 0, 1) : H.mul(word(H, 0, 1), word(H, 1, 0));
                for (long d = 0; d < 2; ++d) {
                    SparseTensor2 t;
                    for (long i = 0; i < 2; ++i)
                        for (long j = 0; j < 2; ++j)
                            for (long k = 0; k < 2; ++k)
                                for (long l = 0; l < 2; ++l) {
                                    Elem left = H.mul(epow(H, gen, i), word(H, 2 * k, 0));
                                    Elem right = H.mul(epow(H, gen, l), word(H, 2 * (j + d * l), 0));
                                    CycNumber c =
                                        CycNumber::mono(kCond, rat((i * j + k * l) % 2 ? -1 : 1, 4), 0);
                                    for (const auto& [ij2, cc] : tensor_of(left, right))
                                        tensor_add(t, ij2.first, ij2.second, c * cc);
                                }
                    b.rmatrices.push_back(
                        from_tensor("R_" + std::to_string(4 + 2 * fam + d), t));
                }
            }
        } else {
            // (ii) from k[<t>], (iii) from k[<ts>]: 1/4 sum zeta^{-ik} g^k (x) g^{(2d+1)i}
            for (int fam = 0; fam < 2; ++fam) {
                Elem gen = fam == 0 ? word(H, 0, 1) : H.mul(word(H, 0, 1), word(H, 1, 0));
                for (long d = 0; d < 2; ++d) {
                    SparseTensor2 t;
                    for (long i = 0; i < 4; ++i)
                        for (long k = 0; k < 4; ++k) {
                            Elem left = epow(H, gen, k);
                            Elem right = epow(H, gen, mod_pos((2 * d + 1) * i, 4));
                            for (const auto& [ij2, cc] : tensor_of(left, right))
                                tensor_add(t, ij2.first, ij2.second,
                                           scale(rat(1, 4), zeta4(-i * k)) * cc);
                        }
                    b.rmatrices.push_back(
                        from_tensor("R_" + std::to_string(4 + 2 * fam + d), t));
                }
            }
        }
        // Drinfel'd elements, closed forms
        Elem one = H.unit;
        Elem s2 = word(H, 2, 0);
        Elem A = half_mix(H, -1, 1);  // 1/2(1+zeta^-1) + 1/2(1+zeta) s^2
        Elem B = half_mix(H, 1, -1);
        if (which == Dim8::D8)
            b.closed_drinfeld = {one, A, s2, B, one, s2, one, s2};
        else
            b.closed_drinfeld = {one, A, s2, B, A, B, A, B};
        CycMatrix rs, rt;
        if (which == Dim8::D8) {
            rs = {{CycNumber::zero(kCond), -CycNumber::one(kCond)},
                  {CycNumber::one(kCond), CycNumber::zero(kCond)}};
            rt = {{-CycNumber::one(kCond), CycNumber::zero(kCond)},
                  {CycNumber::zero(kCond), CycNumber::one(kCond)}};
        } else {
            rs = {{zeta4(1), CycNumber::zero(kCond)}, {CycNumber::zero(kCond), zeta4(-1)}};
            rt = {{CycNumber::zero(kCond), -CycNumber::one(kCond)},
                  {CycNumber::one(kCond), CycNumber::zero(kCond)}};
        }
        attach_modules(b, rs, rt);
        return b;
    }

    // K8: the group algebra k[D8] with the Kac-Paljutkin coalgebra structure.
    Elem s = word(H, 1, 0), sinv = word(H, 3, 0), t = word(H, 0, 1), st = word(H, 1, 1);
    Elem e0 = H.zero_elem(), e1 = H.zero_elem();
    e0[widx(0, 0)] = CycNumber::mono(kCond, rat(1, 2), 0);
    e0[widx(2, 0)] = CycNumber::mono(kCond, rat(1, 2), 0);
    e1[widx(0, 0)] = CycNumber::mono(kCond, rat(1, 2), 0);
    e1[widx(2, 0)] = CycNumber::mono(kCond, rat(-1, 2), 0);
    SparseTensor2 ds, dt;
    // Delta(s) = s (x) e0 s + s^-1 (x) e1 s,  Delta(t) = t (x) e0 t + s t (x) e1 t
    for (const auto& [ij, c] : tensor_of(s, H.mul(e0, s))) tensor_add(ds, ij.first, ij.second, c);
    for (const auto& [ij, c] : tensor_of(sinv, H.mul(e1, s))) tensor_add(ds, ij.first, ij.second, c);
    for (const auto& [ij, c] : tensor_of(t, H.mul(e0, t))) tensor_add(dt, ij.first, ij.second, c);
    for (const auto& [ij, c] : tensor_of(st, H.mul(e1, t))) tensor_add(dt, ij.first, ij.second, c);
    comult_from_tensors(H, ds, dt);
    // S(s) = e0 s^-1 + e1 s,  S(t) = e0 t + e1 s t
    Elem Ss = elem_add(H.mul(e0, sinv), H.mul(e1, s));
    Elem St = elem_add(H.mul(e0, t), H.mul(e1, st));
    antipode_from_elems(H, Ss, St);

    // group-likes g = (1+zeta)/2 s + (1-zeta)/2 s^-1 and h likewise with zeta
    // negated.  The minimal R-matrices below force zeta = omega^{-2} for the
    // omega appearing in their coefficients; with omega = z8 that reads
    // zeta = -z8^2, so relative to z8^2 the two coefficients swap.
    CycNumber zeta = -zeta4(1);  // omega^{-2}
    Elem g = elem_add(elem_scale(scale(rat(1, 2), CycNumber::one(kCond) + zeta), s),
                      elem_scale(scale(rat(1, 2), CycNumber::one(kCond) - zeta), sinv));
    Elem h = elem_add(elem_scale(scale(rat(1, 2), CycNumber::one(kCond) - zeta), s),
                      elem_scale(scale(rat(1, 2), CycNumber::one(kCond) + zeta), sinv));
    auto gh_pow = [&](long i, long k) { return H.mul(epow(H, g, i), epow(H, h, k)); };

    // R_pq = 1/4 sum (-1)^{ij+kl} g^i h^k (x) g^{pj+(q+1)l} h^{qj+pl}
    for (long p = 0; p < 2; ++p)
        for (long q = 0; q < 2; ++q) {
            SparseTensor2 tns;
            for (long i = 0; i < 2; ++i)
                for (long j = 0; j < 2; ++j)
                    for (long k = 0; k < 2; ++k)
                        for (long l = 0; l < 2; ++l) {
                            CycNumber c =
                                CycNumber::mono(kCond, rat((i * j + k * l) % 2 ? -1 : 1, 4), 0);
                            Elem left = gh_pow(i, k);
                            Elem right = gh_pow(mod_pos(p * j + (q + 1) * l, 2),
                                                mod_pos(q * j + p * l, 2));
                            for (const auto& [ij2, cc] : tensor_of(left, right))
                                tensor_add(tns, ij2.first, ij2.second, c * cc);
                        }
            b.rmatrices.push_back(
                from_tensor("R_pq(" + std::to_string(p) + "," + std::to_string(q) + ")", tns));
            // u_pq = 1/2 sum (-1)^{(i+p)(l+p)} g^i h^l
            Elem u = H.zero_elem();
            for (long i = 0; i < 2; ++i)
                for (long l = 0; l < 2; ++l) {
                    Elem term = gh_pow(i, l);
                    u = elem_add(u, elem_scale(
                                        CycNumber::mono(kCond, rat((i + p) * (l + p) % 2 ? -1 : 1, 2), 0),
                                        term));
                }
            b.closed_drinfeld.push_back(std::move(u));
        }
    // minimal R-matrices R_l
    for (long l = 0; l < 4; ++l) {
        SparseTensor2 tns;
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                for (long p = 0; p < 2; ++p)
                    for (long q = 0; q < 2; ++q)
                        for (long r = 0; r < 2; ++r)
                            for (long s2 = 0; s2 < 2; ++s2) {
                                long sign = (j * p + i * r +
                                             (j * (i + 1) + l * j + r + s2) * (l * i + p + q)) % 2;
                                CycNumber c = CycNumber::mono(kCond, rat(sign ? -1 : 1, 8),
                                                              (2 * l + 1) * i * j);
                                Elem left = H.mul(epow(H, t, i), gh_pow(p, q));
                                Elem right = H.mul(epow(H, t, j), gh_pow(r, s2));
                                for (const auto& [ij2, cc] : tensor_of(left, right))
                                    tensor_add(tns, ij2.first, ij2.second, c * cc);
                            }
        b.rmatrices.push_back(from_tensor("R_l(" + std::to_string(l) + ")", tns));
        // u_l = (omega^{2l-1}/2)(1 - gh) + (1/2)(g + h)
        Elem u = elem_scale(scale(rat(1, 2), CycNumber::root(kCond, 2 * l - 1)),
                            elem_sub(H.unit, gh_pow(1, 1)));
        u = elem_add(u, elem_scale(CycNumber::mono(kCond, rat(1, 2), 0), elem_add(g, h)));
        b.closed_drinfeld.push_back(std::move(u));
    }
    CycMatrix rs = {{CycNumber::zero(kCond), -CycNumber::one(kCond)},
                    {CycNumber::one(kCond), CycNumber::zero(kCond)}};
    CycMatrix rt = {{-CycNumber::one(kCond), CycNumber::zero(kCond)},
                    {CycNumber::zero(kCond), CycNumber::one(kCond)}};
    attach_modules(b, rs, rt);
    return b;
}

} // namespace hopfinv
