#include "hopfinv/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfinv {

namespace {

/*
 * k[G_Nn], G_Nn = <h,t,w | t^2 = h^2N = 1, w^n = h^N, tw = w^-1 t, ht = th,
 * hw = wh>, built on the basis {E_ik, t E_ik} where E_ik are the primitive
 * idempotents of k[<h,w>].  Index layout: E_ik at i*2N + k, t E_ik at
 * 2nN + i*2N + k, for i in [0,n) and k in [0,2N).
 */
struct GnnLayout {
    long N, n, dim, half, cond;
    GnnLayout(long N_, long n_) : N(N_), n(n_), dim(4 * n_ * N_), half(2 * n_ * N_), cond(4 * n_ * N_) {}

    // E_{i+n,k} = E_ik and E_{i,k+2N} = E_{i+N,k}
    std::pair<long, long> enorm(long long i, long long k) const {
        long k0 = mod_pos(k, 2 * N);
        long long q = (k - k0) / (2 * N);
        return {mod_pos(i + N * q, n), k0};
    }
    long eidx(long long i, long long k) const {
        auto [i0, k0] = enorm(i, k);
        return i0 * 2 * N + k0;
    }
    long tidx(long long i, long long k) const { return half + eidx(i, k); }
};

HopfAlgebraData gnn_algebra(const GnnLayout& L) {
    HopfAlgebraData H;
    H.name = "G_" + std::to_string(L.N) + "_" + std::to_string(L.n);
    H.dim = L.dim;
    H.conductor = L.cond;
    CycNumber one = CycNumber::one(L.cond);
    H.mult.assign(L.dim, std::vector<SparseElem>(L.dim));
    for (long i = 0; i < L.n; ++i)
        for (long k = 0; k < 2 * L.N; ++k) {
            long e = L.eidx(i, k), te = L.tidx(i, k);
            // E_ik E_ik = E_ik, (t E_ik)(E_ik) = t E_ik
            H.mult[e][e].push_back({e, one});
            H.mult[te][e].push_back({te, one});
            // E_jl (t E_ik) uses E_jl t = t E_{-j-l, l}
            long j = mod_pos(-i - k, L.n);  // the unique j with (E_jl) t = t E_ik at l = k
            H.mult[L.eidx(j, k)][te].push_back({te, one});
            H.mult[L.tidx(j, k)][te].push_back({e, one});
        }
    H.unit.assign(L.dim, CycNumber::zero(L.cond));
    for (long i = 0; i < L.n; ++i)
        for (long k = 0; k < 2 * L.N; ++k) H.unit[L.eidx(i, k)] = one;
    H.comult.assign(L.dim, {});
    for (long i = 0; i < L.n; ++i)
        for (long k = 0; k < 2 * L.N; ++k)
            for (long p = 0; p < 2 * L.N; ++p) {
                long q = mod_pos(k - p, 2 * L.N);
                long shift = (p + q - k) / (2 * L.N) * L.N;  // 0 or N
                for (long a = 0; a < L.n; ++a) {
                    long bcomp = mod_pos(i - shift - a, L.n);
                    H.comult[L.eidx(i, k)].push_back({one, L.eidx(a, p), L.eidx(bcomp, q)});
                    H.comult[L.tidx(i, k)].push_back({one, L.tidx(a, p), L.tidx(bcomp, q)});
                }
            }
    H.counit.assign(L.dim, CycNumber::zero(L.cond));
    H.counit[L.eidx(0, 0)] = one;
    H.counit[L.tidx(0, 0)] = one;
    H.antipode.assign(L.dim, {});
    for (long i = 0; i < L.n; ++i)
        for (long k = 0; k < 2 * L.N; ++k) {
            long se = L.eidx(-(long long)i, -(long long)k);
            H.antipode[L.eidx(i, k)].push_back({se, one});
            // S(t E_ik) = E_{-i,-k} t = t E_{i+k... } computed via E_jl t = t E_{-j-l, l}
            auto [j0, l0] = L.enorm(-(long long)i, -(long long)k);
            H.antipode[L.tidx(i, k)].push_back({L.tidx(-j0 - l0, l0), one});
        }
    for (long i = 0; i < L.n; ++i)
        for (long k = 0; k < 2 * L.N; ++k)
            H.labels.push_back("E(" + std::to_string(i) + "," + std::to_string(k) + ")");
    for (long i = 0; i < L.n; ++i)
        for (long k = 0; k < 2 * L.N; ++k)
            H.labels.push_back("tE(" + std::to_string(i) + "," + std::to_string(k) + ")");
    return H;
}

// w^j h^l (optionally times t on the left) as a dense element over the E_ik.
Elem group_elem(const GnnLayout& L, const HopfAlgebraData& H, long j, long l, bool with_t) {
    Elem v = H.zero_elem();
    for (long i = 0; i < L.n; ++i)
        for (long k = 0; k < 2 * L.N; ++k) {
            long long e = 2LL * L.N * j * (2 * i + k) + 2LL * L.n * k * l;
            v[(with_t ? L.tidx(i, k) : L.eidx(i, k))] = CycNumber::root(L.cond, e);
        }
    return v;
}

} // namespace

AlgebraBundle build_group_GNn(long N, long n) {
    if (N < 1 || N % 2 == 0) throw std::invalid_argument("build_group_GNn: N must be odd >= 1");
    if (n < 2) throw std::invalid_argument("build_group_GNn: n must be >= 2");
    GnnLayout L(N, n);
    AlgebraBundle b;
    b.algebra = gnn_algebra(L);
    b.family = "G";
    b.par_m = N;
    b.par_n = n;
    b.closed_form = "group";
    const HopfAlgebraData& H = b.algebra;
    long cond = L.cond;

    // R_{a q nu}: entries nu^{kl} w^{2aN(2i+k)(2j+l) + 2qkln} on the E-block
    for (long a = 0; a < n; ++a)
        for (long q = 0; q < N; ++q)
            for (int nu = 0; nu < 2; ++nu) {
                RMatrix R;
                std::ostringstream lab;
                lab << "R(a=" << a << ",q=" << q << ",nu=" << (nu ? "-" : "+") << ")";
                R.label = lab.str();
                R.entries.assign(L.dim, CycVector(L.dim, CycNumber::zero(cond)));
                for (long i = 0; i < n; ++i)
                    for (long k = 0; k < 2 * N; ++k)
                        for (long j = 0; j < n; ++j)
                            for (long l = 0; l < 2 * N; ++l) {
                                long long e = 2LL * a * N * (2 * i + k) * (2 * j + l) +
                                              2LL * q * k * l * n;
                                if (nu) e += 2LL * n * N * k * l;  // nu = -1 as w^{2nN}
                                R.entries[L.eidx(i, k)][L.eidx(j, l)] = CycNumber::root(cond, e);
                            }
                b.rmatrices.push_back(std::move(R));
                Elem u = b.algebra.zero_elem();
                for (long i = 0; i < n; ++i)
                    for (long k = 0; k < 2 * N; ++k) {
                        long long e = -2LL * a * N * (2 * i + k) * (2 * i + k) -
                                      2LL * n * q * k * k;
                        if (nu) e += 2LL * n * N * k;
                        u[L.eidx(i, k)] = CycNumber::root(cond, e);
                    }
                b.closed_drinfeld.push_back(std::move(u));
            }
    // n = 2 only: R_d^{(1)} from k[<h,t>] and R_d^{(2)} from k[<h,tw>]
    if (n == 2) {
        for (int fam = 1; fam <= 2; ++fam) {
            // idempotents F_ik = (1/4N) sum_j sum_l (-1)^{ij} w^{-4kl} g^j h^l,
            // g = t resp. tw
            std::vector<Elem> F(2 * 2 * N, H.zero_elem());
            for (long i = 0; i < 2; ++i)
                for (long k = 0; k < 2 * N; ++k) {
                    Elem acc = H.zero_elem();
                    for (long j = 0; j < 2; ++j)
                        for (long l = 0; l < 2 * N; ++l) {
                            Elem g = j == 0 ? group_elem(L, H, 0, l, false)
                                            : group_elem(L, H, fam == 1 ? 0 : 1, l, true);
                            CycNumber c = CycNumber::mono(
                                cond, rat((i * j) % 2 ? -1 : 1, 4 * N), -4LL * k * l);
                            acc = elem_add(acc, elem_scale(c, g));
                        }
                    F[i * 2 * N + k] = std::move(acc);
                }
            for (long d = 0; d < 2 * N; ++d) {
                SparseTensor2 t;
                for (long i = 0; i < 2; ++i)
                    for (long k = 0; k < 2 * N; ++k)
                        for (long j = 0; j < 2; ++j)
                            for (long l = 0; l < 2 * N; ++l) {
                                CycNumber c = CycNumber::mono(
                                    cond, rat((j * k + i * l) % 2 ? -1 : 1), 4LL * d * k * l);
                                for (const auto& [ij2, cc] :
                                     tensor_of(F[i * 2 * N + k], F[j * 2 * N + l]))
                                    tensor_add(t, ij2.first, ij2.second, c * cc);
                            }
                RMatrix R;
                R.label = "R" + std::to_string(fam) + "_" + std::to_string(d);
                R.entries.assign(L.dim, CycVector(L.dim, CycNumber::zero(cond)));
                for (const auto& [ij2, c] : t) R.entries[ij2.first][ij2.second] = c;
                b.rmatrices.push_back(std::move(R));
                // u_d = sum_k w^{-4dk^2} E_k with E_k = sum_i E_ik
                Elem u = b.algebra.zero_elem();
                for (long i = 0; i < 2; ++i)
                    for (long k = 0; k < 2 * N; ++k)
                        u[L.eidx(i, k)] = CycNumber::root(cond, -4LL * d * k * k);
                b.closed_drinfeld.push_back(std::move(u));
            }
        }
    }

    // simple modules: chi_{ijk} (k even) and rho_{jk} (j = 1..n-1, j = k mod 2)
    auto idempotent_action = [&](const std::vector<CycMatrix>& rho_w_h_t, long mdim) {
        // rho_w_h_t = {rho(w), rho(h), rho(t)}
        std::vector<CycMatrix> act(L.dim,
                                   CycMatrix(mdim, CycVector(mdim, CycNumber::zero(cond))));
        std::vector<CycMatrix> wpow(L.n, CycMatrix()), hpow(2 * N, CycMatrix());
        CycMatrix acc = identity_matrix(mdim, cond);
        for (long j = 0; j < L.n; ++j) { wpow[j] = acc; acc = mat_mul(acc, rho_w_h_t[0]); }
        acc = identity_matrix(mdim, cond);
        for (long l = 0; l < 2 * N; ++l) { hpow[l] = acc; acc = mat_mul(acc, rho_w_h_t[1]); }
        for (long i = 0; i < L.n; ++i)
            for (long k = 0; k < 2 * N; ++k) {
                CycMatrix m(mdim, CycVector(mdim, CycNumber::zero(cond)));
                for (long j = 0; j < L.n; ++j)
                    for (long l = 0; l < 2 * N; ++l) {
                        CycNumber c = CycNumber::mono(
                            cond, rat(1, 2 * L.n * N), -2LL * N * j * (k + 2 * i) - 2LL * L.n * k * l);
                        const CycMatrix& base = wpow[j];
                        for (long r2 = 0; r2 < mdim; ++r2)
                            for (long c2 = 0; c2 < mdim; ++c2) {
                                if (base[r2][c2].is_zero()) continue;
                                m[r2][c2] += c * base[r2][c2] * hpow[l][c2][c2];
                            }
                    }
                act[L.eidx(i, k)] = m;
                act[L.tidx(i, k)] = mat_mul(rho_w_h_t[2], m);
            }
        return act;
    };
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2 * N; k += 2) {
                long long hexp = (n % 2 == 0) ? 2LL * k * n : 2LL * (j + k) * n;
                std::vector<CycMatrix> gens = {
                    CycMatrix{{CycNumber::mono(cond, rat(j % 2 ? -1 : 1), 0)}},
                    CycMatrix{{CycNumber::root(cond, hexp)}},
                    CycMatrix{{CycNumber::mono(cond, rat(i % 2 ? -1 : 1), 0)}}};
                ModuleRep M;
                M.label = "chi(" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")";
                M.dim = 1;
                M.action = idempotent_action(gens, 1);
                b.module_chars.push_back(module_character(b.algebra, M));
                b.modules.push_back(std::move(M));
            }
    for (long j = 1; j < n; ++j)
        for (long k = (j % 2); k < 2 * N; k += 2) {
            CycNumber z = CycNumber::zero(cond);
            std::vector<CycMatrix> gens = {
                CycMatrix{{CycNumber::root(cond, 2LL * j * N), z},
                          {z, CycNumber::root(cond, -2LL * j * N)}},
                CycMatrix{{CycNumber::root(cond, 2LL * k * n), z},
                          {z, CycNumber::root(cond, 2LL * k * n)}},
                CycMatrix{{z, CycNumber::one(cond)}, {CycNumber::one(cond), z}}};
            ModuleRep M;
            M.label = "rho(" + std::to_string(j) + "," + std::to_string(k) + ")";
            M.dim = 2;
            M.action = idempotent_action(gens, 2);
            b.module_chars.push_back(module_character(b.algebra, M));
            b.modules.push_back(std::move(M));
        }

    // closed R-dimensions per (R-matrix, simple)
    long rcount = static_cast<long>(b.rmatrices.size());
    long scount = static_cast<long>(b.modules.size());
    b.closed_dims.assign(rcount, CycVector(scount, CycNumber::zero(cond)));
    long ridx = 0;
    auto fill_dims_for = [&](long a, long q, int nu, long row) {
        long col = 0;
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                for (long k = 0; k < 2 * N; k += 2) {
                    long long e;
                    long sign = 0;
                    if (n % 2 == 0) {
                        e = -2LL * n * q * k * k;
                    } else {
                        e = -2LL * n * q * (j + k) * (j + k);
                        sign = (nu ? j : 0) + a * j;  // nu^j (-1)^{aj}
                    }
                    b.closed_dims[row][col++] =
                        CycNumber::mono(cond, rat(sign % 2 ? -1 : 1), e);
                }
        for (long j = 1; j < n; ++j)
            for (long k = (j % 2); k < 2 * N; k += 2) {
                long long e = -2LL * n * q * k * k - 2LL * N * a * j * j;
                long sign = nu ? k : 0;  // nu^k
                b.closed_dims[row][col++] =
                    CycNumber::mono(cond, rat(sign % 2 ? -2 : 2), e);
            }
    };
    for (long a = 0; a < n; ++a)
        for (long q = 0; q < N; ++q)
            for (int nu = 0; nu < 2; ++nu)
                fill_dims_for(a, q, nu, ridx++);
    if (n == 2) {
        for (int fam = 1; fam <= 2; ++fam)
            for (long d = 0; d < 2 * N; ++d) {
                long col = 0;
                for (long i = 0; i < 2; ++i)
                    for (long j = 0; j < 2; ++j)
                        for (long k = 0; k < 2 * N; k += 2)
                            b.closed_dims[ridx][col++] = CycNumber::root(cond, -4LL * d * k * k);
                for (long j = 1; j < n; ++j)
                    for (long k = (j % 2); k < 2 * N; k += 2)
                        b.closed_dims[ridx][col++] =
                            CycNumber::mono(cond, rat(2), -4LL * d * k * k);
                ++ridx;
            }
    }
    return b;
}

} // namespace hopfinv
