#include "hopfinv/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfinv {

namespace {

/*
 * A_Nn^{+lambda} realized on the group basis {h^i w^k t^p} of
 * G = <h,t,w | t^2 = h^2N = 1, w^n = h^W, tw = w^-1 t, ht = th, hw = wh>
 * with W = (n + (lambda-1)/2) N mod 2N.  The coalgebra structure is
 * generated from
 *   Delta(h) = h(x)h, Delta(w) = w(x)e0 w + w^-1(x)e1 w,
 *   Delta(t) = h^N w t(x)e1 t + t(x)e0 t,
 *   S(h) = h^-1,  S(w) = e0 w^-1 + e1 w,  S(t) = (e0 - e1 w) t,
 * where e0 = (1+h^N)/2 and e1 = (1-h^N)/2.
 */
struct SuzLayout {
    long N, n, dim, cond, W;
    int lambda;
    SuzLayout(const SuzukiParams& p)
        : N(p.N), n(p.n), dim(4 * p.n * p.N), cond(4 * p.n * p.N), lambda(p.lambda) {
        W = mod_pos(static_cast<long long>(n + (lambda - 1) / 2) * N, 2 * N);
    }
    long idx(long long i, long long k, long long p) const {
        long k0 = mod_pos(k, n);
        long long carry = (k - k0) / n;
        long i0 = mod_pos(i + W * carry, 2 * N);
        return (i0 * n + k0) * 2 + mod_pos(p, 2);
    }
    // group law on index triples
    long mul_idx(long i, long k, long p, long j, long l, long q) const {
        long long lp = p ? -l : l;
        return idx(i + j, k + lp, p + q);
    }
    std::string label(long i, long k, long p) const {
        std::string s;
        if (i) s += i == 1 ? "h" : "h^" + std::to_string(i);
        if (k) s += (s.empty() ? "" : "*") + std::string(k == 1 ? "w" : "w^" + std::to_string(k));
        if (p) s += (s.empty() ? "t" : "*t");
        return s.empty() ? "1" : s;
    }
};

HopfAlgebraData suzuki_algebra(const SuzLayout& L) {
    HopfAlgebraData H;
    std::ostringstream nm;
    nm << "A_" << L.N << "_" << L.n << "_" << (L.lambda > 0 ? "+" : "-");
    H.name = nm.str();
    H.dim = L.dim;
    H.conductor = L.cond;
    CycNumber one = CycNumber::one(L.cond);
    H.mult.assign(L.dim, std::vector<SparseElem>(L.dim));
    H.labels.assign(L.dim, "");
    for (long i = 0; i < 2 * L.N; ++i)
        for (long k = 0; k < L.n; ++k)
            for (long p = 0; p < 2; ++p) {
                long a = L.idx(i, k, p);
                H.labels[a] = L.label(i, k, p);
                for (long j = 0; j < 2 * L.N; ++j)
                    for (long l = 0; l < L.n; ++l)
                        for (long q = 0; q < 2; ++q)
                            H.mult[a][L.idx(j, l, q)].push_back(
                                {L.mul_idx(i, k, p, j, l, q), one});
            }
    H.unit.assign(L.dim, CycNumber::zero(L.cond));
    H.unit[L.idx(0, 0, 0)] = one;
    H.counit.assign(L.dim, one);  // eps(h) = eps(w) = eps(t) = 1

    // generator coproducts; e0/e1 expanded so every term is a basis pair
    CycNumber half = CycNumber::mono(L.cond, rat(1, 2), 0);
    CycNumber mhalf = CycNumber::mono(L.cond, rat(-1, 2), 0);
    auto add4 = [&](SparseTensor2& t, long a, long bi, long bk, long bp, const CycNumber& c0,
                    const CycNumber& cN) {
        // a (x) (c0 + cN h^N) h^bi w^bk t^bp
        tensor_add(t, a, L.idx(bi, bk, bp), c0);
        tensor_add(t, a, L.idx(bi + L.N, bk, bp), cN);
    };
    SparseTensor2 dh, dw, dt;
    tensor_add(dh, L.idx(1, 0, 0), L.idx(1, 0, 0), one);
    add4(dw, L.idx(0, 1, 0), 0, 1, 0, half, half);    // w (x) e0 w
    add4(dw, L.idx(0, -1, 0), 0, 1, 0, half, mhalf);  // w^-1 (x) e1 w
    add4(dt, L.idx(L.N, 1, 1), 0, 0, 1, half, mhalf); // h^N w t (x) e1 t
    add4(dt, L.idx(0, 0, 1), 0, 0, 1, half, half);    // t (x) e0 t
    H.comult.assign(L.dim, {});
    SparseTensor2 unit2;
    tensor_add(unit2, L.idx(0, 0, 0), L.idx(0, 0, 0), one);
    SparseTensor2 hw_acc = unit2;
    for (long i = 0; i < 2 * L.N; ++i) {
        SparseTensor2 row_i = hw_acc;
        SparseTensor2 acc = row_i;
        for (long k = 0; k < L.n; ++k) {
            SparseTensor2 with_t = tensor_mult(H, acc, dt);
            for (const auto& [ij, c] : acc)
                H.comult[L.idx(i, k, 0)].push_back({c, ij.first, ij.second});
            for (const auto& [ij, c] : with_t)
                H.comult[L.idx(i, k, 1)].push_back({c, ij.first, ij.second});
            acc = tensor_mult(H, acc, dw);
        }
        hw_acc = tensor_mult(H, hw_acc, dh);
    }

    // antipode from S on generators, extended anti-multiplicatively
    // terms can land on the same basis element (w^-1 = w h^-W at n = 2), so
    // accumulate rather than assign
    Elem Sh = H.zero_elem(), Sw = H.zero_elem(), St = H.zero_elem();
    Sh[L.idx(-1, 0, 0)] += one;
    Sw[L.idx(0, -1, 0)] += half;           // e0 w^-1 + e1 w
    Sw[L.idx(L.N, -1, 0)] += half;
    Sw[L.idx(0, 1, 0)] += half;
    Sw[L.idx(L.N, 1, 0)] += mhalf;
    St[L.idx(0, 0, 1)] += half;            // (e0 - e1 w) t
    St[L.idx(L.N, 0, 1)] += half;
    St[L.idx(0, 1, 1)] += mhalf;
    St[L.idx(L.N, 1, 1)] += half;
    H.antipode.assign(L.dim, {});
    std::vector<Elem> swpow(L.n), shpow(2 * L.N);
    Elem acc = H.basis_elem(L.idx(0, 0, 0));
    for (long k = 0; k < L.n; ++k) { swpow[k] = acc; acc = H.mul(acc, Sw); }
    acc = H.basis_elem(L.idx(0, 0, 0));
    for (long i = 0; i < 2 * L.N; ++i) { shpow[i] = acc; acc = H.mul(acc, Sh); }
    for (long i = 0; i < 2 * L.N; ++i)
        for (long k = 0; k < L.n; ++k) {
            Elem base = H.mul(swpow[k], shpow[i]);  // S(w)^k S(h)^i
            Elem with_t = H.mul(St, base);
            for (long idx2 = 0; idx2 < L.dim; ++idx2) {
                if (!base[idx2].is_zero())
                    H.antipode[L.idx(i, k, 0)].push_back({idx2, base[idx2]});
                if (!with_t[idx2].is_zero())
                    H.antipode[L.idx(i, k, 1)].push_back({idx2, with_t[idx2]});
            }
        }
    return H;
}

} // namespace

std::vector<std::pair<long, long>> sigma_parameter_pairs(const SuzukiParams& p) {
    long cond = 4 * p.n * p.N;
    long dl = (1 - p.lambda) / 2;
    std::vector<std::pair<long, long>> out;
    for (int sign = 0; sign < 2; ++sign)
        for (long i = 0; i < p.N; ++i)
            for (long j = 0; j < p.n; ++j) {
                long long a = 2LL * p.n * i + p.N * (2 * j + dl) + sign * 2LL * p.n * p.N;
                long long b = 2LL * p.n * i - p.N * (2 * j + dl) + sign * 2LL * p.n * p.N;
                out.emplace_back(mod_pos(a, cond), mod_pos(b, cond));
            }
    return out;
}

std::vector<std::pair<long, int>> tau_parameter_pairs(const SuzukiParams& p) {
    std::vector<std::pair<long, int>> out;
    if (p.n != 2) return out;
    for (long i = 0; i < 2 * p.N; ++i) {
        out.emplace_back(mod_pos(4 * i, 8 * p.N), +1);
        out.emplace_back(mod_pos(4 * i, 8 * p.N), -1);
    }
    return out;
}

BraidingForm sigma_group_values(const SuzukiParams& p, long long alpha_exp, long long beta_exp) {
    SuzLayout L(p);
    long cond = L.cond;
    long long xi = alpha_exp + beta_exp;   // exponent of alpha*beta
    long long eta = alpha_exp - beta_exp;  // exponent of alpha/beta
    if (mod_pos(p.N * xi, cond) != 0)
        throw std::invalid_argument("sigma_group_values: (alpha beta)^N != 1");
    long lam_exp = p.lambda == -1 ? 2 * p.n * p.N : 0;
    if (mod_pos(p.n * eta, cond) != lam_exp)
        throw std::invalid_argument("sigma_group_values: (alpha/beta)^n != lambda");
    if ((p.N * p.N - 1) % 2 != 0)
        throw std::logic_error("sigma_group_values: N must be odd");
    BraidingForm s;
    std::ostringstream lab;
    lab << "sigma(a=z^" << mod_pos(alpha_exp, cond) << ",b=z^" << mod_pos(beta_exp, cond) << ")";
    s.label = lab.str();
    s.sigma.assign(L.dim, CycVector(L.dim, CycNumber::zero(cond)));
    for (long i = 0; i < 2 * L.N; ++i)
        for (long k = 0; k < L.n; ++k)
            for (long p2 = 0; p2 < 2; ++p2)
                for (long j = 0; j < 2 * L.N; ++j)
                    for (long l = 0; l < L.n; ++l)
                        for (long q = 0; q < 2; ++q) {
                            long long e;
                            long sg;
                            if (p2 == 0 && q == 0) {
                                e = 2LL * i * j * xi - 2LL * k * l * eta;
                                sg = 0;
                            } else if (p2 == 0 && q == 1) {
                                e = 2LL * i * j * xi - (long long)k * (2 * l - 1) * eta;
                                sg = i + k;
                            } else if (p2 == 1 && q == 0) {
                                e = 2LL * i * j * xi + (2LL * k - 1) * l * eta;
                                sg = j + l;
                            } else {
                                e = (2LL * i * j + (p.N * (long long)p.N - 1) / 2) * xi +
                                    (2LL * k * l - k - l) * eta + alpha_exp;
                                sg = i + j + k + l;
                            }
                            s.sigma[L.idx(i, k, p2)][L.idx(j, l, q)] =
                                CycNumber::mono(cond, rat(sg % 2 ? -1 : 1), e);
                        }
    return s;
}

SuzukiRealization build_suzuki_full(const SuzukiParams& p) {
    if (p.N < 1 || p.N % 2 == 0)
        throw std::invalid_argument("build_suzuki: N must be odd >= 1");
    if (p.n < 2) throw std::invalid_argument("build_suzuki: n must be >= 2");
    if (p.lambda != 1 && p.lambda != -1)
        throw std::invalid_argument("build_suzuki: lambda must be +1 or -1");
    SuzLayout L(p);
    long cond = L.cond;
    SuzukiRealization out;
    AlgebraBundle& b = out.bundle;
    b.algebra = suzuki_algebra(L);
    b.family = "A";
    b.par_m = p.N;
    b.par_n = p.n;
    b.par_lambda = p.lambda;
    b.comodule_side = true;
    b.self_dual = (p.lambda == -1) || (p.n % 2 == 1);
    b.closed_form = b.self_dual ? "suzuki" : "";
    const HopfAlgebraData& H = b.algebra;

    // x generators via the presentation: with N = 2m+1,
    //   x22 = (h^{-m(N+1)} + h^{m(N+1)+1})/2 t,  x12 = (h^{-m(N+1)} - h^{m(N+1)+1})/2 t,
    //   x11 = x22^3 (hw)^-1,  x21 = x12^3 (hw)^-1.
    long m = (p.N - 1) / 2;
    CycNumber half = CycNumber::mono(cond, rat(1, 2), 0);
    CycNumber mhalf = CycNumber::mono(cond, rat(-1, 2), 0);
    Elem x22 = H.zero_elem(), x12 = H.zero_elem();
    long long mm = static_cast<long long>(m) * (p.N + 1);
    x22[L.idx(-mm, 0, 1)] += half;
    x22[L.idx(mm + 1, 0, 1)] += half;
    x12[L.idx(-mm, 0, 1)] += half;
    x12[L.idx(mm + 1, 0, 1)] += mhalf;
    Elem zinv = H.basis_elem(L.idx(-1, -1, 0));  // (hw)^-1 = h^-1 w^-1
    Elem x11 = H.mul(H.mul(H.mul(x22, x22), x22), zinv);
    Elem x21 = H.mul(H.mul(H.mul(x12, x12), x12), zinv);
    out.x11 = x11;
    out.x12 = x12;
    out.x21 = x21;
    out.x22 = x22;

    // x-basis x11^s chi22^t and x12^s chi21^t, s = 1..2N, t = 0..n-1
    // chi_22^t = x22 x11 x22 ... and chi_21^t = x21 x12 x21 ... (t factors)
    std::vector<Elem> chi22(p.n), chi21(p.n);
    chi22[0] = H.basis_elem(L.idx(0, 0, 0));
    chi21[0] = chi22[0];
    for (long t = 1; t < p.n; ++t) {
        chi22[t] = H.mul(chi22[t - 1], t % 2 ? x22 : x11);
        chi21[t] = H.mul(chi21[t - 1], t % 2 ? x21 : x12);
    }
    std::vector<Elem> x11pow(2 * p.N + 2), x12pow(2 * p.N + 2);
    x11pow[0] = H.basis_elem(L.idx(0, 0, 0));
    x12pow[0] = x11pow[0];
    for (long s = 1; s <= 2 * p.N + 1; ++s) {
        x11pow[s] = H.mul(x11pow[s - 1], x11);
        x12pow[s] = H.mul(x12pow[s - 1], x12);
    }
    out.xbasis.clear();
    for (long s = 1; s <= 2 * p.N; ++s)
        for (long t = 0; t < p.n; ++t) out.xbasis.push_back(H.mul(x11pow[s], chi22[t]));
    for (long s = 1; s <= 2 * p.N; ++s)
        for (long t = 0; t < p.n; ++t) out.xbasis.push_back(H.mul(x12pow[s], chi21[t]));
    out.base_change.assign(L.dim, CycVector(L.dim, CycNumber::zero(cond)));
    for (long a = 0; a < L.dim; ++a)
        for (long r = 0; r < L.dim; ++r) out.base_change[r][a] = out.xbasis[a][r];

    // braidings: sigma over I_{+lambda}; for n = 2 additionally tau over J
    for (const auto& [ae, be] : sigma_parameter_pairs(p))
        b.braidings.push_back(sigma_group_values(p, ae, be));
    if (p.n == 2) {
        auto binv_opt = inverse(out.base_change);
        if (!binv_opt) throw std::logic_error("build_suzuki: x-basis is not a basis");
        const CycMatrix& C = *binv_opt;  // group basis vector i = sum_a C[a][i] x_a
        for (const auto& [ge, xs] : tau_parameter_pairs(p)) {
            // tau on the x-basis; only (x11-type, x11-type) pairs are nonzero
            CycMatrix tx(L.dim, CycVector(L.dim, CycNumber::zero(cond)));
            for (long s = 1; s <= 2 * p.N; ++s)
                for (long t = 0; t < 2; ++t)
                    for (long s2 = 1; s2 <= 2 * p.N; ++s2)
                        for (long t2 = 0; t2 < 2; ++t2) {
                            long long e;
                            long sg = 0;  // sign exponent from xi = xs*gamma and lambda
                            long xneg = xs < 0 ? 1 : 0;
                            long lneg = p.lambda < 0 ? 1 : 0;
                            if (t == 0 && t2 == 0) {
                                e = static_cast<long long>(ge) * s * s2;
                            } else if (t == 1 && t2 == 0) {
                                e = static_cast<long long>(ge) * (s * s2 + s2);
                                sg = (xneg + lneg) * s2;
                            } else if (t == 0 && t2 == 1) {
                                e = static_cast<long long>(ge) * (s * s2 + s);
                                sg = xneg * s;
                            } else {
                                e = static_cast<long long>(ge) * (s * s2 + 1 + s + s2);
                                sg = xneg * s + (xneg + lneg) * s2;
                            }
                            tx[(s - 1) * p.n + t][(s2 - 1) * p.n + t2] =
                                CycNumber::mono(cond, rat(sg % 2 ? -1 : 1), e);
                        }
            // transport to the group basis: tau_g = C^T tx C
            CycMatrix ct(L.dim, CycVector(L.dim, CycNumber::zero(cond)));
            for (long i = 0; i < L.dim; ++i)
                for (long j = 0; j < L.dim; ++j) ct[i][j] = C[j][i];
            BraidingForm tau;
            std::ostringstream lab;
            lab << "tau(g=z^" << ge << ",xi=" << (xs > 0 ? "+" : "-") << "g)";
            tau.label = lab.str();
            tau.sigma = mat_mul(mat_mul(ct, tx), C);
            b.braidings.push_back(std::move(tau));
        }
    }
    // dedupe by matrix equality (defensive; the parameter lists are disjoint)
    {
        std::vector<BraidingForm> uniq;
        for (auto& s : b.braidings) {
            bool dup = false;
            for (const auto& u : uniq)
                if (u.sigma == s.sigma) { dup = true; break; }
            if (!dup) uniq.push_back(std::move(s));
        }
        b.braidings = std::move(uniq);
    }

    // comodule characters: 4N group-likes and N(n-1) two-dimensional chi_st
    CycNumber sqrt_lambda = p.lambda == 1 ? CycNumber::one(cond)
                                          : CycNumber::root(cond, (long long)p.n * p.N);
    for (long s = 1; s <= p.N; ++s)
        for (int sign = 0; sign < 2; ++sign) {
            Character g;
            g.dim = 1;
            g.label = "g(" + std::to_string(s) + (sign ? ",-" : ",+") + ")";
            Elem v = sign ? elem_sub(x11pow[2 * s], x12pow[2 * s])
                          : elem_add(x11pow[2 * s], x12pow[2 * s]);
            g.values = std::move(v);
            b.comodule_chars.push_back(std::move(g));
        }
    for (long s = 1; s <= p.N; ++s)
        for (int sign = 0; sign < 2; ++sign) {
            Character g;
            g.dim = 1;
            g.label = "g'(" + std::to_string(s) + (sign ? ",-" : ",+") + ")";
            Elem a = H.mul(x11pow[2 * s + 1], chi22[p.n - 1]);
            Elem c = elem_scale(sqrt_lambda, H.mul(x12pow[2 * s + 1], chi21[p.n - 1]));
            g.values = sign ? elem_sub(a, c) : elem_add(a, c);
            b.comodule_chars.push_back(std::move(g));
        }
    for (long s = 0; s < p.N; ++s)
        for (long t = 1; t < p.n; ++t) {
            Character chi;
            chi.dim = 2;
            chi.label = "V(" + std::to_string(s) + "," + std::to_string(t) + ")";
            chi.values = elem_add(H.mul(x11pow[2 * s + 1], chi22[t - 1]),
                                  H.mul(x11pow[2 * s], chi22[t]));
            b.comodule_chars.push_back(std::move(chi));
        }

    // closed braided dimensions per (braiding, comodule) pair
    long bc = static_cast<long>(b.braidings.size());
    long cc = static_cast<long>(b.comodule_chars.size());
    b.closed_dims.assign(bc, CycVector(cc, CycNumber::zero(cond)));
    long row = 0;
    for (const auto& [ae, be] : sigma_parameter_pairs(p)) {
        long long xi = ae + be;
        long col = 0;
        for (long s = 1; s <= p.N; ++s)
            for (int sign = 0; sign < 2; ++sign)
                b.closed_dims[row][col++] = CycNumber::root(cond, -2LL * s * s * xi);
        for (long s = 1; s <= p.N; ++s)
            for (int sign = 0; sign < 2; ++sign)
                b.closed_dims[row][col++] = CycNumber::root(
                    cond, (-2LL * s * s - 2LL * s * p.n - (long long)p.n * p.n) * xi +
                              (long long)p.n * p.n * ae);
        for (long s = 0; s < p.N; ++s)
            for (long t = 1; t < p.n; ++t)
                b.closed_dims[row][col++] = CycNumber::mono(
                    cond, rat(2),
                    (long long)t * t * ae + (-2LL * s * s - 2LL * s * t - (long long)t * t) * xi);
        ++row;
    }
    if (p.n == 2) {
        for (const auto& [ge, xs] : tau_parameter_pairs(p)) {
            (void)xs;
            long col = 0;
            for (long s = 1; s <= p.N; ++s)
                for (int sign = 0; sign < 2; ++sign)
                    b.closed_dims[row][col++] = CycNumber::root(cond, -4LL * s * s * ge);
            for (long s = 1; s <= p.N; ++s)
                for (int sign = 0; sign < 2; ++sign)
                    b.closed_dims[row][col++] =
                        CycNumber::mono(cond, rat(p.lambda), -4LL * (s + 1) * (s + 1) * ge);
            for (long s = 0; s < p.N; ++s)
                b.closed_dims[row][col++] =
                    CycNumber::mono(cond, rat(2), -(2LL * s + 1) * (2 * s + 1) * ge);
            ++row;
        }
    }

    // module side (for representation rings): the underlying group algebra's
    // simples, available when the group is G_Nn (W = N)
    if (L.W == p.N) {
        auto word_action = [&](const CycMatrix& rw, const CycMatrix& rh, const CycMatrix& rt,
                               long mdim, const std::string& label) {
            ModuleRep M;
            M.label = label;
            M.dim = mdim;
            M.action.assign(L.dim, CycMatrix(mdim, CycVector(mdim, CycNumber::zero(cond))));
            std::vector<CycMatrix> wpow(p.n), hpow(2 * p.N);
            CycMatrix acc = identity_matrix(mdim, cond);
            for (long k = 0; k < p.n; ++k) { wpow[k] = acc; acc = mat_mul(acc, rw); }
            acc = identity_matrix(mdim, cond);
            for (long i = 0; i < 2 * p.N; ++i) { hpow[i] = acc; acc = mat_mul(acc, rh); }
            for (long i = 0; i < 2 * p.N; ++i)
                for (long k = 0; k < p.n; ++k) {
                    CycMatrix base = mat_mul(hpow[i], wpow[k]);
                    M.action[L.idx(i, k, 0)] = base;
                    M.action[L.idx(i, k, 1)] = mat_mul(base, rt);
                }
            return M;
        };
        CycNumber z = CycNumber::zero(cond);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                for (long k = 0; k < 2 * p.N; k += 2) {
                    long long hexp = (p.n % 2 == 0) ? 2LL * k * p.n : 2LL * (j + k) * p.n;
                    CycMatrix rw{{CycNumber::mono(cond, rat(j % 2 ? -1 : 1), 0)}};
                    CycMatrix rh{{CycNumber::root(cond, hexp)}};
                    CycMatrix rt{{CycNumber::mono(cond, rat(i % 2 ? -1 : 1), 0)}};
                    ModuleRep M = word_action(rw, rh, rt, 1,
                                              "chi(" + std::to_string(i) + "," +
                                                  std::to_string(j) + "," + std::to_string(k) + ")");
                    b.module_chars.push_back(module_character(H, M));
                    b.modules.push_back(std::move(M));
                }
        for (long j = 1; j < p.n; ++j)
            for (long k = (j % 2); k < 2 * p.N; k += 2) {
                CycMatrix rw{{CycNumber::root(cond, 2LL * j * p.N), z},
                             {z, CycNumber::root(cond, -2LL * j * p.N)}};
                CycMatrix rh{{CycNumber::root(cond, 2LL * k * p.n), z},
                             {z, CycNumber::root(cond, 2LL * k * p.n)}};
                CycMatrix rt{{z, CycNumber::one(cond)}, {CycNumber::one(cond), z}};
                ModuleRep M = word_action(rw, rh, rt, 2,
                                          "rho(" + std::to_string(j) + "," + std::to_string(k) + ")");
                b.module_chars.push_back(module_character(H, M));
                b.modules.push_back(std::move(M));
            }
    }
    return out;
}

AlgebraBundle build_suzuki(const SuzukiParams& p) { return build_suzuki_full(p).bundle; }

} // namespace hopfinv
