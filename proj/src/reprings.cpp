#include "hopfinv/reprings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfinv {

FusionRing fusion_ring(const AlgebraBundle& b) {
    if (b.modules.empty())
        throw std::invalid_argument("fusion_ring: bundle " + b.algebra.name +
                                    " carries no module-side simples");
    const HopfAlgebraData& H = b.algebra;
    FusionRing f;
    f.rank = static_cast<long>(b.modules.size());
    for (const auto& M : b.modules) {
        f.labels.push_back(M.label);
        f.dims.push_back(M.dim);
    }
    f.unit = -1;
    for (long i = 0; i < f.rank; ++i)
        if (elem_equal(b.module_chars[i].values, H.counit)) f.unit = i;
    if (f.unit < 0) throw std::logic_error("fusion_ring: no trivial simple found");
    f.nmat.assign(f.rank, std::vector<std::vector<long>>(f.rank, std::vector<long>(f.rank, 0)));
    for (long i = 0; i < f.rank; ++i)
        for (long j = 0; j < f.rank; ++j) {
            Character prod;
            prod.label = "prod";
            prod.dim = f.dims[i] * f.dims[j];
            prod.values = convolution_product(H, b.module_chars[i].values,
                                              b.module_chars[j].values);
            auto mults = decompose_character(H, prod, b.module_chars);
            if (!mults)
                throw std::logic_error("fusion_ring: tensor character does not decompose");
            f.nmat[i][j] = *mults;
        }
    // star from the contragredient character chi_{M*}(x) = chi_M(S(x))
    f.star.assign(f.rank, -1);
    for (long i = 0; i < f.rank; ++i) {
        Elem vals = H.zero_elem();
        for (long x = 0; x < H.dim; ++x)
            for (const auto& [k, c] : H.antipode[x]) vals[x] += c * b.module_chars[i].values[k];
        for (long j = 0; j < f.rank; ++j)
            if (elem_equal(vals, b.module_chars[j].values)) f.star[i] = j;
        if (f.star[i] < 0)
            throw std::logic_error("fusion_ring: dual of " + f.labels[i] + " is not simple");
    }
    return f;
}

std::vector<long> ring_basis(const FusionRing& f, long i) {
    std::vector<long> v(f.rank, 0);
    v[i] = 1;
    return v;
}

std::vector<long> ring_mul(const FusionRing& f, const std::vector<long>& x,
                           const std::vector<long>& y) {
    std::vector<long> out(f.rank, 0);
    for (long i = 0; i < f.rank; ++i) {
        if (x[i] == 0) continue;
        for (long j = 0; j < f.rank; ++j) {
            if (y[j] == 0) continue;
            for (long k = 0; k < f.rank; ++k) out[k] += x[i] * y[j] * f.nmat[i][j][k];
        }
    }
    return out;
}

ValidationReport check_fusion_axioms(const FusionRing& f) {
    for (long j = 0; j < f.rank; ++j)
        for (long k = 0; k < f.rank; ++k) {
            if (f.nmat[f.unit][j][k] != (j == k ? 1 : 0))
                return ValidationReport::fail("unit row is not the identity");
            if (f.nmat[j][f.unit][k] != (j == k ? 1 : 0))
                return ValidationReport::fail("unit column is not the identity");
        }
    for (long i = 0; i < f.rank; ++i) {
        if (f.star[f.star[i]] != i) return ValidationReport::fail("star is not involutive");
    }
    if (f.star[f.unit] != f.unit) return ValidationReport::fail("star moves the unit");
    // star is an anti-automorphism: N[i][j][k] = N[j*][i*][k*]
    for (long i = 0; i < f.rank; ++i)
        for (long j = 0; j < f.rank; ++j)
            for (long k = 0; k < f.rank; ++k)
                if (f.nmat[i][j][k] != f.nmat[f.star[j]][f.star[i]][f.star[k]])
                    return ValidationReport::fail("star is not an anti-automorphism");
    return ValidationReport::pass();
}

ValidationReport check_frobenius_perron(const FusionRing& f) {
    for (long i = 0; i < f.rank; ++i)
        for (long j = 0; j < f.rank; ++j) {
            long sum = 0;
            for (long k = 0; k < f.rank; ++k) sum += f.nmat[i][j][k] * f.dims[k];
            if (sum != f.dims[i] * f.dims[j]) {
                std::ostringstream out;
                out << "Frobenius-Perron identity fails at (" << f.labels[i] << ", "
                    << f.labels[j] << ")";
                return ValidationReport::fail(out.str());
            }
        }
    return ValidationReport::pass();
}

namespace {

long find_label(const FusionRing& f, const std::string& lab) {
    for (long i = 0; i < f.rank; ++i)
        if (f.labels[i] == lab) return i;
    throw std::invalid_argument("check_presentation: missing simple " + lab);
}

std::string lbl_chi(long i, long j, long k) {
    return "chi(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::string lbl_rho(long j, long k) {
    return "rho(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

} // namespace

ValidationReport check_presentation(long N, long n, const FusionRing& f) {
    auto vec_eq = [](const std::vector<long>& a, const std::vector<long>& b) { return a == b; };
    auto pw = [&](const std::vector<long>& x, long e) {
        std::vector<long> r = ring_basis(f, f.unit);
        for (long i = 0; i < e; ++i) r = ring_mul(f, r, x);
        return r;
    };
    std::vector<long> one = ring_basis(f, f.unit);
    std::vector<long> a = ring_basis(f, find_label(f, lbl_chi(1, 0, 0)));
    std::vector<long> bb = ring_basis(f, find_label(f, lbl_chi(0, 1, 0)));
    std::vector<long> c =
        n % 2 == 0 ? ring_basis(f, find_label(f, lbl_chi(0, 0, mod_pos(2, 2 * N)))) : one;
    std::vector<std::vector<long>> x(n + 1);
    for (long i = 1; i < n; ++i) x[i] = ring_basis(f, find_label(f, lbl_rho(i, i % 2)));
    x[0] = ring_mul(f, one, one);
    for (long k = 0; k < f.rank; ++k) x[0][k] += a[k];  // x_0 = 1 + a
    x[n] = ring_mul(f, bb, x[0]);                       // x_n = b(1 + a)
    auto xent = [&](long e) {
        e = mod_pos(e, 2 * n);
        if (e > n) e = 2 * n - e;
        return x[e];
    };
    auto fail = [&](const std::string& what) {
        return ValidationReport::fail("presentation of Rep at N=" + std::to_string(N) +
                                      ", n=" + std::to_string(n) + ": " + what);
    };
    if (!vec_eq(pw(a, 2), one)) return fail("a^2 != 1");
    if (n % 2 == 0) {
        if (!vec_eq(pw(bb, 2), one)) return fail("b^2 != 1");
        if (!vec_eq(pw(c, N), one)) return fail("c^N != 1");
    } else {
        if (!vec_eq(pw(bb, 2 * N), one)) return fail("b^(2N) != 1");
    }
    for (long i = 1; i < n; ++i) {
        if (!vec_eq(ring_mul(f, a, x[i]), x[i])) return fail("a x_i != x_i");
        bool applies = n % 2 == 0 || i % 2 == 0;
        if (applies && !vec_eq(ring_mul(f, bb, x[i]), xent(n - i)))
            return fail("b x_i != x_{n-i} at i=" + std::to_string(i));
    }
    for (long i = 1; i < n; ++i)
        for (long j = 1; j < n; ++j) {
            std::vector<long> rhs = xent(std::labs(i - j));
            std::vector<long> xe = xent(i + j);
            for (long k = 0; k < f.rank; ++k) rhs[k] += xe[k];
            if ((i * j) % 2 == 1) {
                // c^{(1-(-1)^{ij})/2} = c for even n; b^{1-(-1)^{ij}} = b^2 for odd n
                rhs = n % 2 == 0 ? ring_mul(f, c, rhs) : ring_mul(f, pw(bb, 2), rhs);
            }
            if (!vec_eq(ring_mul(f, x[i], x[j]), rhs))
                return fail("x_i x_j relation at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
    // star behavior on generators
    auto star_of = [&](const std::vector<long>& v) {
        std::vector<long> out(f.rank, 0);
        for (long i = 0; i < f.rank; ++i) out[f.star[i]] += v[i];
        return out;
    };
    if (!vec_eq(star_of(a), a)) return fail("a* != a");
    if (n % 2 == 0) {
        if (!vec_eq(star_of(bb), bb)) return fail("b* != b");
        if (!vec_eq(star_of(c), pw(c, N - 1))) return fail("c* != c^-1");
        for (long i = 1; i < n; ++i) {
            std::vector<long> expect = i % 2 == 0 ? x[i] : ring_mul(f, pw(c, N - 1), x[i]);
            if (!vec_eq(star_of(x[i]), expect)) return fail("x_i* relation at i=" + std::to_string(i));
        }
    } else {
        if (!vec_eq(star_of(bb), pw(bb, 2 * N - 1))) return fail("b* != b^-1");
        for (long i = 1; i < n; ++i) {
            std::vector<long> expect = i % 2 == 0 ? x[i] : ring_mul(f, pw(bb, 2 * N - 2), x[i]);
            if (!vec_eq(star_of(x[i]), expect)) return fail("x_i* relation at i=" + std::to_string(i));
        }
    }
    return ValidationReport::pass();
}

namespace {

long order_in_table(const std::vector<std::vector<long>>& t, long id, long g) {
    long x = g, ord = 1;
    while (x != id) {
        x = t[x][g];
        ++ord;
        if (ord > static_cast<long>(t.size())) throw std::logic_error("order_in_table diverged");
    }
    return ord;
}

std::string identify_group(const GroupTable& g) {
    long order = static_cast<long>(g.table.size());
    long id = -1;
    // the identity is the unique e with e*x = x for all x
    for (long i = 0; i < order; ++i) {
        bool ok = true;
        for (long j = 0; j < order; ++j)
            if (g.table[i][j] != j) { ok = false; break; }
        if (ok) { id = i; break; }
    }
    if (id < 0) return "not a group";
    if (!g.commutative) {
        // SA_{2m} = <b, c | b^2 = c^m = 1, cb = bc^{m/2+1}> with m = order/2
        long m = order / 2;
        for (long bbi = 0; bbi < order; ++bbi) {
            if (bbi == id || order_in_table(g.table, id, bbi) != 2) continue;
            for (long cci = 0; cci < order; ++cci) {
                if (order_in_table(g.table, id, cci) != m) continue;
                // cb = b c^{m/2+1}
                long cb = g.table[cci][bbi];
                long cpw = id;
                for (long e = 0; e < m / 2 + 1; ++e) cpw = g.table[cpw][cci];
                if (cb != g.table[bbi][cpw]) continue;
                // <b, c> generates: closure of the two
                std::vector<char> in(order, 0);
                std::vector<long> stack{id};
                in[id] = 1;
                while (!stack.empty()) {
                    long x = stack.back();
                    stack.pop_back();
                    for (long y : {g.table[x][bbi], g.table[x][cci]})
                        if (!in[y]) { in[y] = 1; stack.push_back(y); }
                }
                if (std::count(in.begin(), in.end(), 1) == order)
                    return "SA_" + std::to_string(order);
            }
        }
        return "noncommutative, unidentified";
    }
    for (long i = 0; i < order; ++i)
        if (order_in_table(g.table, id, i) == order) return "C_" + std::to_string(order);
    // C_2 x C_{order/2}: a maximal-order element plus an involution outside it
    for (long i = 0; i < order; ++i) {
        if (order_in_table(g.table, id, i) != order / 2) continue;
        std::vector<char> in(order, 0);
        long x = id;
        for (long e = 0; e < order / 2; ++e) { in[x] = 1; x = g.table[x][i]; }
        for (long j = 0; j < order; ++j)
            if (!in[j] && order_in_table(g.table, id, j) == 2)
                return "C_2 x C_" + std::to_string(order / 2);
    }
    return "commutative, unidentified";
}

GroupTable table_from_elements(const std::vector<std::string>& labels,
                               const std::vector<Elem>& elems,
                               const std::function<Elem(const Elem&, const Elem&)>& mul) {
    GroupTable g;
    g.labels = labels;
    long n = static_cast<long>(elems.size());
    g.table.assign(n, std::vector<long>(n, -1));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Elem p = mul(elems[i], elems[j]);
            for (long k = 0; k < n; ++k)
                if (elem_equal(p, elems[k])) { g.table[i][j] = k; break; }
            if (g.table[i][j] < 0)
                throw std::logic_error("group table: product of " + labels[i] + " and " +
                                       labels[j] + " left the set");
        }
    g.commutative = true;
    for (long i = 0; i < n && g.commutative; ++i)
        for (long j = 0; j < n; ++j)
            if (g.table[i][j] != g.table[j][i]) { g.commutative = false; break; }
    g.identified = identify_group(g);
    return g;
}

} // namespace

GroupTable grouplikes(const AlgebraBundle& b) {
    std::vector<Elem> elems;
    std::vector<std::string> labels;
    for (const auto& chi : b.comodule_chars)
        if (chi.dim == 1) {
            elems.push_back(chi.values);
            labels.push_back(chi.label);
        }
    if (elems.empty()) throw std::invalid_argument("grouplikes: no group-like list in bundle");
    const HopfAlgebraData& H = b.algebra;
    return table_from_elements(labels, elems,
                               [&](const Elem& x, const Elem& y) { return H.mul(x, y); });
}

GroupTable dual_grouplikes(const AlgebraBundle& b) {
    if (b.family != "A")
        throw std::invalid_argument("dual_grouplikes: expected an A_N_n bundle");
    const HopfAlgebraData& H = b.algebra;
    long N = b.par_m, n = b.par_n;
    long cond = H.conductor;
    // candidate algebra maps, by their values on h, w, t
    struct Cand { CycNumber h, w, t; std::string label; };
    std::vector<Cand> cands;
    auto mk = [&](long i, long j, long k, bool with_j) {
        Cand c{CycNumber::root(cond, 2LL * n * k),
               with_j ? CycNumber::mono(cond, rat(j % 2 ? -1 : 1), 0)
                      : (b.par_lambda == 1 ? CycNumber::mono(cond, rat(k % 2 ? -1 : 1), 0)
                                           : CycNumber::one(cond)),
               CycNumber::mono(cond, rat(i % 2 ? -1 : 1), 0),
               ""};
        std::ostringstream lab;
        if (with_j) lab << "chi(" << i << "," << j << "," << k << ")";
        else lab << "chi(" << i << "," << k << ")";
        c.label = lab.str();
        return c;
    };
    if (n % 2 == 0) {
        long kstep = b.par_lambda == 1 ? 1 : 2;  // all k for ++, even k for +-
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                for (long k = 0; k < 2 * N; k += kstep) cands.push_back(mk(i, j, k, true));
    } else {
        for (long i = 0; i < 2; ++i)
            for (long k = 0; k < 2 * N; ++k) cands.push_back(mk(i, k, k, false));
    }
    // realize each candidate as a functional on the group basis and verify
    // it is an algebra map
    std::vector<Elem> funcs;
    std::vector<std::string> labels;
    for (const auto& c : cands) {
        // locate the generators, then propagate the candidate's values over
        // the whole group by right-multiplication
        long ih = -1, iw = -1, it = -1, iunit = -1;
        for (long idx = 0; idx < H.dim; ++idx) {
            if (H.label(idx) == "h") ih = idx;
            if (H.label(idx) == "w") iw = idx;
            if (H.label(idx) == "t") it = idx;
            if (H.label(idx) == "1") iunit = idx;
        }
        if (ih < 0 || iw < 0 || it < 0 || iunit < 0)
            throw std::logic_error("dual_grouplikes: generator labels missing");
        std::vector<char> seen(H.dim, 0);
        std::vector<long> stack{iunit};
        Elem f = H.zero_elem();
        f[iunit] = CycNumber::one(cond);
        seen[iunit] = 1;
        while (!stack.empty()) {
            long x = stack.back();
            stack.pop_back();
            for (auto [gen, val] : {std::pair<long, CycNumber>{ih, c.h}, {iw, c.w}, {it, c.t}}) {
                const auto& row = H.mult[x][gen];
                if (row.size() != 1 || !row[0].c.is_one())
                    throw std::logic_error("dual_grouplikes: non-group multiplication");
                long y = row[0].index;
                if (!seen[y]) {
                    seen[y] = 1;
                    f[y] = f[x] * val;
                    stack.push_back(y);
                }
            }
        }
        // algebra map check: f(xy) = f(x) f(y) on all basis pairs
        bool ok = true;
        for (long i = 0; i < H.dim && ok; ++i)
            for (long j = 0; j < H.dim && ok; ++j) {
                const auto& row = H.mult[i][j];
                if (f[row[0].index] != f[i] * f[j]) ok = false;
            }
        if (!ok)
            throw std::logic_error("dual_grouplikes: candidate " + c.label +
                                   " is not an algebra map");
        funcs.push_back(std::move(f));
        labels.push_back(c.label);
    }
    // deduplicate (distinct parameter triples can induce equal functionals)
    {
        std::vector<Elem> uf;
        std::vector<std::string> ul;
        for (size_t i = 0; i < funcs.size(); ++i) {
            bool dup = false;
            for (const auto& e : uf)
                if (elem_equal(e, funcs[i])) { dup = true; break; }
            if (!dup) {
                uf.push_back(funcs[i]);
                ul.push_back(labels[i]);
            }
        }
        funcs = std::move(uf);
        labels = std::move(ul);
    }
    return table_from_elements(labels, funcs, [&](const Elem& x, const Elem& y) {
        return convolution_product(H, x, y);
    });
}

bool gram_nondegenerate(const SuzukiParams& p, long long alpha_exp, long long beta_exp) {
    BraidingForm s = sigma_group_values(p, alpha_exp, beta_exp);
    return invertible(s.sigma);
}

bool gram_criterion(const SuzukiParams& p, long long alpha_exp, long long beta_exp) {
    if (p.lambda == 1 && p.n % 2 == 0) return false;  // all braidings degenerate
    long cond = 4 * p.n * p.N;
    RootOfUnity xi(cond, alpha_exp + beta_exp), eta(cond, alpha_exp - beta_exp);
    long eta_target = p.lambda == 1 ? p.n : 2 * p.n;
    return xi.order() == p.N && eta.order() == eta_target;
}

SelfDualityReport self_duality_report(long N, long n, int lambda) {
    if (N < 1 || N % 2 == 0) throw std::invalid_argument("self_duality_report: N must be odd");
    SelfDualityReport rep;
    rep.N = N;
    rep.n = n;
    rep.lambda = lambda;
    SuzukiParams p{N, n, lambda};
    if (lambda == -1 || n % 2 == 1) {
        rep.self_dual = true;
        long alpha = lambda == -1 ? N + 2 * n : 2 * N + 2 * n;
        long beta = lambda == -1 ? 2 * n - N : 2 * n - 2 * N;
        rep.witness = {mod_pos(alpha, 4 * n * N), mod_pos(beta, 4 * n * N)};
        bool nondeg = gram_nondegenerate(p, alpha, beta);
        std::ostringstream out;
        out << "self-dual: sigma(alpha=z^" << rep.witness->first << ", beta=z^"
            << rep.witness->second << ") is " << (nondeg ? "non-degenerate" : "DEGENERATE (BUG)");
        rep.detail = out.str();
        if (!nondeg) throw std::logic_error("self_duality_report: witness braiding degenerates");
        return rep;
    }
    rep.self_dual = false;
    AlgebraBundle b = build_suzuki(p);
    GroupTable ga = grouplikes(b);
    GroupTable gd = dual_grouplikes(b);
    std::ostringstream out;
    out << "not self-dual: G(A) = " << ga.identified << " is commutative but G(A*) = "
        << gd.identified << " is noncommutative";
    rep.detail = out.str();
    if (ga.commutative == gd.commutative)
        throw std::logic_error("self_duality_report: expected commutativity obstruction");
    return rep;
}

} // namespace hopfinv
