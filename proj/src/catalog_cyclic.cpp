#include "hopfinv/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfinv {

std::vector<Character> AlgebraBundle::simples_of_degree(long d) const {
    std::vector<Character> out;
    const auto& chars = comodule_side ? comodule_chars : module_chars;
    for (const auto& c : chars)
        if (c.dim == d) out.push_back(c);
    return out;
}

std::string AlgebraBundle::display_name() const { return algebra.name; }

namespace {

std::vector<long> split_params(const std::string& s) {
    std::vector<long> out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '_') throw std::invalid_argument("bad algebra name near '" + s + "'");
        ++i;
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad algebra name near '" + s + "'");
        out.push_back(std::stol(s.substr(i, j - i)));
        i = j;
    }
    return out;
}

} // namespace

AlgebraBundle build_from_name(const std::string& name) {
    auto refuse_large = [](long dim) {
        if (dim > 200)
            throw std::invalid_argument(
                "algebra dimension " + std::to_string(dim) +
                " exceeds the supported bound of 200 (exact tensor checks grow too fast)");
    };
    if (name == "D8") return build_dim8(Dim8::D8);
    if (name == "Q8") return build_dim8(Dim8::Q8);
    if (name == "K8") return build_dim8(Dim8::K8);
    if (name.rfind("CxC", 0) == 0) {
        auto ps = split_params(name.substr(3));
        if (ps.size() != 2) throw std::invalid_argument("expected CxC_m_n");
        refuse_large(ps[0] * ps[1]);
        return build_abelian_product(ps[0], ps[1]);
    }
    if (name.rfind("C", 0) == 0) {
        auto ps = split_params(name.substr(1));
        if (ps.size() != 1) throw std::invalid_argument("expected C_m");
        refuse_large(ps[0]);
        return build_cyclic(ps[0]);
    }
    if (name.rfind("G", 0) == 0) {
        auto ps = split_params(name.substr(1));
        if (ps.size() != 2) throw std::invalid_argument("expected G_N_n");
        refuse_large(4 * ps[0] * ps[1]);
        return build_group_GNn(ps[0], ps[1]);
    }
    if (name.rfind("A", 0) == 0) {
        std::string rest = name.substr(1);
        int lambda = 0;
        if (rest.size() > 2 && rest.compare(rest.size() - 2, 2, "_+") == 0) {
            lambda = 1;
            rest = rest.substr(0, rest.size() - 2);
        } else if (rest.size() > 2 && rest.compare(rest.size() - 2, 2, "_-") == 0) {
            lambda = -1;
            rest = rest.substr(0, rest.size() - 2);
        }
        auto ps = split_params(rest);
        if (ps.size() != 2) throw std::invalid_argument("expected A_N_n or A_N_n_lambda");
        if (lambda == 0) lambda = ps[1] % 2 == 0 ? -1 : 1;  // the A_Nn convention
        refuse_large(4 * ps[0] * ps[1]);
        return build_suzuki(SuzukiParams{ps[0], ps[1], lambda});
    }
    throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::vector<std::string> catalog_families_help() {
    return {
        "C_m        group algebra of the cyclic group of order m (m R-matrices)",
        "CxC_m_n    group algebra of C_m x C_n",
        "D8, Q8, K8 the three noncommutative 8-dimensional algebras (8 R-matrices each)",
        "G_N_n      group algebra of G_Nn = <h,t,w>, N odd, n >= 2 (dim 4nN)",
        "A_N_n_+ / A_N_n_-  Suzuki algebra A_Nn^{+lambda}, N odd, n >= 2 (dim 4nN);",
        "           A_N_n picks lambda by the parity convention (- for even n, + for odd n)",
    };
}

namespace {

// k[C_m] on the idempotent basis E_i = (1/m) sum_j w^{-ij} g^j.
HopfAlgebraData cyclic_algebra(long m) {
    HopfAlgebraData H;
    H.name = "C_" + std::to_string(m);
    H.dim = m;
    H.conductor = m;
    H.mult.assign(m, std::vector<SparseElem>(m));
    for (long i = 0; i < m; ++i)
        H.mult[i][i].push_back({i, CycNumber::one(m)});
    H.unit.assign(m, CycNumber::one(m));
    H.comult.assign(m, {});
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            H.comult[i].push_back({CycNumber::one(m), j, mod_pos(i - j, m)});
    H.counit.assign(m, CycNumber::zero(m));
    H.counit[0] = CycNumber::one(m);
    H.antipode.assign(m, {});
    for (long i = 0; i < m; ++i)
        H.antipode[i].push_back({mod_pos(-i, m), CycNumber::one(m)});
    for (long i = 0; i < m; ++i) H.labels.push_back("E" + std::to_string(i));
    return H;
}

} // namespace

AlgebraBundle build_cyclic(long m) {
    if (m < 1) throw std::invalid_argument("build_cyclic: m must be >= 1");
    AlgebraBundle b;
    b.algebra = cyclic_algebra(m);
    b.family = "C";
    b.par_m = m;
    b.closed_form = "cyclic";
    // R_d = sum w^{dij} E_i (x) E_j
    for (long d = 0; d < m; ++d) {
        RMatrix R;
        R.label = "R_" + std::to_string(d);
        R.entries.assign(m, CycVector(m, CycNumber::zero(m)));
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j)
                R.entries[i][j] = CycNumber::root(m, static_cast<long long>(d) * i * j);
        b.rmatrices.push_back(std::move(R));
        // u_d = sum w^{-d i^2} E_i
        Elem u = b.algebra.zero_elem();
        for (long i = 0; i < m; ++i)
            u[i] = CycNumber::root(m, -static_cast<long long>(d) * i * i);
        b.closed_drinfeld.push_back(std::move(u));
    }
    // characters chi_j(g^p) = w^{jp}, i.e. chi_j(E_i) = delta_ij
    for (long j = 0; j < m; ++j) {
        ModuleRep M;
        M.label = "chi_" + std::to_string(j);
        M.dim = 1;
        M.action.assign(m, CycMatrix(1, CycVector(1, CycNumber::zero(m))));
        M.action[j][0][0] = CycNumber::one(m);
        b.module_chars.push_back(module_character(b.algebra, M));
        b.modules.push_back(std::move(M));
    }
    // dim_{R_d} M_j = w^{-d j^2}
    b.closed_dims.assign(m, CycVector(m, CycNumber::zero(m)));
    for (long d = 0; d < m; ++d)
        for (long j = 0; j < m; ++j)
            b.closed_dims[d][j] = CycNumber::root(m, -static_cast<long long>(d) * j * j);
    return b;
}

AlgebraBundle build_abelian_product(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("build_abelian_product: m, n must be >= 1");
    long mn = m * n;
    AlgebraBundle b;
    HopfAlgebraData H;
    H.name = "CxC_" + std::to_string(m) + "_" + std::to_string(n);
    H.dim = mn;
    H.conductor = mn;
    auto idx = [&](long i, long k) { return mod_pos(i, m) * n + mod_pos(k, n); };
    H.mult.assign(mn, std::vector<SparseElem>(mn));
    for (long a = 0; a < mn; ++a) H.mult[a][a].push_back({a, CycNumber::one(mn)});
    H.unit.assign(mn, CycNumber::one(mn));
    H.comult.assign(mn, {});
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < n; ++k)
            for (long j = 0; j < m; ++j)
                for (long l = 0; l < n; ++l)
                    H.comult[idx(i, k)].push_back({CycNumber::one(mn), idx(j, l), idx(i - j, k - l)});
    H.counit.assign(mn, CycNumber::zero(mn));
    H.counit[0] = CycNumber::one(mn);
    H.antipode.assign(mn, {});
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < n; ++k)
            H.antipode[idx(i, k)].push_back({idx(-i, -k), CycNumber::one(mn)});
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < n; ++k)
            H.labels.push_back("E(" + std::to_string(i) + "," + std::to_string(k) + ")");
    b.algebra = std::move(H);
    b.family = "CxC";
    b.par_m = m;
    b.par_n = n;

    // X(a, c) = { d in [0,a) : d*c = 0 mod a }
    auto xset = [](long a, long c) {
        std::vector<long> out;
        for (long d = 0; d < a; ++d)
            if ((d * c) % a == 0) out.push_back(d);
        return out;
    };
    auto Xmm = xset(m, m), Xnm = xset(n, m), Xmn = xset(m, n), Xnn = xset(n, n);
    for (long p : Xmm)
        for (long q : Xnm)
            for (long r : Xmn)
                for (long s : Xnn) {
                    RMatrix R;
                    std::ostringstream lab;
                    lab << "R_" << p << q << r << s;
                    R.label = lab.str();
                    R.entries.assign(mn, CycVector(mn, CycNumber::zero(mn)));
                    for (long i = 0; i < m; ++i)
                        for (long k = 0; k < n; ++k)
                            for (long j = 0; j < m; ++j)
                                for (long l = 0; l < n; ++l) {
                                    long long e = static_cast<long long>(n) * (p * i * j + r * k * j) +
                                                  static_cast<long long>(m) * (s * k * l + q * i * l);
                                    R.entries[idx(i, k)][idx(j, l)] = CycNumber::root(mn, e);
                                }
                    b.rmatrices.push_back(std::move(R));
                }
    for (long j = 0; j < m; ++j)
        for (long l = 0; l < n; ++l) {
            ModuleRep M;
            M.label = "chi_(" + std::to_string(j) + "," + std::to_string(l) + ")";
            M.dim = 1;
            M.action.assign(mn, CycMatrix(1, CycVector(1, CycNumber::zero(mn))));
            M.action[idx(j, l)][0][0] = CycNumber::one(mn);
            b.module_chars.push_back(module_character(b.algebra, M));
            b.modules.push_back(std::move(M));
        }
    return b;
}

} // namespace hopfinv
