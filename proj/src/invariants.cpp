#include "hopfinv/invariants.hpp"

#include <numeric>

#include <sstream>
#include <stdexcept>

namespace hopfinv {

namespace {

void add_sqrt_roots(RootMultiset& rs, long m, long long e, long mult) {
    // roots of x^2 = w^e at conductor m (e even)
    if (e % 2 != 0) throw std::logic_error("closed form: odd exponent under a square root");
    rs.add(RootOfUnity(m, e / 2), mult);
    rs.add(RootOfUnity(m, e / 2 + m / 2), mult);
}

void add_fourth_roots(RootMultiset& rs, long m, long long e, long mult) {
    if (e % 4 != 0 || m % 4 != 0)
        throw std::logic_error("closed form: exponent not divisible by 4");
    for (long j = 0; j < 4; ++j) rs.add(RootOfUnity(m, e / 4 + j * (m / 4)), mult);
}

RootMultiset closed_cyclic(long m, long d) {
    RootMultiset rs;
    rs.conductor = m;
    if (d != 1) return rs;  // no simples of higher degree: the polynomial 1
    for (long r = 0; r < m; ++r)
        for (long j = 0; j < m; ++j) rs.add(RootOfUnity(m, -static_cast<long long>(r) * j * j));
    return rs;
}

RootMultiset closed_dim8(const std::string& family, long d) {
    RootMultiset rs;
    rs.conductor = 8;
    auto put = [&](long e, long mult) { rs.counts[e] += mult; };
    if (d == 1) {
        if (family == "K8") { put(0, 16); put(4, 16); }
        else put(0, 32);
        return rs;
    }
    if (d == 2) {
        if (family == "D8") { put(0, 3); put(4, 3); put(2, 1); put(6, 1); }
        if (family == "Q8") { put(0, 1); put(4, 1); put(2, 3); put(6, 3); }
        if (family == "K8") { put(0, 2); put(4, 2); put(1, 1); put(3, 1); put(5, 1); put(7, 1); }
        return rs;
    }
    return rs;
}

RootMultiset closed_group(long N, long n, long d) {
    long m = 4 * n * N;
    RootMultiset rs;
    rs.conductor = m;
    if (d == 1) {
        if (n % 2 == 1) {
            for (long s = 0; s < N; ++s)
                for (long q = 0; q < N; ++q) {
                    rs.add(RootOfUnity(m, -8LL * n * q * s * s), 4 * n);
                    add_sqrt_roots(rs, m, -4LL * n * q * (2 * s + 1) * (2 * s + 1), 2 * n);
                }
        } else {
            long mult = n == 2 ? 32 : 8 * n;
            for (long s = 0; s < N; ++s)
                for (long q = 0; q < N; ++q)
                    rs.add(RootOfUnity(m, -8LL * n * q * s * s), mult);
        }
        return rs;
    }
    if (d == 2) {
        long eps = n % 2;
        if (n >= 3) {
            for (long s = 0; s < N; ++s)
                for (long t = 1; t <= (n - eps) / 2; ++t)
                    for (long a = 0; a < n; ++a)
                        for (long q = 0; q < N; ++q)
                            add_sqrt_roots(rs, m,
                                           -4LL * (n * q * (2 * s + 1) * (2 * s + 1) +
                                                   N * a * (2 * t - 1) * (2 * t - 1)),
                                           1);
            for (long s = 0; s < N; ++s)
                for (long t = 1; t <= (n - 2 + eps) / 2; ++t)
                    for (long a = 0; a < n; ++a)
                        for (long q = 0; q < N; ++q)
                            rs.add(RootOfUnity(m, -8LL * (n * q * s * s + N * a * t * t)), 2);
        } else {
            for (long s = 0; s < N; ++s)
                for (long q = 0; q < N; ++q) {
                    add_fourth_roots(rs, m, -16LL * q * (2 * s + 1) * (2 * s + 1), 1);
                    add_sqrt_roots(rs, m, -8LL * q * (2 * s + 1) * (2 * s + 1), 2);
                }
        }
        return rs;
    }
    return rs;
}

RootMultiset closed_suzuki(long N, long n, int lambda, long d) {
    long m = 4 * n * N;
    long dl = (1 - lambda) / 2;  // 0 for +, 1 for -
    RootMultiset rs;
    rs.conductor = m;
    if (d == 1) {
        if (n % 2 == 1) {
            for (long s = 0; s < N; ++s)
                for (long i = 0; i < N; ++i) {
                    rs.add(RootOfUnity(m, -8LL * n * i * s * s), 4 * n);
                    add_sqrt_roots(
                        rs, m, -4LL * i * n * (2 * s + 1) * (2 * s + 1) + 2LL * n * N * dl, 2 * n);
                }
        } else if (n >= 4) {
            for (long s = 0; s < N; ++s)
                for (long i = 0; i < N; ++i) {
                    rs.add(RootOfUnity(m, -8LL * n * i * s * s), 4 * n);
                    rs.add(RootOfUnity(m, -8LL * i * n * s * s + 2LL * n * N * ((n / 2) % 2)),
                           4 * n);
                }
        } else {  // n = 2
            for (long s = 0; s < N; ++s)
                for (long i = 0; i < N; ++i) {
                    rs.add(RootOfUnity(m, -16LL * i * s * s), 16);
                    rs.add(RootOfUnity(m, -8LL * i * s * s + m / 2), 8);
                    rs.add(RootOfUnity(m, -16LL * i * s * s + m / 2), 8);
                }
        }
        return rs;
    }
    if (d == 2) {
        long eps = n % 2;
        if (n >= 3) {
            for (long s = 0; s < N; ++s)
                for (long t = 1; t <= (n - eps) / 2; ++t)
                    for (long i = 0; i < N; ++i)
                        for (long j = 0; j < n; ++j)
                            add_sqrt_roots(rs, m,
                                           -4LL * i * n * (2 * s + 1) * (2 * s + 1) -
                                               2LL * N * (2 * t - 1) * (2 * t - 1) * (2 * j - dl),
                                           1);
            for (long s = 0; s < N; ++s)
                for (long t = 1; t <= (n - 2 + eps) / 2; ++t)
                    for (long i = 0; i < N; ++i)
                        for (long j = 0; j < n; ++j)
                            rs.add(RootOfUnity(m, -8LL * i * n * s * s -
                                                      4LL * N * t * t * (2 * j - dl)),
                                   2);
        } else {  // n = 2
            for (long s = 0; s < N; ++s)
                for (long i = 0; i < N; ++i) {
                    add_fourth_roots(rs, m,
                                     -16LL * i * (2 * s + 1) * (2 * s + 1) + 2LL * n * N, 1);
                    add_sqrt_roots(rs, m, -8LL * i * (2 * s + 1) * (2 * s + 1), 2);
                }
        }
        return rs;
    }
    return rs;
}

} // namespace

RootMultiset invariant_for_module(const AlgebraBundle& b, const Character& simple) {
    RootMultiset rs;
    rs.conductor = b.algebra.conductor;
    CycNumber inv_dim = CycNumber::from_rational(rat(1, simple.dim), b.algebra.conductor);
    if (b.comodule_side) {
        for (const auto& s : b.braidings) {
            Elem mu = dual_drinfeld(b.algebra, s);
            CycNumber v = braided_dimension(mu, simple) * inv_dim;
            auto r = v.as_root_of_unity();
            if (!r)
                throw std::logic_error("normalized braided dimension is not a root of unity: " +
                                       b.algebra.name + ", " + s.label + ", " + simple.label +
                                       " -> " + v.to_string());
            rs.add(*r);
        }
    } else {
        for (const auto& R : b.rmatrices) {
            Elem u = drinfeld_element(b.algebra, R);
            CycNumber v = r_dimension_from_u(u, simple) * inv_dim;
            auto r = v.as_root_of_unity();
            if (!r)
                throw std::logic_error("normalized R-dimension is not a root of unity: " +
                                       b.algebra.name + ", " + R.label + ", " + simple.label +
                                       " -> " + v.to_string());
            rs.add(*r);
        }
    }
    return rs;
}

RootMultiset generic_invariant(const AlgebraBundle& b, long d) {
    RootMultiset rs;
    rs.conductor = b.algebra.conductor;
    auto simples = b.simples_of_degree(d);
    if (simples.empty()) return rs;  // P^(d) = 1
    // hoist the per-braiding Drinfel'd data out of the module loop
    std::vector<Elem> functionals;
    if (b.comodule_side)
        for (const auto& s : b.braidings) functionals.push_back(dual_drinfeld(b.algebra, s));
    else
        for (const auto& R : b.rmatrices) functionals.push_back(drinfeld_element(b.algebra, R));
    for (const auto& chi : simples) {
        CycNumber inv_dim = CycNumber::from_rational(rat(1, chi.dim), b.algebra.conductor);
        for (size_t k = 0; k < functionals.size(); ++k) {
            CycNumber v = b.comodule_side ? braided_dimension(functionals[k], chi)
                                          : r_dimension_from_u(functionals[k], chi);
            v = v * inv_dim;
            auto r = v.as_root_of_unity();
            if (!r)
                throw std::logic_error("normalized dimension is not a root of unity: " +
                                       b.algebra.name + " on " + chi.label + " -> " +
                                       v.to_string());
            rs.add(*r);
        }
    }
    if (rs.degree() != b.braid_count() * static_cast<long>(simples.size()))
        throw std::logic_error("degree bookkeeping failed for " + b.algebra.name);
    return rs;
}

std::optional<RootMultiset> closed_invariant(const AlgebraBundle& b, long d) {
    if (d < 1 || d > 2) return std::nullopt;
    if (b.closed_form == "cyclic") return closed_cyclic(b.par_m, d);
    if (b.closed_form == "dim8") return closed_dim8(b.family, d);
    if (b.closed_form == "group") return closed_group(b.par_m, b.par_n, d);
    if (b.closed_form == "suzuki")
        return closed_suzuki(b.par_m, b.par_n, b.par_lambda, d);
    return std::nullopt;
}

InvariantResult invariant_for_degree(const AlgebraBundle& b, long d, Path path) {
    InvariantResult out;
    out.algebra = b.algebra.name;
    out.degree = d;
    out.path = path;
    out.of_dual = b.comodule_side && !b.self_dual;
    std::optional<RootMultiset> closed;
    if (path == Path::Closed || path == Path::Both) {
        closed = closed_invariant(b, d);
        if (!closed)
            throw std::invalid_argument("no closed form for " + b.algebra.name + " at degree " +
                                        std::to_string(d));
    }
    if (path == Path::Generic || path == Path::Both) {
        out.roots = generic_invariant(b, d);
        if (closed && !(out.roots == *closed))
            throw std::logic_error("generic and closed-form invariants disagree for " +
                                   b.algebra.name + " at degree " + std::to_string(d));
    } else {
        out.roots = *closed;
    }
    out.factorization = factor_cyclotomic(out.roots);
    return out;
}

CompareResult compare(const AlgebraBundle& A, const AlgebraBundle& B,
                      const std::vector<long>& degrees, Path path) {
    for (const AlgebraBundle* b : {&A, &B})
        if (b->comodule_side && !b->self_dual)
            throw std::invalid_argument(
                b->algebra.name +
                " is not self-dual: its braiding-side product is the dual's invariant, so a "
                "comparison verdict would be unsound");
    CompareResult out;
    out.left = A.algebra.name;
    out.right = B.algebra.name;
    for (long d : degrees) {
        InvariantResult ia = invariant_for_degree(A, d, path);
        InvariantResult ib = invariant_for_degree(B, d, path);
        DegreeVerdict v{d, true, std::nullopt};
        if (!(ia.roots == ib.roots)) {
            v.equal = false;
            out.any_distinct = true;
            long M = std::lcm(ia.roots.conductor, ib.roots.conductor);
            RootMultiset ra = ia.roots.lifted(M), rb = ib.roots.lifted(M);
            auto cnt = [](const RootMultiset& r, long k) {
                auto it = r.counts.find(k);
                return it == r.counts.end() ? 0L : it->second;
            };
            // prefer a root of one polynomial that is not a root of the other;
            // fall back to the first multiplicity mismatch
            for (long k = 0; k < M && !v.witness; ++k)
                if ((cnt(ra, k) == 0) != (cnt(rb, k) == 0)) v.witness = RootOfUnity(M, k).reduced();
            for (long k = 0; k < M && !v.witness; ++k)
                if (cnt(ra, k) != cnt(rb, k)) v.witness = RootOfUnity(M, k).reduced();
        }
        out.degrees.push_back(v);
    }
    return out;
}

std::string root_to_string(const RootOfUnity& r) {
    RootOfUnity q = r.reduced();
    if (q.conductor == 1) return "1";
    if (q.conductor == 2) return "-1";
    std::ostringstream out;
    out << "z" << q.conductor << "^" << q.exponent;
    return out.str();
}

} // namespace hopfinv
