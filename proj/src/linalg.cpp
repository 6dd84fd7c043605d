#include "hopfinv/linalg.hpp"

#include <stdexcept>

namespace hopfinv {

CycMatrix identity_matrix(long n, long conductor) {
    CycMatrix m(n, CycVector(n, CycNumber::zero(conductor)));
    for (long i = 0; i < n; ++i) m[i][i] = CycNumber::one(conductor);
    return m;
}

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
    long n = static_cast<long>(a.size());
    long k = static_cast<long>(b.size());
    long p = k ? static_cast<long>(b[0].size()) : 0;
    CycMatrix c(n, CycVector(p, CycNumber::zero(1)));
    for (long i = 0; i < n; ++i)
        for (long t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (long j = 0; j < p; ++j) {
                if (b[t][j].is_zero()) continue;
                c[i][j] += a[i][t] * b[t][j];
            }
        }
    return c;
}

CycVector mat_vec(const CycMatrix& a, const CycVector& v) {
    CycVector r(a.size(), CycNumber::zero(1));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (a[i][j].is_zero() || v[j].is_zero()) continue;
            r[i] += a[i][j] * v[j];
        }
    return r;
}

namespace {

// Row-reduces a in place; returns pivot columns. Optional companion matrix
// receives the same row operations (used for inversion).
std::vector<long> eliminate(CycMatrix& a, CycMatrix* companion) {
    long rows = static_cast<long>(a.size());
    long cols = rows ? static_cast<long>(a[0].size()) : 0;
    std::vector<long> pivots;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long p = -1;
        for (long i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        if (companion) std::swap((*companion)[p], (*companion)[r]);
        CycNumber inv = a[r][c].inverse();
        for (long j = 0; j < cols; ++j)
            if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
        if (companion)
            for (auto& x : (*companion)[r])
                if (!x.is_zero()) x = x * inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            CycNumber f = a[i][c];
            for (long j = 0; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            if (companion)
                for (long j = 0; j < static_cast<long>((*companion)[i].size()); ++j)
                    if (!(*companion)[r][j].is_zero())
                        (*companion)[i][j] -= f * (*companion)[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

long rank(CycMatrix a) { return static_cast<long>(eliminate(a, nullptr).size()); }

bool invertible(const CycMatrix& a) {
    if (a.empty() || a.size() != a[0].size()) return false;
    return rank(a) == static_cast<long>(a.size());
}

std::optional<CycMatrix> inverse(const CycMatrix& a) {
    if (a.empty() || a.size() != a[0].size()) return std::nullopt;
    long n = static_cast<long>(a.size());
    long cond = a[0][0].conductor();
    CycMatrix work = a;
    CycMatrix comp = identity_matrix(n, cond);
    auto pivots = eliminate(work, &comp);
    if (static_cast<long>(pivots.size()) != n) return std::nullopt;
    return comp;
}

std::optional<CycVector> solve(CycMatrix a, CycVector b) {
    long rows = static_cast<long>(a.size());
    long cols = rows ? static_cast<long>(a[0].size()) : 0;
    for (long i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = eliminate(a, nullptr);
    // pivot in the augmented column means inconsistency
    for (long c : pivots)
        if (c == cols) return std::nullopt;
    if (static_cast<long>(pivots.size()) != cols) return std::nullopt;
    CycVector x(cols, CycNumber::zero(1));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

} // namespace hopfinv
