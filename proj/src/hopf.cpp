#include "hopfinv/hopf.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfinv {

void tensor_add(SparseTensor2& t, long i, long j, const CycNumber& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(std::make_pair(i, j), c);
    if (!fresh) it->second += c;
}

namespace {

void tensor2_add(SparseTensor2& t, long i, long j, const CycNumber& c) { tensor_add(t, i, j, c); }

void tensor3_add(SparseTensor3& t, long i, long j, long k, const CycNumber& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(std::make_tuple(i, j, k), c);
    if (!fresh) it->second += c;
}

template <typename T>
void drop_zeros(T& t) {
    for (auto it = t.begin(); it != t.end();)
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

template <typename T>
bool tensors_equal(T a, T b) {
    drop_zeros(a);
    drop_zeros(b);
    return a == b;
}

SparseTensor2 rmatrix_tensor(const RMatrix& R) {
    SparseTensor2 t;
    for (long i = 0; i < static_cast<long>(R.entries.size()); ++i)
        for (long j = 0; j < static_cast<long>(R.entries[i].size()); ++j)
            if (!R.entries[i][j].is_zero()) t[{i, j}] = R.entries[i][j];
    return t;
}

} // namespace

// (b_i (x) b_j) * (b_k (x) b_l) expanded over sparse mult rows.
SparseTensor2 tensor_mult(const HopfAlgebraData& H, const SparseTensor2& a,
                          const SparseTensor2& b) {
    SparseTensor2 out;
    for (const auto& [ij, ca] : a) {
        for (const auto& [kl, cb] : b) {
            const auto& left = H.mult[ij.first][kl.first];
            if (left.empty()) continue;
            const auto& right = H.mult[ij.second][kl.second];
            if (right.empty()) continue;
            CycNumber c = ca * cb;
            for (const auto& [p, cp] : left)
                for (const auto& [q, cq] : right)
                    tensor2_add(out, p, q, c * cp * cq);
        }
    }
    drop_zeros(out);
    return out;
}

SparseTensor2 tensor_of(const Elem& a, const Elem& b) {
    SparseTensor2 t;
    for (long i = 0; i < static_cast<long>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < static_cast<long>(b.size()); ++j)
            if (!b[j].is_zero()) tensor_add(t, i, j, a[i] * b[j]);
    }
    return t;
}

namespace {

SparseTensor2 unit_tensor(const HopfAlgebraData& H) {
    SparseTensor2 t;
    for (long i = 0; i < H.dim; ++i) {
        if (H.unit[i].is_zero()) continue;
        for (long j = 0; j < H.dim; ++j)
            if (!H.unit[j].is_zero()) tensor2_add(t, i, j, H.unit[i] * H.unit[j]);
    }
    return t;
}

std::string tensor2_brief(const HopfAlgebraData& H, const SparseTensor2& t) {
    std::ostringstream out;
    int shown = 0;
    for (const auto& [ij, c] : t) {
        if (shown++ == 3) { out << " ..."; break; }
        out << " + (" << c.to_string() << ")*" << H.label(ij.first) << "(x)"
            << H.label(ij.second);
    }
    return out.str();
}

} // namespace

Elem HopfAlgebraData::basis_elem(long i) const {
    Elem e = zero_elem();
    e[i] = CycNumber::one(conductor);
    return e;
}

Elem HopfAlgebraData::mul(const Elem& a, const Elem& b) const {
    Elem r = zero_elem();
    for (long i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            CycNumber c = a[i] * b[j];
            for (const auto& [k, ck] : mult[i][j]) r[k] += c * ck;
        }
    }
    return r;
}

Elem HopfAlgebraData::apply_antipode(const Elem& a) const {
    Elem r = zero_elem();
    for (long i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& [k, ck] : antipode[i]) r[k] += a[i] * ck;
    }
    return r;
}

CycNumber HopfAlgebraData::counit_of(const Elem& a) const {
    CycNumber r = CycNumber::zero(conductor);
    for (long i = 0; i < dim; ++i)
        if (!a[i].is_zero() && !counit[i].is_zero()) r += a[i] * counit[i];
    return r;
}

SparseTensor2 HopfAlgebraData::comult_of(const Elem& a) const {
    SparseTensor2 t;
    for (long i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& term : comult[i]) tensor2_add(t, term.left, term.right, a[i] * term.c);
    }
    drop_zeros(t);
    return t;
}

std::string HopfAlgebraData::label(long i) const {
    if (i < static_cast<long>(labels.size())) return labels[i];
    return "b" + std::to_string(i);
}

bool elem_is_zero(const Elem& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

bool elem_equal(const Elem& a, const Elem& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Elem elem_add(const Elem& a, const Elem& b) {
    Elem r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Elem elem_sub(const Elem& a, const Elem& b) {
    Elem r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Elem elem_scale(const CycNumber& c, const Elem& a) {
    Elem r = a;
    for (auto& x : r) x = c * x;
    return r;
}

CycNumber functional_apply(const Elem& f, const Elem& a) {
    CycNumber r;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !f[i].is_zero()) r += f[i] * a[i];
    return r;
}

ValidationReport validate_hopf(const HopfAlgebraData& H) {
    long n = H.dim;
    // unit
    for (long i = 0; i < n; ++i) {
        Elem b = H.basis_elem(i);
        if (!elem_equal(H.mul(H.unit, b), b) || !elem_equal(H.mul(b, H.unit), b))
            return ValidationReport::fail("unit axiom fails at basis " + H.label(i));
    }
    // associativity
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const auto& ij = H.mult[i][j];
            for (long k = 0; k < n; ++k) {
                std::map<long, CycNumber> lhs, rhs;
                for (const auto& [p, cp] : ij)
                    for (const auto& [q, cq] : H.mult[p][k]) {
                        auto [it, fresh] = lhs.emplace(q, cp * cq);
                        if (!fresh) it->second += cp * cq;
                    }
                for (const auto& [p, cp] : H.mult[j][k])
                    for (const auto& [q, cq] : H.mult[i][p]) {
                        auto [it, fresh] = rhs.emplace(q, cp * cq);
                        if (!fresh) it->second += cp * cq;
                    }
                drop_zeros(lhs);
                drop_zeros(rhs);
                if (lhs != rhs) {
                    std::ostringstream out;
                    out << "associativity fails at (" << H.label(i) << ", " << H.label(j)
                        << ", " << H.label(k) << ")";
                    return ValidationReport::fail(out.str());
                }
            }
        }
    // counit is an algebra map and satisfies the counit axiom
    if (!H.counit_of(H.unit).is_one())
        return ValidationReport::fail("counit(1) != 1");
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            CycNumber lhs = CycNumber::zero(H.conductor);
            for (const auto& [k, ck] : H.mult[i][j])
                if (!H.counit[k].is_zero()) lhs += ck * H.counit[k];
            if (lhs != H.counit[i] * H.counit[j])
                return ValidationReport::fail("counit not multiplicative at (" + H.label(i) +
                                              ", " + H.label(j) + ")");
        }
    for (long i = 0; i < n; ++i) {
        Elem left = H.zero_elem(), right = H.zero_elem();
        for (const auto& t : H.comult[i]) {
            if (!H.counit[t.left].is_zero()) {
                CycNumber c = t.c * H.counit[t.left];
                left[t.right] += c;
            }
            if (!H.counit[t.right].is_zero()) {
                CycNumber c = t.c * H.counit[t.right];
                right[t.left] += c;
            }
        }
        Elem b = H.basis_elem(i);
        if (!elem_equal(left, b) || !elem_equal(right, b))
            return ValidationReport::fail("counit axiom fails at basis " + H.label(i));
    }
    // coassociativity
    for (long i = 0; i < n; ++i) {
        SparseTensor3 lhs, rhs;
        for (const auto& t : H.comult[i]) {
            for (const auto& s : H.comult[t.left]) tensor3_add(lhs, s.left, s.right, t.right, t.c * s.c);
            for (const auto& s : H.comult[t.right]) tensor3_add(rhs, t.left, s.left, s.right, t.c * s.c);
        }
        if (!tensors_equal(lhs, rhs))
            return ValidationReport::fail("coassociativity fails at basis " + H.label(i));
    }
    // Delta(1) = 1 (x) 1 and Delta multiplicative
    if (!tensors_equal(H.comult_of(H.unit), unit_tensor(H)))
        return ValidationReport::fail("comult(1) != 1(x)1");
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            SparseTensor2 lhs;
            for (const auto& [k, ck] : H.mult[i][j])
                for (const auto& t : H.comult[k]) tensor2_add(lhs, t.left, t.right, ck * t.c);
            SparseTensor2 di, dj;
            for (const auto& t : H.comult[i]) tensor2_add(di, t.left, t.right, t.c);
            for (const auto& t : H.comult[j]) tensor2_add(dj, t.left, t.right, t.c);
            if (!tensors_equal(lhs, tensor_mult(H, di, dj)))
                return ValidationReport::fail("comult not multiplicative at (" + H.label(i) +
                                              ", " + H.label(j) + ")");
        }
    // antipode axiom and S^2 = id
    for (long i = 0; i < n; ++i) {
        Elem left = H.zero_elem(), right = H.zero_elem();
        for (const auto& t : H.comult[i]) {
            for (const auto& [p, cp] : H.antipode[t.left])
                for (const auto& [q, cq] : H.mult[p][t.right]) left[q] += t.c * cp * cq;
            for (const auto& [p, cp] : H.antipode[t.right])
                for (const auto& [q, cq] : H.mult[t.left][p]) right[q] += t.c * cp * cq;
        }
        Elem target = elem_scale(H.counit[i], H.unit);
        if (!elem_equal(left, target))
            return ValidationReport::fail("antipode axiom (S(x)id) fails at basis " + H.label(i));
        if (!elem_equal(right, target))
            return ValidationReport::fail("antipode axiom (id(x)S) fails at basis " + H.label(i));
        if (!elem_equal(H.apply_antipode(H.apply_antipode(H.basis_elem(i))), H.basis_elem(i)))
            return ValidationReport::fail("S^2 != id at basis " + H.label(i));
    }
    return ValidationReport::pass();
}

ValidationReport validate_r_matrix(const HopfAlgebraData& H, const RMatrix& R) {
    SparseTensor2 r = rmatrix_tensor(R);
    // (eps (x) id) R = 1 = (id (x) eps) R
    Elem left = H.zero_elem(), right = H.zero_elem();
    for (const auto& [ij, c] : r) {
        if (!H.counit[ij.first].is_zero()) left[ij.second] += c * H.counit[ij.first];
        if (!H.counit[ij.second].is_zero()) right[ij.first] += c * H.counit[ij.second];
    }
    if (!elem_equal(left, H.unit))
        return ValidationReport::fail(R.label + ": (eps(x)id)R != 1");
    if (!elem_equal(right, H.unit))
        return ValidationReport::fail(R.label + ": (id(x)eps)R != 1");
    // invertibility, with the canonical inverse (S (x) id) R
    SparseTensor2 rinv;
    for (const auto& [ij, c] : r)
        for (const auto& [p, cp] : H.antipode[ij.first]) tensor2_add(rinv, p, ij.second, c * cp);
    drop_zeros(rinv);
    SparseTensor2 one = unit_tensor(H);
    if (!tensors_equal(tensor_mult(H, r, rinv), one) ||
        !tensors_equal(tensor_mult(H, rinv, r), one))
        return ValidationReport::fail(R.label + ": R * (S(x)id)R != 1(x)1 (not invertible)");
    // Delta^cop(a) R = R Delta(a) for all basis a
    for (long a = 0; a < H.dim; ++a) {
        SparseTensor2 dcop, d;
        for (const auto& t : H.comult[a]) {
            tensor2_add(dcop, t.right, t.left, t.c);
            tensor2_add(d, t.left, t.right, t.c);
        }
        if (!tensors_equal(tensor_mult(H, dcop, r), tensor_mult(H, r, d)))
            return ValidationReport::fail(R.label + ": Delta^cop intertwine fails at basis " +
                                          H.label(a));
    }
    // (Delta (x) id) R = R13 R23
    {
        SparseTensor3 lhs, rhs;
        for (const auto& [ij, c] : r)
            for (const auto& t : H.comult[ij.first])
                tensor3_add(lhs, t.left, t.right, ij.second, c * t.c);
        for (const auto& [ij, ci] : r)
            for (const auto& [kl, ck] : r) {
                const auto& prod = H.mult[ij.second][kl.second];
                if (prod.empty()) continue;
                CycNumber c = ci * ck;
                for (const auto& [p, cp] : prod) tensor3_add(rhs, ij.first, kl.first, p, c * cp);
            }
        if (!tensors_equal(lhs, rhs))
            return ValidationReport::fail(R.label + ": (Delta(x)id)R != R13 R23");
    }
    // (id (x) Delta) R = R13 R12
    {
        SparseTensor3 lhs, rhs;
        for (const auto& [ij, c] : r)
            for (const auto& t : H.comult[ij.second])
                tensor3_add(lhs, ij.first, t.left, t.right, c * t.c);
        for (const auto& [ij, ci] : r)      // R13 component (b_i, -, b_j)
            for (const auto& [kl, ck] : r) {  // R12 component (b_k, b_l, -)
                const auto& prod = H.mult[ij.first][kl.first];
                if (prod.empty()) continue;
                CycNumber c = ci * ck;
                for (const auto& [p, cp] : prod) tensor3_add(rhs, p, kl.second, ij.second, c * cp);
            }
        if (!tensors_equal(lhs, rhs))
            return ValidationReport::fail(R.label + ": (id(x)Delta)R != R13 R12");
    }
    return ValidationReport::pass();
}

Elem drinfeld_element(const HopfAlgebraData& H, const RMatrix& R) {
    Elem u = H.zero_elem();
    for (long i = 0; i < H.dim; ++i)
        for (long j = 0; j < H.dim; ++j) {
            const CycNumber& c = R.entries[i][j];
            if (c.is_zero()) continue;
            // S(b_j) * b_i
            for (const auto& [p, cp] : H.antipode[j])
                for (const auto& [q, cq] : H.mult[p][i]) u[q] += c * cp * cq;
        }
    for (long a = 0; a < H.dim; ++a) {
        Elem b = H.basis_elem(a);
        if (!elem_equal(H.mul(u, b), H.mul(b, u)))
            throw std::logic_error("drinfeld_element: u is not central (at basis " + H.label(a) +
                                   ") for " + R.label);
    }
    // invertibility: solve u * x = 1 exactly
    CycMatrix lm(H.dim, CycVector(H.dim, CycNumber::zero(H.conductor)));
    for (long i = 0; i < H.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (long j = 0; j < H.dim; ++j)
            for (const auto& [k, ck] : H.mult[i][j]) lm[k][j] += u[i] * ck;
    }
    if (!solve(lm, H.unit))
        throw std::logic_error("drinfeld_element: u is not invertible for " + R.label);
    return u;
}

CycNumber r_dimension(const HopfAlgebraData& H, const RMatrix& R, const ModuleRep& M) {
    return r_dimension_from_u(drinfeld_element(H, R), module_character(H, M));
}

CycNumber r_dimension_from_u(const Elem& u, const Character& module_char) {
    return functional_apply(module_char.values, u);
}

ValidationReport validate_braiding(const HopfAlgebraData& H, const BraidingForm& s) {
    long n = H.dim;
    const auto& sig = s.sigma;
    auto sigma_elem = [&](const Elem& x, const Elem& y) {
        CycNumber r = CycNumber::zero(H.conductor);
        for (long i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (long j = 0; j < n; ++j)
                if (!y[j].is_zero() && !sig[i][j].is_zero()) r += x[i] * y[j] * sig[i][j];
        }
        return r;
    };
    // (B4)
    for (long i = 0; i < n; ++i) {
        Elem b = H.basis_elem(i);
        if (sigma_elem(H.unit, b) != H.counit[i] || sigma_elem(b, H.unit) != H.counit[i])
            return ValidationReport::fail(s.label + ": (B4) fails at basis " + H.label(i));
    }
    // (B1): sum sigma(x1,y1) x2 y2 = sum sigma(x2,y2) y1 x1
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            Elem lhs = H.zero_elem(), rhs = H.zero_elem();
            for (const auto& tx : H.comult[x])
                for (const auto& ty : H.comult[y]) {
                    CycNumber base = tx.c * ty.c;
                    if (!sig[tx.left][ty.left].is_zero()) {
                        CycNumber c = base * sig[tx.left][ty.left];
                        for (const auto& [p, cp] : H.mult[tx.right][ty.right]) lhs[p] += c * cp;
                    }
                    if (!sig[tx.right][ty.right].is_zero()) {
                        CycNumber c = base * sig[tx.right][ty.right];
                        for (const auto& [p, cp] : H.mult[ty.left][tx.left]) rhs[p] += c * cp;
                    }
                }
            if (!elem_equal(lhs, rhs))
                return ValidationReport::fail(s.label + ": (B1) fails at (" + H.label(x) + ", " +
                                              H.label(y) + ")");
        }
    // (B2): sigma(xy, z) = sum sigma(x, z1) sigma(y, z2)
    // (B3): sigma(x, yz) = sum sigma(x1, z) sigma(x2, y)
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            const auto& xy = H.mult[x][y];
            for (long z = 0; z < n; ++z) {
                CycNumber lhs2 = CycNumber::zero(H.conductor);
                for (const auto& [p, cp] : xy)
                    if (!sig[p][z].is_zero()) lhs2 += cp * sig[p][z];
                CycNumber rhs2 = CycNumber::zero(H.conductor);
                for (const auto& t : H.comult[z]) {
                    if (sig[x][t.left].is_zero() || sig[y][t.right].is_zero()) continue;
                    rhs2 += t.c * sig[x][t.left] * sig[y][t.right];
                }
                if (lhs2 != rhs2)
                    return ValidationReport::fail(s.label + ": (B2) fails at (" + H.label(x) +
                                                  ", " + H.label(y) + ", " + H.label(z) + ")");
                CycNumber lhs3 = CycNumber::zero(H.conductor);
                for (const auto& [p, cp] : xy)
                    if (!sig[z][p].is_zero()) lhs3 += cp * sig[z][p];
                CycNumber rhs3 = CycNumber::zero(H.conductor);
                for (const auto& t : H.comult[z]) {
                    if (sig[t.left][y].is_zero() || sig[t.right][x].is_zero()) continue;
                    rhs3 += t.c * sig[t.left][y] * sig[t.right][x];
                }
                if (lhs3 != rhs3)
                    return ValidationReport::fail(s.label + ": (B3) fails at (" + H.label(z) +
                                                  ", " + H.label(x) + ", " + H.label(y) + ")");
            }
        }
    // convolution invertibility with the canonical inverse sigma(S(x), y)
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            CycNumber a = CycNumber::zero(H.conductor), b = a;
            for (const auto& tx : H.comult[x])
                for (const auto& ty : H.comult[y]) {
                    CycNumber base = tx.c * ty.c;
                    // sigma(x1,y1) sigma(S(x2), y2)
                    if (!sig[tx.left][ty.left].is_zero()) {
                        CycNumber c = base * sig[tx.left][ty.left];
                        for (const auto& [p, cp] : H.antipode[tx.right])
                            if (!sig[p][ty.right].is_zero()) a += c * cp * sig[p][ty.right];
                    }
                    // sigma(S(x1), y1) sigma(x2, y2)
                    if (!sig[tx.right][ty.right].is_zero()) {
                        CycNumber c = base * sig[tx.right][ty.right];
                        for (const auto& [p, cp] : H.antipode[tx.left])
                            if (!sig[p][ty.left].is_zero()) b += c * cp * sig[p][ty.left];
                    }
                }
            CycNumber target = H.counit[x] * H.counit[y];
            if (a != target || b != target)
                return ValidationReport::fail(s.label + ": not convolution invertible at (" +
                                              H.label(x) + ", " + H.label(y) + ")");
        }
    return ValidationReport::pass();
}

ValidationReport validate_module(const HopfAlgebraData& H, const ModuleRep& M) {
    long d = M.dim;
    CycMatrix unit_action(d, CycVector(d, CycNumber::zero(H.conductor)));
    for (long i = 0; i < H.dim; ++i) {
        if (H.unit[i].is_zero()) continue;
        for (long a = 0; a < d; ++a)
            for (long b = 0; b < d; ++b) unit_action[a][b] += H.unit[i] * M.action[i][a][b];
    }
    if (unit_action != identity_matrix(d, H.conductor))
        return ValidationReport::fail(M.label + ": rho(1) != id");
    for (long i = 0; i < H.dim; ++i)
        for (long j = 0; j < H.dim; ++j) {
            CycMatrix rhs(d, CycVector(d, CycNumber::zero(H.conductor)));
            for (const auto& [k, ck] : H.mult[i][j])
                for (long a = 0; a < d; ++a)
                    for (long b = 0; b < d; ++b) rhs[a][b] += ck * M.action[k][a][b];
            if (mat_mul(M.action[i], M.action[j]) != rhs)
                return ValidationReport::fail(M.label + ": rho not multiplicative at (" +
                                              H.label(i) + ", " + H.label(j) + ")");
        }
    return ValidationReport::pass();
}

Elem dual_drinfeld(const HopfAlgebraData& H, const BraidingForm& s) {
    Elem mu = H.zero_elem();
    for (long a = 0; a < H.dim; ++a) {
        CycNumber v = CycNumber::zero(H.conductor);
        for (const auto& t : H.comult[a])
            for (const auto& [p, cp] : H.antipode[t.left])
                if (!s.sigma[t.right][p].is_zero()) v += t.c * cp * s.sigma[t.right][p];
        mu[a] = v;
    }
    return mu;
}

std::optional<Elem> convolution_inverse(const HopfAlgebraData& H, const Elem& f) {
    // (f * g)(b_a) = sum_{Delta(b_a)} c f(left) g(right) = eps(b_a)
    CycMatrix m(H.dim, CycVector(H.dim, CycNumber::zero(H.conductor)));
    for (long a = 0; a < H.dim; ++a)
        for (const auto& t : H.comult[a]) {
            if (f[t.left].is_zero()) continue;
            m[a][t.right] += t.c * f[t.left];
        }
    return solve(m, H.counit);
}

CycNumber braided_dimension(const Elem& mu, const Character& comodule_char) {
    return functional_apply(mu, comodule_char.values);
}

Character module_character(const HopfAlgebraData& H, const ModuleRep& M) {
    Character chi;
    chi.label = "chi(" + M.label + ")";
    chi.dim = M.dim;
    chi.values = H.zero_elem();
    for (long i = 0; i < H.dim; ++i) {
        CycNumber tr = CycNumber::zero(H.conductor);
        for (long a = 0; a < M.dim; ++a) tr += M.action[i][a][a];
        chi.values[i] = tr;
    }
    return chi;
}

ModuleRep tensor_module(const HopfAlgebraData& H, const ModuleRep& M, const ModuleRep& N) {
    ModuleRep T;
    T.label = M.label + "(x)" + N.label;
    T.dim = M.dim * N.dim;
    T.action.assign(H.dim, CycMatrix(T.dim, CycVector(T.dim, CycNumber::zero(H.conductor))));
    for (long i = 0; i < H.dim; ++i)
        for (const auto& t : H.comult[i]) {
            const CycMatrix& A = M.action[t.left];
            const CycMatrix& B = N.action[t.right];
            for (long a = 0; a < M.dim; ++a)
                for (long b = 0; b < M.dim; ++b) {
                    if (A[a][b].is_zero()) continue;
                    CycNumber c = t.c * A[a][b];
                    for (long p = 0; p < N.dim; ++p)
                        for (long q = 0; q < N.dim; ++q) {
                            if (B[p][q].is_zero()) continue;
                            T.action[i][a * N.dim + p][b * N.dim + q] += c * B[p][q];
                        }
                }
        }
    return T;
}

ModuleRep dual_module(const HopfAlgebraData& H, const ModuleRep& M) {
    ModuleRep D;
    D.label = M.label + "*";
    D.dim = M.dim;
    D.action.assign(H.dim, CycMatrix(M.dim, CycVector(M.dim, CycNumber::zero(H.conductor))));
    for (long i = 0; i < H.dim; ++i)
        for (const auto& [k, ck] : H.antipode[i])
            for (long a = 0; a < M.dim; ++a)
                for (long b = 0; b < M.dim; ++b)
                    D.action[i][a][b] += ck * M.action[k][b][a];  // transpose of rho(S(b_i))
    return D;
}

std::optional<std::vector<long>> decompose_character(const HopfAlgebraData& H,
                                                     const Character& chi,
                                                     const std::vector<Character>& simples) {
    CycMatrix m(H.dim, CycVector(simples.size(), CycNumber::zero(H.conductor)));
    for (size_t s = 0; s < simples.size(); ++s)
        for (long i = 0; i < H.dim; ++i) m[i][s] = simples[s].values[i];
    auto sol = solve(m, chi.values);
    if (!sol) return std::nullopt;
    std::vector<long> mults;
    for (const auto& c : *sol) {
        auto q = c.as_rational();
        if (!q || !is_integer(*q) || *q < 0)
            throw std::logic_error("decompose_character: non-nonnegative-integer multiplicity " +
                                   c.to_string() + " (wrong simple list?)");
        mults.push_back(static_cast<long>(q->get_num().get_si()));
    }
    return mults;
}

Elem convolution_product(const HopfAlgebraData& H, const Elem& f, const Elem& g) {
    Elem r = H.zero_elem();
    for (long a = 0; a < H.dim; ++a) {
        CycNumber v = CycNumber::zero(H.conductor);
        for (const auto& t : H.comult[a]) {
            if (f[t.left].is_zero() || g[t.right].is_zero()) continue;
            v += t.c * f[t.left] * g[t.right];
        }
        r[a] = v;
    }
    return r;
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& H) {
    HopfAlgebraData D;
    D.name = H.name + "*";
    D.dim = H.dim;
    D.conductor = H.conductor;
    D.labels.reserve(H.dim);
    for (long i = 0; i < H.dim; ++i) D.labels.push_back(H.label(i) + "*");
    // mult of D from comult of H
    D.mult.assign(H.dim, std::vector<SparseElem>(H.dim));
    for (long k = 0; k < H.dim; ++k)
        for (const auto& t : H.comult[k]) D.mult[t.left][t.right].push_back({k, t.c});
    D.unit = H.counit;
    // comult of D from mult of H
    D.comult.assign(H.dim, {});
    for (long i = 0; i < H.dim; ++i)
        for (long j = 0; j < H.dim; ++j)
            for (const auto& [k, ck] : H.mult[i][j]) D.comult[k].push_back({ck, i, j});
    D.counit = H.unit;
    D.antipode.assign(H.dim, {});
    for (long j = 0; j < H.dim; ++j)
        for (const auto& [i, c] : H.antipode[j]) D.antipode[i].push_back({j, c});
    return D;
}

RMatrix braiding_as_dual_rmatrix(const BraidingForm& s) {
    return RMatrix{s.label + " (as dual R)", s.sigma};
}

} // namespace hopfinv
