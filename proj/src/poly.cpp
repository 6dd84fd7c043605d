#include "hopfinv/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfinv {

long RootMultiset::degree() const {
    long d = 0;
    for (const auto& [k, e] : counts) d += e;
    return d;
}

void RootMultiset::add(const RootOfUnity& r, long mult) {
    if (mult == 0) return;
    if (mult < 0) throw std::invalid_argument("RootMultiset::add: negative multiplicity");
    long M = std::lcm(conductor, r.conductor);
    if (M != conductor) *this = lifted(M);
    RootOfUnity rr = r.reduced();
    long exp = mod_pos(static_cast<long long>(rr.exponent) * (M / rr.conductor), M);
    counts[exp] += mult;
}

RootMultiset RootMultiset::lifted(long M) const {
    if (M % conductor != 0)
        throw std::domain_error("RootMultiset::lifted: conductor does not divide target");
    RootMultiset r;
    r.conductor = M;
    long f = M / conductor;
    for (const auto& [k, e] : counts) r.counts[k * f] = e;
    return r;
}

bool RootMultiset::operator==(const RootMultiset& o) const {
    long M = std::lcm(conductor, o.conductor);
    return lifted(M).counts == o.lifted(M).counts;
}

RootMultiset RootMultiset::from_roots(const std::vector<RootOfUnity>& roots) {
    RootMultiset rs;
    for (const auto& r : roots) rs.conductor = std::lcm(rs.conductor, r.reduced().conductor);
    for (const auto& r : roots) rs.add(r);
    return rs;
}

RootMultiset merge(const RootMultiset& a, const RootMultiset& b) {
    long M = std::lcm(a.conductor, b.conductor);
    RootMultiset r = a.lifted(M);
    for (const auto& [k, e] : b.lifted(M).counts) r.counts[k] += e;
    return r;
}

long CycloFactorization::degree() const {
    long d = 0;
    for (const auto& [h, e] : factors) d += euler_phi(h) * e;
    return d;
}

std::string FactorFailure::describe() const {
    std::ostringstream out;
    out << "not a product of cyclotomics: primitive class of order " << order
        << " is incomplete or uneven (";
    bool first = true;
    for (const auto& [k, e] : profile) {
        if (!first) out << ", ";
        first = false;
        out << "exp " << k << " x" << e;
    }
    out << ")";
    return out.str();
}

FactorResult factor_cyclotomic(const RootMultiset& rs) {
    long m = rs.conductor;
    // bucket by exact order h = m / gcd(k, m)
    std::map<long, std::map<long, long>> buckets;
    for (const auto& [k, e] : rs.counts) {
        long h = m / std::gcd(m, k == 0 ? m : k);
        buckets[h][k] = e;
    }
    CycloFactorization f;
    for (const auto& [h, cls] : buckets) {
        long phi = euler_phi(h);
        long e = cls.begin()->second;
        bool even_mult = std::all_of(cls.begin(), cls.end(),
                                     [&](const auto& kv) { return kv.second == e; });
        if (!even_mult || static_cast<long>(cls.size()) != phi) {
            FactorFailure fail;
            fail.order = h;
            fail.profile = cls;
            return fail;
        }
        f.factors[h] = e;
    }
    return f;
}

RootMultiset reconstruct(const CycloFactorization& f) {
    RootMultiset rs;
    for (const auto& [h, e] : f.factors) rs.conductor = std::lcm(rs.conductor, h);
    for (const auto& [h, e] : f.factors)
        for (long k = 0; k < h; ++k)
            if (std::gcd(k == 0 ? h : k, h) == 1 || h == 1)
                rs.add(RootOfUnity{h, k}, e);
    return rs;
}

namespace {

std::vector<Integer> phi_product(const CycloFactorization& f) {
    std::vector<Integer> acc{1};
    for (const auto& [h, e] : f.factors) {
        const auto& phi_h = cyclotomic_polynomial(h);
        for (long rep = 0; rep < e; ++rep) {
            std::vector<Integer> prod(acc.size() + phi_h.size() - 1, Integer(0));
            for (size_t i = 0; i < acc.size(); ++i) {
                if (acc[i] == 0) continue;
                for (size_t j = 0; j < phi_h.size(); ++j)
                    if (phi_h[j] != 0) prod[i + j] += acc[i] * static_cast<long>(phi_h[j]);
            }
            acc = std::move(prod);
        }
    }
    return acc;
}

void finish_flags(ExpandedPoly& p) {
    p.all_rational = true;
    p.all_integral = true;
    p.rational_coeffs.clear();
    for (const auto& c : p.coeffs) {
        auto r = c.as_rational();
        if (!r) {
            p.all_rational = false;
            p.all_integral = false;
            p.rational_coeffs.clear();
            return;
        }
        if (!is_integer(*r)) p.all_integral = false;
        p.rational_coeffs.push_back(*r);
    }
}

} // namespace

ExpandedPoly expand_direct(const RootMultiset& rs) {
    ExpandedPoly p;
    p.conductor = rs.conductor;
    long m = rs.conductor;
    std::vector<CycNumber> coeffs{CycNumber::one(m)};
    for (const auto& [k, e] : rs.counts) {
        CycNumber root = CycNumber::root(m, k);
        for (long rep = 0; rep < e; ++rep) {
            std::vector<CycNumber> next(coeffs.size() + 1, CycNumber::zero(m));
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= coeffs[i] * root;
            }
            coeffs = std::move(next);
        }
    }
    p.coeffs = std::move(coeffs);
    finish_flags(p);
    return p;
}

ExpandedPoly expand(const RootMultiset& rs) {
    auto fr = factor_cyclotomic(rs);
    if (auto* f = std::get_if<CycloFactorization>(&fr)) {
        ExpandedPoly p;
        p.conductor = rs.conductor;
        auto ints = phi_product(*f);
        p.coeffs.reserve(ints.size());
        p.all_rational = true;
        p.all_integral = true;
        for (const auto& c : ints) {
            p.rational_coeffs.emplace_back(c);
            p.coeffs.push_back(CycNumber::from_rational(Rational(c), rs.conductor));
        }
        return p;
    }
    return expand_direct(rs);
}

std::string render_phi(const CycloFactorization& f) {
    if (f.factors.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        if (!first) out << " ";
        first = false;
        out << "Phi" << it->first;
        if (it->second > 1) out << "^" << it->second;
    }
    return out.str();
}

std::string render_coeffs(const ExpandedPoly& p) {
    if (!p.all_rational)
        throw std::domain_error("render_coeffs: expansion has irrational coefficients");
    const auto& c = p.rational_coeffs;
    std::ostringstream out;
    bool first = true;
    for (long d = static_cast<long>(c.size()) - 1; d >= 0; --d) {
        if (c[d] == 0) continue;
        Rational q = c[d];
        if (first) {
            if (q < 0) { out << "-"; q = -q; }
        } else {
            out << (q < 0 ? "-" : "+");
            if (q < 0) q = -q;
        }
        first = false;
        if (d == 0) {
            out << rat_to_string(q);
        } else {
            if (q != 1) out << rat_to_string(q);
            out << "x";
            if (d > 1) out << "^" << d;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::string render_roots(const RootMultiset& rs) {
    if (rs.counts.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, e] : rs.counts) {
        if (!first) out << " ";
        first = false;
        RootOfUnity r = RootOfUnity{rs.conductor, k}.reduced();
        if (r.conductor == 1) out << "(x-1)";
        else if (r.conductor == 2) out << "(x+1)";
        else out << "(x-z" << r.conductor << "^" << r.exponent << ")";
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

} // namespace hopfinv
