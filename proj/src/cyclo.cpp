#include "hopfinv/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfinv {

long mod_pos(long long a, long m) {
    long long r = a % m;
    if (r < 0) r += m;
    return static_cast<long>(r);
}

long euler_phi(long m) {
    if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, quotient known to be integral.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        long long c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: division not exact");
    return q;
}

std::mutex g_phi_mutex;
std::map<long, std::vector<long long>> g_phi_cache;

std::vector<long long> cyclotomic_unlocked(long m) {
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
    std::vector<long long> result;
    if (m == 1) {
        result = {-1, 1};
    } else {
        // x^m - 1 divided by the product of Phi_d over proper divisors d.
        std::vector<long long> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        std::vector<long long> den{1};
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const auto phi_d = cyclotomic_unlocked(d);
            std::vector<long long> prod(den.size() + phi_d.size() - 1, 0);
            for (size_t i = 0; i < den.size(); ++i)
                for (size_t j = 0; j < phi_d.size(); ++j)
                    prod[i + j] += den[i] * phi_d[j];
            den = std::move(prod);
        }
        result = poly_div_exact(std::move(num), den);
    }
    g_phi_cache.emplace(m, result);
    return result;
}

struct CycloTables {
    long phi;
    // x^j mod Phi_m for j in [0, max(2*phi-1, m)), dense rational rows.
    std::vector<std::vector<Rational>> pow_red;
};

std::mutex g_tab_mutex;
std::map<long, CycloTables> g_tab_cache;

const CycloTables& tables(long m) {
    std::lock_guard<std::mutex> lock(g_tab_mutex);
    auto it = g_tab_cache.find(m);
    if (it != g_tab_cache.end()) return it->second;

    std::vector<long long> phi_poly;
    {
        std::lock_guard<std::mutex> lock2(g_phi_mutex);
        phi_poly = cyclotomic_unlocked(m);
    }
    CycloTables t;
    t.phi = static_cast<long>(phi_poly.size()) - 1;
    long span = std::max(2 * t.phi - 1, m);
    t.pow_red.resize(span);
    for (long j = 0; j < t.phi && j < span; ++j) {
        t.pow_red[j].assign(t.phi, Rational(0));
        t.pow_red[j][j] = 1;
    }
    // x^phi = -(Phi_m - x^phi), then multiply by x and fold the top term.
    for (long j = t.phi; j < span; ++j) {
        std::vector<Rational> row(t.phi, Rational(0));
        if (j == t.phi) {
            for (long i = 0; i < t.phi; ++i) row[i] = rat(static_cast<long>(-phi_poly[i]));
        } else {
            const auto& prev = t.pow_red[j - 1];
            const auto& top = t.pow_red[t.phi];
            for (long i = t.phi - 1; i >= 1; --i) row[i] = prev[i - 1];
            for (long i = 0; i < t.phi; ++i) row[i] += prev[t.phi - 1] * top[i];
        }
        t.pow_red[j] = std::move(row);
    }
    return g_tab_cache.emplace(m, std::move(t)).first->second;
}

} // namespace

const std::vector<long long>& cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    cyclotomic_unlocked(m);
    return g_phi_cache.at(m);
}

long RootOfUnity::order() const {
    return conductor / std::gcd(conductor, exponent == 0 ? conductor : exponent);
}

RootOfUnity RootOfUnity::reduced() const {
    long d = order();
    return {d, exponent / (conductor / d)};
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
    RootOfUnity a = reduced(), b = o.reduced();
    return a.conductor == b.conductor && a.exponent == b.exponent;
}

bool RootOfUnity::operator<(const RootOfUnity& o) const {
    RootOfUnity a = reduced(), b = o.reduced();
    if (a.conductor != b.conductor) return a.conductor < b.conductor;
    return a.exponent < b.exponent;
}

void CycNumber::canonicalize_mono() {
    if (c_ == 0) {
        e_ = 0;
        return;
    }
    e_ = mod_pos(e_, m_);
    if (m_ % 2 == 0 && e_ >= m_ / 2) {
        e_ -= m_ / 2;
        c_ = -c_;
    }
}

CycNumber CycNumber::mono(long m, Rational c, long long e) {
    if (m < 1) throw std::invalid_argument("CycNumber: conductor must be >= 1");
    CycNumber r;
    r.m_ = m;
    r.mono_ = true;
    r.c_ = std::move(c);
    r.e_ = mod_pos(e, m);
    r.canonicalize_mono();
    return r;
}

CycNumber CycNumber::from_coeffs(long m, std::vector<Rational> cs) {
    const auto& t = tables(m);
    std::vector<Rational> folded(m, Rational(0));
    for (size_t k = 0; k < cs.size(); ++k)
        folded[k % m] += cs[k];
    std::vector<Rational> v(t.phi, Rational(0));
    for (long k = 0; k < m; ++k) {
        if (folded[k] == 0) continue;
        if (k < t.phi) {
            v[k] += folded[k];
        } else {
            const auto& row = t.pow_red[k];
            for (long i = 0; i < t.phi; ++i) v[i] += folded[k] * row[i];
        }
    }
    CycNumber r;
    r.m_ = m;
    r.mono_ = false;
    r.v_ = std::move(v);
    // compress single-term vectors back to mono form
    long nz = -1;
    bool single = true;
    for (long i = 0; i < t.phi; ++i) {
        if (r.v_[i] != 0) {
            if (nz >= 0) { single = false; break; }
            nz = i;
        }
    }
    if (single) {
        Rational c = nz >= 0 ? r.v_[nz] : Rational(0);
        return mono(m, c, nz >= 0 ? nz : 0);
    }
    return r;
}

bool CycNumber::is_zero() const {
    if (mono_) return c_ == 0;
    return std::all_of(v_.begin(), v_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNumber::is_one() const {
    if (mono_) return e_ == 0 && c_ == 1;
    auto r = as_rational();
    return r && *r == 1;
}

std::optional<Rational> CycNumber::as_rational() const {
    if (mono_) {
        if (c_ == 0 || e_ == 0) return c_;
        return std::nullopt;
    }
    for (size_t i = 1; i < v_.size(); ++i)
        if (v_[i] != 0) return std::nullopt;
    return v_[0];
}

std::vector<Rational> CycNumber::coeff_vector() const {
    if (!mono_) return v_;
    const auto& t = tables(m_);
    std::vector<Rational> v(t.phi, Rational(0));
    if (c_ != 0) {
        if (e_ < t.phi) {
            v[e_] = c_;
        } else {
            const auto& row = t.pow_red[e_];
            for (long i = 0; i < t.phi; ++i) v[i] = c_ * row[i];
        }
    }
    return v;
}

CycNumber CycNumber::densified() const {
    if (!mono_) return *this;
    CycNumber r;
    r.m_ = m_;
    r.mono_ = false;
    r.v_ = coeff_vector();
    return r;
}

void CycNumber::densify() { *this = densified(); }

CycNumber CycNumber::embedded(long M) const {
    if (M % m_ != 0)
        throw std::domain_error("CycNumber::embedded: conductor does not divide target");
    if (M == m_) return *this;
    long f = M / m_;
    if (mono_) return mono(M, c_, static_cast<long long>(e_) * f);
    std::vector<Rational> cs(static_cast<size_t>(v_.size() - 1) * f + 1, Rational(0));
    for (size_t k = 0; k < v_.size(); ++k) cs[k * f] = v_[k];
    return from_coeffs(M, std::move(cs));
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    if (r.mono_) {
        r.c_ = -r.c_;
    } else {
        for (auto& q : r.v_) q = -q;
    }
    return r;
}

CycNumber add_impl(const CycNumber& a, const CycNumber& b, bool sub) {
    long M = std::lcm(a.m_, b.m_);
    CycNumber x = a.embedded(M), y = b.embedded(M);
    if (x.mono_ && y.mono_) {
        if (x.c_ == 0) return sub ? -y : y;
        if (y.c_ == 0) return x;
        if (x.e_ == y.e_)
            return CycNumber::mono(M, sub ? Rational(x.c_ - y.c_) : Rational(x.c_ + y.c_), x.e_);
    }
    std::vector<Rational> v = x.coeff_vector();
    std::vector<Rational> w = y.coeff_vector();
    for (size_t i = 0; i < v.size(); ++i) {
        if (sub) v[i] -= w[i];
        else v[i] += w[i];
    }
    return CycNumber::from_coeffs(M, std::move(v));
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) { return add_impl(a, b, false); }
CycNumber operator-(const CycNumber& a, const CycNumber& b) { return add_impl(a, b, true); }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    long M = std::lcm(a.m_, b.m_);
    CycNumber x = a.embedded(M), y = b.embedded(M);
    if (x.mono_ && y.mono_)
        return CycNumber::mono(M, x.c_ * y.c_, static_cast<long long>(x.e_) + y.e_);
    if (x.is_zero() || y.is_zero()) return CycNumber::zero(M);
    if (x.mono_) std::swap(x, y);
    if (y.mono_) {
        // poly * c*zeta^e : scale and shift through the reduction table
        std::vector<Rational> cs(x.v_.size() + y.e_, Rational(0));
        for (size_t k = 0; k < x.v_.size(); ++k)
            if (x.v_[k] != 0) cs[k + y.e_] = x.v_[k] * y.c_;
        return CycNumber::from_coeffs(M, std::move(cs));
    }
    std::vector<Rational> prod(x.v_.size() + y.v_.size() - 1, Rational(0));
    for (size_t i = 0; i < x.v_.size(); ++i) {
        if (x.v_[i] == 0) continue;
        for (size_t j = 0; j < y.v_.size(); ++j)
            if (y.v_[j] != 0) prod[i + j] += x.v_[i] * y.v_[j];
    }
    return CycNumber::from_coeffs(M, std::move(prod));
}

CycNumber scale(const Rational& r, const CycNumber& a) {
    return CycNumber::mono(a.conductor(), r, 0) * a;
}

namespace {

// Remainder of a by b over Q, b nonzero.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    auto deg = [](const std::vector<Rational>& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    long db = deg(b);
    for (long da = deg(a); da >= db; da = deg(a)) {
        Rational c = a[da] / b[db];
        for (long j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
        a[da] = 0;
    }
    a.resize(std::max<long>(db, 1));
    return a;
}

} // namespace

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber::inverse: division by zero");
    if (mono_) return mono(m_, Rational(1) / c_, -static_cast<long long>(e_));
    // Extended Euclid on (v, Phi_m) over Q.
    const auto& phi_poly = cyclotomic_polynomial(m_);
    std::vector<Rational> r0;
    r0.reserve(phi_poly.size());
    for (long long c : phi_poly) r0.push_back(rat(static_cast<long>(c)));
    std::vector<Rational> r1 = v_;
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of v_
    auto deg = [](const std::vector<Rational>& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rational> q(std::max<long>(deg(r0) - deg(r1) + 1, 1), Rational(0));
        std::vector<Rational> r2 = r0;
        long d1 = deg(r1);
        for (long da = deg(r2); da >= d1; da = deg(r2)) {
            Rational c = r2[da] / r1[d1];
            q[da - d1] = c;
            for (long j = 0; j <= d1; ++j) r2[da - d1 + j] -= c * r1[j];
            r2[da] = 0;
        }
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (deg(r1) != 0)
        throw std::logic_error("CycNumber::inverse: gcd with Phi_m not constant");
    Rational g = r1[0];
    // s1 * v_ = g (mod Phi_m), so the inverse is s1/g reduced mod Phi_m.
    std::vector<Rational> phi_q;
    phi_q.reserve(phi_poly.size());
    for (long long c : phi_poly) phi_q.push_back(rat(static_cast<long>(c)));
    std::vector<Rational> inv = poly_rem(std::move(s1), phi_q);
    for (auto& cq : inv) cq /= g;
    return from_coeffs(m_, std::move(inv));
}

CycNumber CycNumber::pow(long long e) const {
    if (e == 0) return one(m_);
    if (mono_) {
        if (c_ == 0) return zero(m_);
        Rational c = 1;
        if (c_ != 1) {
            Rational base = e >= 0 ? c_ : Rational(1) / c_;
            unsigned long long k = e >= 0 ? (unsigned long long)e : -(unsigned long long)e;
            while (k) {
                if (k & 1) c *= base;
                base *= base;
                k >>= 1;
            }
        }
        return mono(m_, c, static_cast<long long>(e_) * e);
    }
    CycNumber base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
    CycNumber acc = one(m_);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool CycNumber::operator==(const CycNumber& o) const {
    long M = std::lcm(m_, o.m_);
    CycNumber a = embedded(M), b = o.embedded(M);
    if (a.mono_ && b.mono_) return a.c_ == b.c_ && (a.c_ == 0 || a.e_ == b.e_);
    return a.coeff_vector() == b.coeff_vector();
}

std::optional<RootOfUnity> CycNumber::as_root_of_unity() const {
    if (mono_) {
        if (c_ == 1) return RootOfUnity{m_, e_};
        if (c_ == -1) {
            if (m_ % 2 == 0) return RootOfUnity{m_, e_ + m_ / 2};
            return RootOfUnity{2 * m_, 2LL * e_ + m_};
        }
        return std::nullopt;
    }
    const auto& t = tables(m_);
    for (long k = 0; k < m_; ++k) {
        const auto& row = t.pow_red[k];
        bool eq = true, neg = true;
        for (long i = 0; i < t.phi && (eq || neg); ++i) {
            if (v_[i] != row[i]) eq = false;
            if (v_[i] != -row[i]) neg = false;
        }
        if (eq) return RootOfUnity{m_, k};
        if (neg) {
            if (m_ % 2 == 0) return RootOfUnity{m_, k + m_ / 2};
            return RootOfUnity{2 * m_, 2LL * k + m_};
        }
    }
    return std::nullopt;
}

std::complex<double> CycNumber::to_complex() const {
    const double tau = 6.283185307179586476925287;
    std::complex<double> acc(0.0, 0.0);
    if (mono_) {
        double ang = tau * e_ / m_;
        return c_.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    for (size_t k = 0; k < v_.size(); ++k) {
        if (v_[k] == 0) continue;
        double ang = tau * static_cast<double>(k) / m_;
        acc += v_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycNumber::to_string() const {
    std::vector<Rational> v = coeff_vector();
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        Rational c = v[k];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        }
        first = false;
        if (k == 0) {
            out << rat_to_string(c);
        } else {
            if (c != 1) out << rat_to_string(c) << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

CycNumber CycNumber::parse(const std::string& s, long m) {
    std::vector<Rational> cs(m, Rational(0));
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    bool any = false;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
        skip_ws();
        std::string numtok;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            numtok += s[i++];
        Rational c(1);
        if (!numtok.empty()) {
            auto q = rat_from_string(numtok);
            if (!q) throw std::invalid_argument("CycNumber::parse: bad coefficient in '" + s + "'");
            c = *q;
        }
        skip_ws();
        long long e = 0;
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        if (i < s.size() && s[i] == 'z') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string etok;
                if (i < s.size() && s[i] == '-') etok += s[i++];
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) etok += s[i++];
                if (etok.empty()) throw std::invalid_argument("CycNumber::parse: bad exponent");
                e = std::stoll(etok);
            }
        } else if (numtok.empty()) {
            throw std::invalid_argument("CycNumber::parse: empty term in '" + s + "'");
        }
        cs[mod_pos(e, m)] += neg ? Rational(-c) : c;
        skip_ws();
        any = true;
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("CycNumber::parse: unexpected character in '" + s + "'");
    }
    if (!any) throw std::invalid_argument("CycNumber::parse: empty input");
    return from_coeffs(m, std::move(cs));
}

} // namespace hopfinv
