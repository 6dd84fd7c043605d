#pragma once

/*
 * cyclo.hpp - exact arithmetic in cyclotomic fields Q(zeta_m).
 *
 * A CycNumber is an element of Q(zeta_m) for a fixed conductor m, stored
 * either as a scaled root of unity c*zeta^e (the common case throughout
 * the catalog: structure constants and R-matrix entries are monomials) or
 * as a dense coefficient vector in the power basis 1, zeta, ...,
 * zeta^{phi(m)-1} reduced mod Phi_m.  Equality is value equality; the two
 * storage forms of the same value compare equal.
 *
 * Binary operations on mixed conductors lift both arguments to the lcm
 * conductor first.  All values are immutable once built and every
 * operation is pure; the per-conductor tables (Phi_m, power reductions,
 * root representations) are memoized behind a mutex.
 */

#include "hopfinv/rational.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace hopfinv {

long euler_phi(long m);
long mod_pos(long long a, long m);

// Coefficients of Phi_m, ascending degree, size phi(m)+1 (monic).
const std::vector<long long>& cyclotomic_polynomial(long m);

// A root of unity zeta_conductor^exponent. Two values are equal iff they
// agree after reduction to conductor = order.
struct RootOfUnity {
    long conductor = 1;
    long exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(long m, long long k) : conductor(m), exponent(mod_pos(k, m)) {}

    long order() const;
    RootOfUnity reduced() const;   // minimal conductor form
    RootOfUnity pow(long long e) const { return {conductor, exponent * e}; }
    bool operator==(const RootOfUnity& o) const;
    bool operator<(const RootOfUnity& o) const; // on reduced (conductor, exponent)
};

class CycNumber {
public:
    CycNumber() : m_(1), mono_(true), c_(0), e_(0) {}

    static CycNumber zero(long m) { return mono(m, Rational(0), 0); }
    static CycNumber one(long m) { return mono(m, Rational(1), 0); }
    static CycNumber from_rational(const Rational& q, long m = 1) { return mono(m, q, 0); }
    static CycNumber root(long m, long long k) { return mono(m, Rational(1), k); }
    static CycNumber mono(long m, Rational c, long long e);
    // Power-basis coefficients; any length, reduced mod x^m-1 then Phi_m.
    static CycNumber from_coeffs(long m, std::vector<Rational> cs);

    long conductor() const { return m_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_mono() const { return mono_; }

    std::optional<Rational> as_rational() const;
    std::optional<RootOfUnity> as_root_of_unity() const;
    std::vector<Rational> coeff_vector() const;  // dense, size phi(m)

    CycNumber embedded(long M) const;  // requires conductor | M

    CycNumber operator-() const;
    CycNumber inverse() const;          // throws std::domain_error on zero
    CycNumber pow(long long e) const;   // e may be negative; 0 yields 1

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    CycNumber& operator+=(const CycNumber& b) { *this = *this + b; return *this; }
    CycNumber& operator-=(const CycNumber& b) { *this = *this - b; return *this; }
    CycNumber& operator*=(const CycNumber& b) { *this = *this * b; return *this; }

    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    // Floating evaluation; debugging cross-check only, never used by the core.
    std::complex<double> to_complex() const;

    std::string to_string() const;  // "a/b*z^k+..." over zeta_conductor
    // Parses the to_string format at conductor m; throws on malformed input.
    static CycNumber parse(const std::string& s, long m);

private:
    long m_;
    bool mono_;
    Rational c_;  // mono payload: value c_*zeta^e_
    long e_;
    std::vector<Rational> v_;  // poly payload, size phi(m_)

    void canonicalize_mono();
    void densify();         // mono -> poly in place
    CycNumber densified() const;
    friend CycNumber add_impl(const CycNumber& a, const CycNumber& b, bool sub);
};

// Scales a by rational r without conductor juggling.
CycNumber scale(const Rational& r, const CycNumber& a);

} // namespace hopfinv
