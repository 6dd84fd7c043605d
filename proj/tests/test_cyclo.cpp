#include "doctest.h"

#include "hopfinv/cyclo.hpp"

#include <numeric>
#include <random>

using namespace hopfinv;

namespace {

// independent oracle: integer polynomial division, used to recompute Phi_12
std::vector<long long> divide_exact_oracle(std::vector<long long> num,
                                           const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        q[i] = num[i + den.size() - 1] / den.back();
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    for (long long c : num) REQUIRE(c == 0);
    return q;
}

std::vector<long long> mul_oracle(const std::vector<long long>& a,
                                  const std::vector<long long>& b) {
    std::vector<long long> p(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

CycNumber random_cyc(std::mt19937& rng, long m) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3), pick(0, 2);
    long phi = euler_phi(m);
    if (pick(rng) == 0) return CycNumber::mono(m, rat(num(rng), den(rng)), num(rng));
    std::vector<Rational> cs(phi);
    for (auto& c : cs) c = rat(num(rng), den(rng));
    return CycNumber::from_coeffs(m, std::move(cs));
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    // Phi_12 from the independent division oracle: (x^12-1) / prod_{d|12, d<12} Phi_d
    std::vector<long long> num(13, 0);
    num[0] = -1;
    num[12] = 1;
    std::vector<long long> den{1};
    for (long d : {1, 2, 3, 4, 6}) den = mul_oracle(den, cyclotomic_polynomial(d));
    auto expected = divide_exact_oracle(num, den);
    CHECK(expected == std::vector<long long>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(12) == expected);
}

TEST_CASE("Phi consistency: prod over divisors equals x^m - 1") {
    for (long m = 1; m <= 64; ++m) {
        std::vector<long long> prod{1};
        for (long d = 1; d <= m; ++d)
            if (m % d == 0) prod = mul_oracle(prod, cyclotomic_polynomial(d));
        std::vector<long long> target(m + 1, 0);
        target[0] = -1;
        target[m] = 1;
        CHECK(prod == target);
    }
}

TEST_CASE("field operations, pinned examples") {
    // zeta_4 + zeta_4^3 = 0
    CHECK((CycNumber::root(4, 1) + CycNumber::root(4, 3)).is_zero());
    // invert(zeta_m^k) = zeta_m^{m-k}
    CHECK(CycNumber::root(12, 5).inverse() == CycNumber::root(12, 7));
    // (1/2 + 1/2 zeta_2) * 2 = 1 + zeta_2 = 0
    CycNumber half_sum = CycNumber::mono(2, rat(1, 2), 0) + CycNumber::mono(2, rat(1, 2), 1);
    CHECK((half_sum * CycNumber::from_rational(rat(2))).is_zero());
    CHECK_THROWS_AS(CycNumber::zero(6).inverse(), std::domain_error);
    CHECK(CycNumber::root(8, 3).pow(0).is_one());
    // powers, including negative exponents and scaled roots
    CycNumber v = CycNumber::mono(12, rat(3, 2), 5);
    CHECK((v.pow(-7) * v.pow(7)).is_one());
    CHECK(v.pow(13) == v.pow(6) * v.pow(7));
    CycNumber dense = CycNumber::root(12, 1) + CycNumber::one(12);
    CHECK((dense.pow(-3) * dense.pow(3)).is_one());
}

TEST_CASE("embedding") {
    // zeta_2 into conductor 4 is zeta_4^2
    CHECK(CycNumber::root(2, 1).embedded(4) == CycNumber::root(4, 2));
    CHECK(CycNumber::one(3).embedded(12).is_one());
    // zeta_3 + zeta_3^2 = -1: float cross-check first, then exact
    CycNumber a = CycNumber::root(3, 1) + CycNumber::root(3, 2);
    CHECK(std::abs(a.to_complex() - std::complex<double>(-1.0, 0.0)) < 1e-12);
    CHECK(a.embedded(6) == -CycNumber::one(6));
    CHECK_THROWS_AS(CycNumber::root(4, 1).embedded(6), std::domain_error);
    // round-trip through a common multiple
    CycNumber b = CycNumber::root(6, 1) + CycNumber::from_rational(rat(1, 3), 6);
    CHECK(b.embedded(12).embedded(24) == b.embedded(24));
}

TEST_CASE("embedding is a field homomorphism") {
    std::mt19937 rng(5150);
    for (auto [m, M] : {std::pair<long, long>{2, 4}, {3, 12}, {4, 8}, {6, 12}}) {
        for (int iter = 0; iter < 20; ++iter) {
            CycNumber a = random_cyc(rng, m), b = random_cyc(rng, m);
            CHECK((a * b).embedded(M) == a.embedded(M) * b.embedded(M));
            CHECK((a + b).embedded(M) == a.embedded(M) + b.embedded(M));
        }
    }
}

TEST_CASE("as_root_of_unity") {
    auto r = (-CycNumber::one(8)).as_root_of_unity();
    REQUIRE(r.has_value());
    CHECK(r->conductor == 8);
    CHECK(r->exponent == 4);
    CHECK(!CycNumber::from_rational(rat(1, 2), 8).as_root_of_unity().has_value());
    // omega^{-d j^2}-style values at various conductors
    for (long m : {5, 8, 12}) {
        for (long d = 0; d < m; ++d)
            for (long j = 0; j < m; ++j) {
                auto v = CycNumber::root(m, -d * j * j).as_root_of_unity();
                REQUIRE(v.has_value());
                CHECK(*v == RootOfUnity(m, -d * j * j));
            }
    }
    // order of the detected root divides the conductor, and the order is exact
    auto v = CycNumber::root(12, 8).as_root_of_unity();  // zeta_3^2
    REQUIRE(v.has_value());
    CHECK(v->order() == 3);
    for (long e = 1; e < v->order(); ++e) CHECK(v->pow(e).order() != 1);
    CHECK(v->pow(v->order()).order() == 1);
    // a dense representation of a root is still recognized
    CycNumber dense = CycNumber::root(12, 1) * (CycNumber::root(12, 3) + CycNumber::zero(12));
    auto w = dense.as_root_of_unity();
    REQUIRE(w.has_value());
    CHECK(*w == RootOfUnity(12, 4));
}

TEST_CASE("field axioms on random values") {
    std::mt19937 rng(20240817);
    for (long m : {1, 2, 3, 4, 6, 8, 12, 15}) {
        for (int iter = 0; iter < 40; ++iter) {
            CycNumber a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("mixed conductors lift to the lcm") {
    CycNumber a = CycNumber::root(4, 1), b = CycNumber::root(6, 1);
    CHECK((a * b).conductor() == 12);
    CHECK(a * b == CycNumber::root(12, 5));
    CHECK(a + b == CycNumber::root(12, 3) + CycNumber::root(12, 2));
}

TEST_CASE("string round trip") {
    std::mt19937 rng(7);
    for (long m : {1, 5, 8, 12}) {
        for (int iter = 0; iter < 25; ++iter) {
            CycNumber a = random_cyc(rng, m);
            CHECK(CycNumber::parse(a.to_string(), m) == a);
        }
    }
    CHECK(CycNumber::parse("1/2*z^3-z+2", 8) ==
          CycNumber::mono(8, rat(1, 2), 3) - CycNumber::root(8, 1) +
              CycNumber::from_rational(rat(2), 8));
}

TEST_CASE("root of unity reduction and equality") {
    CHECK(RootOfUnity(12, 4) == RootOfUnity(3, 1));
    CHECK(RootOfUnity(12, 0).order() == 1);
    CHECK(RootOfUnity(12, 6).order() == 2);
    CHECK(RootOfUnity(8, 6).reduced().conductor == 4);
}
