#include <doctest.h>

#include <complex>
#include <random>

#include "cyk/cyclotomic.hpp"

using cyk::CycScalar;
using cyk::Rational;

namespace {

// Independent numeric check: exact value evaluated at zeta = e^{2 pi i / N}
// against a plain complex-double recomputation.
void check_numeric(const CycScalar& exact, std::complex<double> expected) {
    std::complex<double> got = exact.to_complex();
    double scale = std::max(1.0, std::abs(expected));
    CHECK(std::abs(got - expected) <= 1e-9 * scale);
}

std::complex<double> zeta(long n, long k = 1) {
    double angle = 2.0 * 3.14159265358979323846 * double(k) / double(n);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x - 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
    CHECK(cyk::cyclotomic_polynomial(1) == std::vector<cyk::Integer>{-1, 1});
    CHECK(cyk::cyclotomic_polynomial(4) == std::vector<cyk::Integer>{1, 0, 1});
    CHECK(cyk::cyclotomic_polynomial(6) == std::vector<cyk::Integer>{1, -1, 1});
    CHECK(cyk::cyclotomic_polynomial(12) == std::vector<cyk::Integer>{1, 0, -1, 0, 1});
    CHECK(cyk::euler_phi(1) == 1);
    CHECK(cyk::euler_phi(12) == 4);
    CHECK(cyk::euler_phi(24) == 8);
}

TEST_CASE("make reduces to canonical form") {
    // identity
    CHECK(CycScalar::make({{0, Rational(1)}}, 1) == CycScalar::from_long(1));
    // zeta_4^2 = -1
    CHECK(CycScalar::make({{2, Rational(1)}}, 4) == CycScalar::from_long(-1));
    // zeta_6^5 reduces via Phi_6 = x^2 - x + 1 to 1 - zeta_6,
    // so zeta_6 + zeta_6^5 = 1 (cross-checked numerically below)
    CycScalar v = CycScalar::make({{1, Rational(1)}, {5, Rational(1)}}, 6);
    CHECK(v == CycScalar::from_long(1));
    check_numeric(v, zeta(6) + zeta(6, 5));
    check_numeric(CycScalar::root_of_unity(6, 5),
                  std::complex<double>(1.0, 0.0) - zeta(6));
    CHECK_THROWS_AS(CycScalar::make({}, 0), cyk::Error);
}

TEST_CASE("field operations") {
    CycScalar i4 = CycScalar::root_of_unity(4, 1);
    CHECK(i4 * i4 == CycScalar::from_long(-1));
    // (1 + i)(1 - i) = 2
    CycScalar one = CycScalar::from_long(1);
    CHECK((one + i4) * (one - i4) == CycScalar::from_long(2));
    // additive identity
    CycScalar z6 = CycScalar::root_of_unity(6, 1);
    CHECK(z6 + CycScalar() == z6);
    // mixed orders unify through the lcm
    CycScalar z3 = CycScalar::root_of_unity(3, 1);
    check_numeric(z3 * i4, zeta(3) * zeta(4));
    check_numeric(z3 + i4, zeta(3) + zeta(4));
}

TEST_CASE("inverse") {
    CHECK(CycScalar::from_long(2).inverse() == CycScalar::from_rational(Rational(1, 2)));
    CycScalar i4 = CycScalar::root_of_unity(4, 1);
    CHECK(i4.inverse() == -i4);
    // (1 + i)^{-1} = (1 - i)/2
    CycScalar one = CycScalar::from_long(1);
    CycScalar inv = (one + i4).inverse();
    CHECK(inv == (one - i4) * CycScalar::from_rational(Rational(1, 2)));
    CHECK_THROWS_AS(CycScalar().inverse(), cyk::Error);
}

TEST_CASE("conjugate") {
    CycScalar i4 = CycScalar::root_of_unity(4, 1);
    CHECK(i4.conjugate() == -i4);
    CHECK(CycScalar::from_rational(Rational(3, 7)).conjugate() ==
          CycScalar::from_rational(Rational(3, 7)));
    // conj(1 + zeta_6) = 1 + zeta_6^5 = 2 - zeta_6
    CycScalar z6 = CycScalar::root_of_unity(6, 1);
    CycScalar expect = CycScalar::make({{0, Rational(2)}, {1, Rational(-1)}}, 6);
    CHECK((CycScalar::from_long(1) + z6).conjugate() == expect);
}

TEST_CASE("embed") {
    CycScalar minus1 = CycScalar::from_long(-1);
    CHECK(minus1.embedded(4) == CycScalar::root_of_unity(4, 2));
    CycScalar z3 = CycScalar::root_of_unity(3, 1);
    CHECK(z3.embedded(3) == z3);
    CHECK(z3.embedded(12) == CycScalar::root_of_unity(12, 4));
    check_numeric(z3.embedded(12), zeta(3));
    CHECK_THROWS_AS(z3.embedded(4), cyk::Error);
}

TEST_CASE("algebraic properties on random elements") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick_order(0, 4);
    const long orders[] = {3, 4, 6, 8, 12};

    auto random_scalar = [&](long n) {
        std::vector<std::pair<long, Rational>> terms;
        for (long k = 0; k < n; ++k) {
            int c = coeff(rng);
            if (c != 0) terms.push_back({k, Rational(c)});
        }
        return CycScalar::make(terms, n);
    };

    for (int trial = 0; trial < 40; ++trial) {
        long n = orders[pick_order(rng)];
        CycScalar a = random_scalar(n);
        CycScalar b = random_scalar(orders[pick_order(rng)]);
        CycScalar c = random_scalar(orders[pick_order(rng)]);

        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());

        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycScalar::from_long(1));
        }

        // embedding preserves equality and commutes with arithmetic
        CycScalar ae = a.embedded(a.order() * 3);
        CHECK(ae == a);
        CHECK(ae * b == a * b);
        CHECK(ae + b == a + b);

        // numeric sanity at 1e-9 relative tolerance
        check_numeric(a * b, a.to_complex() * b.to_complex());
        check_numeric(a + b, a.to_complex() + b.to_complex());
    }
}

TEST_CASE("powers") {
    CycScalar z12 = CycScalar::root_of_unity(12, 1);
    CHECK(z12.pow(12) == CycScalar::from_long(1));
    CHECK(z12.pow(-1) == z12.conjugate());
    CHECK(z12.pow(0) == CycScalar::from_long(1));
    CHECK(CycScalar::from_long(3).pow(-2) == CycScalar::from_rational(Rational(1, 9)));
}
