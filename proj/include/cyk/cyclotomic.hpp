#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyk/errors.hpp"

namespace cyk {

using Rational = mpq_class;
using Integer = mpz_class;

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
// The returned reference stays valid for the process lifetime.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// An element of the cyclotomic field Q(zeta_N), stored as a rational vector
// in the power basis zeta^0 .. zeta^{phi(N)-1} after reduction modulo the
// N-th cyclotomic polynomial. The representation is canonical: values are
// equal iff their coefficient vectors agree once both are embedded into the
// common order lcm(N1, N2). A value whose reduced form is rational is
// normalized down to order 1, so rationals compare cheaply across orders.
//
// All instances are immutable after construction and every operation is
// pure, so values may be shared freely between threads.
class CycScalar {
public:
    CycScalar() : order_(1), coeffs_{Rational(0)} {}

    static CycScalar from_rational(const Rational& q);
    static CycScalar from_long(long v) { return from_rational(Rational(v)); }

    // Builds sum coeff * zeta_N^power from (power, coeff) terms. Powers are
    // reduced modulo N. N = 0 is rejected.
    static CycScalar make(const std::vector<std::pair<long, Rational>>& terms, long n);

    static CycScalar root_of_unity(long n, long power);

    long order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    CycScalar operator+(const CycScalar& rhs) const;
    CycScalar operator-(const CycScalar& rhs) const;
    CycScalar operator*(const CycScalar& rhs) const;
    CycScalar operator-() const;

    CycScalar& operator+=(const CycScalar& rhs) { return *this = *this + rhs; }
    CycScalar& operator-=(const CycScalar& rhs) { return *this = *this - rhs; }
    CycScalar& operator*=(const CycScalar& rhs) { return *this = *this * rhs; }

    // Exact multiplicative inverse; DivisionByZero on zero.
    CycScalar inverse() const;

    // The ring automorphism zeta_N -> zeta_N^{-1}.
    CycScalar conjugate() const;

    // Image under zeta_N -> zeta_M^{M/N}; IncompatibleOrder unless N | M.
    CycScalar embedded(long m) const;

    // Integer power; negative exponents invert first.
    CycScalar pow(long e) const;

    bool operator==(const CycScalar& rhs) const;
    bool operator!=(const CycScalar& rhs) const { return !(*this == rhs); }

    // Strict total order on (order, coeffs); used only for containers.
    bool operator<(const CycScalar& rhs) const;

    // Numeric evaluation at zeta_N = exp(2*pi*i/N). Display/sanity only.
    std::complex<double> to_complex() const;

private:
    long order_;
    std::vector<Rational> coeffs_;

    static CycScalar from_poly(std::vector<Rational> poly, long n);
    // Coefficient vector of this value at order m (length phi(m)), without
    // the canonical order shrink applied by embedded().
    std::vector<Rational> embedded_coeffs(long m) const;
    void canonicalize();
};

inline CycScalar operator*(const Rational& q, const CycScalar& s) {
    return CycScalar::from_rational(q) * s;
}

} // namespace cyk
