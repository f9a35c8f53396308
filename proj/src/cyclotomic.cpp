#include "cyk/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace cyk {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, quotient only. Divisor is monic.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    const size_t dn = den.size() - 1;
    std::vector<Integer> quot(rem.size() - dn, Integer(0));
    for (size_t i = rem.size(); i-- > dn;) {
        Integer c = rem[i];
        if (c == 0) continue;
        quot[i - dn] = c;
        for (size_t k = 0; k <= dn; ++k) rem[i - dn + k] -= c * den[k];
    }
    return quot;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::map<long, std::vector<Integer>>& cyclo_cache() {
    static std::map<long, std::vector<Integer>> cache;
    return cache;
}

std::mutex& cyclo_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Integer> compute_cyclotomic(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Integer> num(static_cast<size_t>(n) + 1, Integer(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d : divisors_of(n)) {
        if (d == n) continue;
        num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

// Solves M x = b over the rationals by Gaussian elimination.
// Returns false if M is singular.
bool solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> b,
                    std::vector<Rational>& out) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(m[pivot], m[col]);
        std::swap(b[pivot], b[col]);
        Rational inv = 1 / m[col][col];
        for (size_t k = col; k < n; ++k) m[col][k] *= inv;
        b[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col];
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            b[row] -= f * b[col];
        }
    }
    out = std::move(b);
    return true;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    if (n < 1) fail(ErrorCode::IndexOutOfRange, "cyclotomic polynomial needs n >= 1");
    {
        std::lock_guard<std::mutex> lock(cyclo_mutex());
        auto it = cyclo_cache().find(n);
        if (it != cyclo_cache().end()) return it->second;
    }
    std::vector<Integer> result = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    return cyclo_cache().emplace(n, std::move(result)).first->second;
}

CycScalar CycScalar::from_rational(const Rational& q) {
    CycScalar s;
    s.order_ = 1;
    s.coeffs_ = {q};
    s.coeffs_[0].canonicalize();
    return s;
}

CycScalar CycScalar::from_poly(std::vector<Rational> poly, long n) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    const size_t deg = phi_poly.size() - 1;
    // Reduce modulo the monic cyclotomic polynomial.
    for (size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        for (size_t k = 0; k <= deg; ++k) {
            poly[i - deg + k] -= c * Rational(phi_poly[k]);
        }
    }
    poly.resize(deg);
    for (auto& c : poly) c.canonicalize();
    CycScalar s;
    s.order_ = n;
    s.coeffs_ = std::move(poly);
    s.canonicalize();
    return s;
}

void CycScalar::canonicalize() {
    bool rational_only = true;
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) { rational_only = false; break; }
    }
    if (rational_only && order_ != 1) {
        Rational c0 = coeffs_[0];
        order_ = 1;
        coeffs_ = {c0};
    }
}

CycScalar CycScalar::make(const std::vector<std::pair<long, Rational>>& terms, long n) {
    if (n < 1) fail(ErrorCode::IndexOutOfRange, "order must be a positive integer");
    std::vector<Rational> poly(static_cast<size_t>(n), Rational(0));
    for (const auto& [power, coeff] : terms) {
        long p = ((power % n) + n) % n;
        poly[static_cast<size_t>(p)] += coeff;
    }
    return from_poly(std::move(poly), n);
}

CycScalar CycScalar::root_of_unity(long n, long power) {
    return make({{power, Rational(1)}}, n);
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycScalar::rational_value() const {
    if (!is_rational()) fail(ErrorCode::InvariantViolation, "value is not rational");
    return coeffs_[0];
}

std::vector<Rational> CycScalar::embedded_coeffs(long m) const {
    if (m < 1 || m % order_ != 0)
        fail(ErrorCode::IncompatibleOrder,
             "order " + std::to_string(order_) + " does not divide " + std::to_string(m));
    if (m == order_) return coeffs_;
    const long stride = m / order_;
    std::vector<Rational> poly(static_cast<size_t>(m), Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        poly[k * static_cast<size_t>(stride)] = coeffs_[k];
    }
    const auto& phi_poly = cyclotomic_polynomial(m);
    const size_t deg = phi_poly.size() - 1;
    for (size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        for (size_t k = 0; k <= deg; ++k) {
            poly[i - deg + k] -= c * Rational(phi_poly[k]);
        }
    }
    poly.resize(deg);
    for (auto& c : poly) c.canonicalize();
    return poly;
}

CycScalar CycScalar::embedded(long m) const {
    CycScalar s;
    s.order_ = m;
    s.coeffs_ = embedded_coeffs(m);
    s.canonicalize();
    return s;
}

namespace {
long lcm_order(long a, long b) {
    return a / std::gcd(a, b) * b;
}
} // namespace

CycScalar CycScalar::operator+(const CycScalar& rhs) const {
    const long n = lcm_order(order_, rhs.order_);
    std::vector<Rational> a = embedded_coeffs(n);
    std::vector<Rational> b = rhs.embedded_coeffs(n);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    CycScalar s;
    s.order_ = n;
    s.coeffs_ = std::move(a);
    s.canonicalize();
    return s;
}

CycScalar CycScalar::operator-(const CycScalar& rhs) const {
    const long n = lcm_order(order_, rhs.order_);
    std::vector<Rational> a = embedded_coeffs(n);
    std::vector<Rational> b = rhs.embedded_coeffs(n);
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    CycScalar s;
    s.order_ = n;
    s.coeffs_ = std::move(a);
    s.canonicalize();
    return s;
}

CycScalar CycScalar::operator-() const {
    CycScalar a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

CycScalar CycScalar::operator*(const CycScalar& rhs) const {
    const long n = lcm_order(order_, rhs.order_);
    std::vector<Rational> a = embedded_coeffs(n);
    std::vector<Rational> b = rhs.embedded_coeffs(n);
    std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return from_poly(std::move(prod), n);
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (is_rational()) return from_rational(1 / coeffs_[0]);
    const size_t deg = coeffs_.size();
    // Columns of the multiplication-by-*this operator in the power basis.
    std::vector<std::vector<Rational>> mat(deg, std::vector<Rational>(deg, Rational(0)));
    for (size_t j = 0; j < deg; ++j) {
        CycScalar col = *this * root_of_unity(order_, static_cast<long>(j));
        std::vector<Rational> cemb = col.embedded_coeffs(order_);
        for (size_t i = 0; i < deg; ++i) mat[i][j] = cemb[i];
    }
    std::vector<Rational> e0(deg, Rational(0));
    e0[0] = 1;
    std::vector<Rational> sol;
    if (!solve_rational(std::move(mat), std::move(e0), sol))
        fail(ErrorCode::DivisionByZero, "multiplication operator is singular");
    CycScalar r;
    r.order_ = order_;
    r.coeffs_ = std::move(sol);
    for (auto& c : r.coeffs_) c.canonicalize();
    r.canonicalize();
    return r;
}

CycScalar CycScalar::conjugate() const {
    if (order_ <= 2) return *this;
    std::vector<Rational> poly(static_cast<size_t>(order_), Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        size_t p = (k == 0) ? 0 : static_cast<size_t>(order_) - k;
        poly[p] += coeffs_[k];
    }
    return from_poly(std::move(poly), order_);
}

CycScalar CycScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar result = from_rational(Rational(1));
    CycScalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool CycScalar::operator==(const CycScalar& rhs) const {
    if (order_ == rhs.order_) return coeffs_ == rhs.coeffs_;
    const long n = lcm_order(order_, rhs.order_);
    return embedded(n).coeffs_ == rhs.embedded(n).coeffs_;
}

bool CycScalar::operator<(const CycScalar& rhs) const {
    if (order_ != rhs.order_) return order_ < rhs.order_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], rhs.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::complex<double> CycScalar::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 2.0 * 3.14159265358979323846;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        double angle = tau * static_cast<double>(k) / static_cast<double>(order_);
        acc += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

} // namespace cyk
