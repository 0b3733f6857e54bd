#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "srlab/errors.hpp"

namespace srlab {

// Element of H, components relative to the standard basis {1, e1, e2, e3}.
struct quat {
    double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;

    constexpr quat() = default;
    constexpr quat(double a, double b, double c, double d) : q0(a), q1(b), q2(c), q3(d) {}
    constexpr explicit quat(double real) : q0(real) {}

    double operator[](int k) const { return k == 0 ? q0 : k == 1 ? q1 : k == 2 ? q2 : q3; }
    double& operator[](int k) {
        switch (k) {
            case 0: return q0;
            case 1: return q1;
            case 2: return q2;
            default: return q3;
        }
    }

    friend constexpr quat operator+(const quat& a, const quat& b) {
        return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
    }
    friend constexpr quat operator-(const quat& a, const quat& b) {
        return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
    }
    constexpr quat operator-() const { return {-q0, -q1, -q2, -q3}; }
    friend constexpr quat operator*(double s, const quat& a) {
        return {s * a.q0, s * a.q1, s * a.q2, s * a.q3};
    }
    friend constexpr quat operator*(const quat& a, double s) { return s * a; }
    friend constexpr quat operator/(const quat& a, double s) { return (1.0 / s) * a; }

    // Hamilton product.
    friend constexpr quat operator*(const quat& a, const quat& b) {
        return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
                a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
                a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
                a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
    }
    quat& operator+=(const quat& b) { return *this = *this + b; }
    quat& operator-=(const quat& b) { return *this = *this - b; }
    quat& operator*=(const quat& b) { return *this = *this * b; }

    friend constexpr bool operator==(const quat& a, const quat& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const quat& q) {
        return os << '(' << q.q0 << ',' << q.q1 << ',' << q.q2 << ',' << q.q3 << ')';
    }
};

inline constexpr quat one{1, 0, 0, 0};
inline constexpr quat e1{0, 1, 0, 0};
inline constexpr quat e2{0, 0, 1, 0};
inline constexpr quat e3{0, 0, 0, 1};

constexpr quat conj(const quat& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }
constexpr double norm2(const quat& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}
inline double norm(const quat& q) { return std::sqrt(norm2(q)); }
constexpr quat vec(const quat& q) { return {0, q.q1, q.q2, q.q3}; }
constexpr double real(const quat& q) { return q.q0; }
// Euclidean inner product <.,.> on R^4 (= <.,.>_psi for every orthonormal psi).
constexpr double dot(const quat& a, const quat& b) {
    return a.q0 * b.q0 + a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3;
}

inline quat inverse(const quat& q) {
    const double n2 = norm2(q);
    if (n2 == 0.0) throw zero_divisor{};
    return conj(q) / n2;
}

inline quat pow_int(quat q, unsigned n) {
    quat acc = one;
    while (n) {
        if (n & 1u) acc = acc * q;
        q = q * q;
        n >>= 1u;
    }
    return acc;
}

inline bool finite(const quat& q) {
    return std::isfinite(q.q0) && std::isfinite(q.q1) && std::isfinite(q.q2) &&
           std::isfinite(q.q3);
}

// exp(<q,v>) with an overflow guard instead of silent infinities.
inline double exp_inner(const quat& q, const quat& v) {
    const double a = dot(q, v);
    if (std::abs(a) > 500.0) throw overflow_risk{};
    return std::exp(a);
}

} // namespace srlab
