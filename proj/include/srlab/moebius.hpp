#pragma once

#include <cmath>

#include "srlab/quaternion.hpp"

namespace srlab {

// T(x) = (ax+b)(cx+d)^{-1} with the reality constraints
//   a*conj(c), (b - a c^-1 d)*conj(c), d*conj(b - a c^-1 d)  all real.
// Derived data l = (b - a c^-1 d)^{-1}, m = l a, p = c^-1 d are cached; the
// exact inverse on the constrained family is x = (l y c - m)^{-1} - p.
class moebius_map {
  public:
    moebius_map(const quat& a, const quat& b, const quat& c, const quat& d)
        : a_(a), b_(b), c_(c), d_(d) {
        static constexpr double tol = 1e-12;
        if (norm(c) < 1e-300) throw c_not_invertible{};
        const quat s = b - a * inverse(c) * d;
        if (norm(s) < 1e-13) throw degenerate_map{};
        if (norm(vec(a * conj(c))) > tol) throw constraint_violated{"a*conj(c)"};
        if (norm(vec(s * conj(c))) > tol) throw constraint_violated{"(b-ac^-1d)*conj(c)"};
        if (norm(vec(d * conj(s))) > tol) throw constraint_violated{"d*conj(b-ac^-1d)"};
        s_ = s;
        l_ = inverse(s);
        m_ = l_ * a;
        p_ = inverse(c) * d;
    }

    quat apply(const quat& q) const {
        const quat den = c_ * q + d_;
        if (norm(den) < 1e-13) throw pole_hit{};
        return (a_ * q + b_) * inverse(den);
    }

    quat apply_inverse(const quat& y) const {
        const quat w = l_ * y * c_ - m_;
        if (norm(w) < 1e-13) throw pole_hit{};
        return inverse(w) - p_;
    }

    const quat& a() const { return a_; }
    const quat& b() const { return b_; }
    const quat& c() const { return c_; }
    const quat& d() const { return d_; }
    const quat& l() const { return l_; }
    const quat& m() const { return m_; }
    const quat& p() const { return p_; }
    // b - a c^-1 d
    const quat& s() const { return s_; }

  private:
    quat a_, b_, c_, d_, s_, l_, m_, p_;
};

} // namespace srlab
