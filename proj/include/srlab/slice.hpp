#pragma once

#include <cmath>

#include "srlab/quaternion.hpp"

namespace srlab {

// q = x + i*y with y > 0 and i the unit vector part of q.  The (y,i) vs
// (-y,-i) branch is fixed here; representation-formula invariance under the
// swap is asserted in the theorems layer.
struct slice_point {
    double x;
    double y;
    quat i;
};

inline slice_point slice_decompose(const quat& q) {
    const quat b = vec(q);
    const double y = norm(b);
    if (y < 1e-300) throw real_axis_point{};
    return {real(q), y, b / y};
}

inline quat slice_compose(const slice_point& p) { return quat(p.x) + p.y * p.i; }

// A random-ish deterministic unit imaginary orthogonal to i.
inline quat orthogonal_unit(const quat& i) {
    quat cand = (std::abs(i.q1) < 0.9) ? e1 : e2;
    quat j = cand - dot(cand, i) * i;
    return j / norm(j);
}

} // namespace srlab
