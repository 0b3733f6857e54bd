#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "srlab/field.hpp"
#include "srlab/quaternion.hpp"
#include "srlab/slice.hpp"
#include "srlab/structural_set.hpp"

namespace srlab {

inline constexpr double default_h = 1e-5;

struct jet1 {
    quat value;
    std::array<quat, 4> partials; // along psi_0..psi_3, per unit coordinate step
};

// Central differences along the psi directions; O(h^2) truncation.
inline jet1 jet(const field& f, const quat& x, const structural_set& psi, double h = default_h) {
    jet1 out;
    out.value = f(x);
    for (int k = 0; k < 4; ++k) {
        const quat step = h * psi[k];
        out.partials[k] = (f(x + step) - f(x - step)) / (2.0 * h);
    }
    return out;
}

inline jet1 jet(const field& f, const quat& x, double h = default_h) {
    return jet(f, x, structural_set::standard(), h);
}

// psi-G:  ||bold x||^2 psi0 d0 f + bold(x) sum_k x_k dk f
inline quat G_of_jet(const structural_set& psi, const quat& x, const jet1& j) {
    const quat bx = psi.vec_part(x);
    const auto c = psi.coords(x);
    quat acc{};
    for (int k = 1; k < 4; ++k) acc += c[k] * j.partials[k];
    return norm2(bx) * psi.psi0_sign() * j.partials[0] + bx * acc;
}

inline quat Gr_of_jet(const structural_set& psi, const quat& x, const jet1& j) {
    const quat bx = psi.vec_part(x);
    const auto c = psi.coords(x);
    quat acc{};
    for (int k = 1; k < 4; ++k) acc += c[k] * j.partials[k];
    return norm2(bx) * psi.psi0_sign() * j.partials[0] + acc * bx;
}

// Perturbation multiplier (bold x / 2)(bold x v + v bold x); the inner factor
// is the real scalar 2<bold x, v> + 2 v_0 bold x ... kept as plain products.
inline quat perturbation(const structural_set& psi, const quat& v, const quat& x) {
    const quat bx = psi.vec_part(x);
    return 0.5 * (bx * (bx * v + v * bx));
}

inline quat G_apply(const structural_set& psi, const field& f, const quat& x,
                    double h = default_h) {
    return G_of_jet(psi, x, jet(f, x, psi, h));
}

inline quat Gr_apply(const structural_set& psi, const field& f, const quat& x,
                     double h = default_h) {
    return Gr_of_jet(psi, x, jet(f, x, psi, h));
}

inline quat Gv_apply(const structural_set& psi, const quat& v, const field& f, const quat& x,
                     double h = default_h) {
    const jet1 j = jet(f, x, psi, h);
    return G_of_jet(psi, x, j) - perturbation(psi, v, x) * j.value;
}

inline quat Grv_apply(const structural_set& psi, const quat& v, const field& f, const quat& x,
                      double h = default_h) {
    const jet1 j = jet(f, x, psi, h);
    return Gr_of_jet(psi, x, j) - j.value * perturbation(psi, v, x);
}

// Slice Vekua residual: dbar_i f + (1/4)(v - i v i) f at x + i y,
// via in-slice central differences.
inline quat cr_v_residual(const field& f, const slice_point& p, const quat& v,
                          double h = default_h) {
    const quat z = slice_compose(p);
    const quat fx = (f(z + quat(h)) - f(z - quat(h))) / (2.0 * h);
    const quat fy = (f(z + h * p.i) - f(z - h * p.i)) / (2.0 * h);
    const quat dbar = 0.5 * (fx + p.i * fy);
    const quat pert = 0.25 * ((v - p.i * v * p.i) * f(z));
    return dbar + pert;
}

struct regularity_report {
    double max_cr_residual = 0.0;
    double max_gv_residual = 0.0;
    bool member(double tol) const { return max_cr_residual < tol && max_gv_residual < tol; }
};

// Samples the domain away from the real axis and from the origin so both
// characterizations are probed on comparable points.
inline regularity_report v_regularity_report(const field& f, const quat& v,
                                             const domain_spec& dom, int samples,
                                             unsigned seed = 20260826u,
                                             double h = default_h) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    regularity_report rep;
    const auto& psi = structural_set::standard();
    int kept = 0;
    while (kept < samples) {
        quat q{u(rng), u(rng), u(rng), u(rng)};
        q = dom.center + dom.radius * 0.9 * q;
        if (!dom.contains(q)) continue;
        if (norm(vec(q)) < 0.25 || norm(q) < 0.3) continue;
        ++kept;
        rep.max_cr_residual =
            std::max(rep.max_cr_residual, norm(cr_v_residual(f, slice_decompose(q), v, h)));
        rep.max_gv_residual = std::max(rep.max_gv_residual, norm(Gv_apply(psi, v, f, q, h)));
    }
    return rep;
}

} // namespace srlab
