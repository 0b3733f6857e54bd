#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "srlab/quaternion.hpp"
#include "srlab/structural_set.hpp"

namespace srlab {

enum class kernel_variant { verbatim, t0_corrected, derived };

inline std::string to_string(kernel_variant v) {
    switch (v) {
        case kernel_variant::verbatim: return "verbatim";
        case kernel_variant::t0_corrected: return "t0-corrected";
        default: return "derived";
    }
}

inline kernel_variant kernel_variant_from_string(const std::string& s) {
    if (s == "verbatim") return kernel_variant::verbatim;
    if (s == "t0-corrected") return kernel_variant::t0_corrected;
    if (s == "derived") return kernel_variant::derived;
    throw error{"unknown kernel variant: " + s};
}

struct kernel_point {
    quat x;
    quat t;
    const structural_set* psi = &structural_set::standard();
    quat weight{}; // u or v; zero means unweighted
};

namespace detail {
inline constexpr double singular_tol = 1e-8;

inline void check_regular(const structural_set& psi, const quat& x, const quat& t) {
    if (norm(psi.vec_part(x)) < singular_tol) throw singular_point{"bold x = 0"};
    if (norm(psi.vec_part(t)) < singular_tol) throw singular_point{"bold t = 0"};
    if (norm(t - x) < singular_tol) throw singular_point{"t = x"};
}
} // namespace detail

// A(x,t,u) = (1/2pi^2) e^{<t-x,u>} bx conj(t-x) bt / (|bx|^2 |t-x|^4 |bt|^2)
inline quat kernel_A(const kernel_point& kp) {
    const auto& psi = *kp.psi;
    detail::check_regular(psi, kp.x, kp.t);
    const quat bx = psi.vec_part(kp.x), bt = psi.vec_part(kp.t);
    const quat d = kp.t - kp.x;
    const double den = norm2(bx) * norm2(d) * norm2(d) * norm2(bt);
    const quat num = bx * psi.conj_psi(d) * bt;
    return (exp_inner(d, kp.weight) / (2.0 * std::numbers::pi * std::numbers::pi * den)) * num;
}

// B(t,x,v).  Variants:
//  - verbatim / t0_corrected: the two readings of the bracketed "(x0 - t)";
//  - derived: the kernel recomputed as the exact divergence of the boundary
//    3-form (the only variant under which the Borel-Pompeiu volume term
//    closes; selected by calibration).
inline quat kernel_B(const kernel_point& kp, kernel_variant variant) {
    const auto& psi = *kp.psi;
    detail::check_regular(psi, kp.x, kp.t);
    const quat bx = psi.vec_part(kp.x), bt = psi.vec_part(kp.t);
    const quat d = kp.t - kp.x;
    const double r2 = norm2(d), r4 = r2 * r2, r6 = r4 * r2;
    const double X2 = norm2(bx), T2 = norm2(bt);
    const double ip = psi.inner_vec(kp.t, kp.x);
    const double w = exp_inner(d, kp.weight);
    const double pi2 = std::numbers::pi * std::numbers::pi;

    if (variant == kernel_variant::derived) {
        const quat N = bt * psi.conj_psi(kp.x - kp.t) * bx;
        quat core = quat(2.0 * ip / r4);
        core += (4.0 * (dot(kp.x, psi[0]) - dot(kp.t, psi[0])) / r6) * N;
        core += (3.0 / r4 + 4.0 * (ip - T2) / r6) * (N * bt) / T2;
        return (-w / (pi2 * X2)) * core;
    }

    const double x0 = dot(kp.x, psi[0]);
    const quat term1 = (kp.t + 3.0 * psi.conj_psi(kp.x) - 4.0 * psi.conj_psi(kp.t)) / r4;
    const quat x0mt = (variant == kernel_variant::verbatim)
                          ? quat(x0) - kp.t
                          : quat(x0 - dot(kp.t, psi[0]));
    const quat brk = x0mt * bt - quat(ip);
    const quat term2 = (4.0 / r6) * (psi.conj_psi(d) * brk);
    return (w / (pi2 * X2)) * (bx * (term1 + term2));
}

// C(x,t,u): right-sided mirror of B.
inline quat kernel_C(const kernel_point& kp, kernel_variant variant) {
    const auto& psi = *kp.psi;
    detail::check_regular(psi, kp.x, kp.t);
    const quat bx = psi.vec_part(kp.x), bt = psi.vec_part(kp.t);
    const quat d = kp.t - kp.x;
    const double r2 = norm2(d), r4 = r2 * r2, r6 = r4 * r2;
    const double X2 = norm2(bx), T2 = norm2(bt);
    const double ip = psi.inner_vec(kp.t, kp.x);
    const double w = exp_inner(d, kp.weight);
    const double pi2 = std::numbers::pi * std::numbers::pi;

    if (variant == kernel_variant::derived) {
        const quat M = bx * psi.conj_psi(d) * bt;
        quat core = quat(-2.0 * ip / r4);
        core -= (4.0 * (dot(kp.t, psi[0]) - dot(kp.x, psi[0])) / r6) * M;
        core += (3.0 / r4 - 4.0 * (T2 - ip) / r6) * (bt * M) / T2;
        return (-w / (pi2 * X2)) * core;
    }

    const double x0 = dot(kp.x, psi[0]);
    const quat term1 = (kp.t + 3.0 * psi.conj_psi(kp.x) - 4.0 * psi.conj_psi(kp.t)) / r4;
    const quat x0mt = (variant == kernel_variant::verbatim)
                          ? quat(x0) - kp.t
                          : quat(x0 - dot(kp.t, psi[0]));
    const quat brk = x0mt * bt - quat(ip);
    const quat term2 = (4.0 / r6) * (brk * psi.conj_psi(d));
    return (w / (pi2 * X2)) * ((term1 + term2) * bx);
}

struct surface_patch {
    quat point;
    std::array<quat, 3> tangents; // Jacobian columns, per unit parameter
};

// nu^psi on a tangent triple: dx_k = s (-1)^k det(3x3 minor omitting row k).
// The orientation sign s is calibrated once against the interior BP case.
// Cross-checked against sigma - (x/|x|) sigma (x/|x|) on every call.
inline quat nu_form(const structural_set& psi, const surface_patch& patch, double s) {
    // Jacobian rows are psi-coordinates of the tangents.
    double J[4][3];
    for (int c = 0; c < 3; ++c) {
        const auto col = psi.coords(patch.tangents[c]);
        for (int r = 0; r < 4; ++r) J[r][c] = col[r];
    }
    std::array<double, 4> D{};
    double scale = 0.0;
    for (int k = 0; k < 4; ++k) {
        int rows[3], n = 0;
        for (int r = 0; r < 4; ++r)
            if (r != k) rows[n++] = r;
        const double det =
            J[rows[0]][0] * (J[rows[1]][1] * J[rows[2]][2] - J[rows[1]][2] * J[rows[2]][1]) -
            J[rows[0]][1] * (J[rows[1]][0] * J[rows[2]][2] - J[rows[1]][2] * J[rows[2]][0]) +
            J[rows[0]][2] * (J[rows[1]][0] * J[rows[2]][1] - J[rows[1]][1] * J[rows[2]][0]);
        D[k] = s * ((k % 2 == 0) ? det : -det);
        scale = std::max(scale, std::abs(det));
    }
    double tangent_scale = 0.0;
    for (const auto& t : patch.tangents) tangent_scale = std::max(tangent_scale, norm(t));
    if (scale < 1e-14 * std::max(1.0, tangent_scale * tangent_scale * tangent_scale))
        throw degenerate_tangents{};

    const quat bx = psi.vec_part(patch.point);
    const double X2 = norm2(bx);
    if (std::sqrt(X2) < detail::singular_tol) throw singular_point{"bold x = 0"};
    const auto cx = psi.coords(patch.point);
    quat nu = 2.0 * psi.psi0_sign() * D[0] * quat(1.0);
    double acc = 0.0;
    for (int k = 1; k < 4; ++k) acc += cx[k] * D[k];
    nu += (2.0 * acc / X2) * bx;

    // sigma-form consistency: nu = sigma - n sigma n with n = bx/|bx|.
    quat sigma{};
    for (int k = 0; k < 4; ++k) sigma += D[k] * psi[k];
    const quat n = bx / std::sqrt(X2);
    const quat alt = sigma - n * sigma * n;
    if (norm(alt - nu) > 1e-10 * std::max(1.0, norm(nu))) throw error{"nu-form mismatch"};
    return nu;
}

} // namespace srlab
