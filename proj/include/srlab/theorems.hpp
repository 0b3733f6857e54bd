#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "srlab/catalog.hpp"
#include "srlab/config.hpp"
#include "srlab/kernels.hpp"
#include "srlab/moebius.hpp"
#include "srlab/operators.hpp"
#include "srlab/quadrature.hpp"
#include "srlab/series.hpp"

namespace srlab {

// --- Borel-Pompeiu -----------------------------------------------------------

struct bp_options {
    kernel_variant variant = kernel_variant::derived;
    double orientation = -1.0;
    resolutions res;
    double eps_factor = 1e-2; // excision radius as a fraction of the domain radius
    bool include_g_terms = true; // false: Cauchy-type formula (Ker members only)
};

// Left side of the Borel-Pompeiu identity at x; equals f(x)+g(x) inside,
// 0 outside.
inline quat borel_pompeiu_eval(const structural_set& psi, const quat& v, const quat& u,
                               const field& f, const field& g, const quat& x,
                               const domain_spec& dom, const bp_options& opt) {
    const bool interior = dom.contains(x);

    boundary_spec bspec{dom, opt.res.b1, opt.res.b2, opt.res.b3};
    const quat boundary = boundary_integrate(
        [&](const surface_patch& patch) {
            const quat tau = patch.point;
            const quat nu = nu_form(psi, patch, opt.orientation);
            const double w = norm2(psi.vec_part(tau));
            // Every exponential weight points from the integration variable to
            // the evaluation point; on the f side that is the reverse of the
            // kernel's built-in e^{<t-x,.>}, so it is applied by hand.
            const quat gA = g(tau) * nu * kernel_A({x, tau, &psi, u});
            const quat Af = exp_inner(tau - x, v) * (kernel_A({tau, x, &psi}) * nu * f(tau));
            return w * (gA - Af);
        },
        bspec);

    const auto vol_integrand = [&](const quat& y) {
        quat val = kernel_B({x, y, &psi, v}, opt.variant) * f(y) -
                   g(y) * kernel_C({x, y, &psi, u}, opt.variant);
        if (opt.include_g_terms) {
            val -= 2.0 * (exp_inner(y - x, v) * (kernel_A({y, x, &psi}) * Gv_apply(psi, v, f, y)) -
                          Grv_apply(psi, u, g, y) * kernel_A({x, y, &psi, u}));
        }
        return val;
    };

    volume_spec vspec{dom, opt.res.v1, opt.res.v2, opt.res.v3, opt.res.vr};
    const quat volume = interior
                            ? volume_integrate_singular(vol_integrand, vspec, x,
                                                        opt.eps_factor * dom.radius)
                            : volume_integrate(vol_integrand, vspec);
    return boundary + volume;
}

inline quat cauchy_global_eval(const structural_set& psi, const quat& v, const quat& u,
                               const field& f, const field& g, const quat& x,
                               const domain_spec& dom, bp_options opt) {
    opt.include_g_terms = false;
    return borel_pompeiu_eval(psi, v, u, f, g, x, dom, opt);
}

// --- slice Cauchy ------------------------------------------------------------

// f(q) = (1/2pi) int e^{<zeta-q,v>} (zeta-q)^{-1} dzeta_iq f(zeta),
// dzeta_iq = -dzeta * iq.
inline quat cauchy_slice_eval(const field& f, const quat& v, const quat& q,
                              const contour_spec& spec_in) {
    const slice_point p = slice_decompose(q);
    contour_spec spec = spec_in;
    spec.i = p.i;
    const double dist = std::hypot(p.x - spec.center, p.y);
    if (dist >= spec.radius) throw q_not_in_disc{};
    const quat val = contour_integrate(
        [&](const quat& z, const quat& dz) {
            return std::exp(dot(z - q, v)) * inverse(z - q) * (dz * (-p.i)) * f(z);
        },
        spec);
    return val / (2.0 * std::numbers::pi);
}

// Cauchy theorem integral: int e^{<zeta,v>} dzeta_i f(zeta); ~0 for members.
// The kernel-side ordering (dzeta_i left of f) is the one the underlying
// slice-regular Cauchy theorem actually provides.
inline quat cauchy_slice_theorem_residual(const field& f, const quat& v,
                                          const contour_spec& spec) {
    return contour_integrate(
        [&](const quat& z, const quat& dz) {
            return std::exp(dot(z, v)) * (dz * (-spec.i)) * f(z);
        },
        spec);
}

// --- representation / splitting ---------------------------------------------

// f(x + iq y) from the two slice values f(x +- i y).  The second weight is
// e^{<-(i+iq)y, v>}: the exponential must undo e^{<x - i y, v>}, not
// e^{<x + i y, v>}.
inline quat representation_v(const field& f, const quat& v, double x, double y, const quat& i,
                             const quat& iq) {
    const quat plus = slice_compose({x, y, i});
    const quat minus = quat(x) - y * i;
    const double w1 = std::exp(dot(y * (i - iq), v));
    const double w2 = std::exp(dot(-y * (i + iq), v));
    return 0.5 * (w1 * ((one - iq * i) * f(plus)) + w2 * ((one + iq * i) * f(minus)));
}

struct slice_pair {
    std::function<quat(const quat&)> F, G; // C(i)-valued on the slice
};

// f|_{C(i)} = F + G j; components read off in the basis {1, i, j, ij}.
inline slice_pair splitting_v(const field& f, const quat& i, const quat& j) {
    if (std::abs(dot(i, j)) > 1e-12) throw not_orthogonal{};
    const quat k = i * j;
    return {[=](const quat& z) {
                const quat w = f(z);
                return quat(dot(w, one)) + dot(w, i) * i;
            },
            [=](const quat& z) {
                const quat w = f(z);
                return quat(dot(w, j)) + dot(w, k) * i;
            }};
}

// P^v applied to a slice pair (F,G): rebuild f at x + iq y.
inline quat pv_apply(const slice_pair& g, const quat& i, const quat& j, const quat& v, double x,
                     double y, const quat& iq) {
    const auto h = [&](const quat& z) { return g.F(z) + g.G(z) * j; };
    const quat plus = quat(x) + y * i;
    const quat minus = quat(x) - y * i;
    const double w1 = std::exp(dot(y * (i - iq), v));
    const double w2 = std::exp(dot(-y * (i + iq), v));
    return 0.5 * (w1 * ((one - iq * i) * h(plus)) + w2 * ((one + iq * i) * h(minus)));
}

// --- conformal covariance ----------------------------------------------------

enum class gamma_bracket { full, bold_inside };

inline gamma_bracket gamma_bracket_from_string(const std::string& s) {
    if (s == "full") return gamma_bracket::full;
    if (s == "bold-inside") return gamma_bracket::bold_inside;
    throw error{"unknown gamma bracket variant: " + s};
}

// Gamma_T(y) = (|l| (y-ac^-1)^2 c / (2|c|^3)) X (X w + w X) conj(c), w = u+v,
// where X is the vector part of (l y c - m)^{-1} - p (variant "full": the
// inverse taken in H and the vector part afterwards; variant "bold-inside":
// the alternative reading with vector parts inside the inverse).
inline quat gamma_T(const moebius_map& T, const quat& u, const quat& v, const quat& y,
                    gamma_bracket br) {
    quat X;
    if (br == gamma_bracket::full) {
        X = vec(inverse(T.l() * y * T.c() - T.m()) - T.p());
    } else {
        X = inverse(T.l() * vec(y) * T.c() - vec(T.m())) - vec(T.p());
    }
    const quat w = u + v;
    const quat ymac = y - T.a() * inverse(T.c());
    const quat pre = (norm(T.l()) / (2.0 * std::pow(norm(T.c()), 3))) * (ymac * ymac * T.c());
    return pre * (X * (X * w + w * X)) * conj(T.c());
}

// E_T(y) = (|c|/|l|) e^{<T^{-1}(y),v>} conj(c) (y - ac^-1)^{-2}
inline quat E_T(const moebius_map& T, const quat& v, const quat& y) {
    const quat ymac = y - T.a() * inverse(T.c());
    return (norm(T.c()) / norm(T.l())) * std::exp(dot(T.apply_inverse(y), v)) * conj(T.c()) *
           inverse(ymac * ymac);
}

// Residual of G_u [ e^{<.,v>} conj(c) f(T(.)) ](x) - E_T(y) (G - Gamma_T)[f](y),
// y = T(x); both sides by finite differences.
inline quat covariance_residual(const moebius_map& T, const quat& u, const quat& v,
                                const field& f, const quat& x, gamma_bracket br,
                                double h = default_h) {
    const auto& psi = structural_set::standard();
    const quat y = T.apply(x);
    field lhs_field{[&](const quat& q) {
        return std::exp(dot(q, v)) * (conj(T.c()) * f(T.apply(q)));
    }};
    const quat lhs = Gv_apply(psi, u, lhs_field, x, h);
    const quat rhs = E_T(T, v, y) * (G_apply(psi, f, y, h) - gamma_T(T, u, v, y, br) * f(y));
    return lhs - rhs;
}

// Unperturbed covariance: G[conj(c) f(T(.))](x) - B_T(y) G[f](y).
inline quat covariance_residual_classical(const moebius_map& T, const field& f, const quat& x,
                                          double h = default_h) {
    const auto& psi = structural_set::standard();
    const quat y = T.apply(x);
    field lhs_field{[&](const quat& q) { return conj(T.c()) * f(T.apply(q)); }};
    const quat ymac = y - T.a() * inverse(T.c());
    const quat B_T = (norm(T.c()) * norm(T.s())) * conj(T.c()) * inverse(ymac * ymac);
    return G_apply(psi, lhs_field, x, h) - B_T * G_apply(psi, f, y, h);
}

// --- Morera -------------------------------------------------------------------

struct morera_result {
    double max_integral = 0.0;
    bool member(double tol) const { return max_integral < tol; }
};

// Max of |int e^{s<zeta,v>} dzeta_i h(zeta)| over a deterministic family of
// slice circles; s = +1 ("plus") is the calibrated sign.
inline morera_result morera_membership(const field& h, const quat& v, int contours,
                                       double sign, unsigned seed = 20260826u, int nodes = 256) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    morera_result out;
    for (int c = 0; c < contours; ++c) {
        quat dir{0.0, un(rng), un(rng), un(rng)};
        if (norm(dir) < 1e-3) dir = e1;
        const quat i = dir / norm(dir);
        const double a = 0.3 * un(rng);
        const double r = 0.25 + 0.2 * (un(rng) + 1.0);
        const contour_spec spec{a, r, i, nodes};
        const quat val = contour_integrate(
            [&](const quat& z, const quat& dz) {
                return std::exp(sign * dot(z, v)) * (dz * (-i)) * h(z);
            },
            spec);
        out.max_integral = std::max(out.max_integral, norm(val));
    }
    return out;
}

} // namespace srlab
