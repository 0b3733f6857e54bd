#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "srlab/domain.hpp"
#include "srlab/kernels.hpp"
#include "srlab/quaternion.hpp"
#include "srlab/slice.hpp"

namespace srlab {

// Neumaier-compensated accumulator per component; fixed accumulation order
// makes every integral bitwise reproducible.
class quat_accumulator {
  public:
    void add(const quat& q) {
        for (int k = 0; k < 4; ++k) {
            const double x = q[k];
            const double t = sum_[k] + x;
            if (std::abs(sum_[k]) >= std::abs(x))
                comp_[k] += (sum_[k] - t) + x;
            else
                comp_[k] += (x - t) + sum_[k];
            sum_[k] = t;
        }
    }
    quat value() const {
        return {sum_[0] + comp_[0], sum_[1] + comp_[1], sum_[2] + comp_[2], sum_[3] + comp_[3]};
    }

  private:
    double sum_[4] = {0, 0, 0, 0};
    double comp_[4] = {0, 0, 0, 0};
};

// Gauss-Legendre nodes/weights on [a,b] (Newton on the recurrence).
struct gl_rule {
    std::vector<double> nodes, weights;
};

inline gl_rule gauss_legendre(int n, double a, double b) {
    gl_rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = 0.5 * (b - a) * x + 0.5 * (a + b);
        r.weights[i] = (b - a) / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

// --- contour rule -----------------------------------------------------------

struct contour_spec {
    double center = 0.0; // real
    double radius = 1.0;
    quat i = e1; // slice unit
    int nodes = 256;
};

// Periodic trapezoid rule; the integrand receives (zeta, zeta') so that
// non-commutative orderings are decided by the caller, not here.
inline quat contour_integrate(const std::function<quat(const quat&, const quat&)>& integrand,
                              const contour_spec& spec) {
    quat_accumulator acc;
    const double dth = 2.0 * std::numbers::pi / spec.nodes;
    for (int k = 0; k < spec.nodes; ++k) {
        const double th = k * dth;
        const quat zeta = quat(spec.center + spec.radius * std::cos(th)) +
                          (spec.radius * std::sin(th)) * spec.i;
        const quat dzeta = quat(-spec.radius * std::sin(th)) + (spec.radius * std::cos(th)) * spec.i;
        const quat val = integrand(zeta, dzeta);
        if (!finite(val)) throw non_finite_integrand{};
        acc.add(dth * val);
    }
    return acc.value();
}

// --- 3-sphere boundary rule --------------------------------------------------

struct boundary_spec {
    domain_spec domain;
    int n1 = 24, n2 = 24, n3 = 48; // chi, theta (GL), phi (trapezoid)
};

inline quat sphere_point(const domain_spec& d, double chi, double th, double ph) {
    const double r = d.radius;
    return d.center + quat{r * std::cos(chi), r * std::sin(chi) * std::cos(th),
                           r * std::sin(chi) * std::sin(th) * std::cos(ph),
                           r * std::sin(chi) * std::sin(th) * std::sin(ph)};
}

inline surface_patch sphere_patch(const domain_spec& d, double chi, double th, double ph) {
    const double r = d.radius;
    const double sc = std::sin(chi), cc = std::cos(chi);
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    surface_patch p;
    p.point = sphere_point(d, chi, th, ph);
    p.tangents[0] = quat{-r * sc, r * cc * ct, r * cc * st * cp, r * cc * st * sp};
    p.tangents[1] = quat{0, -r * sc * st, r * sc * ct * cp, r * sc * ct * sp};
    p.tangents[2] = quat{0, 0, -r * sc * st * sp, r * sc * st * cp};
    return p;
}

// Tensor-product rule over the sphere parametrization.  The integrand gets
// the raw patch (point + per-unit-parameter tangents); any area or form
// factors are its own business.
inline quat boundary_integrate(const std::function<quat(const surface_patch&)>& integrand,
                               const boundary_spec& spec) {
    const gl_rule chi = gauss_legendre(spec.n1, 0.0, std::numbers::pi);
    const gl_rule th = gauss_legendre(spec.n2, 0.0, std::numbers::pi);
    const double dph = 2.0 * std::numbers::pi / spec.n3;
    quat_accumulator acc;
    for (int a = 0; a < spec.n1; ++a)
        for (int b = 0; b < spec.n2; ++b)
            for (int c = 0; c < spec.n3; ++c) {
                const quat val =
                    integrand(sphere_patch(spec.domain, chi.nodes[a], th.nodes[b], c * dph));
                if (!finite(val)) throw non_finite_integrand{};
                acc.add(chi.weights[a] * th.weights[b] * dph * val);
            }
    return acc.value();
}

// Scalar area element sqrt(det J^T J) of a patch.
inline double patch_area(const surface_patch& p) {
    double g[3][3];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) g[a][b] = dot(p.tangents[a], p.tangents[b]);
    const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    return std::sqrt(std::max(det, 0.0));
}

// --- 4-ball volume rules -----------------------------------------------------

struct volume_spec {
    domain_spec domain;
    int n1 = 16, n2 = 16, n3 = 32, nr = 24;
};

inline quat omega_dir(double chi, double th, double ph) {
    return {std::cos(chi), std::sin(chi) * std::cos(th), std::sin(chi) * std::sin(th) * std::cos(ph),
            std::sin(chi) * std::sin(th) * std::sin(ph)};
}

// Plain center-based spherical rule (integrand regular on the ball).
inline quat volume_integrate(const std::function<quat(const quat&)>& integrand,
                             const volume_spec& spec) {
    const gl_rule chi = gauss_legendre(spec.n1, 0.0, std::numbers::pi);
    const gl_rule th = gauss_legendre(spec.n2, 0.0, std::numbers::pi);
    const gl_rule rad = gauss_legendre(spec.nr, 0.0, spec.domain.radius);
    const double dph = 2.0 * std::numbers::pi / spec.n3;
    quat_accumulator acc;
    for (int a = 0; a < spec.n1; ++a) {
        const double s2 = std::sin(chi.nodes[a]) * std::sin(chi.nodes[a]);
        for (int b = 0; b < spec.n2; ++b) {
            const double st = std::sin(th.nodes[b]);
            for (int c = 0; c < spec.n3; ++c) {
                const quat w = omega_dir(chi.nodes[a], th.nodes[b], c * dph);
                const double ang = s2 * st * chi.weights[a] * th.weights[b] * dph;
                for (int r = 0; r < spec.nr; ++r) {
                    const double rho = rad.nodes[r];
                    const quat val = integrand(spec.domain.center + rho * w);
                    if (!finite(val)) throw non_finite_integrand{};
                    acc.add(ang * rad.weights[r] * rho * rho * rho * val);
                }
            }
        }
    }
    return acc.value();
}

// Singularity-aware rule for integrands ~|y-x|^{-3}: spherical coordinates
// centered at the interior singular point x, angle-dependent outer radius
// (exact cover of the ball), log-radial Gauss-Legendre from the excision
// radius eps outward.
inline quat volume_integrate_singular(const std::function<quat(const quat&)>& integrand,
                                      const volume_spec& spec, const quat& x, double eps) {
    const gl_rule chi = gauss_legendre(spec.n1, 0.0, std::numbers::pi);
    const gl_rule th = gauss_legendre(spec.n2, 0.0, std::numbers::pi);
    const double dph = 2.0 * std::numbers::pi / spec.n3;
    const quat dvec = x - spec.domain.center;
    const double R2 = spec.domain.radius * spec.domain.radius;
    quat_accumulator acc;
    for (int a = 0; a < spec.n1; ++a) {
        const double s2 = std::sin(chi.nodes[a]) * std::sin(chi.nodes[a]);
        for (int b = 0; b < spec.n2; ++b) {
            const double st = std::sin(th.nodes[b]);
            for (int c = 0; c < spec.n3; ++c) {
                const quat w = omega_dir(chi.nodes[a], th.nodes[b], c * dph);
                const double bcoef = dot(dvec, w);
                const double rmax = -bcoef + std::sqrt(bcoef * bcoef + R2 - norm2(dvec));
                const double ang = s2 * st * chi.weights[a] * th.weights[b] * dph;
                const gl_rule rad = gauss_legendre(spec.nr, std::log(eps), std::log(rmax));
                for (int r = 0; r < spec.nr; ++r) {
                    const double rho = std::exp(rad.nodes[r]);
                    const quat val = integrand(x + rho * w);
                    if (!finite(val)) throw non_finite_integrand{};
                    // extra rho from the log substitution
                    acc.add(ang * rad.weights[r] * rho * rho * rho * rho * val);
                }
            }
        }
    }
    return acc.value();
}

} // namespace srlab
