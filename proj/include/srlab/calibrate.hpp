#pragma once

#include <map>
#include <string>

#include "srlab/theorems.hpp"

namespace srlab {

struct calibration_outcome {
    suite_config config;
    // discriminating residuals keyed by candidate name
    std::map<std::string, double> kernel_residuals;
    std::map<std::string, double> orientation_residuals;
    std::map<std::string, double> morera_residuals;
    std::map<std::string, double> gamma_residuals;
};

// Selects kernel variant, orientation sign, Morera exponent sign and the
// Gamma_T bracket by running each candidate against the identity it serves.
// All probes are deterministic.
inline calibration_outcome calibrate(suite_config cfg) {
    const auto& psi = structural_set::standard();
    calibration_outcome out;

    // kernel variant x orientation: const-f interior BP reproduction at a
    // reduced resolution (the const witness isolates the volume kernel).
    const quat c0{1.0, 0.5, -0.3, 0.2};
    const field fconst = const_field(c0);
    const field zero = const_field(quat{});
    const quat x_probe{0.2, 2.1, 0.1, -0.1};
    bp_options probe;
    probe.res.b1 = probe.res.b2 = 16;
    probe.res.b3 = 32;
    probe.res.v1 = probe.res.v2 = 12;
    probe.res.v3 = 24;
    probe.res.vr = 20;
    double best = 1e300;
    for (const double s : {-1.0, +1.0}) {
        for (const auto variant : {kernel_variant::verbatim, kernel_variant::t0_corrected,
                                   kernel_variant::derived}) {
            probe.orientation = s;
            probe.variant = variant;
            const quat lhs =
                borel_pompeiu_eval(psi, quat{}, quat{}, fconst, zero, x_probe, cfg.bp_domain, probe);
            const double resid = norm(lhs - c0) / norm(c0);
            const std::string key = to_string(variant) + (s < 0 ? "/s=-1" : "/s=+1");
            out.kernel_residuals[key] = resid;
            if (s < 0)
                out.orientation_residuals["s=-1/" + to_string(variant)] = resid;
            else
                out.orientation_residuals["s=+1/" + to_string(variant)] = resid;
            if (resid < best) {
                best = resid;
                cfg.kernel = variant;
                cfg.orientation_sign = s;
            }
        }
    }

    // Morera exponent sign on a weighted member.
    const quat v = e1;
    const field member = exp_weighted(monomial_field(1, one), v, -1.0);
    for (const double s : {+1.0, -1.0}) {
        const double m = morera_membership(member, v, 8, s, cfg.seed).max_integral;
        out.morera_residuals[s > 0 ? "plus" : "minus"] = m;
    }
    cfg.morera_sign =
        out.morera_residuals["plus"] <= out.morera_residuals["minus"] ? "plus" : "minus";

    // Gamma_T bracket placement.
    const moebius_map T{quat(1.0), quat(2.0), quat(1.0), quat(1.0)};
    const field fq2 = monomial_field(2, one);
    const quat xc{0.3, 1.4, 0.2, -0.3};
    for (const auto br : {gamma_bracket::full, gamma_bracket::bold_inside}) {
        const double r = norm(covariance_residual(T, e1, e2, fq2, xc, br));
        out.gamma_residuals[br == gamma_bracket::full ? "full" : "bold-inside"] = r;
    }
    cfg.gamma_bracket =
        out.gamma_residuals["full"] <= out.gamma_residuals["bold-inside"] ? "full" : "bold-inside";

    cfg.calibrated = true;
    out.config = cfg;
    return out;
}

} // namespace srlab
