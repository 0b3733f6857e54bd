#pragma once

#include <stdexcept>
#include <string>

namespace srlab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_divisor : error {
    zero_divisor() : error("zero divisor: quaternion has zero norm") {}
};

struct invalid_structural_set : error {
    using error::error;
};
struct not_orthonormal : invalid_structural_set {
    not_orthonormal() : invalid_structural_set("structural set is not orthonormal") {}
};
struct psi0_not_unit_real : invalid_structural_set {
    psi0_not_unit_real() : invalid_structural_set("psi0 must be +1 or -1") {}
};

struct real_axis_point : error {
    real_axis_point() : error("slice unit undefined on the real axis") {}
};

struct constraint_violated : error {
    explicit constraint_violated(const std::string& which)
        : error("Moebius reality constraint violated: " + which) {}
};
struct c_not_invertible : error {
    c_not_invertible() : error("Moebius coefficient c is not invertible") {}
};
struct degenerate_map : error {
    degenerate_map() : error("degenerate Moebius map: b - a c^-1 d = 0") {}
};
struct pole_hit : error {
    pole_hit() : error("Moebius map evaluated at a pole") {}
};

struct out_of_domain : error {
    out_of_domain() : error("evaluation point outside the field's safe box") {}
};
struct overflow_risk : error {
    overflow_risk() : error("exponential weight argument exceeds safe range") {}
};

struct singular_point : error {
    explicit singular_point(const std::string& locus)
        : error("kernel evaluated on singular locus: " + locus) {}
};
struct degenerate_tangents : error {
    degenerate_tangents() : error("surface patch tangents are linearly dependent") {}
};

struct non_finite_integrand : error {
    non_finite_integrand() : error("integrand returned a non-finite value") {}
};
struct resolution_too_low : error {
    resolution_too_low() : error("quadrature did not converge under doubling") {}
};

struct q_not_in_disc : error {
    q_not_in_disc() : error("evaluation point outside the contour disc") {}
};
struct not_orthogonal : error {
    not_orthogonal() : error("slice units i, j must be orthogonal") {}
};

struct weight_mismatch : error {
    weight_mismatch() : error("series weights differ") {}
};
struct zero_point : error {
    zero_point() : error("c_vk undefined at q = 0") {}
};
struct outside_ball : error {
    outside_ball() : error("series evaluated outside the unit ball") {}
};

struct uncalibrated : error {
    uncalibrated() : error("run `srlab calibrate` before theorem suites") {}
};
struct config_parse : error {
    explicit config_parse(const std::string& what) : error("config parse: " + what) {}
};

} // namespace srlab
