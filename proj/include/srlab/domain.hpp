#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "srlab/quaternion.hpp"

namespace srlab {

// Only balls are supported; the flags describe the hypotheses the theorem
// suites need (axial symmetry, closure disjoint from the real axis).
struct domain_spec {
    quat center{};
    double radius = 1.0;

    bool contains(const quat& q) const { return norm(q - center) < radius; }

    // min over real t of ||t - center|| is the distance from center to R.
    double distance_to_real_axis() const { return norm(vec(center)); }
    bool avoids_real_axis() const { return distance_to_real_axis() > radius; }
};

inline void to_json(nlohmann::json& j, const domain_spec& d) {
    j = {{"kind", "ball"},
         {"center", {d.center.q0, d.center.q1, d.center.q2, d.center.q3}},
         {"radius", d.radius}};
}

inline void from_json(const nlohmann::json& j, domain_spec& d) {
    const auto c = j.at("center");
    d.center = quat{c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>(),
                    c.at(3).get<double>()};
    d.radius = j.at("radius").get<double>();
}

} // namespace srlab
