#pragma once

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "srlab/domain.hpp"
#include "srlab/kernels.hpp"

namespace srlab {

struct resolutions {
    int contour_nodes = 256;
    int b1 = 24, b2 = 24, b3 = 48;      // boundary
    int v1 = 16, v2 = 16, v3 = 32, vr = 24; // volume
};

struct tolerances {
    double algebraic = 1e-12;
    double fd = 5e-6;
    double contour = 1e-9;
    double quad3d4d = 2e-2;
};

// Everything the theorem suites need to run reproducibly; the calibration
// block must be filled in by `srlab calibrate` first.
struct suite_config {
    bool calibrated = false;
    kernel_variant kernel = kernel_variant::derived;
    double orientation_sign = -1.0;
    std::string morera_sign = "plus";       // exponent sign in the Morera integral
    std::string gamma_bracket = "full";     // "full" | "bold-inside"
    resolutions res;
    tolerances tol;
    domain_spec bp_domain{2.0 * e1, 1.0};
    unsigned seed = 20260826u;
};

inline void to_json(nlohmann::json& j, const resolutions& r) {
    j = {{"contour_nodes", r.contour_nodes}, {"boundary", {r.b1, r.b2, r.b3}},
         {"volume", {r.v1, r.v2, r.v3, r.vr}}};
}
inline void from_json(const nlohmann::json& j, resolutions& r) {
    r.contour_nodes = j.at("contour_nodes");
    const auto& b = j.at("boundary");
    r.b1 = b.at(0); r.b2 = b.at(1); r.b3 = b.at(2);
    const auto& v = j.at("volume");
    r.v1 = v.at(0); r.v2 = v.at(1); r.v3 = v.at(2); r.vr = v.at(3);
}

inline void to_json(nlohmann::json& j, const tolerances& t) {
    j = {{"algebraic", t.algebraic}, {"fd", t.fd}, {"contour", t.contour},
         {"quad3d4d", t.quad3d4d}};
}
inline void from_json(const nlohmann::json& j, tolerances& t) {
    t.algebraic = j.at("algebraic");
    t.fd = j.at("fd");
    t.contour = j.at("contour");
    t.quad3d4d = j.at("quad3d4d");
}

inline void to_json(nlohmann::json& j, const suite_config& c) {
    j = {{"calibrated", c.calibrated},
         {"kernel_variant", to_string(c.kernel)},
         {"orientation_sign", c.orientation_sign},
         {"morera_sign", c.morera_sign},
         {"gamma_bracket", c.gamma_bracket},
         {"resolutions", c.res},
         {"tolerances", c.tol},
         {"bp_domain", c.bp_domain},
         {"seed", c.seed}};
}
inline void from_json(const nlohmann::json& j, suite_config& c) {
    c.calibrated = j.at("calibrated");
    c.kernel = kernel_variant_from_string(j.at("kernel_variant"));
    c.orientation_sign = j.at("orientation_sign");
    c.morera_sign = j.at("morera_sign");
    c.gamma_bracket = j.at("gamma_bracket");
    c.res = j.at("resolutions");
    c.tol = j.at("tolerances");
    c.bp_domain = j.at("bp_domain");
    c.seed = j.at("seed");
}

inline suite_config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_parse{"cannot open " + path};
    nlohmann::json j;
    try {
        in >> j;
        return j.get<suite_config>();
    } catch (const nlohmann::json::exception& e) {
        throw config_parse{e.what()};
    }
}

inline void save_config(const suite_config& c, const std::string& path) {
    std::ofstream out(path);
    out << nlohmann::json(c).dump(2) << '\n';
}

} // namespace srlab
