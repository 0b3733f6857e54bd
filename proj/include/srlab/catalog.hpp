#pragma once

#include <string>
#include <vector>

#include "srlab/field.hpp"

namespace srlab {

struct witness {
    std::string name;
    field f;
    bool member; // of SR_v for the catalog's weight v
};

// Members are e^{-<.,v>} times entire slice monomials, so they lie in
// Ker G_v globally; non-members fail the slice Vekua equation everywhere.
inline std::vector<witness> witness_catalog(const quat& v) {
    std::vector<witness> out;
    out.push_back({"exp*const", exp_weighted(const_field({0.7, 0.2, -0.4, 0.1}), v, -1.0), true});
    out.push_back({"exp*q", exp_weighted(identity_field(), v, -1.0), true});
    out.push_back({"exp*q^2", exp_weighted(monomial_field(2, one), v, -1.0), true});
    out.push_back({"exp*q^3", exp_weighted(monomial_field(3, one), v, -1.0), true});
    out.push_back({"exp*q*a", exp_weighted(monomial_field(1, {0.3, -0.5, 0.8, 0.2}), v, -1.0), true});
    out.push_back({"conj", conj_field(), false});
    out.push_back({"q0", real_part_field(), false});
    out.push_back({"norm2", norm2_field(), false});
    return out;
}

inline field named_field(const std::string& name, const quat& v) {
    if (name == "const") return const_field({0.7, 0.2, -0.4, 0.1});
    if (name == "identity") return identity_field();
    if (name == "conj") return conj_field();
    if (name == "q0") return real_part_field();
    if (name == "norm2") return norm2_field();
    if (name.rfind("monomial", 0) == 0) {
        const unsigned n = static_cast<unsigned>(std::stoul(name.substr(8)));
        return monomial_field(n, one);
    }
    if (name.rfind("expw-", 0) == 0) return exp_weighted(named_field(name.substr(5), v), v, -1.0);
    throw error{"unknown field name: " + name};
}

} // namespace srlab
