#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "srlab/domain.hpp"
#include "srlab/quaternion.hpp"

namespace srlab {

// Evaluator handle q -> H.  The library never differentiates symbolically;
// every derivative of a field is a finite-difference claim.
struct field {
    std::function<quat(const quat&)> eval;
    bool smooth = true; // C^inf unless stated otherwise
    std::optional<domain_spec> safe_box;

    quat operator()(const quat& q) const {
        if (safe_box && !safe_box->contains(q)) throw out_of_domain{};
        return eval(q);
    }
};

inline field const_field(const quat& c) {
    return {[c](const quat&) { return c; }};
}

inline field identity_field() {
    return {[](const quat& q) { return q; }};
}

// q^n * a
inline field monomial_field(unsigned n, const quat& a) {
    return {[n, a](const quat& q) { return pow_int(q, n) * a; }};
}

inline field conj_field() {
    return {[](const quat& q) { return conj(q); }};
}

inline field real_part_field() {
    return {[](const quat& q) { return quat(real(q)); }};
}

inline field norm2_field() {
    return {[](const quat& q) { return quat(norm2(q)); }};
}

// e^{s<q,v>} * f(q)
inline field exp_weighted(const field& f, const quat& v, double s) {
    auto inner = f.eval;
    return {[inner, v, s](const quat& q) { return std::exp(s * dot(q, v)) * inner(q); },
            f.smooth, f.safe_box};
}

} // namespace srlab
