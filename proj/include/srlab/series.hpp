#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "srlab/field.hpp"
#include "srlab/quadrature.hpp"
#include "srlab/quaternion.hpp"

namespace srlab {

// Truncated v-weighted power series: f(q) = sum_n sum_k q^{n-k} (v qbar + q vbar)^k
// (-1)^k a_{n-k} / (2^k k!).
struct vseries {
    quat v{};
    std::vector<quat> coeffs; // a_0 .. a_N
};

// The double sum truncated at n <= N does not match the closed form
// e^{-<q,v>} sum_{n<=N} q^n a_n to full precision (the exponential tail
// couples), so the n-range is extended past N while coefficient indices stay
// capped at N; that makes the two truncations identical up to ~1e-16.
inline constexpr int series_tail_extension = 40;

inline quat series_eval(const vseries& s, const quat& q) {
    if (norm(q) >= 1.0) throw outside_ball{};
    const int N = static_cast<int>(s.coeffs.size()) - 1;
    if (N < 0) return quat{};
    const quat w = s.v * conj(q) + q * conj(s.v); // = 2<q,v>, a real scalar
    quat_accumulator acc;
    for (int n = 0; n <= N + series_tail_extension; ++n) {
        double fac = 1.0; // (-1)^k / (2^k k!)
        quat wp = one;    // w^k
        for (int k = 0; k <= n; ++k) {
            const int idx = n - k;
            if (idx <= N)
                acc.add(pow_int(q, static_cast<unsigned>(idx)) * wp *
                        (fac * s.coeffs[static_cast<size_t>(idx)]));
            fac *= -0.5 / (k + 1);
            wp = wp * w;
        }
    }
    return acc.value();
}

// Closed form e^{-<q,v>} sum q^n a_n (the proof identity; used as oracle).
inline quat series_eval_closed(const vseries& s, const quat& q) {
    quat_accumulator acc;
    quat qp = one;
    for (const quat& a : s.coeffs) {
        acc.add(qp * a);
        qp = qp * q;
    }
    return std::exp(-dot(q, s.v)) * acc.value();
}

// c_{v,k}(q) = ( (qbar/|q|) v (qbar/|q|) + vbar )^k
inline quat c_vk(const quat& v, const quat& q, unsigned k) {
    const double n = norm(q);
    if (n < 1e-300) throw zero_point{};
    const quat u = conj(q) / n;
    return pow_int(u * v * u + conj(v), k);
}

// Resummed form: f(q) = sum_n q^n sum_k (-1)^k c_{v,k}(q) a_{n-k} / (2^k k!).
inline quat series_eval_cvk(const vseries& s, const quat& q) {
    if (norm(q) >= 1.0) throw outside_ball{};
    const double n_q = norm(q);
    if (n_q < 1e-300) throw zero_point{};
    const int N = static_cast<int>(s.coeffs.size()) - 1;
    const quat base = (conj(q) / n_q) * s.v * (conj(q) / n_q) + conj(s.v);
    quat_accumulator acc;
    for (int n = 0; n <= N + series_tail_extension; ++n) {
        const quat qp = pow_int(q, static_cast<unsigned>(n));
        double fac = 1.0;
        quat cv = one;
        quat_accumulator inner;
        for (int k = 0; k <= n; ++k) {
            const int idx = n - k;
            if (idx <= N) inner.add(cv * (fac * s.coeffs[static_cast<size_t>(idx)]));
            fac *= -0.5 / (k + 1);
            cv = cv * base;
        }
        acc.add(qp * inner.value());
    }
    return acc.value();
}

// Coefficient convolution under a shared weight; the result carries every
// convolution coefficient (lengths add).
inline vseries star_v(const vseries& f, const vseries& g) {
    if (norm(f.v - g.v) > 1e-14) throw weight_mismatch{};
    vseries out;
    out.v = f.v;
    if (f.coeffs.empty() || g.coeffs.empty()) return out;
    out.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, quat{});
    for (size_t a = 0; a < f.coeffs.size(); ++a)
        for (size_t b = 0; b < g.coeffs.size(); ++b)
            out.coeffs[a + b] += f.coeffs[a] * g.coeffs[b];
    return out;
}

// a_n recovered as slice-contour coefficients of e^{<.,v>} f.
inline vseries series_fit(const field& f, const quat& v, const quat& slice_i, double r, int N,
                          int nodes = 256) {
    vseries out;
    out.v = v;
    out.coeffs.resize(static_cast<size_t>(N) + 1);
    contour_spec spec{0.0, r, slice_i, nodes};
    for (int n = 0; n <= N; ++n) {
        const quat a = contour_integrate(
            [&](const quat& z, const quat& dz) {
                const quat zi = inverse(pow_int(z, static_cast<unsigned>(n) + 1));
                return zi * (dz * (-slice_i)) * (std::exp(dot(z, v)) * f(z));
            },
            spec);
        out.coeffs[static_cast<size_t>(n)] = a / (2.0 * std::numbers::pi);
    }
    return out;
}

inline void to_json(nlohmann::json& j, const vseries& s) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& a : s.coeffs) cs.push_back({a.q0, a.q1, a.q2, a.q3});
    j = {{"v", {s.v.q0, s.v.q1, s.v.q2, s.v.q3}}, {"coeffs", cs}};
}

inline void from_json(const nlohmann::json& j, vseries& s) {
    const auto v = j.at("v");
    s.v = quat{v.at(0), v.at(1), v.at(2), v.at(3)};
    s.coeffs.clear();
    for (const auto& c : j.at("coeffs"))
        s.coeffs.push_back(quat{c.at(0), c.at(1), c.at(2), c.at(3)});
}

} // namespace srlab
