#pragma once

#include <array>
#include <cmath>

#include "srlab/quaternion.hpp"

namespace srlab {

// Orthonormal quaternion 4-tuple psi with psi_0 = +-1.  Coordinates of x with
// respect to psi are the Euclidean projections x_k = <x, psi_k>.
class structural_set {
  public:
    static constexpr double ortho_tol = 1e-12;

    explicit structural_set(const std::array<quat, 4>& psi) : psi_(psi) {
        for (int k = 0; k < 4; ++k)
            for (int m = 0; m < 4; ++m) {
                const double want = (k == m) ? 1.0 : 0.0;
                if (std::abs(dot(psi_[k], psi_[m]) - want) > ortho_tol)
                    throw not_orthonormal{};
            }
        if (std::abs(std::abs(psi_[0].q0) - 1.0) > ortho_tol || norm(vec(psi_[0])) > ortho_tol)
            throw psi0_not_unit_real{};
    }

    static const structural_set& standard() {
        static const structural_set st{{one, e1, e2, e3}};
        return st;
    }

    const quat& operator[](int k) const { return psi_[k]; }
    double psi0_sign() const { return psi_[0].q0; }

    std::array<double, 4> coords(const quat& x) const {
        return {dot(x, psi_[0]), dot(x, psi_[1]), dot(x, psi_[2]), dot(x, psi_[3])};
    }

    quat from_coords(const std::array<double, 4>& c) const {
        return c[0] * psi_[0] + c[1] * psi_[1] + c[2] * psi_[2] + c[3] * psi_[3];
    }

    // x_psi-vector part: x - x_0 psi_0.
    quat vec_part(const quat& x) const { return x - dot(x, psi_[0]) * psi_[0]; }

    // psi-conjugate: x_0 psi_0 - bold(x)_psi.
    quat conj_psi(const quat& x) const { return 2.0 * dot(x, psi_[0]) * psi_[0] - x; }

    double inner(const quat& x, const quat& y) const {
        const auto cx = coords(x), cy = coords(y);
        return cx[0] * cy[0] + cx[1] * cy[1] + cx[2] * cy[2] + cx[3] * cy[3];
    }

    // <bold(x), bold(y)>_psi
    double inner_vec(const quat& x, const quat& y) const {
        const auto cx = coords(x), cy = coords(y);
        return cx[1] * cy[1] + cx[2] * cy[2] + cx[3] * cy[3];
    }

    bool is_standard() const {
        return psi_[0] == one && psi_[1] == e1 && psi_[2] == e2 && psi_[3] == e3;
    }

  private:
    std::array<quat, 4> psi_;
};

} // namespace srlab
