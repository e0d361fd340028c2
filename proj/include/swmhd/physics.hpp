// Pointwise SWMHD algebra: state conversions, physical fluxes, total-energy
// entropy pair, entropy variables, and the associated Jacobians for both
// Cartesian directions. Everything here is a pure function of its arguments.
#pragma once

#include "swmhd/types.hpp"

namespace swmhd {

inline PrimitiveState primitive_from_conserved(const ConservedState& u) {
    require_positive_depth(u.h, "primitive_from_conserved");
    const double inv = 1.0 / u.h;
    return {u.h, u.hv1 * inv, u.hv2 * inv, u.hB1 * inv, u.hB2 * inv};
}

inline ConservedState conserved_from_primitive(const PrimitiveState& w) {
    require_positive_depth(w.h, "conserved_from_primitive");
    return {w.h, w.h * w.v1, w.h * w.v2, w.h * w.B1, w.h * w.B2};
}

inline Vec5 physical_flux(const PrimitiveState& w, const PhysicalConstants& c, Axis axis) {
    require_positive_depth(w.h, "physical_flux");
    const double h = w.h, v1 = w.v1, v2 = w.v2, B1 = w.B1, B2 = w.B2;
    if (axis == Axis::X) {
        return {h * v1,
                h * v1 * v1 + 0.5 * c.g * h * h - h * B1 * B1,
                h * v1 * v2 - h * B1 * B2,
                0.0,
                h * v1 * B2 - h * v2 * B1};
    }
    return {h * v2,
            h * v1 * v2 - h * B1 * B2,
            h * v2 * v2 + 0.5 * c.g * h * h - h * B2 * B2,
            h * v2 * B1 - h * v1 * B2,
            0.0};
}

// total energy U = (g h^2 + h|v|^2 + h|B|^2) / 2
inline double entropy(const PrimitiveState& w, const PhysicalConstants& c) {
    require_positive_depth(w.h, "entropy");
    return 0.5 * (c.g * w.h * w.h +
                  w.h * (w.v1 * w.v1 + w.v2 * w.v2 + w.B1 * w.B1 + w.B2 * w.B2));
}

inline EntropyState entropy_variables(const PrimitiveState& w, const PhysicalConstants& c) {
    require_positive_depth(w.h, "entropy_variables");
    return {c.g * w.h - 0.5 * (w.v1 * w.v1 + w.v2 * w.v2 + w.B1 * w.B1 + w.B2 * w.B2),
            w.v1, w.v2, w.B1, w.B2};
}

inline ConservedState conserved_from_entropy_variables(const EntropyState& q,
                                                       const PhysicalConstants& c) {
    const double h =
        (q.q1 + 0.5 * (q.q2 * q.q2 + q.q3 * q.q3 + q.q4 * q.q4 + q.q5 * q.q5)) / c.g;
    require_positive_depth(h, "conserved_from_entropy_variables");
    return {h, h * q.q2, h * q.q3, h * q.q4, h * q.q5};
}

// H = u_q, symmetric positive definite
inline Mat5 entropy_jacobian(const PrimitiveState& w, const PhysicalConstants& c) {
    require_positive_depth(w.h, "entropy_jacobian");
    const double v1 = w.v1, v2 = w.v2, B1 = w.B1, B2 = w.B2;
    const double c2 = c.g * w.h;
    const double s = 1.0 / c.g;
    return {s * 1.0, s * v1,             s * v2,             s * B1,             s * B2,
            s * v1,  s * (v1 * v1 + c2), s * (v1 * v2),      s * (v1 * B1),      s * (v1 * B2),
            s * v2,  s * (v1 * v2),      s * (v2 * v2 + c2), s * (v2 * B1),      s * (v2 * B2),
            s * B1,  s * (v1 * B1),      s * (v2 * B1),      s * (B1 * B1 + c2), s * (B1 * B2),
            s * B2,  s * (v1 * B2),      s * (v2 * B2),      s * (B1 * B2),      s * (B2 * B2 + c2)};
}

// H^-1 = q_u
inline Mat5 entropy_jacobian_inverse(const PrimitiveState& w, const PhysicalConstants& c) {
    require_positive_depth(w.h, "entropy_jacobian_inverse");
    const double v1 = w.v1, v2 = w.v2, B1 = w.B1, B2 = w.B2;
    const double c2 = c.g * w.h;
    const double s = 1.0 / w.h;
    return {s * (c2 + v1 * v1 + v2 * v2 + B1 * B1 + B2 * B2), -s * v1, -s * v2, -s * B1, -s * B2,
            -s * v1, s,   0.0, 0.0, 0.0,
            -s * v2, 0.0, s,   0.0, 0.0,
            -s * B1, 0.0, 0.0, s,   0.0,
            -s * B2, 0.0, 0.0, 0.0, s};
}

// A = f_u in the x-direction; the fourth row vanishes identically because hB1
// carries no propagating wave in 1D.
inline Mat5 flux_jacobian(const PrimitiveState& w, const PhysicalConstants& c) {
    require_positive_depth(w.h, "flux_jacobian");
    const double v1 = w.v1, v2 = w.v2, B1 = w.B1, B2 = w.B2;
    const double c2 = c.g * w.h;
    return {0.0, 1.0, 0.0, 0.0, 0.0,
            c2 - v1 * v1 + B1 * B1, 2.0 * v1, 0.0, -2.0 * B1, 0.0,
            -v1 * v2 + B1 * B2, v2, v1, -B2, -B1,
            0.0, 0.0, 0.0, 0.0, 0.0,
            v2 * B1 - v1 * B2, B2, -B1, -v2, v1};
}

inline double entropy_flux(const PrimitiveState& w, const PhysicalConstants& c, Axis axis) {
    require_positive_depth(w.h, "entropy_flux");
    const double h = w.h, v1 = w.v1, v2 = w.v2, B1 = w.B1, B2 = w.B2;
    if (axis == Axis::X) {
        return c.g * h * h * v1 +
               0.5 * (h * v1 * v1 * v1 + h * v1 * v2 * v2 + h * v1 * B2 * B2 -
                      h * v1 * B1 * B1) -
               h * v2 * B1 * B2;
    }
    return c.g * h * h * v2 +
           0.5 * (h * v1 * v1 * v2 + h * v2 * v2 * v2 + h * v2 * B1 * B1 -
                  h * v2 * B2 * B2) -
           h * v1 * B1 * B2;
}

// psi = q.f - F (and the y-direction analogue)
inline double entropy_potential(const PrimitiveState& w, const PhysicalConstants& c, Axis axis) {
    require_positive_depth(w.h, "entropy_potential");
    const double h = w.h;
    const double vB = w.v1 * w.B1 + w.v2 * w.B2;
    if (axis == Axis::X) return 0.5 * c.g * h * h * w.v1 - h * w.B1 * vB;
    return 0.5 * c.g * h * h * w.v2 - h * w.B2 * vB;
}

}  // namespace swmhd
