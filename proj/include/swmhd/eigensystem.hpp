// Powell-modified flux Jacobians and their entropy-scaled eigendecompositions.
// The dissipation terms only ever need R~ = R^ T; forming it in closed form
// removes the cg^2/Bn singularity of the raw eigenvector matrix at Bn = 0, so
// only the scaled decomposition is part of the public contract.
#pragma once

#include "swmhd/physics.hpp"
#include "swmhd/types.hpp"

namespace swmhd {

struct WaveSpeeds {
    double c = 0.0;    // gravity wave speed, c^2 = g h
    double c_g = 0.0;  // magnetogravity wave speed, c_g^2 = g h + Bn^2
};

inline WaveSpeeds wave_speeds(const PrimitiveState& w, const PhysicalConstants& c, Axis axis) {
    require_positive_depth(w.h, "wave_speeds");
    const double Bn = (axis == Axis::X) ? w.B1 : w.B2;
    const double c2 = c.g * w.h;
    return {std::sqrt(c2), std::sqrt(c2 + Bn * Bn)};
}

inline Mat5 modified_flux_jacobian(const PrimitiveState& w, const PhysicalConstants& c,
                                   Axis axis) {
    require_positive_depth(w.h, "modified_flux_jacobian");
    const double v1 = w.v1, v2 = w.v2, B1 = w.B1, B2 = w.B2;
    const double gh = c.g * w.h;
    if (axis == Axis::X) {
        return {0.0, 1.0, 0.0, 0.0, 0.0,
                gh - v1 * v1 + B1 * B1, 2.0 * v1, 0.0, -B1, 0.0,
                -v1 * v2 + B1 * B2, v2, v1, 0.0, -B1,
                0.0, 0.0, 0.0, v1, 0.0,
                v2 * B1 - v1 * B2, B2, -B1, 0.0, v1};
    }
    return {0.0, 0.0, 1.0, 0.0, 0.0,
            -v1 * v2 + B1 * B2, v2, v1, -B2, 0.0,
            gh - v2 * v2 + B2 * B2, 0.0, 2.0 * v2, 0.0, -B2,
            v1 * B2 - v2 * B1, -B2, B1, v2, 0.0,
            0.0, 0.0, 0.0, 0.0, v2};
}

struct ScaledEigensystem {
    Vec5 lambdas{};   // (vn - cg, vn - Bn, vn, vn + Bn, vn + cg)
    Mat5 r_scaled{};  // R~ = R^ T, columns scaled so R~ R~^T = H
    Vec5 s_diag{};    // diagonal of S = T^2
};

inline ScaledEigensystem scaled_eigensystem(const PrimitiveState& w, const PhysicalConstants& c,
                                            Axis axis) {
    require_positive_depth(w.h, "scaled_eigensystem");
    const double v1 = w.v1, v2 = w.v2;
    const double vn = (axis == Axis::X) ? v1 : v2;
    const double Bn = (axis == Axis::X) ? w.B1 : w.B2;
    const double Bt = (axis == Axis::X) ? w.B2 : w.B1;  // tangential field component
    const double gh = c.g * w.h;
    const double cc = std::sqrt(gh);
    const double cg = std::sqrt(gh + Bn * Bn);
    const double sqg = std::sqrt(c.g);

    const double t1 = cc / (cg * std::sqrt(2.0 * c.g));
    const double t2 = cc / std::sqrt(2.0 * c.g);
    const double t3 = Bn / (cg * sqg);
    const double col3n = cg / sqg;  // T3 * cg^2/Bn, finite for Bn -> 0

    ScaledEigensystem e;
    e.lambdas = {vn - cg, vn - Bn, vn, vn + Bn, vn + cg};
    e.s_diag = {t1 * t1, t2 * t2, t3 * t3, t2 * t2, t1 * t1};

    Mat5& r = e.r_scaled;
    if (axis == Axis::X) {
        // rows: h, hv1, hv2, hB1, hB2
        r = {t1,             0.0, t3,      0.0,  t1,
             t1 * (v1 - cg), 0.0, t3 * v1, 0.0,  t1 * (v1 + cg),
             t1 * v2,        t2,  t3 * v2, t2,   t1 * v2,
             0.0,            0.0, col3n,   0.0,  0.0,
             t1 * Bt,        t2,  t3 * Bt, -t2,  t1 * Bt};
    } else {
        r = {t1,             0.0, t3,      0.0,  t1,
             t1 * v1,        t2,  t3 * v1, t2,   t1 * v1,
             t1 * (v2 - cg), 0.0, t3 * v2, 0.0,  t1 * (v2 + cg),
             t1 * Bt,        t2,  t3 * Bt, -t2,  t1 * Bt,
             0.0,            0.0, col3n,   0.0,  0.0};
    }
    return e;
}

// |vn| + cg for one axis; the 2D CFL bound needs the directions separately.
inline double axis_wave_speed(const PrimitiveState& w, const PhysicalConstants& c, Axis axis) {
    const double vn = (axis == Axis::X) ? w.v1 : w.v2;
    return std::abs(vn) + wave_speeds(w, c, axis).c_g;
}

inline double max_wave_speed(const PrimitiveState& w, const PhysicalConstants& c) {
    return std::max(axis_wave_speed(w, c, Axis::X), axis_wave_speed(w, c, Axis::Y));
}

}  // namespace swmhd
