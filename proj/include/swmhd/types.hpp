// Core value types for the shallow water MHD solver: 5-vectors, dense 5x5
// matrices (row-major), state structs, and the error taxonomy.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace swmhd {

using Vec5 = std::array<double, 5>;
using Mat5 = std::array<double, 25>;  // row-major, entry (i,j) at [5*i + j]

// ---------------------------------------------------------------------------
// errors

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPositiveDepth : SolverError {
    using SolverError::SolverError;
};
struct BadGridSpec : SolverError {
    using SolverError::SolverError;
};
struct BoundaryError : SolverError {
    using SolverError::SolverError;
};
struct GridMismatch : SolverError {
    using SolverError::SolverError;
};
struct DegenerateTable : SolverError {
    using SolverError::SolverError;
};
struct ConfigError : SolverError {
    using SolverError::SolverError;
};
struct IoError : SolverError {
    using SolverError::SolverError;
};

// Depths at or below this are rejected rather than clamped; dry states are out
// of scope for the scheme.
inline constexpr double kDepthFloor = 1e-13;

inline void require_positive_depth(double h, const char* where) {
    if (!(h > kDepthFloor)) {
        throw NonPositiveDepth(std::string(where) + ": non-positive fluid depth h = " +
                               std::to_string(h));
    }
}

// ---------------------------------------------------------------------------
// states

enum class Axis { X, Y };

struct PhysicalConstants {
    double g = 1.0;  // gravitational acceleration, > 0
};

// u = (h, h v1, h v2, h B1, h B2)
struct ConservedState {
    double h = 0.0;
    double hv1 = 0.0;
    double hv2 = 0.0;
    double hB1 = 0.0;
    double hB2 = 0.0;

    Vec5 as_vec() const { return {h, hv1, hv2, hB1, hB2}; }
    static ConservedState from_vec(const Vec5& v) { return {v[0], v[1], v[2], v[3], v[4]}; }
};

struct PrimitiveState {
    double h = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;
    double B1 = 0.0;
    double B2 = 0.0;

    Vec5 as_vec() const { return {h, v1, v2, B1, B2}; }
};

// q = (g h - (v1^2+v2^2+B1^2+B2^2)/2, v1, v2, B1, B2)
struct EntropyState {
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
    double q4 = 0.0;
    double q5 = 0.0;

    Vec5 as_vec() const { return {q1, q2, q3, q4, q5}; }
};

// ---------------------------------------------------------------------------
// small dense algebra

inline Vec5 operator+(const Vec5& a, const Vec5& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}
inline Vec5 operator-(const Vec5& a, const Vec5& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}
inline Vec5 operator*(double s, const Vec5& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3], s * a[4]};
}
inline Vec5& operator+=(Vec5& a, const Vec5& b) {
    for (int i = 0; i < 5; ++i) a[i] += b[i];
    return a;
}

inline double dot(const Vec5& a, const Vec5& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3] + a[4] * b[4];
}

inline Vec5 mat_vec(const Mat5& m, const Vec5& x) {
    Vec5 y{};
    for (int i = 0; i < 5; ++i) {
        double s = 0.0;
        for (int j = 0; j < 5; ++j) s += m[5 * i + j] * x[j];
        y[i] = s;
    }
    return y;
}

inline Vec5 mat_transpose_vec(const Mat5& m, const Vec5& x) {
    Vec5 y{};
    for (int j = 0; j < 5; ++j) {
        double s = 0.0;
        for (int i = 0; i < 5; ++i) s += m[5 * i + j] * x[i];
        y[j] = s;
    }
    return y;
}

inline Mat5 mat_mul(const Mat5& a, const Mat5& b) {
    Mat5 c{};
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) {
            const double aik = a[5 * i + k];
            for (int j = 0; j < 5; ++j) c[5 * i + j] += aik * b[5 * k + j];
        }
    return c;
}

inline Mat5 mat_transpose(const Mat5& m) {
    Mat5 t{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) t[5 * j + i] = m[5 * i + j];
    return t;
}

inline double max_abs_diff(const Mat5& a, const Mat5& b) {
    double m = 0.0;
    for (int i = 0; i < 25; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace swmhd
