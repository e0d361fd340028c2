// Semi-discrete finite-volume residual assembly, boundary handling, CFL time
// step selection, and low-storage Runge-Kutta time integration in 1D and 2D.
#pragma once

#include <functional>
#include <vector>

#include "swmhd/interface_flux.hpp"
#include "swmhd/mesh.hpp"
#include "swmhd/types.hpp"

namespace swmhd {

enum class BoundaryKind { Periodic, InflowOutflow };

// Optional analytic forcing evaluated at cell centers, (x, t) -> 5-vector.
using SourceFn = std::function<Vec5(double x, double t)>;

struct SolverConfig {
    FluxKind flux_kind = FluxKind::EC;
    double cfl = 0.5;  // in (0, 1.5]
    double t_final = 0.0;
    BoundaryKind bc = BoundaryKind::Periodic;
    PhysicalConstants constants{};
    std::vector<double> bottom_topography;  // per-cell b; empty = flat bottom (1D only)
    SourceFn analytic_source;               // 1D only
};

void validate(const SolverConfig& cfg);

struct Field1D {
    Grid1D grid;
    std::vector<ConservedState> u;
    double time = 0.0;
};

struct Field2D {
    Grid2D grid;
    std::vector<ConservedState> u;  // row-major, cell (i, j) at [j * nx + i]
    double time = 0.0;

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * grid.nx + i; }
};

// Ghost cells adjacent to the two 1D domain edges.
struct GhostStates1D {
    ConservedState left, right;
    double dx_left = 0.0, dx_right = 0.0;
    double b_left = 0.0, b_right = 0.0;
};

GhostStates1D apply_boundary(const Field1D& field, BoundaryKind bc,
                             const std::vector<double>& bottom = {});

std::vector<Vec5> semidiscrete_rhs_1d(const Field1D& field, const SolverConfig& cfg);
std::vector<Vec5> semidiscrete_rhs_2d(const Field2D& field, const SolverConfig& cfg);

// CFL step, clipped so t + dt never exceeds cfg.t_final.
double compute_timestep(const Field1D& field, const SolverConfig& cfg);
double compute_timestep(const Field2D& field, const SolverConfig& cfg);

// Carpenter-Kennedy five-stage fourth-order low-storage scheme.
struct RKScheme {
    std::array<double, 5> a{}, b{}, c{};
};
const RKScheme& lsrk54();

void lsrk_step(Field1D& field, double dt, const SolverConfig& cfg);
void lsrk_step(Field2D& field, double dt, const SolverConfig& cfg);

struct StepInfo {
    double time = 0.0;  // time after the step
    double dt = 0.0;    // step just taken (0 for the initial callback)
};

using StepCallback1D = std::function<void(const Field1D&, const StepInfo&)>;
using StepCallback2D = std::function<void(const Field2D&, const StepInfo&)>;

void integrate(Field1D& field, const SolverConfig& cfg, const StepCallback1D& on_step = {});
void integrate(Field2D& field, const SolverConfig& cfg, const StepCallback2D& on_step = {});

}  // namespace swmhd
