#include "swmhd/solver.hpp"

#include <cmath>
#include <string>

namespace swmhd {

void validate(const SolverConfig& cfg) {
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.5)) {
        throw ConfigError("SolverConfig: cfl must lie in (0, 1.5], got " + std::to_string(cfg.cfl));
    }
    if (!(cfg.constants.g > 0.0)) {
        throw ConfigError("SolverConfig: gravitational constant must be positive");
    }
    if (cfg.t_final < 0.0) {
        throw ConfigError("SolverConfig: t_final must be nonnegative");
    }
}

GhostStates1D apply_boundary(const Field1D& field, BoundaryKind bc,
                             const std::vector<double>& bottom) {
    const int n = field.grid.n();
    if (n == 0) throw BoundaryError("apply_boundary: empty field");
    GhostStates1D g;
    switch (bc) {
        case BoundaryKind::Periodic:
            g.left = field.u[n - 1];
            g.right = field.u[0];
            g.dx_left = field.grid.widths[n - 1];
            g.dx_right = field.grid.widths[0];
            if (!bottom.empty()) {
                g.b_left = bottom[n - 1];
                g.b_right = bottom[0];
            }
            return g;
        case BoundaryKind::InflowOutflow:
            // zeroth-order extrapolation: ghost repeats the edge cell, so the
            // boundary interface sees a zero jump
            g.left = field.u[0];
            g.right = field.u[n - 1];
            g.dx_left = field.grid.widths[0];
            g.dx_right = field.grid.widths[n - 1];
            if (!bottom.empty()) {
                g.b_left = bottom[0];
                g.b_right = bottom[n - 1];
            }
            return g;
    }
    throw BoundaryError("apply_boundary: unknown boundary kind");
}

std::vector<Vec5> semidiscrete_rhs_1d(const Field1D& field, const SolverConfig& cfg) {
    const int n = field.grid.n();
    const bool has_bottom = !cfg.bottom_topography.empty();
    if (has_bottom && static_cast<int>(cfg.bottom_topography.size()) != n) {
        throw GridMismatch("semidiscrete_rhs_1d: bottom topography size does not match grid");
    }
    const GhostStates1D ghosts = apply_boundary(field, cfg.bc, cfg.bottom_topography);

    // padded primitive states: index i+1 is cell i, 0 and n+1 are ghosts
    std::vector<PrimitiveState> w(n + 2);
    std::vector<double> dx(n + 2), b(n + 2, 0.0);
    w[0] = primitive_from_conserved(ghosts.left);
    w[n + 1] = primitive_from_conserved(ghosts.right);
    dx[0] = ghosts.dx_left;
    dx[n + 1] = ghosts.dx_right;
    b[0] = ghosts.b_left;
    b[n + 1] = ghosts.b_right;
    for (int i = 0; i < n; ++i) {
        w[i + 1] = primitive_from_conserved(field.u[i]);
        dx[i + 1] = field.grid.widths[i];
        if (has_bottom) b[i + 1] = cfg.bottom_topography[i];
    }

    // interface k sits between padded cells k and k+1
    std::vector<Vec5> flux(n + 1), src(n + 1);
    for (int k = 0; k <= n; ++k) {
        const InterfacePair pair{w[k], w[k + 1], dx[k], dx[k + 1]};
        flux[k] = numerical_flux(cfg.flux_kind, pair, cfg.constants, Axis::X);
        src[k] = janhunen_interface_source(pair, Axis::X);
    }

    std::vector<Vec5> rhs(n);
    const double g = cfg.constants.g;
    for (int i = 0; i < n; ++i) {
        const double inv_dx = 1.0 / field.grid.widths[i];
        for (int m = 0; m < 5; ++m) {
            rhs[i][m] = (flux[i][m] - flux[i + 1][m]) * inv_dx +
                        0.5 * (src[i][m] + src[i + 1][m]);
        }
        if (has_bottom) {
            const double hl = avg(w[i].h, w[i + 1].h);        // interface i-1/2
            const double hr = avg(w[i + 1].h, w[i + 2].h);    // interface i+1/2
            rhs[i][1] -= 0.5 * g * inv_dx *
                         (hr * (b[i + 2] - b[i + 1]) + hl * (b[i + 1] - b[i]));
        }
        if (cfg.analytic_source) {
            rhs[i] += cfg.analytic_source(field.grid.centers[i], field.time);
        }
    }
    return rhs;
}

std::vector<Vec5> semidiscrete_rhs_2d(const Field2D& field, const SolverConfig& cfg) {
    if (!cfg.bottom_topography.empty()) {
        throw ConfigError("semidiscrete_rhs_2d: bottom topography is only supported in 1D");
    }
    if (cfg.analytic_source) {
        throw ConfigError("semidiscrete_rhs_2d: analytic source terms are only supported in 1D");
    }
    const Grid2D& grid = field.grid;
    const int nx = grid.nx, ny = grid.ny;
    const bool periodic = (cfg.bc == BoundaryKind::Periodic);

    std::vector<PrimitiveState> w(static_cast<std::size_t>(nx) * ny);
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = primitive_from_conserved(field.u[c]);

    const auto wrap = [](int i, int n) { return i < 0 ? n - 1 : (i >= n ? 0 : i); };
    const auto clampi = [](int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); };
    const auto cell = [&](int i, int j) -> const PrimitiveState& {
        i = periodic ? wrap(i, nx) : clampi(i, nx);
        j = periodic ? wrap(j, ny) : clampi(j, ny);
        return w[static_cast<std::size_t>(j) * nx + i];
    };

    // x-direction sweeps: interface i of row j sits between cells (i-1, j), (i, j)
    std::vector<Vec5> fx(static_cast<std::size_t>(nx + 1) * ny), sx(fx.size());
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            const InterfacePair pair{cell(i - 1, j), cell(i, j), grid.dx, grid.dx};
            const std::size_t k = static_cast<std::size_t>(j) * (nx + 1) + i;
            fx[k] = numerical_flux(cfg.flux_kind, pair, cfg.constants, Axis::X);
            sx[k] = janhunen_interface_source(pair, Axis::X);
        }
    }
    // y-direction sweeps: interface j of column i sits between cells (i, j-1), (i, j)
    std::vector<Vec5> fy(static_cast<std::size_t>(ny + 1) * nx), sy(fy.size());
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j <= ny; ++j) {
            const InterfacePair pair{cell(i, j - 1), cell(i, j), grid.dy, grid.dy};
            const std::size_t k = static_cast<std::size_t>(i) * (ny + 1) + j;
            fy[k] = numerical_flux(cfg.flux_kind, pair, cfg.constants, Axis::Y);
            sy[k] = janhunen_interface_source(pair, Axis::Y);
        }
    }

    // gather in a fixed order: left, right, bottom, top, sources
    std::vector<Vec5> rhs(w.size());
    const double inv_dx = 1.0 / grid.dx, inv_dy = 1.0 / grid.dy;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t c = field.idx(i, j);
            const std::size_t kxl = static_cast<std::size_t>(j) * (nx + 1) + i;
            const std::size_t kyb = static_cast<std::size_t>(i) * (ny + 1) + j;
            for (int m = 0; m < 5; ++m) {
                rhs[c][m] = (fx[kxl][m] - fx[kxl + 1][m]) * inv_dx +
                            (fy[kyb][m] - fy[kyb + 1][m]) * inv_dy +
                            0.5 * (sx[kxl][m] + sx[kxl + 1][m]) +
                            0.5 * (sy[kyb][m] + sy[kyb + 1][m]);
            }
        }
    }
    return rhs;
}

double compute_timestep(const Field1D& field, const SolverConfig& cfg) {
    double lam = 0.0;
    for (const ConservedState& u : field.u) {
        lam = std::max(lam, max_wave_speed(primitive_from_conserved(u), cfg.constants));
    }
    double dt = cfg.cfl * field.grid.min_width() / lam;
    if (field.time + dt > cfg.t_final) dt = std::max(cfg.t_final - field.time, 0.0);
    return dt;
}

double compute_timestep(const Field2D& field, const SolverConfig& cfg) {
    double denom = 0.0;
    for (const ConservedState& u : field.u) {
        const PrimitiveState w = primitive_from_conserved(u);
        denom = std::max(denom, axis_wave_speed(w, cfg.constants, Axis::X) / field.grid.dx +
                                axis_wave_speed(w, cfg.constants, Axis::Y) / field.grid.dy);
    }
    double dt = cfg.cfl / denom;
    if (field.time + dt > cfg.t_final) dt = std::max(cfg.t_final - field.time, 0.0);
    return dt;
}

const RKScheme& lsrk54() {
    // Carpenter & Kennedy (1994), five-stage fourth-order 2N-storage scheme
    static const RKScheme rk{
        {0.0,
         -567301805773.0 / 1357537059087.0,
         -2404267990393.0 / 2016746695238.0,
         -3550918686646.0 / 2091501179385.0,
         -1275806237668.0 / 842570457699.0},
        {1432997174477.0 / 9575080441755.0,
         5161836677717.0 / 13612068292357.0,
         1720146321549.0 / 2090206949498.0,
         3134564353537.0 / 4481467310338.0,
         2277821191437.0 / 14882151754819.0},
        {0.0,
         1432997174477.0 / 9575080441755.0,
         2526269341429.0 / 6820363962896.0,
         2006345519317.0 / 3224310063776.0,
         2802321613138.0 / 2924317926251.0}};
    return rk;
}

namespace {

void accumulate_stage(ConservedState& u, Vec5& reg, const Vec5& rhs, double a, double b,
                      double dt, int cell, double t) {
    for (int m = 0; m < 5; ++m) reg[m] = a * reg[m] + dt * rhs[m];
    u.h += b * reg[0];
    u.hv1 += b * reg[1];
    u.hv2 += b * reg[2];
    u.hB1 += b * reg[3];
    u.hB2 += b * reg[4];
    if (!(u.h > kDepthFloor)) {
        throw NonPositiveDepth("lsrk_step: depth h = " + std::to_string(u.h) +
                               " in cell " + std::to_string(cell) + " at t = " +
                               std::to_string(t));
    }
}

}  // namespace

void lsrk_step(Field1D& field, double dt, const SolverConfig& cfg) {
    if (!(dt > 0.0)) throw SolverError("lsrk_step: time step must be positive");
    const RKScheme& rk = lsrk54();
    const double t0 = field.time;
    const std::size_t n = field.u.size();
    std::vector<Vec5> reg(n, Vec5{});
    for (int s = 0; s < 5; ++s) {
        field.time = t0 + rk.c[s] * dt;
        const std::vector<Vec5> rhs = semidiscrete_rhs_1d(field, cfg);
        for (std::size_t i = 0; i < n; ++i) {
            accumulate_stage(field.u[i], reg[i], rhs[i], rk.a[s], rk.b[s], dt,
                             static_cast<int>(i), field.time);
        }
    }
    field.time = t0 + dt;
}

void lsrk_step(Field2D& field, double dt, const SolverConfig& cfg) {
    if (!(dt > 0.0)) throw SolverError("lsrk_step: time step must be positive");
    const RKScheme& rk = lsrk54();
    const double t0 = field.time;
    const std::size_t n = field.u.size();
    std::vector<Vec5> reg(n, Vec5{});
    for (int s = 0; s < 5; ++s) {
        field.time = t0 + rk.c[s] * dt;
        const std::vector<Vec5> rhs = semidiscrete_rhs_2d(field, cfg);
        for (std::size_t i = 0; i < n; ++i) {
            accumulate_stage(field.u[i], reg[i], rhs[i], rk.a[s], rk.b[s], dt,
                             static_cast<int>(i), field.time);
        }
    }
    field.time = t0 + dt;
}

namespace {

template <typename Field, typename Callback>
void integrate_impl(Field& field, const SolverConfig& cfg, const Callback& on_step) {
    validate(cfg);
    const double eps = 1e-12 * std::max(1.0, std::abs(cfg.t_final));
    if (cfg.t_final < field.time - eps) {
        throw ConfigError("integrate: t_final precedes the current field time");
    }
    if (on_step) on_step(field, StepInfo{field.time, 0.0});
    while (field.time < cfg.t_final - eps) {
        const double dt = compute_timestep(field, cfg);
        if (!(dt > 0.0)) throw SolverError("integrate: time step collapsed to zero");
        lsrk_step(field, dt, cfg);
        if (cfg.t_final - field.time <= eps) field.time = cfg.t_final;
        if (on_step) on_step(field, StepInfo{field.time, dt});
    }
}

}  // namespace

void integrate(Field1D& field, const SolverConfig& cfg, const StepCallback1D& on_step) {
    integrate_impl(field, cfg, on_step);
}

void integrate(Field2D& field, const SolverConfig& cfg, const StepCallback2D& on_step) {
    integrate_impl(field, cfg, on_step);
}

}  // namespace swmhd
