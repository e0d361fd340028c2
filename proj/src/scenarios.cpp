#include "swmhd/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swmhd/physics.hpp"

namespace swmhd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ConservedState manufactured_exact(double x, double t) {
    const double s = std::sin(2.0 * kPi * (x - t));
    return {2.0 + s, 2.0 + s, 2.0 + s, 1.0, 4.0 + 2.0 * s};
}

Vec5 manufactured_source(double x, double t, const PhysicalConstants& c) {
    const double h = 2.0 + std::sin(2.0 * kPi * (x - t));
    const double hx = 2.0 * kPi * std::cos(2.0 * kPi * (x - t));
    return {0.0, hx * (c.g * h + 1.0 / (h * h)), 0.0, 0.0, 0.0};
}

PrimitiveState riemann_ic(double x) {
    if (x <= 0.0) return {1.0, 0.0, 0.0, 1.0, 0.0};
    return {2.0, 0.0, 0.0, 0.5, 1.0};
}

PrimitiveState rotor_ic(double x, double y) {
    // the measure-zero rim r = 0.1 is assigned to the outer state
    if (std::hypot(x, y) < 0.1) return {10.0, -y, x, 0.1, 0.0};
    return {1.0, 0.0, 0.0, 1.0, 0.0};
}

SolverConfig solver_config_for(const ScenarioSpec& spec) {
    SolverConfig cfg;
    cfg.flux_kind = spec.flux;
    cfg.bc = spec.bc;
    cfg.constants = PhysicalConstants{spec.gravity};
    switch (spec.scenario) {
        case ScenarioKind::Manufactured:
            cfg.cfl = spec.cfl > 0.0 ? spec.cfl : 0.05;
            cfg.t_final = spec.t_final >= 0.0 ? spec.t_final : 2.0;
            cfg.analytic_source = [g = cfg.constants](double x, double t) {
                return manufactured_source(x, t, g);
            };
            break;
        case ScenarioKind::Riemann:
            cfg.cfl = spec.cfl > 0.0 ? spec.cfl : 0.1;
            cfg.t_final = spec.t_final >= 0.0 ? spec.t_final : 0.4;
            break;
        case ScenarioKind::Rotor:
            cfg.cfl = spec.cfl > 0.0 ? spec.cfl : 0.5;
            cfg.t_final = spec.t_final >= 0.0 ? spec.t_final : 0.2;
            break;
    }
    validate(cfg);
    return cfg;
}

namespace {

Grid1D grid_for(const ScenarioSpec& spec) {
    if (spec.grid == GridKind::Stretched) {
        return stretched_grid_1d(-1.0, 1.0, spec.cells, spec.stretch_ratio);
    }
    return regular_grid_1d(-1.0, 1.0, spec.cells);
}

}  // namespace

Field1D initial_field_1d(const ScenarioSpec& spec) {
    Field1D field;
    field.grid = grid_for(spec);
    field.u.resize(field.grid.n());
    for (int i = 0; i < field.grid.n(); ++i) {
        const double x = field.grid.centers[i];
        if (spec.scenario == ScenarioKind::Manufactured) {
            field.u[i] = manufactured_exact(x, 0.0);
        } else if (spec.scenario == ScenarioKind::Riemann) {
            field.u[i] = conserved_from_primitive(riemann_ic(x));
        } else {
            throw ConfigError("initial_field_1d: scenario requires a 2D grid");
        }
    }
    return field;
}

Field2D initial_field_2d(const ScenarioSpec& spec) {
    if (spec.scenario != ScenarioKind::Rotor) {
        throw ConfigError("initial_field_2d: scenario requires a 1D grid");
    }
    if (spec.grid == GridKind::Stretched) {
        throw ConfigError("initial_field_2d: the rotor runs on a regular Cartesian grid");
    }
    Field2D field;
    field.grid = regular_grid_2d(-1.0, 1.0, -1.0, 1.0, spec.cells, spec.cells);
    field.u.resize(static_cast<std::size_t>(spec.cells) * spec.cells);
    for (int j = 0; j < field.grid.ny; ++j) {
        for (int i = 0; i < field.grid.nx; ++i) {
            field.u[field.idx(i, j)] = conserved_from_primitive(
                rotor_ic(field.grid.x_center(i), field.grid.y_center(j)));
        }
    }
    return field;
}

// ---------------------------------------------------------------------------
// output writers: comma-separated, one header line, full-precision scientific

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        if (ec) throw IoError("cannot create output directory " + p.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file " + path);
    return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("failed writing output file " + path);
}

}  // namespace

void write_snapshot_csv(const std::string& path, const Field1D& field) {
    std::ofstream out = open_output(path);
    out << "x,h,v1,v2,B1,B2\n";
    for (int i = 0; i < field.grid.n(); ++i) {
        const PrimitiveState w = primitive_from_conserved(field.u[i]);
        out << fmt(field.grid.centers[i]) << ',' << fmt(w.h) << ',' << fmt(w.v1) << ','
            << fmt(w.v2) << ',' << fmt(w.B1) << ',' << fmt(w.B2) << '\n';
    }
    finish_output(out, path);
}

void write_snapshot_csv(const std::string& path, const Field2D& field) {
    std::ofstream out = open_output(path);
    out << "x,y,h,v1,v2,B1,B2\n";
    for (int j = 0; j < field.grid.ny; ++j) {
        for (int i = 0; i < field.grid.nx; ++i) {
            const PrimitiveState w = primitive_from_conserved(field.u[field.idx(i, j)]);
            out << fmt(field.grid.x_center(i)) << ',' << fmt(field.grid.y_center(j)) << ','
                << fmt(w.h) << ',' << fmt(w.v1) << ',' << fmt(w.v2) << ',' << fmt(w.B1) << ','
                << fmt(w.B2) << '\n';
        }
    }
    finish_output(out, path);
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows) {
    std::ofstream out = open_output(path);
    out << "t,dt,mass,mom1,mom2,hB1,hB2,entropy\n";
    for (const DiagnosticsRow& r : rows) {
        out << fmt(r.time) << ',' << fmt(r.dt) << ',' << fmt(r.integrals.mass) << ','
            << fmt(r.integrals.mom1) << ',' << fmt(r.integrals.mom2) << ','
            << fmt(r.integrals.hB1) << ',' << fmt(r.integrals.hB2) << ','
            << fmt(r.integrals.entropy) << '\n';
    }
    finish_output(out, path);
}

void write_convergence_csv(const std::string& path, const ConvergenceTable& table) {
    std::ofstream out = open_output(path);
    out << "n,e_h,e_hv1,e_hv2,e_hB1,e_hB2\n";
    for (const ConvergenceRow& r : table.rows) {
        out << r.cells;
        for (int m = 0; m < 5; ++m) out << ',' << fmt(r.errors[m]);
        out << '\n';
    }
    finish_output(out, path);
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::string& dir, const char* name) {
    return (std::filesystem::path(dir) / name).string();
}

}  // namespace

void run_scenario(const ScenarioSpec& spec) {
    const SolverConfig cfg = solver_config_for(spec);
    if (spec.scenario == ScenarioKind::Rotor) {
        Field2D field = initial_field_2d(spec);
        std::vector<DiagnosticsRow> diag;
        integrate(field, cfg, [&](const Field2D& f, const StepInfo& info) {
            diag.push_back({info.time, info.dt, domain_integrals(f, cfg.constants)});
        });
        write_snapshot_csv(join(spec.out_dir, "solution.csv"), field);
        write_diagnostics_csv(join(spec.out_dir, "diagnostics.csv"), diag);
        return;
    }
    Field1D field = initial_field_1d(spec);
    std::vector<DiagnosticsRow> diag;
    integrate(field, cfg, [&](const Field1D& f, const StepInfo& info) {
        diag.push_back({info.time, info.dt, domain_integrals(f, cfg.constants)});
    });
    write_snapshot_csv(join(spec.out_dir, "solution.csv"), field);
    write_diagnostics_csv(join(spec.out_dir, "diagnostics.csv"), diag);
}

ConvergenceTable convergence_driver(const ScenarioSpec& base, const std::vector<int>& cell_counts) {
    if (base.scenario != ScenarioKind::Manufactured) {
        throw ConfigError("convergence_driver: only the manufactured scenario has an exact solution");
    }
    if (cell_counts.size() < 2) {
        throw DegenerateTable("convergence_driver: need at least two resolutions");
    }
    for (std::size_t i = 1; i < cell_counts.size(); ++i) {
        if (cell_counts[i] != 2 * cell_counts[i - 1]) {
            throw ConfigError("convergence_driver: cell counts must double each step");
        }
    }
    ConvergenceTable table;
    for (int n : cell_counts) {
        ScenarioSpec spec = base;
        spec.cells = n;
        const SolverConfig cfg = solver_config_for(spec);
        Field1D field = initial_field_1d(spec);
        integrate(field, cfg);
        table.rows.push_back({n, l2_error(field, manufactured_exact)});
    }
    write_convergence_csv(join(base.out_dir, "convergence.csv"), table);
    return table;
}

// ---------------------------------------------------------------------------
// name parsing

ScenarioKind parse_scenario(const std::string& name) {
    if (name == "manufactured") return ScenarioKind::Manufactured;
    if (name == "riemann") return ScenarioKind::Riemann;
    if (name == "rotor") return ScenarioKind::Rotor;
    throw ConfigError("unknown scenario '" + name + "' (expected manufactured|riemann|rotor)");
}

GridKind parse_grid_kind(const std::string& name) {
    if (name == "regular") return GridKind::Regular;
    if (name == "stretched") return GridKind::Stretched;
    throw ConfigError("unknown grid kind '" + name + "' (expected regular|stretched)");
}

FluxKind parse_flux_kind(const std::string& name) {
    if (name == "EC" || name == "ec") return FluxKind::EC;
    if (name == "ES1" || name == "es1") return FluxKind::ES1;
    if (name == "ES2" || name == "es2") return FluxKind::ES2;
    throw ConfigError("unknown flux '" + name + "' (expected EC|ES1|ES2)");
}

BoundaryKind parse_boundary_kind(const std::string& name) {
    if (name == "periodic") return BoundaryKind::Periodic;
    if (name == "inflow_outflow") return BoundaryKind::InflowOutflow;
    throw ConfigError("unknown boundary condition '" + name +
                      "' (expected periodic|inflow_outflow)");
}

std::vector<int> parse_cell_list(const std::string& csv) {
    std::vector<int> counts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            counts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ConfigError("bad cell count '" + item + "' in list '" + csv + "'");
        }
    }
    if (counts.empty()) throw ConfigError("empty cell count list");
    return counts;
}

}  // namespace swmhd
