// The three experiment definitions (manufactured solution, strong Riemann
// problem, 2D rotor), the batch convergence driver, and the CSV writers.
#pragma once

#include <string>
#include <vector>

#include "swmhd/diagnostics.hpp"
#include "swmhd/solver.hpp"

namespace swmhd {

enum class ScenarioKind { Manufactured, Riemann, Rotor };
enum class GridKind { Regular, Stretched };

struct ScenarioSpec {
    ScenarioKind scenario = ScenarioKind::Riemann;
    GridKind grid = GridKind::Regular;
    double stretch_ratio = 4.0;
    int cells = 100;  // 1D cell count; the rotor grid is cells x cells
    FluxKind flux = FluxKind::EC;
    double cfl = -1.0;      // <= 0 picks the scenario default
    double t_final = -1.0;  // < 0 picks the scenario default
    BoundaryKind bc = BoundaryKind::Periodic;
    double gravity = 1.0;
    std::string out_dir = "out";
};

// smooth periodic solution advecting with unit speed; h B1 = 1 identically
ConservedState manufactured_exact(double x, double t);
// analytic momentum forcing that closes the manufactured solution
Vec5 manufactured_source(double x, double t, const PhysicalConstants& c);

PrimitiveState riemann_ic(double x);
PrimitiveState rotor_ic(double x, double y);

// Fills in scenario defaults (cfl, t_final) where the caller left them unset.
SolverConfig solver_config_for(const ScenarioSpec& spec);

Field1D initial_field_1d(const ScenarioSpec& spec);
Field2D initial_field_2d(const ScenarioSpec& spec);

// Runs one scenario and writes solution.csv + diagnostics.csv into out_dir.
void run_scenario(const ScenarioSpec& spec);

// Runs the manufactured scenario at each resolution and assembles the table.
ConvergenceTable convergence_driver(const ScenarioSpec& base, const std::vector<int>& cell_counts);

void write_snapshot_csv(const std::string& path, const Field1D& field);
void write_snapshot_csv(const std::string& path, const Field2D& field);
void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);
void write_convergence_csv(const std::string& path, const ConvergenceTable& table);

// Parsing helpers shared by the CLI and the config file reader.
ScenarioKind parse_scenario(const std::string& name);
GridKind parse_grid_kind(const std::string& name);
FluxKind parse_flux_kind(const std::string& name);
BoundaryKind parse_boundary_kind(const std::string& name);
std::vector<int> parse_cell_list(const std::string& csv);

}  // namespace swmhd
