#include "swmhd/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swmhd/diagnostics.hpp"
#include "swmhd/scenarios.hpp"

namespace swmhd {

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Entropy stable finite volume solver for shallow water MHD"};
    app.set_config("--config", "", "flat key = value configuration file");

    std::string scenario = "riemann";
    std::string flux = "EC";
    std::string bc;
    std::string grid = "regular";
    std::string convergence;
    ScenarioSpec spec;

    app.add_option("--scenario", scenario, "manufactured | riemann | rotor");
    app.add_option("--flux", flux, "EC | ES1 | ES2");
    app.add_option("--cells", spec.cells, "cell count (per direction for the rotor)");
    app.add_option("--cfl", spec.cfl, "Courant number; scenario default if omitted");
    app.add_option("--tfinal", spec.t_final, "final time; scenario default if omitted");
    app.add_option("--bc", bc, "periodic | inflow_outflow");
    app.add_option("--grid", grid, "regular | stretched");
    app.add_option("--ratio", spec.stretch_ratio, "width ratio of the stretched grid");
    app.add_option("--gravity", spec.gravity, "gravitational acceleration");
    app.add_option("--out", spec.out_dir, "output directory");
    app.add_option("--convergence", convergence,
                   "comma-separated cell counts; runs the convergence driver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        spec.scenario = parse_scenario(scenario);
        spec.flux = parse_flux_kind(flux);
        spec.grid = parse_grid_kind(grid);
        if (!bc.empty()) {
            spec.bc = parse_boundary_kind(bc);
        } else if (spec.scenario == ScenarioKind::Riemann) {
            spec.bc = BoundaryKind::Periodic;
        }

        if (!convergence.empty()) {
            const std::vector<int> counts = parse_cell_list(convergence);
            const ConvergenceTable table = convergence_driver(spec, counts);
            const Vec5 eoc = average_eoc(table);
            std::printf("avg EOC: h %.2f  hv1 %.2f  hv2 %.2f  hB1 %.2f  hB2 %.2f\n",
                        eoc[0], eoc[1], eoc[2], eoc[3], eoc[4]);
        } else {
            run_scenario(spec);
        }
        return 0;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    } catch (const BadGridSpec& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    } catch (const DegenerateTable& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 2;
    }
}

}  // namespace swmhd
