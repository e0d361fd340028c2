// 1D grids (regular and geometrically stretched) and the regular 2D grid.
#pragma once

#include <vector>

#include "swmhd/types.hpp"

namespace swmhd {

struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    std::vector<double> centers;
    std::vector<double> widths;

    int n() const { return static_cast<int>(centers.size()); }
    double min_width() const;
};

Grid1D regular_grid_1d(double x_min, double x_max, int n);

// Widths form a geometric progression with Delta_x_max / Delta_x_min = ratio,
// increasing left to right, rescaled to tile the domain exactly.
Grid1D stretched_grid_1d(double x_min, double x_max, int n, double ratio);

struct Grid2D {
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;

    // Centers measured from the domain midpoint. The signed offsets i+1/2-n/2
    // are exact in floating point, so mirrored cells get exactly mirrored
    // centers on symmetric domains; symmetric initial data then stays
    // bitwise symmetric under the equivariant update.
    double x_center(int i) const {
        return 0.5 * (x_min + x_max) + (i + 0.5 - 0.5 * nx) * dx;
    }
    double y_center(int j) const {
        return 0.5 * (y_min + y_max) + (j + 0.5 - 0.5 * ny) * dy;
    }
};

Grid2D regular_grid_2d(double x_min, double x_max, double y_min, double y_max, int nx, int ny);

}  // namespace swmhd
