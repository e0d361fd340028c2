#include "swmhd/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swmhd {

double Grid1D::min_width() const {
    return *std::min_element(widths.begin(), widths.end());
}

namespace {

Grid1D grid_from_widths(double x_min, double x_max, std::vector<double> widths) {
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.widths = std::move(widths);
    g.centers.resize(g.widths.size());
    double edge = x_min;
    for (std::size_t i = 0; i < g.widths.size(); ++i) {
        g.centers[i] = edge + 0.5 * g.widths[i];
        edge += g.widths[i];
    }
    return g;
}

}  // namespace

Grid1D regular_grid_1d(double x_min, double x_max, int n) {
    if (n < 2) throw BadGridSpec("regular_grid_1d: need at least 2 cells, got " + std::to_string(n));
    if (!(x_max > x_min)) throw BadGridSpec("regular_grid_1d: x_max must exceed x_min");
    return grid_from_widths(x_min, x_max, std::vector<double>(n, (x_max - x_min) / n));
}

Grid1D stretched_grid_1d(double x_min, double x_max, int n, double ratio) {
    if (n < 2) throw BadGridSpec("stretched_grid_1d: need at least 2 cells, got " + std::to_string(n));
    if (!(x_max > x_min)) throw BadGridSpec("stretched_grid_1d: x_max must exceed x_min");
    if (!(ratio >= 1.0)) throw BadGridSpec("stretched_grid_1d: ratio must be >= 1");
    if (ratio == 1.0) return regular_grid_1d(x_min, x_max, n);

    const double r = std::pow(ratio, 1.0 / (n - 1));
    std::vector<double> w(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        w[i] = std::pow(r, i);
        sum += w[i];
    }
    const double scale = (x_max - x_min) / sum;
    for (double& wi : w) wi *= scale;
    return grid_from_widths(x_min, x_max, std::move(w));
}

Grid2D regular_grid_2d(double x_min, double x_max, double y_min, double y_max, int nx, int ny) {
    if (nx < 2 || ny < 2) throw BadGridSpec("regular_grid_2d: need at least 2 cells per direction");
    if (!(x_max > x_min) || !(y_max > y_min)) throw BadGridSpec("regular_grid_2d: empty domain");
    Grid2D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.y_min = y_min;
    g.y_max = y_max;
    g.nx = nx;
    g.ny = ny;
    g.dx = (x_max - x_min) / nx;
    g.dy = (y_max - y_min) / ny;
    return g;
}

}  // namespace swmhd
