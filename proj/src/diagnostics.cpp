#include "swmhd/diagnostics.hpp"

#include <cmath>
#include <string>

#include "swmhd/physics.hpp"

namespace swmhd {

namespace {

// Left-to-right accumulation keeps the reductions bitwise reproducible.
void accumulate(DomainIntegrals& acc, const ConservedState& u, double volume,
                const PhysicalConstants& c) {
    acc.mass += volume * u.h;
    acc.mom1 += volume * u.hv1;
    acc.mom2 += volume * u.hv2;
    acc.hB1 += volume * u.hB1;
    acc.hB2 += volume * u.hB2;
    acc.entropy += volume * entropy(primitive_from_conserved(u), c);
}

ConservationReport report_from(const DomainIntegrals& a, const DomainIntegrals& b) {
    return {std::abs(a.mass - b.mass), std::abs(a.mom1 - b.mom1), std::abs(a.mom2 - b.mom2),
            std::abs(a.hB1 - b.hB1), std::abs(a.hB2 - b.hB2), std::abs(a.entropy - b.entropy)};
}

}  // namespace

DomainIntegrals domain_integrals(const Field1D& field, const PhysicalConstants& c) {
    DomainIntegrals acc;
    for (int i = 0; i < field.grid.n(); ++i) {
        accumulate(acc, field.u[i], field.grid.widths[i], c);
    }
    return acc;
}

DomainIntegrals domain_integrals(const Field2D& field, const PhysicalConstants& c) {
    DomainIntegrals acc;
    const double vol = field.grid.dx * field.grid.dy;
    for (const ConservedState& u : field.u) accumulate(acc, u, vol, c);
    return acc;
}

namespace {

void require_same_grid(const Grid1D& a, const Grid1D& b) {
    if (a.n() != b.n() || a.x_min != b.x_min || a.x_max != b.x_max || a.widths != b.widths) {
        throw GridMismatch("conservation_error: fields live on different grids");
    }
}

void require_same_grid(const Grid2D& a, const Grid2D& b) {
    if (a.nx != b.nx || a.ny != b.ny || a.x_min != b.x_min || a.x_max != b.x_max ||
        a.y_min != b.y_min || a.y_max != b.y_max) {
        throw GridMismatch("conservation_error: fields live on different grids");
    }
}

}  // namespace

ConservationReport conservation_error(const Field1D& initial, const Field1D& final_,
                                      const PhysicalConstants& c) {
    require_same_grid(initial.grid, final_.grid);
    return report_from(domain_integrals(initial, c), domain_integrals(final_, c));
}

ConservationReport conservation_error(const Field2D& initial, const Field2D& final_,
                                      const PhysicalConstants& c) {
    require_same_grid(initial.grid, final_.grid);
    return report_from(domain_integrals(initial, c), domain_integrals(final_, c));
}

Vec5 l2_error(const Field1D& field, const ExactSolution1D& exact) {
    Vec5 acc{};
    for (int i = 0; i < field.grid.n(); ++i) {
        const Vec5 diff = field.u[i].as_vec() -
                          exact(field.grid.centers[i], field.time).as_vec();
        for (int m = 0; m < 5; ++m) acc[m] += field.grid.widths[i] * diff[m] * diff[m];
    }
    for (int m = 0; m < 5; ++m) acc[m] = std::sqrt(acc[m]);
    return acc;
}

Vec5 average_eoc(const ConvergenceTable& table) {
    const std::size_t rows = table.rows.size();
    if (rows < 2) throw DegenerateTable("average_eoc: need at least two rows");
    for (std::size_t r = 1; r < rows; ++r) {
        if (table.rows[r].cells != 2 * table.rows[r - 1].cells) {
            throw DegenerateTable("average_eoc: cell counts must double each row");
        }
    }
    Vec5 acc{};
    for (std::size_t r = 1; r < rows; ++r) {
        for (int m = 0; m < 5; ++m) {
            acc[m] += std::log2(table.rows[r - 1].errors[m] / table.rows[r].errors[m]);
        }
    }
    for (int m = 0; m < 5; ++m) acc[m] /= static_cast<double>(rows - 1);
    return acc;
}

}  // namespace swmhd
