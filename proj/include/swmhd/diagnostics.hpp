// Conservation budgets, entropy tracking, discrete L2 errors against exact
// solutions, and experimental-order-of-convergence bookkeeping.
#pragma once

#include <functional>
#include <vector>

#include "swmhd/solver.hpp"
#include "swmhd/types.hpp"

namespace swmhd {

struct DomainIntegrals {
    double mass = 0.0;
    double mom1 = 0.0;
    double mom2 = 0.0;
    double hB1 = 0.0;
    double hB2 = 0.0;
    double entropy = 0.0;
};

DomainIntegrals domain_integrals(const Field1D& field, const PhysicalConstants& c);
DomainIntegrals domain_integrals(const Field2D& field, const PhysicalConstants& c);

// |e(0) - e(T)| per conserved quantity and for the total entropy.
struct ConservationReport {
    double mass = 0.0;
    double mom1 = 0.0;
    double mom2 = 0.0;
    double hB1 = 0.0;
    double hB2 = 0.0;
    double entropy = 0.0;
};

ConservationReport conservation_error(const Field1D& initial, const Field1D& final_,
                                      const PhysicalConstants& c);
ConservationReport conservation_error(const Field2D& initial, const Field2D& final_,
                                      const PhysicalConstants& c);

using ExactSolution1D = std::function<ConservedState(double x, double t)>;

// Grid-weighted discrete norm, per variable: sqrt(sum_i dx_i (u_i - u_ex)^2).
Vec5 l2_error(const Field1D& field, const ExactSolution1D& exact);

struct ConvergenceRow {
    int cells = 0;
    Vec5 errors{};
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
};

// Pairwise EOC log2(e_coarse / e_fine) averaged over consecutive rows; the
// rows must double the cell count each step.
Vec5 average_eoc(const ConvergenceTable& table);

struct DiagnosticsRow {
    double time = 0.0;
    double dt = 0.0;
    DomainIntegrals integrals;
};

}  // namespace swmhd
