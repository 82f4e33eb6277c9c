#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cann/errors.hpp"

namespace cann {

using ScalarFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;
using BreakpointsFn = std::function<std::vector<double>(double)>;

/// Uniform partition of [a,b] into J cells of width dx = (b-a)/J.
/// Cells carry 1-based indices: cell j covers [a+(j-1)dx, a+j dx].
struct Grid1D {
    double a;
    double b;
    int J;
    double dx;

    Grid1D(double a_, double b_, int J_);

    double cell_lo(int j) const { return a + (j - 1) * dx; }
    double cell_hi(int j) const { return a + j * dx; }
    double cell_center(int j) const { return a + (j - 0.5) * dx; }

    bool operator==(const Grid1D& o) const {
        return a == o.a && b == o.b && J == o.J;
    }
};

enum class BcKind { Periodic, DirichletExact };

/// Ghost-cell policy. Periodic copies interior averages with index
/// arithmetic modulo J. DirichletExact fills a ghost cell with the cell
/// average of `ghost_value` over the out-of-domain cell at the current time.
struct BoundaryCondition {
    BcKind kind = BcKind::Periodic;
    SpaceTimeFn ghost_value;            // DirichletExact only
    BreakpointsFn ghost_breakpoints;    // optional: jump locations of ghost_value at time t

    static BoundaryCondition periodic() { return {BcKind::Periodic, {}, {}}; }
    static BoundaryCondition dirichlet_exact(SpaceTimeFn ghost, BreakpointsFn bps = {}) {
        return {BcKind::DirichletExact, std::move(ghost), std::move(bps)};
    }
};

/// Stencil half-widths: p cells to the left and q to the right of cell j.
struct StencilSpec {
    int p = 0;
    int q = 0;

    StencilSpec() = default;
    StencilSpec(int p_, int q_);

    int width() const { return p + q + 1; }
};

/// Cell averages of a scalar field at one time level.
struct CellAverageField {
    Grid1D grid;
    std::vector<double> values;  // values[j-1] is the average on cell j
    double time = 0.0;

    CellAverageField(Grid1D g, std::vector<double> v, double t);

    double value(int j) const { return values[static_cast<std::size_t>(j - 1)]; }
    double& value(int j) { return values[static_cast<std::size_t>(j - 1)]; }
};

/// Mean of f over [lo,hi] by composite 5-point Gauss-Legendre quadrature.
/// The interval is split at any breakpoints strictly inside it, so piecewise
/// definitions with known jump/kink locations are integrated exactly.
double interval_average(const ScalarFn& f, double lo, double hi,
                        std::span<const double> breakpoints = {});

/// (1/dx) * integral of f over cell j.
double cell_average_of(const ScalarFn& f, const Grid1D& grid, int j,
                       std::span<const double> breakpoints = {});

/// Cell averages of x -> f(x) on every cell; `time` is only a label.
CellAverageField average_field(const ScalarFn& f, const Grid1D& grid, double time,
                               std::span<const double> breakpoints = {});

/// [u_{j-p}, ..., u_j, ..., u_{j+q}] with out-of-range entries filled per bc
/// at field.time. For Periodic, j may be any integer (wrapped modulo J).
std::vector<double> assemble_input_vector(const CellAverageField& field, int j,
                                          const StencilSpec& stencil,
                                          const BoundaryCondition& bc);

/// Interior values flanked by p ghost values on the left and q on the right,
/// all at time `time`. Entry (j-1+p) corresponds to cell j, so the stencil of
/// cell j is the contiguous window starting at entry (j-1).
std::vector<double> extended_values(const Grid1D& grid, std::span<const double> values,
                                    double time, const StencilSpec& stencil,
                                    const BoundaryCondition& bc);

}  // namespace cann
