#include "cann/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cann {

namespace {

// 5-point Gauss-Legendre rule on [-1,1].
struct Gl5Rule {
    double node[5];
    double weight[5];
    Gl5Rule() {
        const double s70 = std::sqrt(70.0);
        const double n1 = std::sqrt(245.0 - 14.0 * s70) / 21.0;
        const double n2 = std::sqrt(245.0 + 14.0 * s70) / 21.0;
        const double w1 = (322.0 + 13.0 * s70) / 900.0;
        const double w2 = (322.0 - 13.0 * s70) / 900.0;
        node[0] = 0.0;
        node[1] = -n1;
        node[2] = n1;
        node[3] = -n2;
        node[4] = n2;
        weight[0] = 128.0 / 225.0;
        weight[1] = weight[2] = w1;
        weight[3] = weight[4] = w2;
    }
};

double gl5_integral(const ScalarFn& f, double lo, double hi) {
    static const Gl5Rule rule;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double x = mid + half * rule.node[k];
        const double fx = f(x);
        if (!std::isfinite(fx)) {
            throw EvalError("non-finite integrand value at x=" + std::to_string(x));
        }
        sum += rule.weight[k] * fx;
    }
    return half * sum;
}

}  // namespace

Grid1D::Grid1D(double a_, double b_, int J_) : a(a_), b(b_), J(J_), dx((b_ - a_) / J_) {
    if (!(J >= 1)) throw ConfigError("Grid1D: cell count must be positive");
    if (!(dx > 0.0) || !std::isfinite(dx)) throw ConfigError("Grid1D: requires b > a");
}

StencilSpec::StencilSpec(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0) throw ConfigError("StencilSpec: p and q must be nonnegative");
}

CellAverageField::CellAverageField(Grid1D g, std::vector<double> v, double t)
    : grid(g), values(std::move(v)), time(t) {
    if (static_cast<int>(values.size()) != grid.J) {
        throw ShapeError("CellAverageField: expected " + std::to_string(grid.J) +
                         " values, got " + std::to_string(values.size()));
    }
}

double interval_average(const ScalarFn& f, double lo, double hi,
                        std::span<const double> breakpoints) {
    if (!(hi > lo)) throw ConfigError("interval_average: requires hi > lo");

    // Split at breakpoints strictly inside (lo, hi).
    std::vector<double> cuts;
    for (double s : breakpoints) {
        if (s > lo && s < hi) cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double integral = 0.0;
    double left = lo;
    for (double s : cuts) {
        integral += gl5_integral(f, left, s);
        left = s;
    }
    integral += gl5_integral(f, left, hi);
    return integral / (hi - lo);
}

double cell_average_of(const ScalarFn& f, const Grid1D& grid, int j,
                       std::span<const double> breakpoints) {
    if (j < 1 || j > grid.J) throw ConfigError("cell_average_of: cell index out of range");
    try {
        return interval_average(f, grid.cell_lo(j), grid.cell_hi(j), breakpoints);
    } catch (const EvalError& e) {
        throw EvalError("cell " + std::to_string(j) + ": " + e.what());
    }
}

CellAverageField average_field(const ScalarFn& f, const Grid1D& grid, double time,
                               std::span<const double> breakpoints) {
    std::vector<double> v(static_cast<std::size_t>(grid.J));
    for (int j = 1; j <= grid.J; ++j) {
        v[static_cast<std::size_t>(j - 1)] = cell_average_of(f, grid, j, breakpoints);
    }
    return CellAverageField(grid, std::move(v), time);
}

namespace {

// Average of the DirichletExact ghost function over the (out-of-domain) cell
// with 1-based index j (j <= 0 or j > J) at time t.
double ghost_average(const Grid1D& grid, int j, double t, const BoundaryCondition& bc) {
    if (!bc.ghost_value) {
        throw ConfigError("DirichletExact boundary requires a ghost-value function");
    }
    std::vector<double> bps;
    if (bc.ghost_breakpoints) bps = bc.ghost_breakpoints(t);
    const auto slice = [&](double x) { return bc.ghost_value(x, t); };
    return interval_average(slice, grid.cell_lo(j), grid.cell_hi(j), bps);
}

// Wrap a 1-based index into 1..J.
int wrap_index(int j, int J) {
    int r = (j - 1) % J;
    if (r < 0) r += J;
    return r + 1;
}

}  // namespace

std::vector<double> assemble_input_vector(const CellAverageField& field, int j,
                                          const StencilSpec& stencil,
                                          const BoundaryCondition& bc) {
    const Grid1D& grid = field.grid;
    if (stencil.width() > grid.J) {
        throw ConfigError("stencil width " + std::to_string(stencil.width()) +
                          " exceeds cell count " + std::to_string(grid.J));
    }
    if (bc.kind == BcKind::DirichletExact && (j < 1 || j > grid.J)) {
        throw ConfigError("assemble_input_vector: cell index out of range");
    }

    std::vector<double> in(static_cast<std::size_t>(stencil.width()));
    for (int k = -stencil.p; k <= stencil.q; ++k) {
        const int jj = j + k;
        double v;
        if (bc.kind == BcKind::Periodic) {
            v = field.value(wrap_index(jj, grid.J));
        } else if (jj >= 1 && jj <= grid.J) {
            v = field.value(jj);
        } else {
            v = ghost_average(grid, jj, field.time, bc);
        }
        in[static_cast<std::size_t>(k + stencil.p)] = v;
    }
    return in;
}

std::vector<double> extended_values(const Grid1D& grid, std::span<const double> values,
                                    double time, const StencilSpec& stencil,
                                    const BoundaryCondition& bc) {
    if (static_cast<int>(values.size()) != grid.J) {
        throw ShapeError("extended_values: value count does not match grid");
    }
    if (stencil.width() > grid.J) {
        throw ConfigError("stencil width " + std::to_string(stencil.width()) +
                          " exceeds cell count " + std::to_string(grid.J));
    }

    const int J = grid.J;
    std::vector<double> ext(static_cast<std::size_t>(J + stencil.p + stencil.q));
    for (int j = 1; j <= J; ++j) {
        ext[static_cast<std::size_t>(j - 1 + stencil.p)] = values[static_cast<std::size_t>(j - 1)];
    }
    for (int k = 1; k <= stencil.p; ++k) {
        const int jj = 1 - k;  // ghost index on the left
        ext[static_cast<std::size_t>(stencil.p - k)] =
            bc.kind == BcKind::Periodic ? values[static_cast<std::size_t>(wrap_index(jj, J) - 1)]
                                        : ghost_average(grid, jj, time, bc);
    }
    for (int k = 1; k <= stencil.q; ++k) {
        const int jj = J + k;  // ghost index on the right
        ext[static_cast<std::size_t>(J + stencil.p + k - 1)] =
            bc.kind == BcKind::Periodic ? values[static_cast<std::size_t>(wrap_index(jj, J) - 1)]
                                        : ghost_average(grid, jj, time, bc);
    }
    return ext;
}

}  // namespace cann
