#pragma once

// Reference numerics: a method-of-lines solver for u_t = [a f u_x]_x + b g u_x + c h,
// an adaptive integrator for the auxiliary ODEs of the catalog and grid
// convergence studies against the exact solutions.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsv/aux_ode.hpp"
#include "fsv/catalog.hpp"

namespace fsv {

struct MolConfig {
    int nx = 41;
    /// Fraction of the parabolic bound dx^2 / (2 max |a f|) used as time step.
    double dt_safety = 0.9;
    /// Integration length measured from the window's t0.
    double t_end = 0.05;
};

/// Numeric state at the final time next to the exact values.
struct MolSolution {
    std::vector<double> x;
    std::vector<double> u;
    std::vector<double> u_exact;
    double t0 = 0.0;
    double t_final = 0.0;
    double dt = 0.0;
    int steps = 0;

    double max_error() const;
    /// Root mean square of the nodal error.
    double l2_error() const;
};

/// Dirichlet data u(x_boundary, t).
using BoundaryFn = std::function<double(double x, double t)>;

/// Integrates from t0 with classical RK4 on the given nodes. The diffusion
/// term is discretized in conservative form with face fluxes
/// a(x_{i+1/2}) f((u_i + u_{i+1})/2) (u_{i+1} - u_i)/dx; the advection term
/// uses central differences. Both end values follow the boundary function at
/// every stage. Throws StabilityViolation when a value leaves u_window by
/// more than 10% of its width, or stops being finite.
MolSolution mol_solve(const CoefficientSet& coeffs, const std::vector<double>& x,
                      std::vector<double> initial, const BoundaryFn& boundary,
                      const Interval& u_window, double t0, const MolConfig& cfg);

/// The semi-discrete right-hand side at interior nodes (zero at both ends).
std::vector<double> mol_operator(const CoefficientSet& coeffs, const std::vector<double>& x,
                                 const std::vector<double>& u);

/// Initial and boundary data from the instance's exact solution; t_end must
/// fit in the instance's time window.
MolSolution mol_solve(const Instance& inst, const MolConfig& cfg);

/// Largest dt the stability bound admits for these nodes and u range.
double mol_time_step(const CoefficientSet& coeffs, const std::vector<double>& x,
                     const Interval& u_range, double safety);

// Auxiliary ODEs --------------------------------------------------------------

/// Tolerances of the embedded 4(5) pair.
inline constexpr double kAuxOdeAbsTol = 1e-10;
inline constexpr double kAuxOdeRelTol = 1e-10;
/// Step cap as a fraction of the interval, so the Hermite dense output keeps
/// the ODE defect small.
inline constexpr double kAuxOdeMaxStepFraction = 1e-3;

/// Tabulated solution with cubic Hermite interpolation between steps.
class AuxOdeSolution {
public:
    AuxOdeSolution(int order, std::vector<double> s, std::vector<double> y,
                   std::vector<double> dy, std::vector<double> ddy);

    double operator()(double s) const { return value(s); }
    double value(double s) const;
    /// y' (tabulated for second-order problems, the interpolant's slope otherwise).
    double derivative(double s) const;
    /// Slope of the y' interpolant; second-order problems only.
    double second_derivative(double s) const;
    /// Slope of the y interpolant.
    double value_slope(double s) const;
    Interval interval() const { return {s_.front(), s_.back()}; }
    std::size_t steps() const { return s_.size() - 1; }

private:
    // Component 0 is y, component 1 is y' (order 2 only).
    double hermite(int comp, double s, bool derivative) const;

    int order_;
    std::vector<double> s_;
    std::vector<double> y_;
    std::vector<double> dy_;
    std::vector<double> ddy_;
};

/// Dormand-Prince integration over [spec.s0, spec.s1] from (y0, dy0).
/// Throws SingularityHit with the location where the right-hand side stops
/// being finite or the step size collapses.
AuxOdeSolution integrate_aux_ode(const AuxOdeSpec& spec);

/// max |P'(s) - rhs(s, P(s))| of the interpolant at n evenly spaced points.
double aux_ode_residual(const AuxOdeSpec& spec, const AuxOdeSolution& sol, int n = 100);

// Convergence -----------------------------------------------------------------

/// Below this max error a level counts as exact and no order is reported.
inline constexpr double kExactRegimeFloor = 1e-9;

struct ConvergenceRow {
    int nx = 0;
    double linf = 0.0;
    double l2 = 0.0;
    /// Observed order against the previous row, from the max error.
    std::optional<double> order;
};

struct ConvergenceReport {
    std::string id;
    std::string hash;
    double t_end = 0.0;
    double dt_safety = 0.0;
    std::vector<ConvergenceRow> rows;
    bool exact_regime = false;
    std::string error;

    /// Smallest observed order, if any level pair has one.
    std::optional<double> min_order() const;
    /// Header "nx,Linf,L2,order"; the order column reads "exact-regime" or
    /// is empty for the first row.
    std::string to_csv() const;
};

/// Runs mol_solve at each nx (dt_safety and t_end from cfg).
ConvergenceReport convergence_study(const Instance& inst, const std::vector<int>& nx_list,
                                    const MolConfig& cfg = {});
ConvergenceReport convergence_study(const std::string& id, const std::vector<int>& nx_list,
                                    const MolConfig& cfg = {});

std::string convergence_to_json(const std::vector<ConvergenceReport>& reports);
std::string convergence_to_text(const ConvergenceReport& r);

}  // namespace fsv
