#pragma once

// Residual engines for catalog instances: a finite-difference check of the
// PDE on the inverted u field, an analytic check of the transformed equation,
// the bilinear identity sum Phi_n Psi_n = 0 and the splitting relations.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsv/catalog.hpp"
#include "fsv/transform.hpp"

namespace fsv {

/// Width of the boundary ring left out of finite-difference residuals.
inline constexpr int kFdRing = 3;
/// Smallest grid (nodes per axis) the finite-difference engine accepts.
inline constexpr int kFdMinNodes = 7;

/// theta and its partials at one (x, t) node.
struct ThetaJet {
    double x = 0.0;
    double t = 0.0;
    double theta = 0.0;
    double theta_t = 0.0;
    double theta_x = 0.0;
    double theta_xx = 0.0;
};

/// The ten factors of the bilinear form of one variant.
struct SplittingForm {
    Variant variant = Variant::Plain;
    double param = 0.0;
    std::array<std::function<double(const ThetaJet&)>, 5> phi;
    std::array<std::function<double(double)>, 5> psi;
};

/// Builds Phi_n from a, b, c and Psi_n from f, g, h, zeta and Z.
SplittingForm make_splitting_form(const CoefficientSet& coeffs, const ImplicitSolution& sol,
                                  Variant variant, double param = 0.0);
/// The form matching the instance's own variant.
SplittingForm splitting_form(const Instance& inst);

ThetaJet theta_jet(const BivariateExpr& theta, const BivariatePartials& d, double x, double t);

struct FieldSummary {
    double max_abs = 0.0;
    double rms = 0.0;
    double argmax_x = 0.0;
    double argmax_t = 0.0;
    /// max_abs / scale, the number compared with tolerances.
    double normalized = 0.0;
    double scale = 1.0;
    int count = 0;
};

/// Residual values on a grid; NaN marks nodes left out.
struct ResidualField {
    std::vector<double> x;
    std::vector<double> t;
    std::vector<double> values;
    /// max(1, max |u_t|) over the evaluated nodes.
    double scale = 1.0;

    double at(std::size_t i, std::size_t j) const { return values[j * x.size() + i]; }
    FieldSummary summary() const;
};

/// u_t - [a f u_x]_x - b g u_x - c h with fourth-order central differences of
/// the grid's u values. The diffusion term is expanded as
/// a' f u_x + a f' u_x^2 + a f u_xx. Nodes within kFdRing of the boundary are
/// left out. Throws GridTooSmall below kFdMinNodes per axis.
ResidualField residual_u_level(const CoefficientSet& coeffs, const SolutionGrid& grid);

/// -theta_t + (a theta_x)_x f + a theta_x^2 (f/zeta)' + b theta_x g + c h zeta
/// with symbolic theta partials, at every node, u taken from the grid.
ResidualField residual_theta_level(const CoefficientSet& coeffs, const ImplicitSolution& sol,
                                   const SolutionGrid& grid);

/// sum_n Phi_n Psi_n at every node. Throws VariantMismatch when the form's
/// variant or parameter differs from the instance's.
ResidualField bilinear_identity(const SplittingForm& form, const Instance& inst,
                                const SolutionGrid& grid);

struct RelationResidual {
    std::string name;
    bool phi_side = true;
    double max_residual = 0.0;  // normalized by max(1, sum of |terms|)
};

/// Phi relations at every grid node, Psi relations at 50 points of the u window.
std::vector<RelationResidual> splitting_relations(const Instance& inst, const SolutionGrid& grid);

/// Least-squares fit of zeta (C1 F + C2) = f, F an antiderivative of f.
struct NonclassicalFit {
    double C1 = 0.0;
    double C2 = 0.0;
    double relative_residual = 0.0;
    bool conforms = false;
    bool degenerate = false;
};

inline constexpr double kNonclassicalThreshold = 1e-8;

/// Uses 200 midpoint samples of the window. Throws SingularFit when the
/// normal equations are rank deficient.
NonclassicalFit nonclassical_fit(const Expr& f, const Expr& zeta, const Expr& F,
                                 const Interval& u_window);
/// F anchored at the window midpoint.
NonclassicalFit nonclassical_fit(const Expr& f, const Expr& zeta, const Interval& u_window);

/// Input of the linearization cross-check: theta solves
/// theta_t = a theta_xx + b theta_x + c, and u follows from
/// theta = int zeta du with zeta = exp((1/a) int f du).
struct LinearizationInput {
    double a = 1.0;
    Expr b = Expr(0.0);
    Expr c = Expr(0.0);
    Expr f = Expr(0.0);
    BivariateExpr theta;
    Window window;
    /// Optional closed form of int zeta du (checked against quadrature).
    std::optional<Expr> Z_closed;
    int nx = 41;
    int nt = 41;
};

struct LinearizationResult {
    /// Max residual of the linear equation for theta (symbolic partials).
    double linear_residual = 0.0;
    /// u_t - a u_xx - f u_x^2 - b u_x - c exp(-(1/a) int f du), by finite differences.
    ResidualField nonlinear;
    SolutionGrid grid;
};

/// Throws WindowError when theta leaves the range of Z, and the residual
/// check's Error when the linear equation is not satisfied to 1e-10.
LinearizationResult linearization_check(const LinearizationInput& in);

// Reports ---------------------------------------------------------------------

struct Tolerances {
    double analytic = 1e-9;
    double fd = 1e-4;
    double relation = 1e-10;
    double bilinear = 1e-10;
    double self_check = 1e-10;
    double fd_order = 3.5;
    /// Below this normalized u-level residual the order is not measurable.
    double fd_exact_floor = 1e-9;
};

struct VerifyOptions {
    int nx = 41;
    int nt = 41;
    Tolerances tol;
    /// Also run the u-level engine on the refined (2n-1) grid for the order.
    bool measure_order = true;
};

struct VerificationReport {
    std::string id;
    std::string hash;
    int nx = 0;
    int nt = 0;
    std::string variant;
    FieldSummary u_level;
    FieldSummary theta_level;
    FieldSummary bilinear;
    /// Refined-grid residual at the nodes it shares with the base grid.
    std::optional<FieldSummary> u_level_fine;
    std::optional<double> fd_order;
    bool fd_exact_regime = false;
    std::vector<RelationResidual> relations;
    std::vector<ConstraintResidual> self_check;
    Tolerances tol;
    std::string error;  // set when verification could not run
    bool pass = false;
    std::vector<std::string> failures;
};

VerificationReport verify_instance(const Instance& inst, const VerifyOptions& opt = {});
/// Instantiates and verifies; construction errors are recorded in the report.
VerificationReport verify_entry(const std::string& id, const Slots& slots,
                                const VerifyOptions& opt = {});

/// Serializes reports as one JSON document (ordered as given).
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string report_to_text(const VerificationReport& r);

}  // namespace fsv
