#pragma once

// Inversion of the implicit relation Z(u) = theta(x, t) and reconstruction of
// u and its derivatives on grids.

#include <functional>
#include <string>
#include <vector>

#include "fsv/catalog.hpp"
#include "fsv/funcalg.hpp"

namespace fsv {

/// Maximum root-finder iterations per inversion.
inline constexpr int kInversionMaxIterations = 200;
/// Acceptance tolerance of an inversion, relative to max(1, |target|).
inline constexpr double kInversionTolerance = 1e-12;
/// |zeta| below this makes derivative reconstruction ill-posed.
inline constexpr double kZetaFloor = 1e-14;

/// A strictly monotone map F on a bounded window, certified by sampling the
/// sign of its derivative zeta at 100 points.
class MonotoneMap {
public:
    /// Throws NonMonotone if zeta vanishes or changes sign on the window,
    /// WindowError if the window is unbounded.
    MonotoneMap(std::function<double(double)> F, Expr zeta, Interval u_window);

    /// Z(u) = theta of an implicit solution on its u window.
    static MonotoneMap from_solution(const ImplicitSolution& sol);

    double operator()(double u) const { return F_(u); }
    /// Closed range [min F, max F] over the window.
    Interval range() const { return range_; }
    Interval window() const { return window_; }
    int direction() const { return direction_; }
    const Expr& zeta() const { return zeta_; }

    /// The unique u with F(u) = target; throws OutOfRange outside range().
    double invert(double target) const;

private:
    std::function<double(double)> F_;
    Expr zeta_;
    Interval window_;
    Interval range_;
    double f_lo_ = 0.0;
    double f_hi_ = 0.0;
    int direction_ = 1;
};

double invert(const MonotoneMap& F, double target);

struct DerivativeTriple {
    double t = 0.0;
    double x = 0.0;
    double xx = 0.0;
};

/// u_t, u_x, u_xx from the theta partials by the chain rule. zeta_prime is
/// dzeta/du at u. Throws DegenerateZeta when |zeta(u)| < 1e-14.
DerivativeTriple reconstruct_derivatives(double zeta, double zeta_prime,
                                         const DerivativeTriple& theta);
DerivativeTriple reconstruct_derivatives(const Expr& zeta, double u, const DerivativeTriple& theta);

std::vector<double> uniform_nodes(double a, double b, int n);

/// u and theta sampled on a tensor grid; values are stored row by row in t
/// with x varying fastest.
struct SolutionGrid {
    std::string instance_id;
    std::string instance_hash;
    std::vector<double> x;
    std::vector<double> t;
    std::vector<double> theta;
    std::vector<double> u;

    std::size_t nx() const { return x.size(); }
    std::size_t nt() const { return t.size(); }
    double u_at(std::size_t i, std::size_t j) const { return u[j * x.size() + i]; }
    double theta_at(std::size_t i, std::size_t j) const { return theta[j * x.size() + i]; }

    /// Header "x,t,theta,u"; 17 significant digits; x varies fastest.
    std::string to_csv() const;
};

SolutionGrid solution_grid(const ImplicitSolution& sol, const std::vector<double>& x,
                           const std::vector<double>& t);
/// Uniform nx-by-nt grid over the solution's xt window.
SolutionGrid solution_grid(const Instance& inst, int nx = 41, int nt = 41);

}  // namespace fsv
