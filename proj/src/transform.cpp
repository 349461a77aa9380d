#include "fsv/transform.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <sstream>

namespace fsv {

MonotoneMap::MonotoneMap(std::function<double(double)> F, Expr zeta, Interval u_window)
    : F_(std::move(F)), zeta_(std::move(zeta)), window_(u_window) {
    if (!window_.bounded() || !(window_.lo < window_.hi)) {
        throw WindowError("monotone map needs a bounded, nonempty u window");
    }
    int sign = 0;
    for (int i = 0; i < 100; ++i) {
        const double u = window_.lo + (window_.hi - window_.lo) * (i + 0.5) / 100.0;
        const double z = zeta_.eval_unchecked(u);
        if (!std::isfinite(z) || z == 0.0) {
            throw NonMonotone("zeta vanishes or is undefined at u = " + std::to_string(u));
        }
        const int s = z > 0 ? 1 : -1;
        if (sign != 0 && s != sign) {
            throw NonMonotone("zeta changes sign near u = " + std::to_string(u));
        }
        sign = s;
    }
    direction_ = sign;
    f_lo_ = F_(window_.lo);
    f_hi_ = F_(window_.hi);
    if (!std::isfinite(f_lo_) || !std::isfinite(f_hi_)) {
        throw WindowError("Z is not finite at the ends of the u window");
    }
    if ((f_hi_ - f_lo_) * direction_ <= 0.0) {
        throw NonMonotone("end values of Z contradict the sign of zeta");
    }
    range_ = {std::min(f_lo_, f_hi_), std::max(f_lo_, f_hi_)};
}

MonotoneMap MonotoneMap::from_solution(const ImplicitSolution& sol) {
    return MonotoneMap([F = sol.Fzeta, off = sol.z_offset](double u) { return F(u) + off; },
                       sol.zeta, sol.u_window);
}

double MonotoneMap::invert(double target) const {
    if (!std::isfinite(target) || target < range_.lo || target > range_.hi) {
        throw OutOfRange("target " + std::to_string(target) + " outside [" +
                         std::to_string(range_.lo) + ", " + std::to_string(range_.hi) + "]");
    }
    if (target == f_lo_) return window_.lo;
    if (target == f_hi_) return window_.hi;
    const auto g = [&](double u) { return F_(u) - target; };
    // TOMS 748 keeps a bracket and mixes inverse cubic interpolation with
    // bisection; iterate it down to a few ulps of the root.
    std::uintmax_t iterations = kInversionMaxIterations;
    const auto r = boost::math::tools::toms748_solve(
        g, window_.lo, window_.hi, f_lo_ - target, f_hi_ - target,
        boost::math::tools::eps_tolerance<double>(), iterations);
    double u = 0.5 * (r.first + r.second);
    // Prefer the bracket end with the smaller residual.
    double best = std::abs(g(u));
    for (double cand : {r.first, r.second}) {
        const double v = std::abs(g(cand));
        if (v < best) {
            best = v;
            u = cand;
        }
    }
    if (best > kInversionTolerance * std::max(1.0, std::abs(target))) {
        throw OutOfRange("inversion did not reach tolerance for target " + std::to_string(target));
    }
    return u;
}

double invert(const MonotoneMap& F, double target) { return F.invert(target); }

DerivativeTriple reconstruct_derivatives(double zeta, double zeta_prime,
                                         const DerivativeTriple& theta) {
    if (!(std::abs(zeta) >= kZetaFloor)) {
        throw DegenerateZeta("|zeta| = " + std::to_string(std::abs(zeta)) + " below 1e-14");
    }
    DerivativeTriple d;
    d.t = theta.t / zeta;
    d.x = theta.x / zeta;
    d.xx = theta.xx / zeta - theta.x * theta.x * zeta_prime / (zeta * zeta * zeta);
    return d;
}

DerivativeTriple reconstruct_derivatives(const Expr& zeta, double u, const DerivativeTriple& theta) {
    return reconstruct_derivatives(zeta(u), zeta.derivative()(u), theta);
}

std::vector<double> uniform_nodes(double a, double b, int n) {
    if (n < 2) return {a};
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    v.back() = b;
    return v;
}

std::string SolutionGrid::to_csv() const {
    std::ostringstream os;
    os << "x,t,theta,u\n";
    char buf[128];
    for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x[i], t[j],
                          theta_at(i, j), u_at(i, j));
            os << buf;
        }
    }
    return os.str();
}

SolutionGrid solution_grid(const ImplicitSolution& sol, const std::vector<double>& x,
                           const std::vector<double>& t) {
    const MonotoneMap F = MonotoneMap::from_solution(sol);
    SolutionGrid g;
    g.x = x;
    g.t = t;
    g.theta.resize(x.size() * t.size());
    g.u.resize(x.size() * t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double th = sol.theta(x[i], t[j]);
            g.theta[j * x.size() + i] = th;
            g.u[j * x.size() + i] = F.invert(th);
        }
    }
    return g;
}

SolutionGrid solution_grid(const Instance& inst, int nx, int nt) {
    const Window& w = inst.sol.xt_window;
    SolutionGrid g = solution_grid(inst.sol, uniform_nodes(w.x0, w.x1, nx),
                                   uniform_nodes(w.t0, w.t1, nt));
    g.instance_id = inst.id;
    g.instance_hash = inst.hash();
    return g;
}

}  // namespace fsv
