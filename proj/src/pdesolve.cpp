#include "fsv/pdesolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <boost/numeric/odeint.hpp>
#include <json.hpp>

#include "fsv/errors.hpp"
#include "fsv/transform.hpp"

namespace fsv {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

double uniform_step(const std::vector<double>& x) {
    if (x.size() < 3) throw GridTooSmall("the method of lines needs at least 3 nodes");
    const double dx = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    if (!(dx > 0.0)) throw DomainError("nodes must increase");
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (std::abs(x[i] - x[i - 1] - dx) > 1e-9 * dx) throw DomainError("nodes must be uniform");
    }
    return dx;
}

/// Semi-discrete right-hand side with coefficients cached at nodes and faces.
class SpatialOperator {
public:
    SpatialOperator(const CoefficientSet& k, const std::vector<double>& x)
        : k_(k), n_(x.size()), dx_(uniform_step(x)), a_face_(n_ - 1), b_(n_), c_(n_), flux_(n_ - 1) {
        for (std::size_t i = 0; i + 1 < n_; ++i) a_face_[i] = k.a(x[i] + 0.5 * dx_);
        for (std::size_t i = 0; i < n_; ++i) {
            b_[i] = k.b(x[i]);
            c_[i] = k.c(x[i]);
        }
    }

    void apply(const std::vector<double>& v, std::vector<double>& out) const {
        for (std::size_t i = 0; i + 1 < n_; ++i) {
            flux_[i] = a_face_[i] * k_.f(0.5 * (v[i] + v[i + 1])) * (v[i + 1] - v[i]) / dx_;
        }
        out.front() = 0.0;
        out.back() = 0.0;
        for (std::size_t i = 1; i + 1 < n_; ++i) {
            const double ux = (v[i + 1] - v[i - 1]) / (2.0 * dx_);
            out[i] = (flux_[i] - flux_[i - 1]) / dx_ + b_[i] * k_.g(v[i]) * ux + c_[i] * k_.h(v[i]);
        }
    }

private:
    const CoefficientSet& k_;
    std::size_t n_;
    double dx_;
    std::vector<double> a_face_, b_, c_;
    mutable std::vector<double> flux_;
};

}  // namespace

// Method of lines -------------------------------------------------------------

double MolSolution::max_error() const {
    double m = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - u_exact[i]));
    return m;
}

double MolSolution::l2_error() const {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += (u[i] - u_exact[i]) * (u[i] - u_exact[i]);
    return u.empty() ? 0.0 : std::sqrt(s / static_cast<double>(u.size()));
}

double mol_time_step(const CoefficientSet& k, const std::vector<double>& x, const Interval& u_range,
                     double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) throw DomainError("dt_safety must lie in (0, 1]");
    if (!u_range.bounded()) throw WindowError("the u range must be bounded");
    const double dx = uniform_step(x);
    double amax = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) amax = std::max(amax, std::abs(k.a(x[i] + 0.5 * dx)));
    double fmax = 0.0;
    constexpr int kSamples = 201;
    for (int j = 0; j < kSamples; ++j) {
        const double u = u_range.lo + (u_range.hi - u_range.lo) * j / (kSamples - 1);
        fmax = std::max(fmax, std::abs(k.f(u)));
    }
    const double af = amax * fmax;
    if (af == 0.0) return std::numeric_limits<double>::infinity();
    return safety * dx * dx / (2.0 * af);
}

std::vector<double> mol_operator(const CoefficientSet& coeffs, const std::vector<double>& x,
                                 const std::vector<double>& u) {
    if (u.size() != x.size()) throw DomainError("state and nodes differ in size");
    std::vector<double> out(x.size());
    SpatialOperator(coeffs, x).apply(u, out);
    return out;
}

MolSolution mol_solve(const CoefficientSet& k, const std::vector<double>& x,
                      std::vector<double> initial, const BoundaryFn& boundary,
                      const Interval& u_window, double t0, const MolConfig& cfg) {
    const std::size_t n = x.size();
    if (initial.size() != n) throw DomainError("initial data and nodes differ in size");
    if (!(cfg.t_end > 0.0)) throw DomainError("t_end must be positive");

    const SpatialOperator op(k, x);

    const double dt_max = mol_time_step(k, x, u_window, cfg.dt_safety);
    const int steps = std::isfinite(dt_max) ? std::max(1, static_cast<int>(std::ceil(cfg.t_end / dt_max))) : 1;
    const double dt = cfg.t_end / steps;

    // Time derivative of the interior nodes; the boundary nodes of v are
    // overwritten with Dirichlet data at time t first.
    const auto rhs = [&](double t, std::vector<double>& v, std::vector<double>& out) {
        v.front() = boundary(x.front(), t);
        v.back() = boundary(x.back(), t);
        op.apply(v, out);
    };

    const double margin = u_window.bounded() ? 0.1 * (u_window.hi - u_window.lo) : 0.0;
    const auto guard = [&](const std::vector<double>& v, double t) {
        for (std::size_t i = 0; i < n; ++i) {
            const bool inside = u_window.bounded()
                                    ? v[i] >= u_window.lo - margin && v[i] <= u_window.hi + margin
                                    : true;
            if (!std::isfinite(v[i]) || !inside) {
                throw StabilityViolation("u = " + fmt("%.6g", v[i]) + " at x = " + fmt("%.6g", x[i]) +
                                         ", t = " + fmt("%.6g", t) + " left the admissible window");
            }
        }
    };

    std::vector<double> u = std::move(initial);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    double t = t0;
    for (int s = 0; s < steps; ++s) {
        rhs(t, u, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
        rhs(t + 0.5 * dt, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
        rhs(t + 0.5 * dt, tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = u[i] + dt * k3[i];
        rhs(t + dt, tmp, k4);
        for (std::size_t i = 0; i < n; ++i) u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t = t0 + (s + 1) * dt;
        u.front() = boundary(x.front(), t);
        u.back() = boundary(x.back(), t);
        guard(u, t);
    }

    MolSolution out;
    out.x = x;
    out.u = std::move(u);
    out.u_exact.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.u_exact[i] = boundary(x[i], t);
    out.t0 = t0;
    out.t_final = t;
    out.dt = dt;
    out.steps = steps;
    return out;
}

MolSolution mol_solve(const Instance& inst, const MolConfig& cfg) {
    const Window& w = inst.sol.xt_window;
    if (cfg.t_end > (w.t1 - w.t0) * (1.0 + 1e-12)) {
        throw WindowError("t_end " + fmt("%.6g", cfg.t_end) + " exceeds the time window of " +
                          inst.id);
    }
    const MonotoneMap map = MonotoneMap::from_solution(inst.sol);
    const BivariateExpr theta = inst.sol.theta;
    const BoundaryFn exact = [&map, theta](double x, double t) { return map.invert(theta(x, t)); };
    const std::vector<double> x = uniform_nodes(w.x0, w.x1, cfg.nx);
    std::vector<double> u0(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) u0[i] = exact(x[i], w.t0);
    return mol_solve(inst.coeffs, x, std::move(u0), exact, inst.sol.u_window, w.t0, cfg);
}

// Auxiliary ODEs --------------------------------------------------------------

AuxOdeSolution::AuxOdeSolution(int order, std::vector<double> s, std::vector<double> y,
                               std::vector<double> dy, std::vector<double> ddy)
    : order_(order), s_(std::move(s)), y_(std::move(y)), dy_(std::move(dy)), ddy_(std::move(ddy)) {
    if (s_.size() < 2) throw DomainError("an ODE solution needs at least two nodes");
}

double AuxOdeSolution::hermite(int comp, double s, bool derivative) const {
    const double slack = 1e-12 * (s_.back() - s_.front());
    if (s < s_.front() - slack || s > s_.back() + slack) {
        throw OutOfRange("s = " + fmt("%.6g", s) + " outside the integration interval");
    }
    s = std::clamp(s, s_.front(), s_.back());
    const std::vector<double>& p = comp == 0 ? y_ : dy_;
    const std::vector<double>& m = comp == 0 ? dy_ : ddy_;
    auto it = std::upper_bound(s_.begin(), s_.end(), s);
    std::size_t i = it == s_.begin() ? 0 : static_cast<std::size_t>(it - s_.begin()) - 1;
    if (i + 1 >= s_.size()) i = s_.size() - 2;
    const double h = s_[i + 1] - s_[i];
    const double r = (s - s_[i]) / h;
    if (!derivative) {
        const double h00 = (1 + 2 * r) * (1 - r) * (1 - r);
        const double h10 = r * (1 - r) * (1 - r);
        const double h01 = r * r * (3 - 2 * r);
        const double h11 = r * r * (r - 1);
        return h00 * p[i] + h * h10 * m[i] + h01 * p[i + 1] + h * h11 * m[i + 1];
    }
    const double d00 = 6 * r * (r - 1);
    const double d10 = (1 - r) * (1 - 3 * r);
    const double d01 = -d00;
    const double d11 = r * (3 * r - 2);
    return (d00 * p[i] + d01 * p[i + 1]) / h + d10 * m[i] + d11 * m[i + 1];
}

double AuxOdeSolution::value(double s) const { return hermite(0, s, false); }

double AuxOdeSolution::derivative(double s) const {
    // For second-order problems y' is tabulated with its own derivative.
    return order_ == 2 ? hermite(1, s, false) : hermite(0, s, true);
}

AuxOdeSolution integrate_aux_ode(const AuxOdeSpec& spec) {
    namespace ode = boost::numeric::odeint;
    using State = std::vector<double>;
    if (spec.order != 1 && spec.order != 2) throw DomainError("aux ODE order must be 1 or 2");
    if (!spec.rhs) throw DomainError("aux ODE has no right-hand side");
    if (!(spec.s1 > spec.s0)) throw DomainError("aux ODE interval must satisfy s0 < s1");

    const int order = spec.order;
    const auto eval = [&spec, order](double s, const State& y) {
        const double v = spec.rhs(s, y[0], order == 2 ? y[1] : 0.0);
        if (!std::isfinite(v)) {
            throw SingularityHit(spec.unknown + ": right-hand side not finite at " +
                                 std::string(1, spec.var) + " = " + fmt("%.12g", s));
        }
        return v;
    };
    const auto system = [&](const State& y, State& dydt, double s) {
        if (order == 1) {
            dydt[0] = eval(s, y);
        } else {
            dydt[0] = y[1];
            dydt[1] = eval(s, y);
        }
    };

    State y0 = order == 1 ? State{spec.y0} : State{spec.y0, spec.dy0};
    std::vector<double> ss, ys, dys;
    const double span = spec.s1 - spec.s0;
    const double max_dt = kAuxOdeMaxStepFraction * span;
    auto stepper = ode::make_controlled(kAuxOdeAbsTol, kAuxOdeRelTol, max_dt,
                                        ode::runge_kutta_dopri5<State>());
    const auto observe = [&](const State& y, double s) {
        ss.push_back(s);
        ys.push_back(y[0]);
        dys.push_back(order == 2 ? y[1] : 0.0);
    };
    try {
        ode::integrate_adaptive(stepper, system, y0, spec.s0, spec.s1, max_dt, observe);
    } catch (const ode::step_adjustment_error&) {
        throw SingularityHit(spec.unknown + ": step size collapsed near " + std::string(1, spec.var) +
                             " = " + fmt("%.12g", ss.empty() ? spec.s0 : ss.back()));
    }

    // The last step ends at s1 up to rounding.
    if (ss.size() < 2 || std::abs(ss.back() - spec.s1) > 1e-9 * span) {
        throw SingularityHit(spec.unknown + ": integration stopped at " + std::string(1, spec.var) +
                             " = " + fmt("%.12g", ss.empty() ? spec.s0 : ss.back()));
    }
    ss.back() = spec.s1;
    std::vector<double> m1(ss.size()), m2(ss.size());
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (order == 1) {
            m1[i] = eval(ss[i], State{ys[i]});
        } else {
            m1[i] = dys[i];
            m2[i] = eval(ss[i], State{ys[i], dys[i]});
        }
    }
    return AuxOdeSolution(order, std::move(ss), std::move(ys), std::move(m1), std::move(m2));
}

double AuxOdeSolution::second_derivative(double s) const {
    if (order_ != 2) throw DomainError("second derivative is tabulated for second-order problems only");
    return hermite(1, s, true);
}

double AuxOdeSolution::value_slope(double s) const { return hermite(0, s, true); }

double aux_ode_residual(const AuxOdeSpec& spec, const AuxOdeSolution& sol, int n) {
    const Interval I = sol.interval();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const double s = I.lo + (I.hi - I.lo) * k / std::max(1, n - 1);
        const double y = sol.value(s);
        if (spec.order == 1) {
            worst = std::max(worst, std::abs(sol.value_slope(s) - spec.rhs(s, y, 0.0)));
        } else {
            const double dy = sol.derivative(s);
            worst = std::max(worst, std::abs(sol.value_slope(s) - dy));
            worst = std::max(worst, std::abs(sol.second_derivative(s) - spec.rhs(s, y, dy)));
        }
    }
    return worst;
}

// Convergence -----------------------------------------------------------------

std::optional<double> ConvergenceReport::min_order() const {
    std::optional<double> m;
    for (const ConvergenceRow& r : rows) {
        if (r.order && (!m || *r.order < *m)) m = r.order;
    }
    return m;
}

std::string ConvergenceReport::to_csv() const {
    std::ostringstream os;
    os << "nx,Linf,L2,order\n";
    for (const ConvergenceRow& r : rows) {
        os << r.nx << ',' << fmt("%.17g", r.linf) << ',' << fmt("%.17g", r.l2) << ',';
        if (r.order) {
            os << fmt("%.17g", *r.order);
        } else if (exact_regime && &r != &rows.front()) {
            os << "exact-regime";
        }
        os << '\n';
    }
    return os.str();
}

ConvergenceReport convergence_study(const Instance& inst, const std::vector<int>& nx_list,
                                    const MolConfig& cfg) {
    if (nx_list.empty()) throw DomainError("convergence study needs at least one grid");
    ConvergenceReport rep;
    rep.id = inst.id;
    rep.hash = inst.hash();
    rep.t_end = cfg.t_end;
    rep.dt_safety = cfg.dt_safety;
    std::vector<double> dx;
    for (int nx : nx_list) {
        MolConfig c = cfg;
        c.nx = nx;
        const MolSolution s = mol_solve(inst, c);
        rep.rows.push_back({nx, s.max_error(), s.l2_error(), std::nullopt});
        dx.push_back((s.x.back() - s.x.front()) / (nx - 1));
    }
    rep.exact_regime = true;
    for (const ConvergenceRow& r : rep.rows) rep.exact_regime = rep.exact_regime && r.linf <= kExactRegimeFloor;
    if (!rep.exact_regime) {
        for (std::size_t i = 1; i < rep.rows.size(); ++i) {
            const double e0 = rep.rows[i - 1].linf;
            const double e1 = rep.rows[i].linf;
            if (e0 > 0.0 && e1 > 0.0) rep.rows[i].order = std::log(e0 / e1) / std::log(dx[i - 1] / dx[i]);
        }
    }
    return rep;
}

ConvergenceReport convergence_study(const std::string& id, const std::vector<int>& nx_list,
                                    const MolConfig& cfg) {
    return convergence_study(default_instantiation(id), nx_list, cfg);
}

std::string convergence_to_json(const std::vector<ConvergenceReport>& reports) {
    using ojson = nlohmann::ordered_json;
    const auto num = [](double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); };
    ojson arr = ojson::array();
    for (const ConvergenceReport& r : reports) {
        ojson j;
        j["id"] = r.id;
        j["hash"] = r.hash;
        if (!r.error.empty()) {
            j["error"] = r.error;
            arr.push_back(std::move(j));
            continue;
        }
        j["t_end"] = r.t_end;
        j["dt_safety"] = r.dt_safety;
        j["exact_regime"] = r.exact_regime;
        const std::optional<double> m = r.min_order();
        j["min_order"] = m ? num(*m) : ojson(nullptr);
        ojson rows = ojson::array();
        for (const ConvergenceRow& row : r.rows) {
            ojson o;
            o["nx"] = row.nx;
            o["linf"] = num(row.linf);
            o["l2"] = num(row.l2);
            o["order"] = row.order ? num(*row.order) : ojson(nullptr);
            rows.push_back(std::move(o));
        }
        j["levels"] = std::move(rows);
        arr.push_back(std::move(j));
    }
    ojson doc;
    doc["benchmarks"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string convergence_to_text(const ConvergenceReport& r) {
    std::ostringstream os;
    if (!r.error.empty()) {
        os << r.id << "  ERROR  " << r.error << '\n';
        return os.str();
    }
    os << r.id << "  t_end=" << fmt("%.3g", r.t_end);
    if (r.exact_regime) {
        os << "  order=exact-regime\n";
    } else if (const std::optional<double> m = r.min_order()) {
        os << "  order=" << fmt("%.2f", *m) << '\n';
    } else {
        os << "  order=n/a\n";
    }
    for (const ConvergenceRow& row : r.rows) {
        os << "  nx=" << row.nx << "  Linf=" << fmt("%.3e", row.linf) << "  L2=" << fmt("%.3e", row.l2);
        if (row.order) os << "  order=" << fmt("%.3f", *row.order);
        os << '\n';
    }
    return os.str();
}

}  // namespace fsv
