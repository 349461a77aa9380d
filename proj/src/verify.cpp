#include "fsv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace fsv {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

double grid_step(const std::vector<double>& v, const char* axis) {
    const double h = (v.back() - v.front()) / static_cast<double>(v.size() - 1);
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs((v[i] - v[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
            throw Error(std::string("finite differences need a uniform grid in ") + axis);
        }
    }
    return h;
}

struct FdJet {
    double u, ut, ux, uxx;
};

// Fourth-order central differences at interior nodes; eval returns the
// residual given x, t and the derivative estimates.
template <class Eval>
ResidualField fd_field(const SolutionGrid& g, Eval&& eval) {
    const int nx = static_cast<int>(g.nx());
    const int nt = static_cast<int>(g.nt());
    if (nx < kFdMinNodes || nt < kFdMinNodes) {
        throw GridTooSmall("need at least 7 nodes per axis, got " + std::to_string(nx) + "x" +
                           std::to_string(nt));
    }
    const double hx = grid_step(g.x, "x");
    const double ht = grid_step(g.t, "t");
    ResidualField r;
    r.x = g.x;
    r.t = g.t;
    r.values.assign(g.u.size(), kNaN);
    double umax = 0.0;
    const auto U = [&](int i, int j) { return g.u_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
    for (int j = kFdRing; j < nt - kFdRing; ++j) {
        for (int i = kFdRing; i < nx - kFdRing; ++i) {
            FdJet d;
            d.u = U(i, j);
            d.ux = (-U(i + 2, j) + 8.0 * U(i + 1, j) - 8.0 * U(i - 1, j) + U(i - 2, j)) / (12.0 * hx);
            d.uxx = (-U(i + 2, j) + 16.0 * U(i + 1, j) - 30.0 * d.u + 16.0 * U(i - 1, j) - U(i - 2, j)) /
                    (12.0 * hx * hx);
            d.ut = (-U(i, j + 2) + 8.0 * U(i, j + 1) - 8.0 * U(i, j - 1) + U(i, j - 2)) / (12.0 * ht);
            umax = std::max(umax, std::abs(d.ut));
            const double v = eval(g.x[static_cast<std::size_t>(i)], g.t[static_cast<std::size_t>(j)], d);
            // NaN marks excluded nodes, so an undefined residual counts as infinite.
            r.values[static_cast<std::size_t>(j * nx + i)] = std::isnan(v) ? kInf : v;
        }
    }
    r.scale = std::max(1.0, umax);
    return r;
}

}  // namespace

FieldSummary ResidualField::summary() const {
    FieldSummary s;
    s.scale = scale;
    double sq = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double v = values[j * x.size() + i];
            if (std::isnan(v)) continue;  // node left out
            const double a = std::abs(v);
            ++s.count;
            sq += a * a;
            if (a > s.max_abs || s.count == 1) {
                s.max_abs = a;
                s.argmax_x = x[i];
                s.argmax_t = t[j];
            }
        }
    }
    s.rms = s.count > 0 ? std::sqrt(sq / s.count) : 0.0;
    s.normalized = s.max_abs / scale;
    return s;
}

ThetaJet theta_jet(const BivariateExpr& theta, const BivariatePartials& d, double x, double t) {
    return {x, t, theta(x, t), d.t(x, t), d.x(x, t), d.xx(x, t)};
}

SplittingForm make_splitting_form(const CoefficientSet& k, const ImplicitSolution& sol,
                                  Variant variant, double param) {
    SplittingForm form;
    form.variant = variant;
    form.param = param;
    const Expr a = k.a;
    const Expr ax = k.a.derivative();
    const Expr b = k.b;
    const Expr c = k.c;
    const Expr f = k.f;
    const Expr g = k.g;
    const Expr h = k.h;
    const Expr zeta = sol.zeta;
    const Expr fz = (k.f / sol.zeta).derivative();
    const auto Z = [F = sol.Fzeta, off = sol.z_offset](double u) { return F(u) + off; };

    form.phi[0] = [](const ThetaJet& j) { return -j.theta_t; };
    form.phi[1] = [a, ax](const ThetaJet& j) { return ax(j.x) * j.theta_x + a(j.x) * j.theta_xx; };
    form.phi[2] = [a](const ThetaJet& j) { return a(j.x) * j.theta_x * j.theta_x; };
    form.phi[3] = [b](const ThetaJet& j) { return b(j.x) * j.theta_x; };
    form.phi[4] = [c](const ThetaJet& j) { return c(j.x); };
    form.psi[0] = [](double) { return 1.0; };
    form.psi[1] = [f](double u) { return f(u); };
    form.psi[2] = [fz](double u) { return fz(u); };
    form.psi[3] = [g](double u) { return g(u); };
    form.psi[4] = [h, zeta](double u) { return h(u) * zeta(u); };
    switch (variant) {
        case Variant::Plain: break;
        case Variant::Exponential:
            form.phi[0] = [param](const ThetaJet& j) { return -std::exp(param * j.theta) * j.theta_t; };
            form.psi[0] = [param, Z](double u) { return std::exp(-param * Z(u)); };
            break;
        case Variant::Power:
            form.phi[0] = [param](const ThetaJet& j) { return -std::pow(j.theta, param) * j.theta_t; };
            form.psi[0] = [param, Z](double u) { return std::pow(Z(u), -param); };
            [[fallthrough]];
        case Variant::ThetaWeighted:
            form.phi[4] = [c](const ThetaJet& j) { return c(j.x) * j.theta; };
            form.psi[4] = [h, zeta, Z](double u) { return h(u) * zeta(u) / Z(u); };
            break;
    }
    return form;
}

SplittingForm splitting_form(const Instance& inst) {
    return make_splitting_form(inst.coeffs, inst.sol, inst.variant, inst.variant_param);
}

ResidualField residual_u_level(const CoefficientSet& k, const SolutionGrid& grid) {
    const Expr ax = k.a.derivative();
    const Expr fu = k.f.derivative();
    return fd_field(grid, [&](double x, double, const FdJet& d) {
        const double a = k.a(x);
        const double f = k.f(d.u);
        const double diffusion = ax(x) * f * d.ux + a * fu(d.u) * d.ux * d.ux + a * f * d.uxx;
        return d.ut - diffusion - k.b(x) * k.g(d.u) * d.ux - k.c(x) * k.h(d.u);
    });
}

namespace {

// Applies eval at every node with the symbolic theta jet and the grid's u.
template <class Eval>
ResidualField analytic_field(const ImplicitSolution& sol, const SolutionGrid& grid, Eval&& eval) {
    const BivariatePartials d = partials(sol.theta);
    ResidualField r;
    r.x = grid.x;
    r.t = grid.t;
    r.values.resize(grid.u.size());
    double umax = 0.0;
    for (std::size_t j = 0; j < grid.nt(); ++j) {
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            const ThetaJet jet = theta_jet(sol.theta, d, grid.x[i], grid.t[j]);
            const double u = grid.u_at(i, j);
            umax = std::max(umax, std::abs(jet.theta_t / sol.zeta(u)));
            const double v = eval(jet, u);
            r.values[j * grid.nx() + i] = std::isnan(v) ? kInf : v;
        }
    }
    r.scale = std::max(1.0, umax);
    return r;
}

}  // namespace

ResidualField residual_theta_level(const CoefficientSet& k, const ImplicitSolution& sol,
                                   const SolutionGrid& grid) {
    const Expr ax = k.a.derivative();
    const Expr fz = (k.f / sol.zeta).derivative();
    return analytic_field(sol, grid, [&](const ThetaJet& j, double u) {
        const double a = k.a(j.x);
        return -j.theta_t + (ax(j.x) * j.theta_x + a * j.theta_xx) * k.f(u) +
               a * j.theta_x * j.theta_x * fz(u) + k.b(j.x) * j.theta_x * k.g(u) +
               k.c(j.x) * k.h(u) * sol.zeta(u);
    });
}

ResidualField bilinear_identity(const SplittingForm& form, const Instance& inst,
                                const SolutionGrid& grid) {
    if (form.variant != inst.variant || form.param != inst.variant_param) {
        throw VariantMismatch(std::string("form is ") + to_string(form.variant) + ", instance " +
                              inst.id + " is " + to_string(inst.variant));
    }
    return analytic_field(inst.sol, grid, [&](const ThetaJet& j, double u) {
        double s = 0.0;
        for (std::size_t n = 0; n < 5; ++n) s += form.phi[n](j) * form.psi[n](u);
        return s;
    });
}

std::vector<RelationResidual> splitting_relations(const Instance& inst, const SolutionGrid& grid) {
    constexpr int kUSamples = 50;
    std::vector<RelationResidual> out;
    std::vector<PhiValues> phis;
    for (double t : grid.t) {
        for (double x : grid.x) phis.push_back(eval_phi(inst, inst.variant, inst.variant_param, x, t));
    }
    std::vector<PsiValues> psis;
    const Interval& w = inst.sol.u_window;
    for (int i = 0; i < kUSamples; ++i) {
        const double u = w.lo + (w.hi - w.lo) * (i + 0.5) / kUSamples;
        psis.push_back(eval_psi(inst, inst.variant, inst.variant_param, u));
    }
    for (const SplittingRelation& r : inst.relations) {
        RelationResidual rr{r.name, r.phi_side(), 0.0};
        double scale = 0.0;
        if (rr.phi_side) {
            for (const PhiValues& p : phis) {
                const double v = relation_value(r, &p, nullptr, &scale);
                rr.max_residual = std::max(rr.max_residual, std::abs(v) / std::max(1.0, scale));
            }
        } else {
            for (const PsiValues& p : psis) {
                const double v = relation_value(r, nullptr, &p, &scale);
                rr.max_residual = std::max(rr.max_residual, std::abs(v) / std::max(1.0, scale));
            }
        }
        out.push_back(rr);
    }
    return out;
}

// Nonclassical criterion --------------------------------------------------------

NonclassicalFit nonclassical_fit(const Expr& f, const Expr& zeta, const Expr& F,
                                 const Interval& w) {
    constexpr int kSamples = 200;
    if (!w.bounded() || !(w.lo < w.hi)) throw WindowError("fit needs a bounded u window");
    std::vector<double> c1(kSamples), c2(kSamples), rhs(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        const double u = w.lo + (w.hi - w.lo) * (i + 0.5) / kSamples;
        const double z = zeta(u);
        const auto k = static_cast<std::size_t>(i);
        c1[k] = z * F(u);
        c2[k] = z;
        rhs[k] = f(u);
    }
    const auto dot = [](const std::vector<double>& p, const std::vector<double>& q) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * q[i];
        return s;
    };
    // Two-column QR by Gram-Schmidt with one reorthogonalization pass.
    const double r11 = std::sqrt(dot(c1, c1));
    const double n2 = std::sqrt(dot(c2, c2));
    if (r11 == 0.0 || n2 == 0.0) throw SingularFit("a design column vanishes");
    std::vector<double> q1 = c1;
    for (double& v : q1) v /= r11;
    std::vector<double> q2 = c2;
    double r12 = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        const double p = dot(q1, q2);
        r12 += p;
        for (std::size_t i = 0; i < q2.size(); ++i) q2[i] -= p * q1[i];
    }
    const double r22 = std::sqrt(dot(q2, q2));
    if (r22 <= 1e-12 * n2) throw SingularFit("zeta F and zeta are linearly dependent on the window");
    for (double& v : q2) v /= r22;
    const double y1 = dot(q1, rhs);
    const double y2 = dot(q2, rhs);
    NonclassicalFit fit;
    fit.C2 = y2 / r22;
    fit.C1 = (y1 - r12 * fit.C2) / r11;
    double res = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        const double e = fit.C1 * c1[i] + fit.C2 * c2[i] - rhs[i];
        res += e * e;
    }
    fit.relative_residual = std::sqrt(res) / std::sqrt(dot(rhs, rhs));
    fit.conforms = fit.relative_residual <= kNonclassicalThreshold;
    return fit;
}

NonclassicalFit nonclassical_fit(const Expr& f, const Expr& zeta, const Interval& w) {
    const Antiderivative F(f, 0.5 * (w.lo + w.hi));
    return nonclassical_fit(f, zeta, F.as_expr(), w);
}

// Linearization -------------------------------------------------------------------

LinearizationResult linearization_check(const LinearizationInput& in) {
    if (in.a == 0.0) throw DomainError("a must be nonzero");
    const Window& w = in.window;
    const std::vector<double> xs = uniform_nodes(w.x0, w.x1, in.nx);
    const std::vector<double> ts = uniform_nodes(w.t0, w.t1, in.nt);
    const BivariatePartials d = partials(in.theta);

    LinearizationResult out;
    double worst = 0.0;
    double scale = 1.0;
    double tmin = kInf;
    double tmax = -kInf;
    for (double t : ts) {
        for (double x : xs) {
            const ThetaJet j = theta_jet(in.theta, d, x, t);
            const double r = j.theta_t - in.a * j.theta_xx - in.b(x) * j.theta_x - in.c(x);
            worst = std::max(worst, std::abs(r));
            scale = std::max(scale, std::abs(j.theta_t));
            tmin = std::min(tmin, j.theta);
            tmax = std::max(tmax, j.theta);
        }
    }
    out.linear_residual = worst / scale;
    if (out.linear_residual > 1e-10) {
        throw Error("theta does not solve the linear equation: residual " +
                    std::to_string(out.linear_residual));
    }

    // zeta = exp((1/a) int f du), anchored at u = 0.
    const Expr u = Expr::variable();
    const Expr Fint = in.f.is_constant() ? in.f.constant_value() * u : Antiderivative(in.f, 0.0).as_expr();
    const Expr zeta = exp((1.0 / in.a) * Fint);
    const Antiderivative Z(zeta, 0.0);
    std::function<double(double)> Zf = [Z](double v) { return Z(v); };
    if (in.Z_closed) {
        const Expr zc = *in.Z_closed;
        for (double p : {-1.0, -0.5, 0.5, 1.0}) {
            const double q = Z(p);
            if (std::abs(zc(p) - zc(0.0) - q) > 1e-10 * std::max(1.0, std::abs(q))) {
                throw Error("closed form of int zeta du disagrees with quadrature");
            }
        }
        Zf = [zc](double v) { return zc(v); };
    }

    // Expand a window around 0 until it covers the theta range with margin.
    const double margin = 0.1 * (tmax - tmin) + 1e-6;
    double lo = -1.0;
    double hi = 1.0;
    int guard = 0;
    while (!(Zf(hi) > tmax + margin)) {
        hi *= 2.0;
        if (++guard > 12) throw WindowError("theta exceeds the range of Z");
    }
    guard = 0;
    while (!(Zf(lo) < tmin - margin)) {
        lo *= 2.0;
        if (++guard > 12) throw WindowError("theta is below the range of Z");
    }
    const MonotoneMap M(Zf, zeta, Interval{lo, hi});

    SolutionGrid& g = out.grid;
    g.instance_id = "linearization";
    g.x = xs;
    g.t = ts;
    for (double t : ts) {
        for (double x : xs) {
            const double th = in.theta(x, t);
            g.theta.push_back(th);
            g.u.push_back(M.invert(th));
        }
    }
    out.nonlinear = fd_field(g, [&](double x, double, const FdJet& j) {
        return j.ut - in.a * j.uxx - in.f(j.u) * j.ux * j.ux - in.b(x) * j.ux -
               in.c(x) * std::exp(-(1.0 / in.a) * Fint(j.u));
    });
    return out;
}

// Reports -----------------------------------------------------------------------------

VerificationReport verify_instance(const Instance& inst, const VerifyOptions& opt) {
    VerificationReport r;
    r.id = inst.id;
    r.hash = inst.hash();
    r.nx = opt.nx;
    r.nt = opt.nt;
    r.tol = opt.tol;
    r.variant = to_string(inst.variant);
    const Tolerances& tol = opt.tol;
    try {
        r.self_check = self_check(inst);
        const SolutionGrid grid = solution_grid(inst, opt.nx, opt.nt);
        const ResidualField cu = residual_u_level(inst.coeffs, grid);
        r.u_level = cu.summary();
        r.theta_level = residual_theta_level(inst.coeffs, inst.sol, grid).summary();
        r.bilinear = bilinear_identity(splitting_form(inst), inst, grid).summary();
        r.relations = splitting_relations(inst, grid);
        if (opt.measure_order) {
            const SolutionGrid fine = solution_grid(inst, 2 * opt.nx - 1, 2 * opt.nt - 1);
            // Compare at the physical nodes the two grids share, so both
            // maxima range over the same points.
            const ResidualField ff = residual_u_level(inst.coeffs, fine);
            ResidualField shared = cu;
            for (std::size_t j = 0; j < cu.t.size(); ++j) {
                for (std::size_t i = 0; i < cu.x.size(); ++i) {
                    if (!std::isnan(cu.at(i, j))) {
                        shared.values[j * cu.x.size() + i] = ff.at(2 * i, 2 * j);
                    }
                }
            }
            r.u_level_fine = shared.summary();
            r.fd_exact_regime = r.u_level.normalized <= tol.fd_exact_floor;
            if (r.u_level_fine->normalized > 0.0 && r.u_level.normalized > 0.0) {
                r.fd_order = std::log2(r.u_level.normalized / r.u_level_fine->normalized);
            }
        }
    } catch (const std::exception& e) {
        r.error = e.what();
        r.failures.push_back(r.error);
        r.pass = false;
        return r;
    }
    const auto check = [&](const std::string& what, double v, double limit) {
        if (!(v <= limit)) {
            char buf[200];
            std::snprintf(buf, sizeof buf, "%s = %.3e exceeds %.1e", what.c_str(), v, limit);
            r.failures.emplace_back(buf);
        }
    };
    for (const ConstraintResidual& c : r.self_check) check("self_check " + c.name, c.max_residual, tol.self_check);
    check("u_level", r.u_level.normalized, tol.fd);
    check("theta_level", r.theta_level.normalized, tol.analytic);
    check("bilinear", r.bilinear.normalized, tol.bilinear);
    for (const RelationResidual& rel : r.relations) check("relation " + rel.name, rel.max_residual, tol.relation);
    if (opt.measure_order && !r.fd_exact_regime) {
        const double order = r.fd_order.value_or(-kInf);
        if (!(order >= tol.fd_order)) {
            char buf[120];
            std::snprintf(buf, sizeof buf, "fd_order = %.3f below %.2f", order, tol.fd_order);
            r.failures.emplace_back(buf);
        }
    }
    r.pass = r.failures.empty();
    return r;
}

VerificationReport verify_entry(const std::string& id, const Slots& slots, const VerifyOptions& opt) {
    try {
        return verify_instance(instantiate(id, slots), opt);
    } catch (const std::exception& e) {
        VerificationReport r;
        r.id = id;
        r.nx = opt.nx;
        r.nt = opt.nt;
        r.tol = opt.tol;
        r.error = e.what();
        r.failures.push_back(r.error);
        return r;
    }
}

namespace {

using ojson = nlohmann::ordered_json;

ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson summary_json(const FieldSummary& s) {
    ojson j;
    j["max_abs"] = num(s.max_abs);
    j["rms"] = num(s.rms);
    j["argmax"] = {num(s.argmax_x), num(s.argmax_t)};
    j["scale"] = num(s.scale);
    j["normalized"] = num(s.normalized);
    j["nodes"] = s.count;
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    ojson doc;
    int passed = 0;
    ojson arr = ojson::array();
    for (const VerificationReport& r : reports) {
        if (r.pass) ++passed;
        ojson j;
        j["id"] = r.id;
        j["hash"] = r.hash;
        j["variant"] = r.variant;
        j["grid"] = {r.nx, r.nt};
        j["pass"] = r.pass;
        if (!r.error.empty()) {
            j["error"] = r.error;
        } else {
            j["residual_u_level"] = summary_json(r.u_level);
            if (r.u_level_fine) j["residual_u_level_refined"] = summary_json(*r.u_level_fine);
            j["fd_order"] = r.fd_order ? num(*r.fd_order) : ojson(nullptr);
            j["fd_exact_regime"] = r.fd_exact_regime;
            j["residual_theta_level"] = summary_json(r.theta_level);
            j["bilinear_identity"] = summary_json(r.bilinear);
            ojson rels = ojson::array();
            for (const RelationResidual& rel : r.relations) {
                rels.push_back({{"name", rel.name}, {"side", rel.phi_side ? "phi" : "psi"},
                                {"max_residual", num(rel.max_residual)}});
            }
            j["relation_residuals"] = rels;
            ojson sc = ojson::array();
            for (const ConstraintResidual& c : r.self_check) {
                sc.push_back({{"name", c.name}, {"max_residual", num(c.max_residual)}});
            }
            j["self_check"] = sc;
        }
        j["tolerances"] = {{"analytic", r.tol.analytic}, {"fd", r.tol.fd},
                           {"relation", r.tol.relation}, {"bilinear", r.tol.bilinear},
                           {"self_check", r.tol.self_check}, {"fd_order", r.tol.fd_order}};
        j["failures"] = r.failures;
        arr.push_back(std::move(j));
    }
    doc["summary"] = {{"entries", reports.size()}, {"passed", passed},
                      {"failed", static_cast<int>(reports.size()) - passed}};
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    char buf[400];
    if (!r.error.empty()) {
        std::snprintf(buf, sizeof buf, "%-5s FAIL  %s", r.id.c_str(), r.error.c_str());
        return buf;
    }
    char order[32] = "-";
    if (r.fd_exact_regime) {
        std::snprintf(order, sizeof order, "exact");
    } else if (r.fd_order) {
        std::snprintf(order, sizeof order, "%.2f", *r.fd_order);
    }
    double rel = 0.0;
    for (const RelationResidual& x : r.relations) rel = std::max(rel, x.max_residual);
    std::snprintf(buf, sizeof buf,
                  "%-5s %s  u_level=%.2e (order %s)  theta_level=%.2e  bilinear=%.2e  relations=%.2e",
                  r.id.c_str(), r.pass ? "PASS" : "FAIL", r.u_level.normalized, order,
                  r.theta_level.normalized, r.bilinear.normalized, rel);
    std::string s = buf;
    for (const std::string& f : r.failures) s += "\n      " + f;
    return s;
}

}  // namespace fsv
