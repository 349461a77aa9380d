#include <catch_amalgamated.hpp>

#include <cmath>
#include <json.hpp>

#include "fsv/pdesolve.hpp"
#include "fsv/transform.hpp"
#include "oracles.hpp"

using namespace fsv;

namespace {

AuxOdeSpec sine_spec() {
    AuxOdeSpec s;
    s.order = 2;
    s.rhs = [](double, double y, double) { return -y; };
    s.s0 = 0.0;
    s.s1 = 2.0;
    s.y0 = 0.0;
    s.dy0 = 1.0;
    return s;
}

/// u_t of the exact solution, u_t = theta_t / zeta(u).
double exact_ut(const Instance& inst, const MonotoneMap& m, double x, double t) {
    const double u = m.invert(inst.sol.theta(x, t));
    return inst.d.theta.t(x, t) / inst.sol.zeta(u);
}

}  // namespace

TEST_CASE("quadratic S12 profile is reproduced to the time-integrator floor", "[pdesolve]") {
    const Instance inst = default_instantiation("S12");
    MolConfig cfg;
    cfg.t_end = 0.1;
    const MolSolution s = mol_solve(inst, cfg);
    CHECK(s.max_error() <= 1e-9);
    CHECK(s.t_final == Catch::Approx(inst.sol.xt_window.t0 + 0.1).epsilon(1e-14));
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        CHECK(std::abs(s.u_exact[i] - oracle::s12_u(s.x[i], s.t_final)) <= 1e-12);
    }
}

TEST_CASE("time step respects the parabolic bound", "[pdesolve]") {
    const Instance inst = default_instantiation("S25");
    const MolSolution s = mol_solve(inst, {});
    const std::vector<double> x = uniform_nodes(inst.sol.xt_window.x0, inst.sol.xt_window.x1, 41);
    const double bound = mol_time_step(inst.coeffs, x, inst.sol.u_window, 0.9);
    CHECK(s.dt <= bound);
    CHECK(s.steps * s.dt == Catch::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("constant data with c h = 0 stays constant", "[pdesolve]") {
    const Expr v = Expr::variable();
    const CoefficientSet k{1.0 + 0.5 * v, Expr(0.3), Expr(0.0), 1.0 + pow(v, 2.0), exp(v), Expr(2.0)};
    const std::vector<double> x = uniform_nodes(0.0, 1.0, 31);
    const MolSolution s =
        mol_solve(k, x, std::vector<double>(31, 0.7), [](double, double) { return 0.7; }, {0.0, 1.0}, 0.0, {});
    for (double u : s.u) CHECK(u == 0.7);
}

TEST_CASE("runaway states raise StabilityViolation", "[pdesolve]") {
    const CoefficientSet k{Expr(1.0), Expr(0.0), Expr(1000.0), Expr(1.0), Expr(0.0), Expr(1.0)};
    const std::vector<double> x = uniform_nodes(0.0, 1.0, 21);
    CHECK_THROWS_AS(mol_solve(k, x, std::vector<double>(21, 0.5), [](double, double) { return 0.5; },
                              {0.0, 1.0}, 0.0, {}),
                    StabilityViolation);
}

TEST_CASE("t_end longer than the time window is rejected", "[pdesolve]") {
    MolConfig cfg;
    cfg.t_end = 10.0;
    CHECK_THROWS_AS(mol_solve(default_instantiation("S25"), cfg), WindowError);
}

TEST_CASE("observed spatial order is two on smooth defaults", "[pdesolve]") {
    for (const char* id : {"S25", "S15"}) {
        const ConvergenceReport r = convergence_study(id, {21, 41, 81, 161});
        INFO(id << "\n" << r.to_csv());
        REQUIRE(r.error.empty());
        REQUIRE_FALSE(r.exact_regime);
        for (std::size_t i = 1; i < r.rows.size(); ++i) {
            REQUIRE(r.rows[i].order.has_value());
            CHECK(std::abs(*r.rows[i].order - 2.0) <= 0.2);
        }
    }
    // The hand-written S25 solution is the reference the report compares to.
    const MolSolution s = mol_solve(default_instantiation("S25"), {});
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        CHECK(std::abs(s.u_exact[i] - oracle::s25_u(s.x[i], s.t_final)) <= 1e-12);
    }
}

TEST_CASE("S12 convergence is reported as exact-regime", "[pdesolve]") {
    const ConvergenceReport r = convergence_study("S12", {21, 41, 81});
    CHECK(r.exact_regime);
    CHECK_FALSE(r.min_order().has_value());
    const std::string csv = r.to_csv();
    CHECK(csv.rfind("nx,Linf,L2,order\n", 0) == 0);
    CHECK(csv.find("exact-regime") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("convergence JSON document", "[pdesolve]") {
    const ConvergenceReport r = convergence_study("S25", {21, 41});
    const nlohmann::json j = nlohmann::json::parse(convergence_to_json({r}));
    REQUIRE(j["benchmarks"].size() == 1);
    const auto& b = j["benchmarks"][0];
    CHECK(b["id"] == "S25");
    CHECK(b["hash"] == default_instantiation("S25").hash());
    CHECK(b["levels"].size() == 2);
    CHECK(b["levels"][0]["order"].is_null());
    CHECK(b["levels"][1]["order"].get<double>() == Catch::Approx(*r.rows[1].order));
    CHECK(convergence_to_text(r).find("S25") != std::string::npos);
}

TEST_CASE("halving dt leaves the time error below the spatial error", "[pdesolve][property]") {
    for (const std::string& id : all_instance_ids()) {
        const Instance inst = default_instantiation(id);
        MolConfig cfg;
        const MolSolution a = mol_solve(inst, cfg);
        cfg.dt_safety *= 0.5;
        const MolSolution b = mol_solve(inst, cfg);
        double change = 0.0;
        for (std::size_t i = 0; i < a.u.size(); ++i) change = std::max(change, std::abs(a.u[i] - b.u[i]));
        const double spatial = std::max(a.max_error(), kExactRegimeFloor);
        INFO(id << " change " << change << " spatial error " << a.max_error());
        CHECK(change <= 1e-3 * spatial);
    }
}

TEST_CASE("the spatial operator reproduces u_t to second order", "[pdesolve][property]") {
    for (const std::string& id : all_instance_ids()) {
        const Instance inst = default_instantiation(id);
        const MonotoneMap m = MonotoneMap::from_solution(inst.sol);
        const Window& w = inst.sol.xt_window;
        const double t = 0.5 * (w.t0 + w.t1);
        double err[2];
        std::vector<double> shared;
        for (int lvl = 0; lvl < 2; ++lvl) {
            const int n = lvl == 0 ? 21 : 41;
            const std::vector<double> x = uniform_nodes(w.x0, w.x1, n);
            std::vector<double> u(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) u[i] = m.invert(inst.sol.theta(x[i], t));
            const std::vector<double> rhs = mol_operator(inst.coeffs, x, u);
            err[lvl] = 0.0;
            // Compare at the interior nodes of the coarse grid.
            const int stride = lvl == 0 ? 1 : 2;
            for (std::size_t i = stride; i + stride < x.size(); i += stride) {
                err[lvl] = std::max(err[lvl], std::abs(rhs[i] - exact_ut(inst, m, x[i], t)));
            }
        }
        INFO(id << " errors " << err[0] << " " << err[1]);
        if (err[0] <= 1e-9) {
            CHECK(err[1] <= 1e-9);
        } else {
            CHECK(std::log2(err[0] / err[1]) >= 1.8);
        }
    }
}

TEST_CASE("auxiliary ODE reference solutions", "[pdesolve]") {
    const AuxOdeSpec spec = sine_spec();
    const AuxOdeSolution sol = integrate_aux_ode(spec);
    CHECK(std::abs(sol(M_PI / 2) - 1.0) <= 1e-9);
    for (double s : {0.3, 1.1, 1.9}) {
        CHECK(std::abs(sol(s) - oracle::sine(s)) <= 1e-9);
        CHECK(std::abs(sol.derivative(s) - std::cos(s)) <= 1e-9);
    }
    CHECK(aux_ode_residual(spec, sol) <= 1e-8);
    CHECK(sol.interval().lo == 0.0);
    CHECK(sol.interval().hi == 2.0);
    CHECK_THROWS_AS(sol(2.1), OutOfRange);

    const Instance s28 = default_instantiation("S28");
    REQUIRE(s28.aux_ode.has_value());
    const AuxOdeSolution omega = integrate_aux_ode(*s28.aux_ode);
    for (int i = 0; i <= 20; ++i) {
        const double x = s28.aux_ode->s0 + (s28.aux_ode->s1 - s28.aux_ode->s0) * i / 20.0;
        CHECK(std::abs(omega(x) - oracle::s28_omega(x)) <= 1e-9);
    }

    for (const char* id : {"S11+", "S11-"}) {
        const Instance s11 = default_instantiation(id);
        REQUIRE(s11.aux_ode.has_value());
        const AuxOdeSolution xi = integrate_aux_ode(*s11.aux_ode);
        for (int i = 0; i <= 20; ++i) {
            const double x = s11.aux_ode->s0 + (s11.aux_ode->s1 - s11.aux_ode->s0) * i / 20.0;
            CHECK(std::abs(xi(x) - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("a finite-time blow-up raises SingularityHit", "[pdesolve]") {
    AuxOdeSpec spec;
    spec.order = 1;
    spec.rhs = [](double, double y, double) { return y * y; };
    spec.s0 = 0.0;
    spec.s1 = 2.0;
    spec.y0 = 1.0;
    try {
        integrate_aux_ode(spec);
        FAIL("no exception");
    } catch (const SingularityHit& e) {
        // y = 1/(1 - s) blows up at s = 1.
        const std::string what = e.what();
        CHECK(what.find("at x = 0.99") != std::string::npos);
    }
}

TEST_CASE("numeric auxiliary solutions match the analytic defaults", "[pdesolve][property]") {
    for (const std::string& id : all_instance_ids()) {
        const Instance inst = default_instantiation(id);
        if (!inst.aux_ode || !inst.aux_ode->analytic) continue;
        const AuxOdeSpec& spec = *inst.aux_ode;
        const AuxOdeSolution sol = integrate_aux_ode(spec);
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double s = spec.s0 + (spec.s1 - spec.s0) * i / 100.0;
            worst = std::max(worst, std::abs(sol(s) - (*spec.analytic)(s)));
        }
        INFO(id);
        CHECK(worst <= 1e-8);
        CHECK(aux_ode_residual(spec, sol) <= 1e-8);
    }
}
