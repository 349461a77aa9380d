// Entries S17-S33: exponential, theta-weighted and power splittings, plus the
// families whose relations involve Z itself.

#include <cmath>

#include "catalog_internal.hpp"

namespace fsv::detail {

namespace {

using T = Term;

const Expr x = Expr::variable();
const Expr u = Expr::variable();

const Interval kPositive{0.0, kInf};
const Interval kReal{};
const Window kWindow{0.5, 1.5, 0.2, 0.7};

EntryWindows windows(Interval xdom, Interval udom, Window w = kWindow) { return {xdom, udom, w}; }

// Second-order ODE y'' = rhs(s, y, y') with a known solution.
AuxOdeSpec second_order(AuxOdeKind kind, std::string unknown, std::string equation,
                        std::function<double(double, double, double)> rhs, Expr analytic) {
    AuxOdeSpec s;
    s.kind = kind;
    s.unknown = std::move(unknown);
    s.var = 'x';
    s.order = 2;
    s.equation = std::move(equation);
    s.rhs = std::move(rhs);
    s.analytic = std::move(analytic);
    return s;
}

// S17 --------------------------------------------------------------------------

void s17(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double lambda = B.nonzero("lambda");
    const double k = B.nonzero("k");
    const double b0 = B.k("b0");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    B.set_variant(Variant::Exponential, lambda);
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr G = B.int_u("int_g", g);
    const Expr zeta = f / (k * G + C2);
    B.set_zeta(zeta);
    const Expr c = (1.0 / lambda) * exp(-(b0 * lambda / k) * I1 + C1 * lambda);
    B.set_coefficients(a, b0, c, f, g, exp(-lambda * B.Z()) / zeta);
    B.set_theta((1.0 / lambda) * ln(B.T() + C3) - (b0 / k) * B.bx(I1) + C1);
    B.relation({{1, T::Phi1}, {1, T::Phi5}});
    B.relation({{1, T::Phi2}});
    B.relation({{k, T::Phi3}, {1, T::Phi4}});
    B.relation({{1, T::Psi1}, {-1, T::Psi5}});
    B.relation({{1, T::Psi3}, {-k, T::Psi4}});
}

void s17_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["f"] = exp(u);
    s.functions["g"] = 0.0;
    s.closed_forms["int_inv_a"] = ln(x);
    // C2 = 1.5.
    s.closed_forms["Z"] = exp(u) / 1.5;
}

// S18 --------------------------------------------------------------------------

void s18(Builder& B) {
    const Expr c = B.fn("c");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double lambda = B.nonzero("lambda");
    const double k1 = B.k("k1");
    const double k2 = B.k("k2");
    const double k3 = B.k("k3");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    B.set_variant(Variant::Exponential, lambda);
    const Expr cp = c.derivative();
    const Expr Ic = B.int_x("int_c", c);
    const Expr a = (c / cp) * (C2 - k2 * lambda * Ic);
    const Expr b = -k3 * lambda * c * c / cp;
    B.set_zeta(f);
    const Expr h = (1.0 / f) * (k1 * exp(-lambda * B.Z()) + k2 * f + k3 * g);
    B.set_coefficients(a, b, c, f, g, h);
    B.set_theta((1.0 / lambda) * ln(k1 * (lambda * B.T() + C1) * B.bx(c)));
    B.relation({{1, T::Phi1}, {k1, T::Phi5}});
    B.relation({{1, T::Phi2}, {k2, T::Phi5}});
    B.relation({{1, T::Phi4}, {k3, T::Phi5}});
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi5}, {-k1, T::Psi1}, {-k2, T::Psi2}, {-k3, T::Psi4}});
}

void s18_defaults(Slots& s) {
    s.functions["c"] = exp(x);
    s.functions["f"] = 1.0 + pow(u, 2.0);
    s.functions["g"] = cos(u) + 2.0;
    s.closed_forms["int_c"] = exp(x);
    s.closed_forms["Z"] = u + pow(u, 3.0) / 3.0;
}

// S19 --------------------------------------------------------------------------

void s19(Builder& B) {
    const Expr a = B.fn("a");
    const Expr b = B.fn("b");
    const Expr f = B.fn("f");
    const double lambda = B.nonzero("lambda");
    const double k = B.k("k");
    const double m = B.nonzero("m");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    B.set_variant(Variant::Exponential, lambda);
    const Expr K = B.int_x("int_b_over_a", b / a);
    const Expr J = B.int_x("J", exp(-k * K) / a);
    const Expr c = (1.0 / lambda) * exp(C2 * lambda * J + C3 * lambda);
    const Expr zeta = m * f;
    B.set_zeta(zeta);
    B.set_coefficients(a, b, c, f, k * f, exp(-lambda * B.Z()) / zeta);
    B.set_theta((1.0 / lambda) * ln(B.T() + C1) + C2 * B.bx(J) + C3);
    B.relation({{1, T::Phi1}, {1, T::Phi5}});
    B.relation({{1, T::Phi2}, {k, T::Phi4}});
    B.relation({{1, T::Psi1}, {-1, T::Psi5}});
    B.relation({{1, T::Psi4}, {-k, T::Psi2}});
    B.relation({{1, T::Psi3}});
}

void s19_defaults(Slots& s) {
    s.functions["a"] = 1.0;
    s.functions["b"] = 1.0;
    s.functions["f"] = exp(u);
    s.closed_forms["J"] = 1.0 - exp(-x);
    // m = 1.5.
    s.closed_forms["Z"] = 1.5 * exp(u);
}

// S20, S21 ---------------------------------------------------------------------

// Shared by the two self-similar families: a, b, c are x^p-type powers and
// h balances the remaining u-side terms.
void self_similar(Builder& B, double lambda, const Expr& a, const Expr& b, const Expr& c,
                  const BivariateExpr& theta, double s2) {
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const Expr zeta = B.fn("zeta");
    B.set_variant(Variant::Exponential, lambda);
    B.set_zeta(zeta);
    const Expr h =
        -(1.0 / zeta) * (-(1.0 / lambda) * exp(-lambda * B.Z()) + s2 * f + (f / zeta).derivative() + g);
    B.set_coefficients(a, b, c, f, g, h);
    B.set_theta(theta);
    B.relation({{1, T::Phi1}, {1.0 / lambda, T::Phi5}});
    B.relation({{1, T::Phi2}, {-s2, T::Phi5}});
    B.relation({{1, T::Phi3}, {-1, T::Phi5}});
    B.relation({{1, T::Phi4}, {-1, T::Phi5}});
    B.relation(
        {{-1.0 / lambda, T::Psi1}, {s2, T::Psi2}, {1, T::Psi3}, {1, T::Psi4}, {1, T::Psi5}});
}

void s20(Builder& B) {
    const double lambda = B.nonzero("lambda");
    const Expr e = exp(lambda * B.X());
    self_similar(B, lambda, e, e, e, (1.0 / lambda) * ln(B.T()) + B.bx(B.X()), lambda);
}

void s21(Builder& B) {
    const double n = B.k("n");
    if (n == 2.0) throw WindowError("n = 2 makes 1/(n - 2) singular");
    const Expr X = B.X();
    self_similar(B, n - 2.0, pow(X, n), pow(X, n - 1.0), pow(X, n - 2.0),
                 (1.0 / (n - 2.0)) * ln(B.T()) + ln(B.bx(X)), n - 1.0);
}

void s20_defaults(Slots& s) {
    s.functions["zeta"] = 2.0 + cos(u);
    s.functions["f"] = exp(u);
    s.functions["g"] = 1.0 + pow(u, 2.0);
    s.closed_forms["Z"] = sin(u) + 2.0 * u;
}

// S22 --------------------------------------------------------------------------

void s22(Builder& B) {
    const Expr a = B.fn("a");
    const Expr b = B.fn("b");
    const Expr xi = B.fn("xi");
    const double beta = B.nonzero("beta");
    B.set_variant(Variant::Exponential, -beta);
    const Expr U = B.U();
    const Expr e = exp(beta * U);
    const Expr xp = xi.derivative();
    // c is fixed by requiring xi to solve its linear equation exactly.
    const Expr c = -((a * xp).derivative() + b * xp + 1.0) / (beta * xi);
    B.set_coefficients(a, b, c, e, e, e);
    B.set_zeta(Expr(1.0));
    B.set_theta(-(1.0 / beta) * ln(B.T()) + (1.0 / beta) * ln(B.bx(xi)));
    B.relation({{1, T::Psi1}, {-1, T::Psi2}});
    B.relation({{1, T::Psi3}, {-beta, T::Psi2}});
    B.relation({{1, T::Psi4}, {-1, T::Psi2}});
    B.relation({{1, T::Psi5}, {-1, T::Psi2}});
    B.relation({{1, T::Phi1}, {1, T::Phi2}, {beta, T::Phi3}, {1, T::Phi4}, {1, T::Phi5}});
    B.x_identity("(a xi')' + b xi' + beta c xi = -1", (a * xp).derivative() + b * xp + beta * c * xi,
                 -1.0);
    const Expr ap = a.derivative();
    B.aux(second_order(AuxOdeKind::Linear2ndOrder, "xi", "(a xi')' + b xi' + beta c xi + 1 = 0",
                       [a, ap, b, c, beta](double s, double y, double dy) {
                           return -(ap(s) * dy + b(s) * dy + beta * c(s) * y + 1.0) / a(s);
                       },
                       xi));
}

void s22_defaults(Slots& s) {
    s.functions["a"] = 1.0 + pow(x, 2.0);
    s.functions["b"] = -2.0 * x;
    s.functions["xi"] = x;
}

// S23 --------------------------------------------------------------------------

void s23(Builder& B) {
    const Expr a = B.fn("a");
    const Expr b = B.fn("b");
    const Expr xi = B.fn("xi");
    const double n = B.nonzero("n");
    B.set_variant(Variant::Exponential, -n);
    const Expr U = B.U();
    const Expr xp = xi.derivative();
    const Expr xn = pow(xi, n);
    const Expr c = -((a * xn * xp).derivative() + b * xn * xp + xi / n) / pow(xi, n + 1.0);
    B.set_coefficients(a, b, c, pow(U, n), pow(U, n), pow(U, n + 1.0));
    B.set_zeta(1.0 / U);
    B.set_theta(-(1.0 / n) * ln(B.T()) + ln(B.bx(xi)));
    B.relation({{1, T::Psi1}, {-1, T::Psi2}});
    B.relation({{1, T::Psi3}, {-(n + 1.0), T::Psi2}});
    B.relation({{1, T::Psi4}, {-1, T::Psi2}});
    B.relation({{1, T::Psi5}, {-1, T::Psi2}});
    B.relation({{1, T::Phi1}, {1, T::Phi2}, {n + 1.0, T::Phi3}, {1, T::Phi4}, {1, T::Phi5}});
    B.x_identity("(a xi^n xi')' + b xi^n xi' + c xi^(n+1) = -xi/n",
                 (a * xn * xp).derivative() + b * xn * xp + c * pow(xi, n + 1.0), -xi / n);
    const Expr ap = a.derivative();
    B.aux(second_order(
        AuxOdeKind::EmdenFowler, "xi", "(a xi^n xi')' + b xi^n xi' + c xi^(n+1) + xi/n = 0",
        [a, ap, b, c, n](double s, double y, double dy) {
            const double yn = std::pow(y, n);
            return -(ap(s) * yn * dy + a(s) * n * std::pow(y, n - 1.0) * dy * dy + b(s) * yn * dy +
                     c(s) * yn * y + y / n) /
                   (a(s) * yn);
        },
        xi));
}

void s23_defaults(Slots& s) {
    s.functions["a"] = 1.0;
    s.functions["b"] = 1.0;
    s.functions["xi"] = 1.0 + x;
    s.closed_forms["Z"] = ln(u);
}

// S24 --------------------------------------------------------------------------

void s24(Builder& B) {
    const Expr a = B.fn("a");
    const Expr omega = B.fn("omega");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double lambda = B.nonzero("lambda");
    const double k1 = B.nonzero("k1");
    const double k3 = B.k("k3");
    const double kappa = B.k("kappa");
    const double k2 = kappa * k1 / lambda;
    B.set_variant(Variant::ThetaWeighted);
    const Expr op = omega.derivative();
    const Expr b = k3 == 0.0 ? Expr(0.0) : -(k3 * lambda / k1) * omega / op;
    B.set_zeta(f);
    const Expr h = (1.0 / f) * (k1 + k2 * f + k3 * g) * B.Z();
    B.set_coefficients(a, b, lambda / k1, f, g, h);
    B.set_theta(exp(lambda * B.T()) * B.bx(omega));
    B.relation({{1, T::Phi1}, {k1, T::Phi5}});
    B.relation({{1, T::Phi2}, {k2, T::Phi5}});
    B.relation({{1, T::Phi4}, {k3, T::Phi5}});
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi5}, {-k1, T::Psi1}, {-k2, T::Psi2}, {-k3, T::Psi4}});
    B.x_identity("(a omega')' = -kappa omega", (a * op).derivative(), -kappa * omega);
    const Expr ap = a.derivative();
    B.aux(second_order(AuxOdeKind::Linear2ndOrder, "omega", "(a omega')' + kappa omega = 0",
                       [a, ap, kappa](double s, double y, double dy) {
                           return -(ap(s) * dy + kappa * y) / a(s);
                       },
                       omega));
}

void s24_defaults(Slots& s) {
    s.functions["a"] = 1.0;
    s.functions["omega"] = sin(x);
    s.functions["f"] = 1.0 + pow(u, 2.0);
    s.functions["g"] = 1.0;
    s.closed_forms["Z"] = u + pow(u, 3.0) / 3.0;
}

// S25 --------------------------------------------------------------------------

void s25(Builder& B) {
    const Expr f = B.fn("f");
    const double alpha = B.k("alpha");
    const double beta = B.k("beta");
    const double gamma = B.k("gamma");
    const double delta = B.k("delta");
    B.set_variant(Variant::ThetaWeighted);
    B.set_zeta(f);
    const BivariateExpr X = B.bx(B.X());
    B.set_coefficients(1.0, 1.0, 1.0, f, -2.0 * alpha * f, (alpha * alpha + beta / f) * B.Z());
    B.set_theta((gamma * X + delta) * exp(alpha * X + beta * B.T()));
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {2.0 * alpha, T::Psi2}});
    B.relation({{1, T::Psi5}, {-beta, T::Psi1}, {-alpha * alpha, T::Psi2}});
    B.relation({{1, T::Phi1}, {beta, T::Phi5}});
    B.relation({{1, T::Phi2}, {-2.0 * alpha, T::Phi4}, {alpha * alpha, T::Phi5}});
}

void s25_defaults(Slots& s) {
    s.functions["f"] = u;
    s.closed_forms["Z"] = 0.5 * pow(u, 2.0);
}

// S26 --------------------------------------------------------------------------

void s26(Builder& B) {
    const Expr f = B.fn("f");
    const double A = B.k("A");
    const double Bc = B.k("B");
    const double alpha = B.k("alpha");
    const double beta = B.k("beta");
    const double gamma = B.k("gamma");
    const double delta = B.k("delta");
    if (gamma == alpha) throw WindowError("gamma = alpha makes the rates coincide");
    const double p = (delta - beta) / (gamma - alpha);
    const double q = (beta * gamma - alpha * delta) / (gamma - alpha);
    B.set_variant(Variant::ThetaWeighted);
    B.set_zeta(f);
    const BivariateExpr X = B.bx(B.X());
    const BivariateExpr t = B.T();
    B.set_coefficients(1.0, 1.0, 1.0, f, p - (alpha + gamma) * f, (alpha * gamma + q / f) * B.Z());
    B.set_theta(A * exp(alpha * X + beta * t) + Bc * exp(gamma * X + delta * t));
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {-p, T::Psi1}, {alpha + gamma, T::Psi2}});
    B.relation({{1, T::Psi5}, {-alpha * gamma, T::Psi2}, {-q, T::Psi1}});
    B.relation({{1, T::Phi1}, {p, T::Phi4}, {q, T::Phi5}});
    B.relation({{1, T::Phi2}, {-(alpha + gamma), T::Phi4}, {alpha * gamma, T::Phi5}});
}

void s26_defaults(Slots& s) {
    s.functions["f"] = exp(u);
    s.closed_forms["Z"] = exp(u);
}

// S27 --------------------------------------------------------------------------

void s27(Builder& B) {
    const Expr f = B.fn("f");
    const double A = B.k("A");
    const double alpha = B.k("alpha");
    const double beta = B.k("beta");
    const double gamma = B.k("gamma");
    const double delta = B.k("delta");
    B.set_variant(Variant::ThetaWeighted);
    B.set_zeta(f);
    const BivariateExpr X = B.bx(B.X());
    const BivariateExpr t = B.T();
    B.set_coefficients(1.0, 1.0, 1.0, f, gamma, (beta * beta + alpha / f) * B.Z());
    B.set_theta(A * exp(alpha * t) * sin(beta * X + beta * gamma * t + delta));
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {-gamma, T::Psi1}});
    B.relation({{1, T::Psi5}, {-beta * beta, T::Psi2}, {-alpha, T::Psi1}});
    B.relation({{1, T::Phi1}, {gamma, T::Phi4}, {alpha, T::Phi5}});
    B.relation({{1, T::Phi2}, {beta * beta, T::Phi5}});
}

void s27_defaults(Slots& s) {
    s.functions["f"] = 1.0 + pow(u, 2.0);
    s.closed_forms["Z"] = u + pow(u, 3.0) / 3.0;
}

// S28 --------------------------------------------------------------------------

void s28(Builder& B) {
    const Expr a = B.fn("a");
    const Expr omega = B.fn("omega");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double n = B.nonzero("n");
    const double k1 = B.nonzero("k1");
    const double k3 = B.k("k3");
    const double k = B.k("k");
    const double k2 = k * k1 * n;
    B.set_variant(Variant::Power, n);
    const Expr op = omega.derivative();
    const Expr b = -(k3 / (k1 * n)) * pow(omega, n + 1.0) / op;
    B.set_zeta(f);
    const Expr Z = B.Z();
    const Expr h = (1.0 / f) * (k1 * pow(Z, -n) + k2 * f + k3 * g) * Z;
    B.set_coefficients(a, b, pow(omega, n) / (k1 * n), f, g, h);
    B.set_theta(pow(B.T(), 1.0 / n) * B.bx(omega));
    B.relation({{1, T::Phi1}, {k1, T::Phi5}});
    B.relation({{1, T::Phi2}, {k2, T::Phi5}});
    B.relation({{1, T::Phi4}, {k3, T::Phi5}});
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi5}, {-k1, T::Psi1}, {-k2, T::Psi2}, {-k3, T::Psi4}});
    B.x_identity("(a omega')' = -k omega^(n+1)", (a * op).derivative(), -k * pow(omega, n + 1.0));
    const Expr ap = a.derivative();
    B.aux(second_order(AuxOdeKind::EmdenFowler, "omega", "(a omega')' + k omega^(n+1) = 0",
                       [a, ap, k, n](double s, double y, double dy) {
                           return -(ap(s) * dy + k * std::pow(y, n + 1.0)) / a(s);
                       },
                       omega));
}

void s28_defaults(Slots& s) {
    s.functions["a"] = 1.0;
    s.functions["omega"] = -0.5 * pow(x, 2.0) + 2.0 * x + 0.5;
    s.functions["f"] = exp(u);
    s.functions["g"] = 1.0;
    s.closed_forms["Z"] = exp(u);
}

// S29 --------------------------------------------------------------------------

void s29(Builder& B) {
    const Expr f = B.fn("f");
    const double lambda = B.k("lambda");
    const double beta = B.k("beta");
    const double mu = B.nonzero("mu");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double r = (lambda - beta) / mu;
    B.set_variant(Variant::ThetaWeighted);
    B.set_zeta(f);
    const BivariateExpr t = B.T();
    B.set_coefficients(1.0, 1.0, 1.0, f, mu * f + r, lambda * B.Z() / f);
    B.set_theta(C1 * exp(lambda * t) + C2 * exp(beta * t - mu * B.bx(B.X())));
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {-mu, T::Psi2}, {-r, T::Psi1}});
    B.relation({{1, T::Psi5}, {-lambda, T::Psi1}});
    B.relation({{1, T::Phi2}, {mu, T::Phi4}});
    B.relation({{1, T::Phi1}, {r, T::Phi4}, {lambda, T::Phi5}});
}

void s29_defaults(Slots& s) {
    s.functions["f"] = exp(u);
    s.closed_forms["Z"] = exp(u);
}

// S30 --------------------------------------------------------------------------

void s30(Builder& B) {
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double k = B.nonzero("k");
    const double sigma = B.k("sigma");
    const double C = B.k("C");
    const Expr X = B.X();
    const Expr U = B.U();
    B.set_zeta(f / U);
    const Expr h = (sigma * U / f) * (f + g + k * B.Z());
    B.set_coefficients(pow(X, 2.0 - k), pow(X, 1.0 - k), 1.0, f, g, h);
    B.set_theta(C * exp(k * sigma * B.T()) - (sigma / k) * pow(B.bx(X), k));
    B.relation({{1, T::Psi3}, {-1, T::Psi1}});
    B.relation({{1, T::Psi5}, {-sigma, T::Psi2}, {-sigma, T::Psi4}, {-sigma * k, T::Z}});
    B.relation({{1, T::Phi1}, {1, T::Phi3}, {sigma * k, T::CTheta}});
    B.relation({{1, T::Phi2}, {sigma, T::Phi5}});
    B.relation({{1, T::Phi4}, {sigma, T::Phi5}});
}

void s30_defaults(Slots& s) {
    s.functions["f"] = 1.0 + pow(u, 2.0);
    s.functions["g"] = exp(-u);
    s.closed_forms["Z"] = ln(u) + 0.5 * pow(u, 2.0);
}

// S31 --------------------------------------------------------------------------

void s31(Builder& B) {
    const Expr a = B.fn("a");
    const Expr c = B.fn("c");
    const Expr f = B.fn("f");
    const double m2 = B.k("m2");
    const double m3 = B.k("m3");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double m1 = -m3 * C2;
    const Expr cp = c.derivative();
    // b is fixed by requiring c to solve (a c')' + b c' + m3 c^2 = 0.
    const Expr b = -((a * cp).derivative() + m3 * c * c) / cp;
    B.set_zeta(f);
    B.set_coefficients(a, b, c, f, f, m1 + m2 / f + m3 * B.Z());
    const Expr eta = C1 * c + C2;
    B.set_theta(m2 * B.bx(c) * B.T() + B.bx(eta));
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {-1, T::Psi2}});
    B.relation({{1, T::Psi5}, {-m1, T::Psi2}, {-m2, T::Psi1}, {-m3, T::FZ}});
    B.relation({{1, T::Phi1}, {m2, T::Phi5}});
    B.relation({{1, T::Phi2}, {1, T::Phi4}, {m1, T::Phi5}, {m3, T::CTheta}});
    B.x_identity("(a c')' + b c' = -m3 c^2", (a * cp).derivative() + b * cp, -m3 * c * c);
    const Expr ep = eta.derivative();
    B.x_identity("(a eta')' + b eta' + m3 c eta = -m1 c",
                 (a * ep).derivative() + b * ep + m3 * c * eta, -m1 * c);
    const Expr ap = a.derivative();
    B.aux(second_order(AuxOdeKind::Linear2ndOrder, "eta", "(a eta')' + b eta' + m3 c eta + m1 c = 0",
                       [a, ap, b, c, m1, m3](double s, double y, double dy) {
                           return -(ap(s) * dy + b(s) * dy + m3 * c(s) * y + m1 * c(s)) / a(s);
                       },
                       eta));
}

void s31_defaults(Slots& s) {
    s.functions["a"] = 1.0 + x;
    s.functions["c"] = x;
    s.functions["f"] = exp(u);
    s.closed_forms["Z"] = exp(u);
}

// S32 --------------------------------------------------------------------------

void s32(Builder& B) {
    const Expr a = B.fn("a");
    const Expr eta = B.fn("eta");
    const double k3 = B.k("k3");
    const double k4 = B.k("k4");
    const Expr U = B.U();
    const Expr f = pow(U, -0.5);
    const Expr ep = eta.derivative();
    const Expr b = -((a * ep).derivative() + k4) / ep;
    B.set_zeta(f);
    B.set_coefficients(a, b, 1.0, f, f, k3 * sqrt(U) + k4);
    B.set_theta(k3 * B.T() + B.bx(eta));
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {-1, T::Psi2}});
    B.relation({{1, T::Psi5}, {-k3, T::Psi1}, {-k4, T::Psi2}});
    B.relation({{1, T::Phi1}, {k3, T::Phi5}});
    B.relation({{1, T::Phi2}, {1, T::Phi4}, {k4, T::Phi5}});
    B.x_identity("(a eta')' + b eta' = -k4", (a * ep).derivative() + b * ep, -k4);
    const Expr ap = a.derivative();
    B.aux(second_order(AuxOdeKind::Linear2ndOrder, "eta", "(a eta')' + b eta' + k4 = 0",
                       [a, ap, b, k4](double s, double, double dy) {
                           return -(ap(s) * dy + b(s) * dy + k4) / a(s);
                       },
                       eta));
}

void s32_defaults(Slots& s) {
    s.functions["a"] = 1.0 + x;
    s.functions["eta"] = x + 0.5 * pow(x, 2.0);
    s.closed_forms["Z"] = 2.0 * sqrt(u);
}

// S33 --------------------------------------------------------------------------

void s33(Builder& B) {
    const Expr f = B.fn("f");
    const double lambda = B.k("lambda");
    const double gamma = B.k("gamma");
    const double beta = B.k("beta");
    const Expr U = B.U();
    B.set_zeta(f / U);
    const Expr h = -0.5 * lambda * U - gamma * gamma * U / f - lambda * (U / f) * B.Z();
    B.set_coefficients(1.0, 0.0, 1.0, f, 0.0, h);
    const BivariateExpr X = B.bx(B.X());
    B.set_theta(0.25 * lambda * X * X + B.sign() * gamma * X + beta * exp(-lambda * B.T()));
    B.relation({{1, T::Psi3}, {-1, T::Psi1}});
    B.relation({{1, T::Psi4}});
    B.relation({{1, T::Psi5}, {0.5 * lambda, T::Psi2}, {gamma * gamma, T::Psi1}, {lambda, T::Z}});
    B.relation({{1, T::Phi1}, {1, T::Phi3}, {-gamma * gamma, T::Phi5}, {-lambda, T::CTheta}});
    B.relation({{1, T::Phi2}, {-0.5 * lambda, T::Phi5}});
    B.relation({{1, T::Phi4}});
}

void s33_defaults(Slots& s) {
    s.functions["f"] = 1.0 + pow(u, 2.0);
    s.closed_forms["Z"] = ln(u) + 0.5 * pow(u, 2.0);
}

}  // namespace

void append_entries_b(std::vector<CatalogEntry>& out) {
    const Variant E = Variant::Exponential;
    const Variant W = Variant::ThetaWeighted;
    const Variant P = Variant::Plain;
    out.push_back(make_entry(
        "S17", "constant b, time enters through ln(t + C3)",
        "theta = (1/lambda) ln(t + C3) - (b0/k) int dx/a + C1; b = b0; "
        "c = (1/lambda) exp(-(b0 lambda/k) int dx/a + C1 lambda); zeta = f/(k G + C2); "
        "h = e^(-lambda Z)/zeta",
        {{"a", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"lambda", 0.8}, {"k", 1.2}, {"b0", 1.0}, {"C1", 1.2}, {"C2", 1.5}, {"C3", 0.5}}, E,
        false, false, s17, s17_defaults, windows(kPositive, kReal)));
    out.push_back(make_entry(
        "S18", "a and b determined by c; theta logarithmic in t c(x)",
        "theta = (1/lambda) ln(k1 (lambda t + C1) c); a = (c/c')(C2 - k2 lambda int c dx); "
        "b = -k3 lambda c^2/c'; h = (k1 e^(-lambda Z) + k2 f + k3 g)/f; zeta = f",
        {{"c", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"lambda", 0.7}, {"k1", 1.1}, {"k2", 0.5}, {"k3", 0.6}, {"C1", 1.0}, {"C2", 2.0}}, E,
        false, false, s18, s18_defaults, windows(kReal, kReal)));
    out.push_back(make_entry(
        "S19", "g = k f, zeta = m f, c exponential in J",
        "theta = (1/lambda) ln(t + C1) + C2 J + C3; J = int exp(-k int b/a dx)/a dx; "
        "c = (1/lambda) exp(C2 lambda J + C3 lambda); g = k f; zeta = m f; h = e^(-lambda Z)/zeta",
        {{"a", 'x'}, {"b", 'x'}, {"f", 'u'}},
        {{"lambda", 0.9}, {"k", 1.0}, {"m", 1.5}, {"C1", 0.5}, {"C2", 1.0}, {"C3", 1.0}}, E, false,
        false, s19, s19_defaults, windows(kReal, kReal)));
    out.push_back(make_entry(
        "S20", "a = b = c = e^(lambda x); zeta free",
        "theta = (1/lambda) ln t + x; "
        "h = -(1/zeta)(-(1/lambda) e^(-lambda Z) + lambda f + (f/zeta)' + g)",
        {{"f", 'u'}, {"g", 'u'}, {"zeta", 'u'}}, {{"lambda", 0.7}}, E, false, false, s20,
        s20_defaults, windows(kReal, kReal)));
    out.push_back(make_entry(
        "S21", "a = x^n, b = x^(n-1), c = x^(n-2); zeta free",
        "theta = (1/(n-2)) ln t + ln x; "
        "h = -(1/zeta)(-(1/(n-2)) e^(-(n-2) Z) + (n-1) f + (f/zeta)' + g)",
        {{"f", 'u'}, {"g", 'u'}, {"zeta", 'u'}}, {{"n", 3.5}}, E, false, false, s21, s20_defaults,
        windows(kPositive, kReal)));
    out.push_back(make_entry(
        "S22", "f = g = h = e^(beta u); xi solves a linear second-order equation",
        "theta = -(1/beta) ln t + (1/beta) ln xi; zeta = 1; "
        "(a xi')' + b xi' + beta c xi + 1 = 0 (c derived from xi)",
        {{"a", 'x'}, {"b", 'x'}, {"xi", 'x'}}, {{"beta", 0.8}}, E, false, true, s22, s22_defaults,
        windows(kPositive, kReal)));
    out.push_back(make_entry(
        "S23", "power-law f, g, h; xi solves an Emden-Fowler type equation",
        "theta = -(1/n) ln t + ln xi; f = g = u^n; h = u^(n+1); zeta = 1/u; "
        "(a xi^n xi')' + b xi^n xi' + c xi^(n+1) + xi/n = 0 (c derived from xi)",
        {{"a", 'x'}, {"b", 'x'}, {"xi", 'x'}}, {{"n", 1.5}}, E, false, true, s23, s23_defaults,
        windows(kPositive, kPositive)));
    out.push_back(make_entry(
        "S24", "separable theta = e^(lambda t) omega(x) with (a omega')' + kappa omega = 0",
        "theta = e^(lambda t) omega; b = -(k3 lambda/k1) omega/omega'; c = lambda/k1; "
        "h = (k1 + k2 f + k3 g) Z/f, k2 = kappa k1/lambda; zeta = f",
        {{"a", 'x'}, {"omega", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"lambda", 0.7}, {"k1", 1.1}, {"k3", 0.0}, {"kappa", 1.0}}, W, false, true, s24,
        s24_defaults, windows(kReal, kPositive)));
    out.push_back(make_entry(
        "S25", "a = b = c = 1; theta = (gamma x + delta) e^(alpha x + beta t)",
        "g = -2 alpha f; h = (alpha^2 + beta/f) Z; zeta = f", {{"f", 'u'}},
        {{"alpha", 0.5}, {"beta", 0.6}, {"gamma", 0.5}, {"delta", 1.0}}, W, false, false, s25,
        s25_defaults, windows(kReal, kPositive)));
    out.push_back(make_entry(
        "S26", "a = b = c = 1; theta a sum of two exponentials",
        "theta = A e^(alpha x + beta t) + B e^(gamma x + delta t); p = (delta - beta)/(gamma - alpha); "
        "q = (beta gamma - alpha delta)/(gamma - alpha); g = p - (alpha + gamma) f; "
        "h = (alpha gamma + q/f) Z; zeta = f",
        {{"f", 'u'}},
        {{"A", 0.6}, {"B", 0.4}, {"alpha", 0.5}, {"beta", 0.3}, {"gamma", -0.4}, {"delta", 0.7}}, W,
        false, false, s26, s26_defaults, windows(kReal, kReal)));
    out.push_back(make_entry(
        "S27", "a = b = c = 1; travelling sine modulated by e^(alpha t)",
        "theta = A e^(alpha t) sin(beta x + beta gamma t + delta); g = gamma; "
        "h = (beta^2 + alpha/f) Z; zeta = f",
        {{"f", 'u'}}, {{"A", 1.2}, {"alpha", 0.4}, {"beta", 1.1}, {"gamma", 0.5}, {"delta", 0.3}},
        W, false, false, s27, s27_defaults, windows(kReal, kPositive)));
    out.push_back(make_entry(
        "S28", "self-similar theta = t^(1/n) omega(x) with (a omega')' + k omega^(n+1) = 0",
        "b = -(k3/(k1 n)) omega^(n+1)/omega'; c = omega^n/(k1 n); "
        "h = (k1 Z^(-n) + k2 f + k3 g) Z/f, k2 = k k1 n; zeta = f",
        {{"a", 'x'}, {"omega", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"n", -1.0}, {"k1", 0.5}, {"k3", 0.7}, {"k", 1.0}}, Variant::Power, false, true, s28,
        s28_defaults, windows(kReal, kReal, {0.5, 1.5, 0.5, 1.0})));
    out.push_back(make_entry(
        "S29", "a = b = c = 1; theta = C1 e^(lambda t) + C2 e^(beta t - mu x)",
        "g = mu f + (lambda - beta)/mu; h = lambda Z/f; zeta = f", {{"f", 'u'}},
        {{"lambda", 0.5}, {"beta", 0.3}, {"mu", 0.8}, {"C1", 0.7}, {"C2", 0.6}}, W, false, false,
        s29, s29_defaults, windows(kReal, kReal)));
    out.push_back(make_entry(
        "S30", "a = x^(2-k), b = x^(1-k), c = 1; zeta = f/u",
        "theta = C e^(k sigma t) - (sigma/k) x^k; h = (sigma u/f)(f + g + k Z)",
        {{"f", 'u'}, {"g", 'u'}}, {{"k", 1.5}, {"sigma", 0.5}, {"C", 1.2}}, P, false, false, s30,
        s30_defaults, windows(kPositive, kPositive)));
    out.push_back(make_entry(
        "S31", "g = f, zeta = f; theta linear in t with slope proportional to c",
        "theta = m2 c t + C1 c + C2; b = -((a c')' + m3 c^2)/c'; h = m1 + m2/f + m3 Z, "
        "m1 = -m3 C2",
        {{"a", 'x'}, {"c", 'x'}, {"f", 'u'}},
        {{"m2", 0.8}, {"m3", 0.5}, {"C1", 0.6}, {"C2", 0.4}}, P, false, true, s31, s31_defaults,
        windows({-1.0, kInf}, kReal)));
    out.push_back(make_entry(
        "S32", "f = g = u^(-1/2); theta = k3 t + eta(x)",
        "b = -((a eta')' + k4)/eta'; c = 1; h = k3 u^(1/2) + k4; zeta = f",
        {{"a", 'x'}, {"eta", 'x'}}, {{"k3", 0.9}, {"k4", 0.5}}, P, false, true, s32, s32_defaults,
        windows({-1.0, kInf}, kPositive)));
    out.push_back(make_entry(
        "S33", "a = c = 1, b = g = 0; theta quadratic in x",
        "theta = lambda x^2/4 +- gamma x + beta e^(-lambda t); zeta = f/u; "
        "h = -lambda u/2 - gamma^2 u/f - lambda (u/f) Z",
        {{"f", 'u'}}, {{"lambda", 0.6}, {"gamma", 0.5}, {"beta", 0.8}}, P, true, false, s33,
        s33_defaults, windows(kReal, kPositive)));
}

}  // namespace fsv::detail
