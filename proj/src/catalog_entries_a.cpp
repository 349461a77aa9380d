// Entries S01-S16: plain splitting, with the Z-free coefficient families.

#include <cmath>

#include "catalog_internal.hpp"
#include "fsv/transform.hpp"

namespace fsv::detail {

namespace {

using T = Term;

const Expr x = Expr::variable();
const Expr u = Expr::variable();

const Interval kPositive{0.0, kInf};
const Interval kReal{};
const Window kWindow{0.5, 1.5, 0.2, 0.7};

// S01 --------------------------------------------------------------------------

void s01(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double k = B.nonzero("k");
    const double b0 = B.k("b0");
    const double c0 = B.k("c0");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr G = B.int_u("int_g", g);
    const Expr D = k * G + C2;
    const Expr h = D / f;
    const Expr zeta = f / D;
    B.set_coefficients(a, b0, c0, f, g, h);
    B.set_zeta(zeta);
    B.set_theta(c0 * B.T() - (b0 / k) * B.bx(I1) + C1);
    B.relation({{1, T::Phi1}, {1, T::Phi5}});
    B.relation({{1, T::Phi2}});
    B.relation({{k, T::Phi3}, {1, T::Phi4}});
    B.relation({{1, T::Psi1}, {-1, T::Psi5}});
    B.relation({{1, T::Psi3}, {-k, T::Psi4}});
    B.u_identity("h*zeta = 1", h * zeta, 1.0);
    B.u_identity("(f/zeta)' = k*g", (f / zeta).derivative(), k * g);
}

void s01_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["f"] = 1.0 + 1.2 * u;
    s.functions["g"] = 1.0;
    s.closed_forms["int_inv_a"] = ln(x);
    s.closed_forms["Z"] = u;
}

// S02 --------------------------------------------------------------------------

void s02(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr h = B.fn("h");
    const double lambda = B.k("lambda");
    const double C1 = B.nonzero("C1");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    const double k = B.k("k");
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr H = B.int_u("H", f * h);
    const Expr zeta = B.sign() * f * pow(2.0 * k * H + C3, -0.5);
    B.set_coefficients(a, (lambda / C1) * a, -k * C1 * C1 / a, f, 1.0, h);
    B.set_zeta(zeta);
    B.set_theta(lambda * B.T() + C1 * B.bx(I1) + C2);
    B.relation({{1, T::Phi1}, {1, T::Phi4}});
    B.relation({{1, T::Phi2}});
    B.relation({{k, T::Phi3}, {1, T::Phi5}});
    B.relation({{1, T::Psi1}, {-1, T::Psi4}});
    B.relation({{1, T::Psi3}, {-k, T::Psi5}});
}

void s02_defaults(Slots& s) {
    s.functions["a"] = 1.0 + x;
    s.functions["f"] = exp(u);
    s.functions["h"] = exp(u);
    s.closed_forms["int_inv_a"] = ln(1.0 + x);
    s.closed_forms["H"] = 0.5 * exp(2.0 * u);
    // k = 1.2, C3 = 1: Z = +-(1/sqrt(k)) ln(sqrt(k) e^u + sqrt(k e^{2u} + C3)).
    const double rk = std::sqrt(1.2);
    const Expr L = ln(rk * exp(u) + sqrt(1.2 * exp(2.0 * u) + 1.0)) / rk;
    s.closed_forms["Z+"] = L;
    s.closed_forms["Z-"] = 3.5 - L;
}

// S03 --------------------------------------------------------------------------

void s03(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double k1 = B.k("k1");
    const double k2 = B.k("k2");
    const double k3 = B.k("k3");
    const double c0 = B.k("c0");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const Expr X = B.X();
    const Expr Ix = B.int_x("int_x_over_a", X / a);
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr b = c0 * k3 * a / (c0 * k2 * X + C1);
    const Expr h = k1 / f + k2 + k3 * g / f;
    B.set_coefficients(a, b, c0, f, g, h);
    B.set_zeta(f);
    B.set_theta(c0 * k1 * B.T() - c0 * k2 * B.bx(Ix) - C1 * B.bx(I1) + C2);
    B.relation({{1, T::Phi1}, {k1, T::Phi5}});
    B.relation({{1, T::Phi2}, {k2, T::Phi5}});
    B.relation({{1, T::Phi4}, {k3, T::Phi5}});
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi5}, {-k1, T::Psi1}, {-k2, T::Psi2}, {-k3, T::Psi4}});
}

void s03_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["f"] = exp(u);
    s.functions["g"] = 1.0 + pow(u, 2.0);
    s.closed_forms["int_x_over_a"] = x;
    s.closed_forms["int_inv_a"] = ln(x);
    s.closed_forms["Z"] = exp(u);
}

// S04 --------------------------------------------------------------------------

void s04(Builder& B) {
    const Expr a = B.fn("a");
    const Expr b = B.fn("b");
    const Expr f = B.fn("f");
    const double k = B.k("k");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    const double C4 = B.k("C4");
    const Expr K = B.int_x("int_b_over_a", b / a);
    const Expr J = B.int_x("J", exp(-k * K) / a);
    const Expr c = C1 * J + C2;
    const Expr s = C3 * J + C4;
    B.set_coefficients(a, b, c, f, k * f, 1.0 / f);
    B.set_zeta(f);
    B.set_theta(B.bx(c) * B.T() + B.bx(s));
    B.relation({{1, T::Phi1}, {1, T::Phi5}});
    B.relation({{1, T::Phi2}, {k, T::Phi4}});
    B.relation({{1, T::Psi1}, {-1, T::Psi5}});
    B.relation({{k, T::Psi2}, {-1, T::Psi4}});
    B.relation({{1, T::Psi3}});
}

void s04_defaults(Slots& s) {
    s.functions["a"] = 1.0;
    s.functions["b"] = 1.0;
    s.functions["f"] = exp(u);
    s.closed_forms["J"] = 1.0 - exp(-x);
    s.closed_forms["Z"] = exp(u);
}

// S05 --------------------------------------------------------------------------

void s05(Builder& B) {
    const Expr a = B.fn("a");
    const Expr r = B.fn("r");
    const Expr h = B.fn("h");
    const double lambda = B.k("lambda");
    const double k = B.nonzero("k");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const Expr R = B.int_x("int_r", r);
    const Expr H = B.int_u("int_h", h);
    const Expr b = lambda / r - (a * r).derivative() / r;
    const Expr c = -a * r * r / k;
    const Expr zeta = B.sign() * pow((2.0 / k) * H + C2, -0.5);
    B.set_coefficients(a, b, c, 1.0, 1.0, h);
    B.set_zeta(zeta);
    B.set_theta(lambda * B.T() + B.bx(R) + C1);
    B.relation({{1, T::Phi1}, {1, T::Phi2}, {1, T::Phi4}});
    B.relation({{1, T::Phi3}, {k, T::Phi5}});
    B.relation({{1, T::Psi2}, {-1, T::Psi1}});
    B.relation({{1, T::Psi4}, {-1, T::Psi1}});
    B.relation({{k, T::Psi3}, {-1, T::Psi5}});
}

void s05_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["r"] = x;
    s.functions["h"] = u;
    s.closed_forms["int_r"] = 0.5 * pow(x, 2.0);
    s.closed_forms["int_h"] = 0.5 * pow(u, 2.0);
    // k = 1.2, C2 = 1: Z = +-sqrt(k) ln(u + sqrt(u^2 + k C2)).
    const double k = 1.2;
    const Expr L = std::sqrt(k) * ln(u + sqrt(pow(u, 2.0) + k));
    s.closed_forms["Z+"] = L;
    s.closed_forms["Z-"] = -L;
}

// S06 --------------------------------------------------------------------------

void s06(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double lambda = B.k("lambda");
    const double k1 = B.k("k1");
    const double k2 = B.k("k2");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    const Expr X = B.X();
    const Expr Ix = B.int_x("int_x_over_a", X / a);
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr G = B.int_u("int_g", g);
    const Expr D = k2 * G + C3;
    const Expr h = ((k1 * f + lambda) / f) * D;
    B.set_coefficients(a, k2 * (k1 * X + C1), 1.0, f, g, h);
    B.set_zeta(-f / D);
    B.set_theta(-lambda * B.T() + k1 * B.bx(Ix) + C1 * B.bx(I1) + C2);
    B.relation({{1, T::Phi1}, {-lambda, T::Phi5}});
    B.relation({{1, T::Phi2}, {-k1, T::Phi5}});
    B.relation({{1, T::Phi4}, {-k2, T::Phi3}});
    B.relation({{1, T::Psi3}, {k2, T::Psi4}});
    B.relation({{1, T::Psi5}, {k1, T::Psi2}, {lambda, T::Psi1}});
}

void s06_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["f"] = exp(u);
    s.functions["g"] = exp(u);
    s.closed_forms["int_x_over_a"] = x;
    s.closed_forms["int_inv_a"] = ln(x);
    s.closed_forms["int_g"] = exp(u);
    // k2 = 1.1, C3 = 0.6.
    s.closed_forms["Z"] = 3.0 - ln(1.1 * exp(u) + 0.6) / 1.1;
}

// S07 --------------------------------------------------------------------------

void s07(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr h = B.fn("h");
    const double lambda = B.k("lambda");
    const double k1 = B.nonzero("k1");
    const double k2 = B.nonzero("k2");
    const double k3 = B.nonzero("k3");
    const double C1 = B.k("C1");
    if (lambda <= 0.0) throw WindowError("lambda must be positive");
    const double rl = std::sqrt(lambda);
    const Expr Q = B.int_x("int_inv_sqrt_a", 1.0 / sqrt(a));
    const Expr b = (k3 / k2) * sqrt(lambda * a);
    const Expr c = (k2 * rl / (2.0 * k1)) * a.derivative() / sqrt(a);
    const Expr g = (1.0 / k3) * (1.0 + (k2 * k2 / k1) * h.derivative());
    B.set_coefficients(a, b, c, f, g, h);
    B.set_zeta(-k1 * f / h);
    B.set_theta(lambda * B.T() + k2 * rl * B.bx(Q) + C1);
    B.relation({{1, T::Phi2}, {-k1, T::Phi5}});
    B.relation({{1, T::Phi3}, {k2 * k2, T::Phi1}});
    B.relation({{1, T::Phi4}, {k3, T::Phi1}});
    B.relation({{1, T::Psi5}, {k1, T::Psi2}});
    B.relation({{1, T::Psi1}, {-k2 * k2, T::Psi3}, {-k3, T::Psi4}});
}

void s07_defaults(Slots& s) {
    s.functions["a"] = exp(x);
    s.functions["f"] = exp(2.0 * u);
    s.functions["h"] = exp(u);
    s.closed_forms["int_inv_sqrt_a"] = -2.0 * exp(-0.5 * x);
    // k1 = 1.3.
    s.closed_forms["Z"] = 1.0 - 1.3 * exp(u);
}

// S08 --------------------------------------------------------------------------

void s08(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr h = B.fn("h");
    const double k = B.k("k");
    const double s = B.k("s");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    const Expr X = B.X();
    const Expr P = B.int_x("int_shifted_x_over_a", (X + s) / a);
    const Expr H = B.int_u("H", f * h);
    const Expr b = -a / (X + s);
    const Expr c = -(X + s) * (X + s) / a;
    B.set_coefficients(a, b, c, f, k + f, h);
    B.set_zeta(B.sign() * f * pow(2.0 * H + C3, -0.5));
    B.set_theta(k * B.T() - B.bx(P) + C2);
    B.relation({{1, T::Phi1}, {k, T::Phi4}});
    B.relation({{1, T::Phi2}, {1, T::Phi4}});
    B.relation({{1, T::Phi3}, {1, T::Phi5}});
    B.relation({{1, T::Psi4}, {-k, T::Psi1}, {-1, T::Psi2}});
    B.relation({{1, T::Psi3}, {-1, T::Psi5}});
}

void s08_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["f"] = exp(u);
    s.functions["h"] = exp(u);
    // s = 0.4.
    s.closed_forms["int_shifted_x_over_a"] = x + 0.4 * ln(x);
    s.closed_forms["H"] = 0.5 * exp(2.0 * u);
    // C3 = 1: Z = +-ln(e^u + sqrt(e^{2u} + 1)).
    const Expr L = ln(exp(u) + sqrt(exp(2.0 * u) + 1.0));
    s.closed_forms["Z+"] = L;
    s.closed_forms["Z-"] = 4.0 - L;
}

// S09 --------------------------------------------------------------------------

void s09(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const double lambda = B.k("lambda");
    const double beta = B.k("beta");
    const double C1 = B.k("C1");
    const Expr U = B.U();
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    B.set_coefficients(a, 0.0, lambda - beta * beta / a, f, 0.0, U / f);
    B.set_zeta(f / U);
    B.set_theta(lambda * B.T() + B.sign() * beta * B.bx(I1) + C1);
    B.relation({{1, T::Phi1}, {1, T::Phi3}, {1, T::Phi5}});
    B.relation({{1, T::Phi2}});
    B.relation({{1, T::Psi3}, {-1, T::Psi1}});
    B.relation({{1, T::Psi5}, {-1, T::Psi1}});
    B.relation({{1, T::Psi4}});
}

void s09_defaults(Slots& s) {
    s.functions["a"] = 1.0 + x;
    s.functions["f"] = 1.0 + pow(u, 2.0);
    s.closed_forms["int_inv_a"] = ln(1.0 + x);
    s.closed_forms["Z"] = ln(u) + 0.5 * pow(u, 2.0);
}

// S10 --------------------------------------------------------------------------

void s10(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const double k1 = B.k("k1");
    const double k2 = B.nonzero("k2");
    const double k3 = B.k("k3");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr F = B.int_u("int_f", f);
    const Expr L = k2 * I1 + C1;
    const Expr D = k2 * F + C3;
    B.set_coefficients(a, -k3 * a * L, 1.0, f, g, ((k1 + k3 * g) / f) * D);
    B.set_zeta(f / D);
    B.set_theta(k1 * B.T() + (1.0 / k2) * ln(B.bx(L)) + C2);
    B.relation({{1, T::Phi1}, {k1, T::Phi5}});
    B.relation({{1, T::Phi2}, {k2, T::Phi3}});
    B.relation({{1, T::Phi4}, {k3, T::Phi5}});
    B.relation({{1, T::Psi3}, {-k2, T::Psi2}});
    B.relation({{1, T::Psi5}, {-k1, T::Psi1}, {-k3, T::Psi4}});
}

void s10_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["f"] = exp(u);
    s.functions["g"] = cos(u) + 2.0;
    s.closed_forms["int_inv_a"] = ln(x);
    s.closed_forms["int_f"] = exp(u);
    // k2 = 0.9, C3 = 0.6.
    s.closed_forms["Z"] = ln(0.9 * exp(u) + 0.6) / 0.9;
}

// S11 --------------------------------------------------------------------------

void s11(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const double k = B.k("k");
    const double s = B.nonzero("s");
    const double C1 = B.k("C1");
    const double k1 = B.sign() * k;
    const Expr Q = B.int_x("int_inv_sqrt_a", 1.0 / sqrt(a));
    const Expr b = k * sqrt(a) + 0.5 * a.derivative();
    // Constant solution xi = s of the Abel equation fixes h.
    const Expr h = -s * (1.0 - k1 * f) / f;
    const Expr zeta = f / s;
    B.set_coefficients(a, b, 1.0, f, -f, h);
    B.set_zeta(zeta);
    B.set_theta(-B.T() + B.sign() * B.bx(Q) + C1);
    B.relation({{1, T::Phi3}, {-1, T::Phi1}});
    B.relation({{1, T::Phi4}, {-k1, T::Phi1}, {-1, T::Phi2}});
    B.relation({{1, T::Phi5}, {-1, T::Phi1}});
    B.relation({{1, T::Psi1}, {1, T::Psi3}, {k1, T::Psi4}, {1, T::Psi5}});
    B.relation({{1, T::Psi2}, {1, T::Psi4}});
    AuxOdeSpec ode;
    ode.kind = AuxOdeKind::Abel2ndKind;
    ode.unknown = "xi";
    ode.var = 'u';
    ode.order = 1;
    ode.equation = "xi xi' + (1 - k1 f) xi + f h = 0, zeta = f/xi";
    ode.rhs = [f, h, k1](double v, double xi, double) {
        return -((1.0 - k1 * f(v)) * xi + f(v) * h(v)) / xi;
    };
    ode.analytic = Expr(s);
    B.aux(ode);
    B.u_identity("Abel residual at xi = s", (1.0 - k1 * f) * s + f * h, 0.0);
}

void s11_defaults(Slots& s) {
    s.functions["a"] = pow(1.0 + x, 2.0);
    s.functions["f"] = exp(u);
    s.closed_forms["int_inv_sqrt_a"] = ln(1.0 + x);
    s.closed_forms["Z"] = exp(u);
}

// S12 --------------------------------------------------------------------------

void s12(Builder& B) {
    const Expr f = B.fn("f");
    const double kase = B.k("case");
    const double k = B.k("k");
    const double alpha = B.k("alpha");
    const double beta = B.k("beta");
    const double lambda = B.k("lambda");
    const double gamma = B.k("gamma");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const BivariateExpr X = B.bx(B.X());
    const BivariateExpr t = B.T();
    if (kase == 1.0) {
        if (gamma == 0.0) throw WindowError("gamma appears in a denominator and is 0");
        const double p = lambda / gamma;
        const double q = beta - alpha * lambda / gamma;
        B.set_coefficients(1.0, 1.0, 1.0, f, p - gamma * f, alpha * gamma + q / f);
        B.set_zeta(f);
        B.set_theta(alpha * X + beta * t + C1 * exp(lambda * t + gamma * X) + C2);
        B.relation({{1, T::Phi1}, {p, T::Phi4}, {q, T::Phi5}});
        B.relation({{1, T::Phi2}, {-gamma, T::Phi4}, {alpha * gamma, T::Phi5}});
        B.relation({{1, T::Psi3}});
        B.relation({{1, T::Psi4}, {-p, T::Psi1}, {gamma, T::Psi2}});
        B.relation({{1, T::Psi5}, {-alpha * gamma, T::Psi2}, {-q, T::Psi1}});
    } else if (kase == 2.0) {
        B.set_coefficients(1.0, 1.0, 1.0, f, 0.0, beta / f + 2.0 * k);
        B.set_zeta(f);
        B.set_theta(-k * X * X + alpha * X + beta * t + C2);
        B.relation({{1, T::Phi1}, {beta, T::Phi5}});
        B.relation({{1, T::Phi2}, {2.0 * k, T::Phi5}});
        B.relation({{1, T::Psi3}});
        B.relation({{1, T::Psi4}});
        B.relation({{1, T::Psi5}, {-beta, T::Psi1}, {-2.0 * k, T::Psi2}});
    } else if (kase == 3.0) {
        const Expr F = B.int_u("int_f", f);
        B.set_coefficients(1.0, 1.0, 1.0, f, 0.0, beta * F / f);
        B.set_zeta(f / F, "Z3");
        B.set_theta(ln(C1 * X + C2) + beta * t);
        B.relation({{1, T::Phi1}, {beta, T::Phi5}});
        B.relation({{1, T::Phi2}, {1, T::Phi3}});
        B.relation({{1, T::Psi3}, {-1, T::Psi2}});
        B.relation({{1, T::Psi4}});
        B.relation({{1, T::Psi5}, {-beta, T::Psi1}});
    } else {
        throw DomainError("S12 case must be 1, 2 or 3");
    }
}

void s12_defaults(Slots& s) {
    s.functions["f"] = 1.0;
    s.closed_forms["int_f"] = u;
}

// S13 --------------------------------------------------------------------------

void s13(Builder& B) {
    const Expr a = B.fn("a");
    const Expr f = B.fn("f");
    const double beta = B.k("beta");
    const double k = B.k("k");
    const double mu = B.k("mu");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const Expr X = B.X();
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr Ie = B.int_x("int_exp_mu_x_over_a", exp(mu * X) / a);
    B.set_coefficients(a, a, 1.0, f, -mu * f, k * mu + beta / f);
    B.set_zeta(f);
    B.set_theta(beta * B.T() + k * B.bx(I1) + C1 * B.bx(Ie) + C2);
    B.relation({{1, T::Phi1}, {beta, T::Phi5}});
    B.relation({{1, T::Phi2}, {-mu, T::Phi4}, {k * mu, T::Phi5}});
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {mu, T::Psi2}});
    B.relation({{1, T::Psi5}, {-k * mu, T::Psi2}, {-beta, T::Psi1}});
}

void s13_defaults(Slots& s) {
    s.functions["a"] = exp(x);
    s.functions["f"] = 1.0 + pow(u, 2.0);
    s.closed_forms["int_inv_a"] = -exp(-x);
    // mu = 0.7.
    s.closed_forms["int_exp_mu_x_over_a"] = exp(-0.3 * x) / -0.3;
    s.closed_forms["Z"] = u + pow(u, 3.0) / 3.0;
}

// S14 --------------------------------------------------------------------------

void s14(Builder& B) {
    const Expr b = B.fn("b");
    const Expr f = B.fn("f");
    const double kase = B.k("case");
    const double A = B.k("A");
    const double Bc = B.nonzero("B");
    const double lambda = B.k("lambda");
    const double k = B.k("k");
    const double beta = B.k("beta");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const Expr P1 = B.int_x("int_inv_b", 1.0 / b);
    const Expr E = exp((lambda / Bc) * P1);
    const Expr P2 = B.int_x("int_E", E);
    const Expr a = b * exp(-(lambda / Bc) * P1) * (A * P2 + C1);
    const Expr xi = C2 * E;
    const Expr g = Bc - A * f;
    const BivariateExpr growth = exp(lambda * B.T()) * B.bx(xi);
    if (kase == 1.0) {
        const Expr P3 = B.int_x("int_inv_a", 1.0 / a);
        B.set_coefficients(a, b, k * b / a, f, g, A - Bc / f);
        B.set_theta(k * B.bx(P3) + growth);
        B.relation({{1, T::Phi1}, {Bc, T::Phi4}, {-Bc, T::Phi5}});
        B.relation({{1, T::Phi2}, {-A, T::Phi4}, {A, T::Phi5}});
        B.relation({{1, T::Psi5}, {-A, T::Psi2}, {Bc, T::Psi1}});
    } else if (kase == 2.0) {
        B.set_coefficients(a, b, 1.0, f, g, beta / f);
        B.set_theta(beta * B.T() + growth);
        B.relation({{1, T::Phi1}, {Bc, T::Phi4}, {beta, T::Phi5}});
        B.relation({{1, T::Phi2}, {-A, T::Phi4}});
        B.relation({{1, T::Psi5}, {-beta, T::Psi1}});
    } else {
        throw DomainError("S14 case must be 1 or 2");
    }
    B.set_zeta(f);
    B.relation({{1, T::Psi3}});
    B.relation({{1, T::Psi4}, {-Bc, T::Psi1}, {A, T::Psi2}});
    B.x_identity("(a xi')' = A b xi'", (a * xi.derivative()).derivative(), A * b * xi.derivative());
    B.x_identity("B b xi' = lambda xi", Bc * b * xi.derivative(), lambda * xi);
}

void s14_defaults(Slots& s) {
    s.functions["b"] = 1.0;
    s.functions["f"] = exp(u);
    // A = 0.8, B = 1, lambda = 0.5, C1 = 0.6: a = A/lambda + C1 e^{-lambda x}.
    s.closed_forms["int_E"] = 2.0 * exp(0.5 * x);
    s.closed_forms["int_inv_a"] = 1.25 * ln(1.6 * exp(0.5 * x) + 0.6);
    s.closed_forms["Z"] = exp(u);
}

// S15 --------------------------------------------------------------------------

void s15(Builder& B) {
    const Expr f = B.fn("f");
    const Expr g = B.fn("g");
    const Expr xi = B.fn("xi");
    const double k = B.k("k");
    const double C1 = B.k("C1");
    const Expr X = B.X();
    const Expr h = -(xi / f) * (k + f + g + xi.derivative());
    B.set_coefficients(X * X, X, 1.0, f, g, h);
    B.set_zeta(f / xi);
    B.set_theta(-k * B.T() + ln(B.bx(X)) + C1);
    B.relation({{1, T::Phi1}, {-k, T::Phi5}});
    B.relation({{1, T::Phi2}, {-1, T::Phi5}});
    B.relation({{1, T::Phi3}, {-1, T::Phi5}});
    B.relation({{1, T::Phi4}, {-1, T::Phi5}});
    B.relation({{k, T::Psi1}, {1, T::Psi2}, {1, T::Psi3}, {1, T::Psi4}, {1, T::Psi5}});
}

void s15_defaults(Slots& s) {
    s.functions["f"] = exp(u);
    s.functions["g"] = cos(u) + 2.0;
    s.functions["xi"] = 1.0;
    s.closed_forms["Z"] = exp(u);
}

// S16 --------------------------------------------------------------------------

void s16(Builder& B) {
    const Expr a = B.fn("a");
    const Expr c = B.fn("c");
    const Expr f = B.fn("f");
    const double lambda = B.k("lambda");
    const double k1 = B.nonzero("k1");
    const double k2 = B.k("k2");
    const double k3 = B.nonzero("k3");
    const double C1 = B.k("C1");
    const double C2 = B.k("C2");
    const double C3 = B.k("C3");
    const Expr I1 = B.int_x("int_inv_a", 1.0 / a);
    const Expr F = B.int_u("int_f", f);
    const Expr L = k3 * I1 + C1;
    const Expr D = k3 * F + C3;
    const Expr b = -((k2 * c + lambda) / k1) * a * L;
    B.set_coefficients(a, b, c, f, -k1, -(k2 / f) * D);
    B.set_zeta(f / D);
    B.set_theta(lambda * B.T() + (1.0 / k3) * ln(B.bx(L)) + C2);
    B.relation({{1, T::Phi1}, {-k1, T::Phi4}, {-k2, T::Phi5}});
    B.relation({{1, T::Phi2}, {k3, T::Phi3}});
    B.relation({{1, T::Psi3}, {-k3, T::Psi2}});
    B.relation({{1, T::Psi4}, {k1, T::Psi1}});
    B.relation({{1, T::Psi5}, {k2, T::Psi1}});
    // On the solution a f u_x does not depend on x.
    B.constraint({"[a f u_x]_x = 0 on the solution", ConstraintDomain::XT,
                  [](const Instance& in, double xv, double tv) {
                      const MonotoneMap M = MonotoneMap::from_solution(in.sol);
                      const double uv = M.invert(in.sol.theta(xv, tv));
                      const PhiValues p = eval_phi(in, Variant::Plain, 0.0, xv, tv);
                      const double fz = in.coeffs.f(uv) / in.sol.zeta(uv);
                      const double t1 = p.phi[1] * fz;
                      const double t2 = p.phi[2] * in.d.f_over_zeta_u(uv) / in.sol.zeta(uv);
                      return ConstraintValue{t1 + t2, std::abs(t1) + std::abs(t2)};
                  }});
}

void s16_defaults(Slots& s) {
    s.functions["a"] = x;
    s.functions["c"] = 1.0 + x;
    s.functions["f"] = exp(u);
    s.closed_forms["int_inv_a"] = ln(x);
    s.closed_forms["int_f"] = exp(u);
    // k3 = 1, C3 = 0.4.
    s.closed_forms["Z"] = ln(exp(u) + 0.4);
}

EntryWindows windows(Interval xdom, Interval udom, Window w = kWindow) { return {xdom, udom, w}; }

}  // namespace

void append_entries_a(std::vector<CatalogEntry>& out) {
    const Variant P = Variant::Plain;
    out.push_back(make_entry(
        "S01", "constant b and c; zeta = f/(kG + C2), h = 1/zeta",
        "theta = c0 t - (b0/k) int dx/a + C1; b = b0; c = c0; h = (k G + C2)/f; "
        "zeta = f/(k G + C2), G = int g du",
        {{"a", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"k", 1.2}, {"b0", 1.0}, {"c0", 1.0}, {"C1", 0.3}, {"C2", 1.0}}, P, false, false, s01,
        s01_defaults, windows(kPositive, {-0.8, 6.0})));
    out.push_back(make_entry(
        "S02", "b proportional to a, c = -k C1^2/a, g = 1; zeta from the integral of f h",
        "theta = lambda t + C1 int dx/a + C2; b = (lambda/C1) a; c = -k C1^2/a; g = 1; "
        "zeta = +-f (2k int f h du + C3)^(-1/2)",
        {{"a", 'x'}, {"f", 'u'}, {"h", 'u'}},
        {{"lambda", 0.7}, {"C1", 1.3}, {"C2", 0.3}, {"C3", 1.0}, {"k", 1.2}}, P, true, false, s02,
        s02_defaults, windows({-1.0, kInf}, {-5.0, 5.0})));
    out.push_back(make_entry(
        "S03", "zeta = f with h = k1/f + k2 + k3 g/f",
        "theta = c0 k1 t - c0 k2 int x/a dx - C1 int dx/a + C2; b = c0 k3 a/(c0 k2 x + C1); "
        "c = c0; h = k1/f + k2 + k3 g/f; zeta = f",
        {{"a", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"k1", 1.1}, {"k2", 0.6}, {"k3", 0.8}, {"c0", 1.0}, {"C1", 0.3}, {"C2", 1.5}}, P, false,
        false, s03, s03_defaults, windows(kPositive, {-6.0, 6.0})));
    out.push_back(make_entry(
        "S04", "theta linear in t with x-dependent slope; g = k f, h = 1/f",
        "theta = c(x) t + s(x); c = C1 J + C2; s = C3 J + C4; "
        "J = int exp(-k int b/a dx)/a dx; g = k f; h = 1/f; zeta = f",
        {{"a", 'x'}, {"b", 'x'}, {"f", 'u'}},
        {{"k", 1.0}, {"C1", 1.0}, {"C2", 0.0}, {"C3", 1.0}, {"C4", 0.0}}, P, false, false, s04,
        s04_defaults, windows(kReal, {-6.0, 6.0})));
    out.push_back(make_entry(
        "S05", "f = g = 1 with x-dependent r; zeta from the integral of h",
        "theta = lambda t + int r dx + C1; b = lambda/r - (a r)'/r; c = -a r^2/k; f = g = 1; "
        "zeta = +-((2/k) int h du + C2)^(-1/2)",
        {{"a", 'x'}, {"r", 'x'}, {"h", 'u'}},
        {{"lambda", 0.7}, {"k", 1.2}, {"C1", 0.3}, {"C2", 1.0}}, P, true, false, s05, s05_defaults,
        windows(kPositive, {-10.0, 10.0})));
    out.push_back(make_entry(
        "S06", "b linear in x, c = 1; zeta = -f/(k2 G + C3)",
        "theta = -lambda t + k1 int x/a dx + C1 int dx/a + C2; b = k2 (k1 x + C1); c = 1; "
        "h = ((k1 f + lambda)/f)(k2 G + C3); zeta = -f/(k2 G + C3)",
        {{"a", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"lambda", 0.7}, {"k1", 0.9}, {"k2", 1.1}, {"C1", 0.4}, {"C2", 0.5}, {"C3", 0.6}}, P,
        false, false, s06, s06_defaults, windows(kPositive, {-8.0, 8.0})));
    out.push_back(make_entry(
        "S07", "theta linear in t and in int dx/sqrt(a); g from h'",
        "theta = lambda t + k2 sqrt(lambda) int dx/sqrt(a) + C1; b = (k3/k2) sqrt(lambda a); "
        "c = (k2 sqrt(lambda)/(2 k1)) a'/sqrt(a); g = (1 + (k2^2/k1) h')/k3; zeta = -k1 f/h",
        {{"a", 'x'}, {"f", 'u'}, {"h", 'u'}},
        {{"lambda", 0.7}, {"k1", 1.3}, {"k2", 0.8}, {"k3", 1.1}, {"C1", 0.2}}, P, false, false,
        s07, s07_defaults, windows(kReal, {-6.0, 6.0})));
    out.push_back(make_entry(
        "S08", "b = -a/(x+s), c = -(x+s)^2/a, g = k + f",
        "theta = k t - int (x+s)/a dx + C2; b = -a/(x+s); c = -(x+s)^2/a; g = k + f; "
        "zeta = +-f (2 int f h du + C3)^(-1/2)",
        {{"a", 'x'}, {"f", 'u'}, {"h", 'u'}}, {{"k", 1.2}, {"s", 0.4}, {"C2", 2.0}, {"C3", 1.0}},
        P, true, false, s08, s08_defaults, windows(kPositive, {-8.0, 8.0})));
    out.push_back(make_entry(
        "S09", "zeta = f/u with reaction (lambda - beta^2/a) u/f",
        "theta = lambda t +- beta int dx/a + C1; b = 0; c = lambda - beta^2/a; g = 0; h = u/f; "
        "zeta = f/u",
        {{"a", 'x'}, {"f", 'u'}}, {{"lambda", 0.7}, {"beta", 0.9}, {"C1", 0.3}}, P, true, false,
        s09, s09_defaults, windows({-1.0, kInf}, {0.0, 50.0})));
    out.push_back(make_entry(
        "S10", "logarithmic theta in int dx/a; zeta = f/(k2 F + C3)",
        "theta = k1 t + (1/k2) ln(k2 int dx/a + C1) + C2; b = -k3 a (k2 int dx/a + C1); c = 1; "
        "h = ((k1 + k3 g)/f)(k2 F + C3); zeta = f/(k2 F + C3)",
        {{"a", 'x'}, {"f", 'u'}, {"g", 'u'}},
        {{"k1", 0.8}, {"k2", 0.9}, {"k3", 0.7}, {"C1", 2.5}, {"C2", 0.3}, {"C3", 0.6}}, P, false,
        false, s10, s10_defaults, windows(kPositive, {-6.0, 6.0})));
    out.push_back(make_entry(
        "S11", "b = k sqrt(a) + a'/2, g = -f; zeta = f/xi with xi from an Abel equation",
        "theta = -t +- int dx/sqrt(a) + C1; b = k sqrt(a) + a'/2; c = 1; g = -f; "
        "xi xi' + (1 -+ k f) xi + f h = 0; constant branch xi = s gives h = -s(1 -+ k f)/f, "
        "zeta = f/s",
        {{"a", 'x'}, {"f", 'u'}}, {{"k", 0.8}, {"s", 1.0}, {"C1", 2.0}}, P, true, true, s11,
        s11_defaults, windows({-1.0, kInf}, {-6.0, 6.0})));
    out.push_back(make_entry(
        "S12", "a = b = c = 1 with zeta = f (cases 1, 2) or f/F (case 3)",
        "case 1: theta = alpha x + beta t + C1 e^(lambda t + gamma x) + C2, g = lambda/gamma - "
        "gamma f, h = alpha gamma + (beta - alpha lambda/gamma)/f; case 2: theta = -k x^2 + alpha x "
        "+ beta t + C2, g = 0, h = beta/f + 2k; case 3: theta = ln(C1 x + C2) + beta t, g = 0, "
        "h = beta F/f, zeta = f/F",
        {{"f", 'u'}},
        {{"case", 2.0}, {"k", 0.6}, {"alpha", 0.5}, {"beta", 0.8}, {"lambda", 0.7}, {"gamma", 1.1},
         {"C1", 0.4}, {"C2", 0.3}},
        P, false, false, s12, s12_defaults, windows(kReal, {-10.0, 10.0})));
    out.push_back(make_entry(
        "S13", "b = a, c = 1, zeta = f, g = -mu f",
        "theta = beta t + k int dx/a + C1 int e^(mu x)/a dx + C2; b = a; c = 1; g = -mu f; "
        "h = k mu + beta/f; zeta = f",
        {{"a", 'x'}, {"f", 'u'}},
        {{"beta", 0.8}, {"k", 0.6}, {"mu", 0.7}, {"C1", 0.5}, {"C2", 0.3}}, P, false, false, s13,
        s13_defaults, windows(kReal, {-6.0, 6.0})));
    out.push_back(make_entry(
        "S14", "a determined by b; theta grows like e^(lambda t) xi(x)",
        "E = exp((lambda/B) int dx/b); a = b E^(-1) (A int E dx + C1); xi = C2 E; g = B - A f; "
        "zeta = f; case 1: theta = k int dx/a + e^(lambda t) xi, c = k b/a, h = A - B/f; "
        "case 2: theta = beta t + e^(lambda t) xi, c = 1, h = beta/f",
        {{"b", 'x'}, {"f", 'u'}},
        {{"case", 1.0}, {"A", 0.8}, {"B", 1.0}, {"lambda", 0.5}, {"k", 1.2}, {"beta", 0.7},
         {"C1", 0.6}, {"C2", 0.4}},
        P, false, false, s14, s14_defaults, windows(kReal, {-6.0, 6.0})));
    out.push_back(make_entry(
        "S15", "a = x^2, b = x, c = 1; zeta = f/xi with xi free",
        "theta = -k t + ln x + C1; a = x^2; b = x; c = 1; h = -(xi/f)(k + f + g + xi'); "
        "zeta = f/xi",
        {{"f", 'u'}, {"g", 'u'}, {"xi", 'u'}}, {{"k", 0.9}, {"C1", 5.0}}, P, false, false, s15,
        s15_defaults, windows(kPositive, {-6.0, 6.0}, {1.0, 2.0, 0.2, 0.7})));
    out.push_back(make_entry(
        "S16", "g constant; a f u_x independent of x on the solution",
        "theta = lambda t + (1/k3) ln(k3 int dx/a + C1) + C2; "
        "b = -((k2 c + lambda)/k1) a (k3 int dx/a + C1); g = -k1; h = -(k2/f)(k3 F + C3); "
        "zeta = f/(k3 F + C3)",
        {{"a", 'x'}, {"c", 'x'}, {"f", 'u'}},
        {{"lambda", 0.6}, {"k1", 1.1}, {"k2", 0.7}, {"k3", 1.0}, {"C1", 3.0}, {"C2", 0.6},
         {"C3", 0.4}},
        P, false, false, s16, s16_defaults, windows(kPositive, {-6.0, 6.0})));
}

}  // namespace fsv::detail
