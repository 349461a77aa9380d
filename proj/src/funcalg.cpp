#include "fsv/funcalg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace fsv {

Interval Interval::intersect(const Interval& o) const {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
}

namespace detail {

struct PrimitiveData {
    NodePtr integrand;
    Interval domain;
    double anchor = 0.0;
    NodePtr closed;
    double closed_at_anchor = 0.0;
    double tolerance = kQuadratureTolerance;
};

struct Node {
    NodeKind kind = NodeKind::Constant;
    double value = 0.0;  // constant value, or exponent of a Power node
    int var = 0;
    NodePtr a;  // first operand; outer function of a Composition
    NodePtr b;  // second operand; inner argument of a Composition
    Interval outer_domain;
    std::shared_ptr<const PrimitiveData> prim;
    unsigned vars = 0;  // bitmask of variables the node depends on
};

namespace {

double eval_node(const Node& n, const double* v);

QuadratureResult integrate_primitive(const PrimitiveData& p, double u) {
    const auto f = [&p](double s) {
        const double args[2] = {s, 0.0};
        return eval_node(*p.integrand, args);
    };
    return adaptive_simpson(f, p.anchor, u, p.tolerance);
}

double eval_primitive(const PrimitiveData& p, double u) {
    if (!p.domain.contains(u)) {
        throw DomainError("antiderivative argument " + std::to_string(u) +
                          " outside integrand domain");
    }
    if (p.closed) {
        const double args[2] = {u, 0.0};
        return eval_node(*p.closed, args) - p.closed_at_anchor;
    }
    const QuadratureResult r = integrate_primitive(p, u);
    if (!r.converged) {
        throw QuadratureFailure("depth budget exhausted integrating from " +
                                std::to_string(p.anchor) + " to " + std::to_string(u));
    }
    return r.value;
}

double eval_node(const Node& n, const double* v) {
    switch (n.kind) {
        case NodeKind::Constant: return n.value;
        case NodeKind::Variable: return v[n.var];
        case NodeKind::Sum: return eval_node(*n.a, v) + eval_node(*n.b, v);
        case NodeKind::Difference: return eval_node(*n.a, v) - eval_node(*n.b, v);
        case NodeKind::Product: return eval_node(*n.a, v) * eval_node(*n.b, v);
        case NodeKind::Quotient: return eval_node(*n.a, v) / eval_node(*n.b, v);
        case NodeKind::Power: {
            const double base = eval_node(*n.a, v);
            if (n.value == 2.0) return base * base;
            return std::pow(base, n.value);
        }
        case NodeKind::Exp: return std::exp(eval_node(*n.a, v));
        case NodeKind::Ln: return std::log(eval_node(*n.a, v));
        case NodeKind::Sin: return std::sin(eval_node(*n.a, v));
        case NodeKind::Cos: return std::cos(eval_node(*n.a, v));
        case NodeKind::Sqrt: return std::sqrt(eval_node(*n.a, v));
        case NodeKind::Composition: {
            const double inner = eval_node(*n.b, v);
            if (!n.outer_domain.contains(inner)) {
                throw DomainError("inner value " + std::to_string(inner) +
                                  " outside the outer function's domain");
            }
            const double args[2] = {inner, 0.0};
            return eval_node(*n.a, args);
        }
        case NodeKind::Primitive: return eval_primitive(*n.prim, v[0]);
    }
    return 0.0;
}

std::shared_ptr<Node> blank(NodeKind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
}

bool is_const(const NodePtr& n) { return n->kind == NodeKind::Constant; }
bool is_const(const NodePtr& n, double v) { return is_const(n) && n->value == v; }

}  // namespace

NodePtr constant(double v) {
    auto n = blank(NodeKind::Constant);
    n->value = v;
    return n;
}

NodePtr variable(int var) {
    auto n = blank(NodeKind::Variable);
    n->var = var;
    n->vars = 1u << var;
    return n;
}

NodePtr binary(NodeKind k, NodePtr a, NodePtr b) {
    if (is_const(a) && is_const(b)) {
        const double args[2] = {0.0, 0.0};
        Node tmp;
        tmp.kind = k;
        tmp.a = a;
        tmp.b = b;
        return constant(eval_node(tmp, args));
    }
    switch (k) {
        case NodeKind::Sum:
            if (is_const(a, 0.0)) return b;
            if (is_const(b, 0.0)) return a;
            break;
        case NodeKind::Difference:
            if (is_const(b, 0.0)) return a;
            break;
        case NodeKind::Product:
            if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
            if (is_const(a, 1.0)) return b;
            if (is_const(b, 1.0)) return a;
            break;
        case NodeKind::Quotient:
            if (is_const(a, 0.0)) return constant(0.0);
            if (is_const(b, 1.0)) return a;
            break;
        default: break;
    }
    auto n = blank(k);
    n->vars = a->vars | b->vars;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr power(NodePtr a, double p) {
    if (p == 0.0) return constant(1.0);
    if (p == 1.0) return a;
    if (is_const(a)) return constant(std::pow(a->value, p));
    auto n = blank(NodeKind::Power);
    n->value = p;
    n->vars = a->vars;
    n->a = std::move(a);
    return n;
}

NodePtr unary(NodeKind k, NodePtr a) {
    if (is_const(a)) {
        const double args[2] = {0.0, 0.0};
        Node tmp;
        tmp.kind = k;
        tmp.a = a;
        return constant(eval_node(tmp, args));
    }
    auto n = blank(k);
    n->vars = a->vars;
    n->a = std::move(a);
    return n;
}

NodePtr composition(NodePtr outer, Interval outer_domain, NodePtr inner) {
    if (is_const(outer)) return outer;
    if (outer->kind == NodeKind::Variable) return inner;
    if (is_const(inner)) {
        if (!outer_domain.contains(inner->value)) {
            throw DomainError("constant argument outside the outer function's domain");
        }
        const double args[2] = {inner->value, 0.0};
        return constant(eval_node(*outer, args));
    }
    auto n = blank(NodeKind::Composition);
    n->vars = inner->vars;
    n->outer_domain = outer_domain;
    n->a = std::move(outer);
    n->b = std::move(inner);
    return n;
}

NodePtr primitive(std::shared_ptr<const PrimitiveData> p) {
    auto n = blank(NodeKind::Primitive);
    n->vars = 1u;
    n->prim = std::move(p);
    return n;
}

NodePtr diff(const NodePtr& n, int var) {
    if (!(n->vars & (1u << var))) return constant(0.0);
    switch (n->kind) {
        case NodeKind::Constant: return constant(0.0);
        case NodeKind::Variable: return constant(n->var == var ? 1.0 : 0.0);
        case NodeKind::Sum: return binary(NodeKind::Sum, diff(n->a, var), diff(n->b, var));
        case NodeKind::Difference:
            return binary(NodeKind::Difference, diff(n->a, var), diff(n->b, var));
        case NodeKind::Product:
            return binary(NodeKind::Sum, binary(NodeKind::Product, diff(n->a, var), n->b),
                          binary(NodeKind::Product, n->a, diff(n->b, var)));
        case NodeKind::Quotient: {
            // (a/b)' = (a' - (a/b) b') / b
            const NodePtr da = diff(n->a, var);
            const NodePtr db = diff(n->b, var);
            if (is_const(db, 0.0)) return binary(NodeKind::Quotient, da, n->b);
            return binary(NodeKind::Quotient,
                          binary(NodeKind::Difference, da, binary(NodeKind::Product, n, db)),
                          n->b);
        }
        case NodeKind::Power:
            return binary(NodeKind::Product,
                          binary(NodeKind::Product, constant(n->value), power(n->a, n->value - 1.0)),
                          diff(n->a, var));
        case NodeKind::Exp: return binary(NodeKind::Product, n, diff(n->a, var));
        case NodeKind::Ln: return binary(NodeKind::Quotient, diff(n->a, var), n->a);
        case NodeKind::Sin:
            return binary(NodeKind::Product, unary(NodeKind::Cos, n->a), diff(n->a, var));
        case NodeKind::Cos:
            return binary(NodeKind::Product,
                          binary(NodeKind::Product, constant(-1.0), unary(NodeKind::Sin, n->a)),
                          diff(n->a, var));
        case NodeKind::Sqrt:
            return binary(NodeKind::Quotient, diff(n->a, var),
                          binary(NodeKind::Product, constant(2.0), n));
        case NodeKind::Composition:
            return binary(NodeKind::Product,
                          composition(diff(n->a, 0), n->outer_domain, n->b), diff(n->b, var));
        case NodeKind::Primitive: return n->prim->integrand;
    }
    return constant(0.0);
}

double eval(const NodePtr& n, double x, double t) {
    const double args[2] = {x, t};
    return eval_node(*n, args);
}

namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void print(std::ostream& os, const NodePtr& n, const std::string* names) {
    auto fn = [&](const char* name) {
        os << name << '(';
        print(os, n->a, names);
        os << ')';
    };
    auto bin = [&](const char* op) {
        os << '(';
        print(os, n->a, names);
        os << ' ' << op << ' ';
        print(os, n->b, names);
        os << ')';
    };
    switch (n->kind) {
        case NodeKind::Constant:
            if (n->value < 0) os << '(' << fmt_num(n->value) << ')';
            else os << fmt_num(n->value);
            break;
        case NodeKind::Variable: os << names[n->var]; break;
        case NodeKind::Sum: bin("+"); break;
        case NodeKind::Difference: bin("-"); break;
        case NodeKind::Product: bin("*"); break;
        case NodeKind::Quotient: bin("/"); break;
        case NodeKind::Power:
            os << '(';
            print(os, n->a, names);
            os << ")^" << (n->value < 0 ? "(" + fmt_num(n->value) + ")" : fmt_num(n->value));
            break;
        case NodeKind::Exp: fn("exp"); break;
        case NodeKind::Ln: fn("ln"); break;
        case NodeKind::Sin: fn("sin"); break;
        case NodeKind::Cos: fn("cos"); break;
        case NodeKind::Sqrt: fn("sqrt"); break;
        case NodeKind::Composition: {
            const std::string s = "s";
            os << '[';
            print(os, n->a, &s);
            os << "]_{s=";
            print(os, n->b, names);
            os << '}';
            break;
        }
        case NodeKind::Primitive: {
            const std::string s = "s";
            os << "int_{" << fmt_num(n->prim->anchor) << "}^{" << names[0] << "}(";
            print(os, n->prim->integrand, &s);
            os << ")ds";
            break;
        }
    }
}

}  // namespace detail

namespace {

using detail::binary;

// Sample abscissae used to certify a declared domain.
std::vector<double> domain_samples(const Interval& d, int count) {
    double lo = d.lo;
    double hi = d.hi;
    if (lo == -kInf && hi == kInf) {
        lo = -20.0;
        hi = 20.0;
    } else if (lo == -kInf) {
        lo = hi - 40.0;
    } else if (hi == kInf) {
        hi = lo + 40.0;
    }
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) xs.push_back(lo + (hi - lo) * i / (count + 1));
    return xs;
}

}  // namespace

Expr::Expr() : node_(detail::constant(0.0)) {}

Expr::Expr(double value) : node_(detail::constant(value)) {}

Expr Expr::variable() { return from_node(detail::variable(0), Interval{}); }

Expr Expr::from_node(NodePtr node, Interval domain) {
    Expr e;
    e.node_ = std::move(node);
    e.domain_ = domain;
    return e;
}

double Expr::operator()(double x) const {
    if (!domain_.contains(x)) {
        throw DomainError("argument " + std::to_string(x) + " outside (" +
                          std::to_string(domain_.lo) + ", " + std::to_string(domain_.hi) + ")");
    }
    return detail::eval(node_, x, 0.0);
}

double Expr::eval_unchecked(double x) const { return detail::eval(node_, x, 0.0); }

Expr Expr::derivative() const { return from_node(detail::diff(node_, 0), domain_); }

Expr Expr::on(Interval domain) const {
    if (!(domain.lo < domain.hi)) throw DomainError("empty interval");
    const Interval d = domain_.intersect(domain);
    if (d.lo != domain.lo || d.hi != domain.hi) {
        throw DomainError("interval exceeds the expression's existing domain");
    }
    for (double x : domain_samples(domain, 257)) {
        double v = 0.0;
        try {
            v = detail::eval(node_, x, 0.0);
        } catch (const DomainError&) {
            throw DomainError("expression undefined at " + std::to_string(x) +
                              " inside declared domain");
        }
        if (!std::isfinite(v)) {
            throw DomainError("expression not finite at " + std::to_string(x) +
                              " inside declared domain");
        }
    }
    return from_node(node_, domain);
}

NodeKind Expr::kind() const { return node_->kind; }

bool Expr::is_constant() const { return node_->kind == NodeKind::Constant; }

double Expr::constant_value() const { return node_->value; }

std::string Expr::str(const std::string& var) const {
    std::ostringstream os;
    const std::string names[2] = {var, "t"};
    detail::print(os, node_, names);
    return os.str();
}

Expr operator+(const Expr& a, const Expr& b) {
    return Expr::from_node(binary(NodeKind::Sum, a.node(), b.node()),
                           a.domain().intersect(b.domain()));
}
Expr operator-(const Expr& a, const Expr& b) {
    return Expr::from_node(binary(NodeKind::Difference, a.node(), b.node()),
                           a.domain().intersect(b.domain()));
}
Expr operator*(const Expr& a, const Expr& b) {
    return Expr::from_node(binary(NodeKind::Product, a.node(), b.node()),
                           a.domain().intersect(b.domain()));
}
Expr operator/(const Expr& a, const Expr& b) {
    return Expr::from_node(binary(NodeKind::Quotient, a.node(), b.node()),
                           a.domain().intersect(b.domain()));
}
Expr operator-(const Expr& a) { return Expr(-1.0) * a; }
Expr pow(const Expr& base, double exponent) {
    return Expr::from_node(detail::power(base.node(), exponent), base.domain());
}
Expr exp(const Expr& e) { return Expr::from_node(detail::unary(NodeKind::Exp, e.node()), e.domain()); }
Expr ln(const Expr& e) { return Expr::from_node(detail::unary(NodeKind::Ln, e.node()), e.domain()); }
Expr sin(const Expr& e) { return Expr::from_node(detail::unary(NodeKind::Sin, e.node()), e.domain()); }
Expr cos(const Expr& e) { return Expr::from_node(detail::unary(NodeKind::Cos, e.node()), e.domain()); }
Expr sqrt(const Expr& e) {
    return Expr::from_node(detail::unary(NodeKind::Sqrt, e.node()), e.domain());
}
Expr compose(const Expr& outer, const Expr& inner) {
    return Expr::from_node(detail::composition(outer.node(), outer.domain(), inner.node()),
                           inner.domain());
}

double eval(const Expr& e, double x) { return e(x); }

Expr differentiate(const Expr& e) { return e.derivative(); }

double fd_step(double x) { return std::max(1e-6, 1e-6 * std::abs(x)); }

double central_difference(const Expr& e, double x) {
    const double h = fd_step(x);
    return (e(x + h) - e(x - h)) / (2.0 * h);
}

namespace {

struct SimpsonContext {
    const std::function<double(double)>& f;
    int max_depth;
    long evaluations = 0;
    long budget = 20'000'000;
    bool converged = true;
    double error = 0.0;
};

double simpson_step(SimpsonContext& ctx, double a, double b, double fa, double fm, double fb,
                    double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = ctx.f(lm);
    const double frm = ctx.f(rm);
    ctx.evaluations += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() *
                            (std::abs(left) + std::abs(right));
    if (std::abs(delta) <= 15.0 * eps || std::abs(delta) <= roundoff) {
        ctx.error += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    if (depth >= ctx.max_depth || !(lm > a && m > lm && rm > m && b > rm) ||
        ctx.evaluations > ctx.budget || !std::isfinite(delta)) {
        ctx.converged = false;
        ctx.error += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_step(ctx, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
           simpson_step(ctx, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol, int max_depth) {
    QuadratureResult out;
    if (a == b) return out;
    if (b < a) {
        out = adaptive_simpson(f, b, a, tol, max_depth);
        out.value = -out.value;
        return out;
    }
    SimpsonContext ctx{f, max_depth};
    // Scale for the relative part of the tolerance: a coarse estimate of the
    // integral of |f| from nine equispaced samples.
    double fs[9];
    for (int i = 0; i < 9; ++i) fs[i] = f(a + (b - a) * i / 8.0);
    ctx.evaluations = 9;
    double abs_scale = 0.0;
    for (int i = 0; i < 8; ++i) abs_scale += 0.5 * (std::abs(fs[i]) + std::abs(fs[i + 1]));
    abs_scale *= (b - a) / 8.0;
    const double eps = std::max(tol, tol * abs_scale);
    const double fa = fs[0];
    const double fm = fs[4];
    const double fb = fs[8];
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    out.value = simpson_step(ctx, a, b, fa, fm, fb, whole, eps, 0);
    out.evaluations = ctx.evaluations;
    out.converged = ctx.converged && std::isfinite(out.value);
    out.error_estimate = ctx.error;
    return out;
}

// Antiderivative ------------------------------------------------------------

Antiderivative::Antiderivative() : Antiderivative(Expr(0.0), 0.0) {}

Antiderivative::Antiderivative(Expr integrand, double anchor, std::optional<Expr> closed_form,
                               double tolerance)
    : integrand_(std::move(integrand)), closed_(std::move(closed_form)) {
    if (!integrand_.domain().contains(anchor)) {
        throw DomainError("anchor " + std::to_string(anchor) + " outside integrand domain");
    }
    auto p = std::make_shared<detail::PrimitiveData>();
    p->integrand = integrand_.node();
    p->domain = integrand_.domain();
    p->anchor = anchor;
    p->tolerance = tolerance;
    if (closed_) {
        p->closed = closed_->node();
        p->closed_at_anchor = (*closed_)(anchor);
    }
    node_ = detail::primitive(std::move(p));
}

double Antiderivative::operator()(double u) const { return detail::eval(node_, u, 0.0); }

QuadratureResult Antiderivative::try_eval(double u) const {
    if (closed_) {
        QuadratureResult r;
        r.value = (*this)(u);
        return r;
    }
    return quadrature(u);
}

QuadratureResult Antiderivative::quadrature(double u) const {
    if (!integrand_.domain().contains(u)) {
        QuadratureResult r;
        r.converged = false;
        r.value = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    return detail::integrate_primitive(*node_->prim, u);
}

const Expr& Antiderivative::integrand() const { return integrand_; }
double Antiderivative::anchor() const { return node_->prim->anchor; }
bool Antiderivative::has_closed_form() const { return closed_.has_value(); }
const std::optional<Expr>& Antiderivative::closed_form() const { return closed_; }
double Antiderivative::tolerance() const { return node_->prim->tolerance; }

Expr Antiderivative::as_expr() const { return Expr::from_node(node_, integrand_.domain()); }

Antiderivative antiderivative(const Expr& e, double anchor, std::optional<Expr> closed_form) {
    return Antiderivative(e, anchor, std::move(closed_form));
}

// BivariateExpr -------------------------------------------------------------

BivariateExpr::BivariateExpr() : node_(detail::constant(0.0)) {}

BivariateExpr::BivariateExpr(double value) : node_(detail::constant(value)) {}

BivariateExpr BivariateExpr::x() { return from_node(detail::variable(0), Rect{}); }

BivariateExpr BivariateExpr::t() { return from_node(detail::variable(1), Rect{}); }

BivariateExpr BivariateExpr::of_x(const Expr& e) {
    return from_node(e.node(), Rect{e.domain(), Interval{}});
}

BivariateExpr BivariateExpr::of_t(const Expr& e) {
    return from_node(detail::composition(e.node(), e.domain(), detail::variable(1)),
                     Rect{Interval{}, e.domain()});
}

BivariateExpr BivariateExpr::from_node(NodePtr node, Rect domain) {
    BivariateExpr e;
    e.node_ = std::move(node);
    e.domain_ = domain;
    return e;
}

double BivariateExpr::operator()(double x, double t) const {
    if (!domain_.contains(x, t)) {
        throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(t) +
                          ") outside declared domain");
    }
    return detail::eval(node_, x, t);
}

double BivariateExpr::eval_unchecked(double x, double t) const { return detail::eval(node_, x, t); }

BivariateExpr BivariateExpr::dx() const { return from_node(detail::diff(node_, 0), domain_); }
BivariateExpr BivariateExpr::dt() const { return from_node(detail::diff(node_, 1), domain_); }
BivariateExpr BivariateExpr::dxx() const { return dx().dx(); }

BivariateExpr BivariateExpr::on(Rect domain) const {
    const Rect d = domain_.intersect(domain);
    if (d.x.lo != domain.x.lo || d.x.hi != domain.x.hi || d.t.lo != domain.t.lo ||
        d.t.hi != domain.t.hi) {
        throw DomainError("rectangle exceeds the expression's existing domain");
    }
    const auto xs = domain_samples(domain.x, 33);
    const auto ts = domain_samples(domain.t, 33);
    for (double x : xs) {
        for (double t : ts) {
            double v = 0.0;
            try {
                v = detail::eval(node_, x, t);
            } catch (const DomainError&) {
                throw DomainError("expression undefined inside declared rectangle");
            }
            if (!std::isfinite(v)) throw DomainError("expression not finite inside declared rectangle");
        }
    }
    return from_node(node_, domain);
}

std::string BivariateExpr::str() const {
    std::ostringstream os;
    const std::string names[2] = {"x", "t"};
    detail::print(os, node_, names);
    return os.str();
}

namespace {
BivariateExpr bi(NodeKind k, const BivariateExpr& a, const BivariateExpr& b) {
    return BivariateExpr::from_node(binary(k, a.node(), b.node()),
                                    a.domain().intersect(b.domain()));
}
BivariateExpr un(NodeKind k, const BivariateExpr& a) {
    return BivariateExpr::from_node(detail::unary(k, a.node()), a.domain());
}
}  // namespace

BivariateExpr operator+(const BivariateExpr& a, const BivariateExpr& b) { return bi(NodeKind::Sum, a, b); }
BivariateExpr operator-(const BivariateExpr& a, const BivariateExpr& b) { return bi(NodeKind::Difference, a, b); }
BivariateExpr operator*(const BivariateExpr& a, const BivariateExpr& b) { return bi(NodeKind::Product, a, b); }
BivariateExpr operator/(const BivariateExpr& a, const BivariateExpr& b) { return bi(NodeKind::Quotient, a, b); }
BivariateExpr operator-(const BivariateExpr& a) { return BivariateExpr(-1.0) * a; }
BivariateExpr pow(const BivariateExpr& base, double exponent) {
    return BivariateExpr::from_node(detail::power(base.node(), exponent), base.domain());
}
BivariateExpr exp(const BivariateExpr& e) { return un(NodeKind::Exp, e); }
BivariateExpr ln(const BivariateExpr& e) { return un(NodeKind::Ln, e); }
BivariateExpr sin(const BivariateExpr& e) { return un(NodeKind::Sin, e); }
BivariateExpr cos(const BivariateExpr& e) { return un(NodeKind::Cos, e); }
BivariateExpr sqrt(const BivariateExpr& e) { return un(NodeKind::Sqrt, e); }
BivariateExpr compose(const Expr& outer, const BivariateExpr& inner) {
    return BivariateExpr::from_node(
        detail::composition(outer.node(), outer.domain(), inner.node()), inner.domain());
}

BivariatePartials partials(const BivariateExpr& e) {
    const BivariateExpr ex = e.dx();
    return {e.dt(), ex, ex.dx()};
}

}  // namespace fsv
