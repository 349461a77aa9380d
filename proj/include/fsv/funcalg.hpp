#pragma once

// Closed-form univariate and bivariate functions with exact symbolic
// derivatives and quadrature-backed antiderivatives.

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "fsv/errors.hpp"

namespace fsv {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Default absolute and relative tolerance of adaptive quadrature.
inline constexpr double kQuadratureTolerance = 1e-12;
/// Maximum bisection depth of adaptive quadrature.
inline constexpr int kQuadratureMaxDepth = 40;

/// Open real interval (lo, hi); infinite endpoints allowed.
struct Interval {
    double lo = -kInf;
    double hi = kInf;

    bool contains(double v) const { return v > lo && v < hi; }
    bool bounded() const { return lo > -kInf && hi < kInf; }
    Interval intersect(const Interval& o) const;
};

/// Open rectangle in the (x, t) plane.
struct Rect {
    Interval x;
    Interval t;

    bool contains(double xv, double tv) const { return x.contains(xv) && t.contains(tv); }
    Rect intersect(const Rect& o) const { return {x.intersect(o.x), t.intersect(o.t)}; }
};

namespace detail {
struct Node;
}
using NodePtr = std::shared_ptr<const detail::Node>;

enum class NodeKind : std::uint8_t {
    Constant,
    Variable,
    Sum,
    Difference,
    Product,
    Quotient,
    Power,
    Exp,
    Ln,
    Sin,
    Cos,
    Sqrt,
    Composition,
    Primitive,
};

/// Immutable univariate expression with a declared open domain.
class Expr {
public:
    Expr();
    Expr(double value);  // NOLINT(google-explicit-constructor): constants read naturally

    /// The independent variable.
    static Expr variable();
    static Expr from_node(NodePtr node, Interval domain);

    /// Evaluates at x; throws DomainError outside the declared domain.
    double operator()(double x) const;
    double eval_unchecked(double x) const;

    Expr derivative() const;

    /// Declares the domain. The expression is sampled on the interval and
    /// DomainError is thrown if any sample is not finite.
    Expr on(Interval domain) const;

    const Interval& domain() const { return domain_; }
    const NodePtr& node() const { return node_; }
    NodeKind kind() const;
    bool is_constant() const;
    double constant_value() const;

    std::string str(const std::string& var = "u") const;

private:
    NodePtr node_;
    Interval domain_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, double exponent);
Expr exp(const Expr& e);
Expr ln(const Expr& e);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr sqrt(const Expr& e);
/// outer(inner(x)); the result takes the domain of inner.
Expr compose(const Expr& outer, const Expr& inner);

double eval(const Expr& e, double x);
Expr differentiate(const Expr& e);

/// Step used by finite-difference validation stencils.
double fd_step(double x);
/// Second-order central difference of e at x with step fd_step(x).
double central_difference(const Expr& e, double x);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

/// Adaptive Simpson rule on [a, b] (b < a allowed) with combined absolute
/// and relative tolerance.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol = kQuadratureTolerance,
                                  int max_depth = kQuadratureMaxDepth);

/// F(u) = integral of the integrand from the anchor to u.
class Antiderivative {
public:
    Antiderivative();
    Antiderivative(Expr integrand, double anchor, std::optional<Expr> closed_form = std::nullopt,
                   double tolerance = kQuadratureTolerance);

    /// Throws QuadratureFailure when the quadrature does not converge.
    double operator()(double u) const;
    /// Error-value form of operator().
    QuadratureResult try_eval(double u) const;
    /// Quadrature value even when a closed form is present.
    QuadratureResult quadrature(double u) const;

    const Expr& integrand() const;
    double anchor() const;
    bool has_closed_form() const;
    const std::optional<Expr>& closed_form() const;
    double tolerance() const;

    /// Symbolic handle whose derivative is the integrand.
    Expr as_expr() const;

private:
    NodePtr node_;
    Expr integrand_;
    std::optional<Expr> closed_;
};

Antiderivative antiderivative(const Expr& e, double anchor,
                              std::optional<Expr> closed_form = std::nullopt);

/// Immutable expression in (x, t).
class BivariateExpr {
public:
    BivariateExpr();
    BivariateExpr(double value);  // NOLINT(google-explicit-constructor)

    static BivariateExpr x();
    static BivariateExpr t();
    /// Lifts a univariate expression as a function of x (resp. t).
    static BivariateExpr of_x(const Expr& e);
    static BivariateExpr of_t(const Expr& e);
    static BivariateExpr from_node(NodePtr node, Rect domain);

    double operator()(double x, double t) const;
    double eval_unchecked(double x, double t) const;

    BivariateExpr dx() const;
    BivariateExpr dt() const;
    BivariateExpr dxx() const;

    BivariateExpr on(Rect domain) const;
    const Rect& domain() const { return domain_; }
    const NodePtr& node() const { return node_; }
    std::string str() const;

private:
    NodePtr node_;
    Rect domain_;
};

BivariateExpr operator+(const BivariateExpr& a, const BivariateExpr& b);
BivariateExpr operator-(const BivariateExpr& a, const BivariateExpr& b);
BivariateExpr operator*(const BivariateExpr& a, const BivariateExpr& b);
BivariateExpr operator/(const BivariateExpr& a, const BivariateExpr& b);
BivariateExpr operator-(const BivariateExpr& a);
BivariateExpr pow(const BivariateExpr& base, double exponent);
BivariateExpr exp(const BivariateExpr& e);
BivariateExpr ln(const BivariateExpr& e);
BivariateExpr sin(const BivariateExpr& e);
BivariateExpr cos(const BivariateExpr& e);
BivariateExpr sqrt(const BivariateExpr& e);
BivariateExpr compose(const Expr& outer, const BivariateExpr& inner);

struct BivariatePartials {
    BivariateExpr t;
    BivariateExpr x;
    BivariateExpr xx;
};

BivariatePartials partials(const BivariateExpr& e);

}  // namespace fsv
