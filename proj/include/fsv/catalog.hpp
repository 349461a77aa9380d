#pragma once

// The solution-family catalog: each entry maps free functions and constants
// to a concrete PDE instance u_t = [a f u_x]_x + b g u_x + c h together with
// its implicit solution Z(u) = theta(x, t), Z = integral of zeta.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsv/aux_ode.hpp"
#include "fsv/funcalg.hpp"

namespace fsv {

/// Closed rectangle [x0, x1] x [t0, t1].
struct Window {
    double x0 = 0.0;
    double x1 = 1.0;
    double t0 = 0.0;
    double t1 = 1.0;
};

struct CoefficientSet {
    Expr a, b, c;  // functions of x
    Expr f, g, h;  // functions of u
};

struct ImplicitSolution {
    Expr zeta;
    /// Antiderivative of zeta anchored at u0 (value 0 there).
    Antiderivative Fzeta;
    /// Z(u) = Fzeta(u) + z_offset is the antiderivative that equals theta on
    /// solutions. The offset carries the closed form's integration constant.
    double z_offset = 0.0;
    BivariateExpr theta;
    Interval u_window;
    Window xt_window;

    double Z(double u) const { return Fzeta(u) + z_offset; }
};

enum class Variant { Plain, Exponential, ThetaWeighted, Power };

const char* to_string(Variant v);

/// Terms a splitting relation may reference. Theta and CTheta are the
/// x,t-side images of Z under theta = Z; they appear in relations of entries
/// built on equivalent equations.
enum class Term {
    Phi1, Phi2, Phi3, Phi4, Phi5, Theta, CTheta,
    Psi1, Psi2, Psi3, Psi4, Psi5, Z, FZ,
};

bool is_phi_side(Term t);
const char* to_string(Term t);

struct RelationTerm {
    double coef;
    Term term;
};

/// sum coef_i * term_i = 0, identically in (x, t) or in u.
struct SplittingRelation {
    std::string name;
    std::vector<RelationTerm> terms;

    bool phi_side() const { return is_phi_side(terms.front().term); }
};

enum class ConstraintDomain { U, X, XT };

struct ConstraintValue {
    double value;
    double scale;  // magnitude of the largest contributing term
};

struct Instance;

struct Constraint {
    std::string name;
    ConstraintDomain domain;
    /// Evaluated at u (U), x (X) or (x, t) (XT); the last argument is t.
    std::function<ConstraintValue(const Instance&, double, double)> eval;
};

/// Derivatives the verifiers use repeatedly; filled at instantiation.
struct InstanceDerivatives {
    BivariatePartials theta;
    Expr a_x;
    Expr zeta_u;
    Expr f_over_zeta_u;
    Expr f_u;
};

struct Instance {
    std::string id;     // e.g. "S02-"
    std::string entry;  // e.g. "S02"
    int branch = 0;     // +1, -1, or 0 when the entry has no branches
    CoefficientSet coeffs;
    ImplicitSolution sol;
    Variant variant = Variant::Plain;
    double variant_param = 0.0;  // lambda (exponential) or n (power)
    std::vector<SplittingRelation> relations;
    std::vector<Constraint> constraints;
    std::map<std::string, double> constants;
    std::map<std::string, std::string> functions;
    std::optional<AuxOdeSpec> aux_ode;
    std::vector<std::string> notes;
    InstanceDerivatives d;

    /// Stable hash of id, functions and constants.
    std::string hash() const;
};

/// User-supplied inputs of an instantiation.
struct Slots {
    std::map<std::string, Expr> functions;
    std::map<std::string, double> constants;
    /// Closed-form antiderivatives keyed by integral name. Each is checked
    /// against quadrature and dropped if it disagrees.
    std::map<std::string, Expr> closed_forms;
    std::optional<Interval> u_domain;
    std::optional<Interval> x_domain;
    std::optional<Window> xt_window;
};

struct SlotSpec {
    std::string name;
    char var;  // 'x' or 'u'
};

struct CatalogEntry {
    std::string id;
    std::string description;
    std::string formulas;
    std::vector<SlotSpec> free_slots;
    std::vector<std::pair<std::string, double>> constant_slots;
    bool has_aux_ode = false;
    bool has_branches = false;
    Variant variant = Variant::Plain;
    std::function<Instance(const Slots&, int branch)> build;
    std::function<Slots()> defaults;
};

struct EntrySummary {
    std::string id;
    std::string description;
    std::vector<std::string> free_slots;
    std::vector<std::string> constant_slots;
    bool has_aux_ode;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& id);
std::vector<EntrySummary> list_entries();
/// Entry ids plus the +/- sub-instances of branching entries.
std::vector<std::string> all_instance_ids();
/// Splits "S02-" into ("S02", -1); throws UnknownEntry.
std::pair<std::string, int> parse_instance_id(const std::string& id);

Instance instantiate(const std::string& id, const Slots& slots);
Instance default_instantiation(const std::string& id);
/// Recomputes inst.d after coeffs or sol were edited in place.
void refresh_derivatives(Instance& inst);
/// Default slots of an entry (the starting point for overrides).
Slots default_slots(const std::string& id);

struct ConstraintResidual {
    std::string name;
    double max_residual;
};

/// Evaluates every constraint and splitting relation at 50 sample points.
std::vector<ConstraintResidual> self_check(const Instance& inst);

/// One record per entry: id, formulas, slots, defaults.
std::string export_entries();

/// A named function of one variable with a closed-form antiderivative.
struct PoolFunction {
    std::string name;
    Expr expr;
    Expr primitive;
};

/// 1, u, exp(u), exp(-u), 1+u^2, cos(u)+2.
const std::vector<PoolFunction>& function_pool();
/// Throws Error for names outside the pool.
const PoolFunction& pool_function(const std::string& name);
/// Installs a pool function in a slot with its antiderivative "int_<slot>".
void set_pool_function(Slots& s, const std::string& slot, const std::string& name);

// Evaluation of the bilinear factors ---------------------------------------

struct PhiValues {
    std::array<double, 5> phi;
    double theta;
    double c;
};

struct PsiValues {
    std::array<double, 5> psi;
    double Z;
    double f;
};

/// Phi_1..Phi_5 of the given variant at (x, t).
PhiValues eval_phi(const Instance& inst, Variant variant, double param, double x, double t);
/// Psi_1..Psi_5 of the given variant at u.
PsiValues eval_psi(const Instance& inst, Variant variant, double param, double u);
double relation_value(const SplittingRelation& r, const PhiValues* phi, const PsiValues* psi,
                      double* scale);

}  // namespace fsv
