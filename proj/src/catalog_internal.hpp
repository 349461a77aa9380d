#pragma once

// Helpers shared by the catalog entry builders.

#include <initializer_list>
#include <string>
#include <vector>

#include "fsv/catalog.hpp"

namespace fsv::detail {

/// Default windows of an entry; slots may override them.
struct EntryWindows {
    Interval x_domain;
    Interval u_domain;
    Window xt;
};

/// Accumulates one instance while an entry's formulas are evaluated.
class Builder {
public:
    Builder(const CatalogEntry& entry, const Slots& slots, int branch, const EntryWindows& windows);

    /// The independent variables on their domains.
    Expr X() const;
    Expr U() const;
    BivariateExpr T() const { return BivariateExpr::t(); }
    static BivariateExpr bx(const Expr& e) { return BivariateExpr::of_x(e); }

    /// A free function; throws MissingSlot.
    Expr fn(const std::string& name);
    /// A constant; throws MissingSlot.
    double k(const std::string& name);
    /// A constant that appears in a denominator; throws WindowError when 0.
    double nonzero(const std::string& name);
    int branch() const { return branch_; }
    /// +1 or -1 for branching entries.
    double sign() const { return branch_ < 0 ? -1.0 : 1.0; }

    /// Antiderivative in x (resp. u) of the integrand. When a closed form is
    /// registered under key and agrees with quadrature it supplies the values;
    /// the result then equals the closed form itself.
    Expr int_x(const std::string& key, const Expr& integrand);
    Expr int_u(const std::string& key, const Expr& integrand);

    void set_coefficients(Expr a, Expr b, Expr c, Expr f, Expr g, Expr h);
    /// Registers zeta and builds Z = integral of zeta.
    void set_zeta(const Expr& zeta, const std::string& key = "Z");
    /// Z as an expression (valid once set_zeta has run).
    Expr Z() const;
    void set_theta(const BivariateExpr& theta);
    void set_variant(Variant v, double param = 0.0);

    void relation(std::initializer_list<RelationTerm> terms);
    /// lhs(u) = rhs(u) on the u window.
    void u_identity(const std::string& name, const Expr& lhs, const Expr& rhs);
    /// lhs(x) = rhs(x) on the x window.
    void x_identity(const std::string& name, const Expr& lhs, const Expr& rhs);
    void constraint(Constraint c) { inst_.constraints.push_back(std::move(c)); }
    void aux(AuxOdeSpec spec) { inst_.aux_ode = std::move(spec); }
    void note(const std::string& text) { inst_.notes.push_back(text); }

    const Window& window() const { return window_; }
    double u_anchor() const { return u_anchor_; }
    double x_anchor() const { return x_anchor_; }

    /// Fits the u window, certifies monotonicity and returns the instance.
    Instance finish();

private:
    struct Primitive {
        Antiderivative A;
        double offset;
    };
    Primitive primitive(const std::string& key, const Expr& integrand, double anchor, bool is_x);
    Expr integral(const std::string& key, const Expr& integrand, double anchor, bool is_x);

    const CatalogEntry& entry_;
    const Slots& slots_;
    int branch_;
    Interval xdom_;
    Interval udom_;
    Window window_;
    double x_anchor_;
    double u_anchor_;
    Instance inst_;
    bool have_coeffs_ = false;
    bool have_zeta_ = false;
    bool have_theta_ = false;
};

/// Short display of constant-coefficient relation names.
std::string relation_name(const std::vector<RelationTerm>& terms);

// Entry tables, one per source file.
void append_entries_a(std::vector<CatalogEntry>& out);
void append_entries_b(std::vector<CatalogEntry>& out);

/// Builds a CatalogEntry from its parts.
CatalogEntry make_entry(std::string id, std::string description, std::string formulas,
                        std::vector<SlotSpec> free_slots,
                        std::vector<std::pair<std::string, double>> constants, Variant variant,
                        bool branches, bool aux,
                        std::function<void(Builder&)> body,
                        std::function<void(Slots&)> fill_defaults, EntryWindows windows);

}  // namespace fsv::detail
