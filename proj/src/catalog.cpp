#include "fsv/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "catalog_internal.hpp"
#include "fsv/transform.hpp"

namespace fsv {

const char* to_string(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Exponential: return "exponential";
        case Variant::ThetaWeighted: return "theta_weighted";
        case Variant::Power: return "power";
    }
    return "?";
}

const char* to_string(AuxOdeKind kind) {
    switch (kind) {
        case AuxOdeKind::Linear2ndOrder: return "linear_second_order";
        case AuxOdeKind::EmdenFowler: return "emden_fowler";
        case AuxOdeKind::Abel2ndKind: return "abel_second_kind";
    }
    return "?";
}

bool is_phi_side(Term t) { return static_cast<int>(t) <= static_cast<int>(Term::CTheta); }

const char* to_string(Term t) {
    static const char* names[] = {"Phi1", "Phi2", "Phi3", "Phi4", "Phi5", "theta", "c*theta",
                                  "Psi1", "Psi2", "Psi3", "Psi4", "Psi5", "Z",     "f*Z"};
    return names[static_cast<int>(t)];
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string Instance::hash() const {
    std::string key = id;
    for (const auto& [k, v] : functions) key += "|" + k + "=" + v;
    for (const auto& [k, v] : constants) key += "|" + k + "=" + fmt(v);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Bilinear factors -----------------------------------------------------------

PhiValues eval_phi(const Instance& inst, Variant variant, double param, double x, double t) {
    const auto& d = inst.d.theta;
    const double th = inst.sol.theta(x, t);
    const double tt = d.t(x, t);
    const double tx = d.x(x, t);
    const double txx = d.xx(x, t);
    const double a = inst.coeffs.a(x);
    const double ax = inst.d.a_x(x);
    const double b = inst.coeffs.b(x);
    const double c = inst.coeffs.c(x);
    PhiValues p{};
    p.theta = th;
    p.c = c;
    p.phi = {-tt, ax * tx + a * txx, a * tx * tx, b * tx, c};
    switch (variant) {
        case Variant::Plain: break;
        case Variant::Exponential: p.phi[0] = -std::exp(param * th) * tt; break;
        case Variant::ThetaWeighted: p.phi[4] = c * th; break;
        case Variant::Power:
            p.phi[0] = -std::pow(th, param) * tt;
            p.phi[4] = c * th;
            break;
    }
    return p;
}

PsiValues eval_psi(const Instance& inst, Variant variant, double param, double u) {
    const double f = inst.coeffs.f(u);
    const double g = inst.coeffs.g(u);
    const double h = inst.coeffs.h(u);
    const double z = inst.sol.zeta(u);
    const double Z = inst.sol.Z(u);
    PsiValues p{};
    p.Z = Z;
    p.f = f;
    p.psi = {1.0, f, inst.d.f_over_zeta_u(u), g, h * z};
    switch (variant) {
        case Variant::Plain: break;
        case Variant::Exponential: p.psi[0] = std::exp(-param * Z); break;
        case Variant::ThetaWeighted: p.psi[4] = h * z / Z; break;
        case Variant::Power:
            p.psi[0] = std::pow(Z, -param);
            p.psi[4] = h * z / Z;
            break;
    }
    return p;
}

double relation_value(const SplittingRelation& r, const PhiValues* phi, const PsiValues* psi,
                      double* scale) {
    double sum = 0.0;
    double mag = 0.0;
    for (const RelationTerm& term : r.terms) {
        double v = 0.0;
        const int k = static_cast<int>(term.term);
        if (is_phi_side(term.term)) {
            if (term.term == Term::Theta) v = phi->theta;
            else if (term.term == Term::CTheta) v = phi->c * phi->theta;
            else v = phi->phi[static_cast<std::size_t>(k)];
        } else {
            if (term.term == Term::Z) v = psi->Z;
            else if (term.term == Term::FZ) v = psi->f * psi->Z;
            else v = psi->psi[static_cast<std::size_t>(k - static_cast<int>(Term::Psi1))];
        }
        sum += term.coef * v;
        mag += std::abs(term.coef * v);
    }
    if (scale) *scale = mag;
    return sum;
}

// Builder --------------------------------------------------------------------

namespace detail {

namespace {

double pick_anchor(const Interval& d) {
    if (d.contains(0.0)) return 0.0;
    if (d.contains(1.0)) return 1.0;
    if (d.bounded()) return 0.5 * (d.lo + d.hi);
    return d.lo > -kInf ? d.lo + 1.0 : d.hi - 1.0;
}

// Finite probe points of a possibly unbounded domain around an anchor.
std::vector<double> probe_points(const Interval& d, double anchor, double reach, int n) {
    const double lo = std::max(d.lo, anchor - reach);
    const double hi = std::min(d.hi, anchor + reach);
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * (i + 0.5) / n);
    return v;
}

}  // namespace

Builder::Builder(const CatalogEntry& entry, const Slots& slots, int branch,
                 const EntryWindows& windows)
    : entry_(entry),
      slots_(slots),
      branch_(branch),
      xdom_(slots.x_domain.value_or(windows.x_domain)),
      udom_(slots.u_domain.value_or(windows.u_domain)),
      window_(slots.xt_window.value_or(windows.xt)) {
    if (!(window_.x0 < window_.x1) || !(window_.t0 < window_.t1)) {
        throw WindowError("empty xt window");
    }
    if (!(xdom_.lo < window_.x0 && window_.x1 < xdom_.hi)) {
        throw WindowError("xt window leaves the x domain");
    }
    x_anchor_ = pick_anchor(xdom_);
    u_anchor_ = pick_anchor(udom_);
    inst_.entry = entry.id;
    inst_.branch = branch;
    inst_.id = entry.id + (branch > 0 ? "+" : branch < 0 ? "-" : "");
    for (const SlotSpec& s : entry.free_slots) {
        auto it = slots.functions.find(s.name);
        if (it == slots.functions.end()) throw MissingSlot("function slot " + s.name);
        inst_.functions[s.name] = it->second.str(std::string(1, s.var));
    }
    for (const auto& [name, value] : entry.constant_slots) {
        (void)value;
        auto it = slots.constants.find(name);
        if (it == slots.constants.end()) throw MissingSlot("constant " + name);
        inst_.constants[name] = it->second;
    }
}

Expr Builder::X() const { return Expr::variable().on(xdom_); }
Expr Builder::U() const { return Expr::variable().on(udom_); }

Expr Builder::fn(const std::string& name) {
    auto it = slots_.functions.find(name);
    if (it == slots_.functions.end()) throw MissingSlot("function slot " + name);
    char var = 'u';
    for (const SlotSpec& s : entry_.free_slots) {
        if (s.name == name) var = s.var;
    }
    const Expr& e = it->second;
    if (var == 'x') {
        xdom_ = xdom_.intersect(e.domain());
        if (!(xdom_.lo < window_.x0 && window_.x1 < xdom_.hi)) {
            throw WindowError("slot " + name + " is undefined on the x window");
        }
    } else {
        udom_ = udom_.intersect(e.domain());
        if (!(udom_.lo < udom_.hi)) throw WindowError("slot " + name + " leaves no u domain");
        if (!udom_.contains(u_anchor_)) u_anchor_ = pick_anchor(udom_);
    }
    return e;
}

double Builder::k(const std::string& name) {
    auto it = slots_.constants.find(name);
    if (it == slots_.constants.end()) throw MissingSlot("constant " + name);
    return it->second;
}

double Builder::nonzero(const std::string& name) {
    const double v = k(name);
    if (v == 0.0) throw WindowError("constant " + name + " appears in a denominator and is 0");
    return v;
}

Builder::Primitive Builder::primitive(const std::string& key, const Expr& integrand, double anchor,
                                      bool is_x) {
    const Interval dom = is_x ? xdom_ : udom_;
    const Expr f = Expr::from_node(integrand.node(), integrand.domain().intersect(dom));
    std::optional<Expr> closed;
    if (f.is_constant()) {
        closed = Expr(f.constant_value()) * (is_x ? X() : U());
    } else {
        // A branch-specific closed form takes precedence.
        auto it = slots_.closed_forms.end();
        if (branch_ != 0) it = slots_.closed_forms.find(key + (branch_ > 0 ? "+" : "-"));
        if (it == slots_.closed_forms.end()) it = slots_.closed_forms.find(key);
        if (it != slots_.closed_forms.end()) closed = it->second;
    }
    if (closed && !f.is_constant()) {
        // Accept a closed form only if it matches quadrature.
        const Antiderivative q(f, anchor);
        std::vector<double> pts;
        if (is_x) {
            for (int i = 0; i < 5; ++i) pts.push_back(window_.x0 + (window_.x1 - window_.x0) * i / 4.0);
        } else {
            pts = probe_points(f.domain(), anchor, 2.0, 5);
        }
        bool ok = true;
        try {
            const double c0 = (*closed)(anchor);
            for (double p : pts) {
                const QuadratureResult r = q.quadrature(p);
                const double cv = (*closed)(p) - c0;
                if (!r.converged || !(std::abs(cv - r.value) <= 1e-10 * std::max(1.0, std::abs(r.value)))) {
                    ok = false;
                }
            }
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) {
            inst_.notes.push_back("closed form for " + key + " disagrees with quadrature; dropped");
            closed.reset();
        }
    }
    const double offset = closed ? (*closed)(anchor) : 0.0;
    return {Antiderivative(f, anchor, closed), offset};
}

Expr Builder::integral(const std::string& key, const Expr& integrand, double anchor, bool is_x) {
    const Primitive p = primitive(key, integrand, anchor, is_x);
    return p.A.as_expr() + Expr(p.offset);
}

Expr Builder::int_x(const std::string& key, const Expr& integrand) {
    return integral(key, integrand, x_anchor_, true);
}

Expr Builder::int_u(const std::string& key, const Expr& integrand) {
    return integral(key, integrand, u_anchor_, false);
}

void Builder::set_coefficients(Expr a, Expr b, Expr c, Expr f, Expr g, Expr h) {
    inst_.coeffs = {std::move(a), std::move(b), std::move(c), std::move(f), std::move(g), std::move(h)};
    have_coeffs_ = true;
}

void Builder::set_zeta(const Expr& zeta, const std::string& key) {
    inst_.sol.zeta = Expr::from_node(zeta.node(), zeta.domain().intersect(udom_));
    const Primitive p = primitive(key, inst_.sol.zeta, u_anchor_, false);
    inst_.sol.Fzeta = p.A;
    inst_.sol.z_offset = p.offset;
    have_zeta_ = true;
}

Expr Builder::Z() const { return inst_.sol.Fzeta.as_expr() + Expr(inst_.sol.z_offset); }

void Builder::set_theta(const BivariateExpr& theta) {
    inst_.sol.theta = theta;
    have_theta_ = true;
}

void Builder::set_variant(Variant v, double param) {
    inst_.variant = v;
    inst_.variant_param = param;
}

void Builder::relation(std::initializer_list<RelationTerm> terms) {
    SplittingRelation r;
    for (const RelationTerm& t : terms) {
        if (t.coef != 0.0) r.terms.push_back(t);
    }
    if (r.terms.empty()) return;
    r.name = relation_name(r.terms);
    inst_.relations.push_back(std::move(r));
}

void Builder::u_identity(const std::string& name, const Expr& lhs, const Expr& rhs) {
    inst_.constraints.push_back({name, ConstraintDomain::U, [lhs, rhs](const Instance&, double u, double) {
                                     const double l = lhs(u);
                                     const double r = rhs(u);
                                     return ConstraintValue{l - r, std::max(std::abs(l), std::abs(r))};
                                 }});
}

void Builder::x_identity(const std::string& name, const Expr& lhs, const Expr& rhs) {
    inst_.constraints.push_back({name, ConstraintDomain::X, [lhs, rhs](const Instance&, double x, double) {
                                     const double l = lhs(x);
                                     const double r = rhs(x);
                                     return ConstraintValue{l - r, std::max(std::abs(l), std::abs(r))};
                                 }});
}

namespace {

// Solves Z(u) = target by walking outward from the anchor until the target
// is bracketed, then refining the bracket.
std::optional<double> solve_for_window(const std::function<double(double)>& Z, const Interval& dom,
                                       double anchor, double zeta_sign, double target) {
    const auto value = [&](double u) -> std::optional<double> {
        try {
            const double v = Z(u);
            if (std::isfinite(v)) return v;
        } catch (const Error&) {
        }
        return std::nullopt;
    };
    double u = anchor;
    std::optional<double> zu = value(u);
    if (!zu) return std::nullopt;
    if (*zu == target) return u;
    const double dir = (target > *zu ? 1.0 : -1.0) * zeta_sign;
    const double edge = dir > 0 ? dom.hi : dom.lo;
    double step = 0.25;
    for (int iter = 0; iter < 400; ++iter) {
        double cand = u + dir * step;
        const bool past_edge = dir > 0 ? cand >= edge : cand <= edge;
        if (past_edge) {
            if (!std::isfinite(edge)) return std::nullopt;
            cand = u + 0.5 * (edge - u);
        }
        if (std::abs(cand - anchor) > 1e4 || cand == u) return std::nullopt;
        const std::optional<double> zc = value(cand);
        if (!zc) {
            // Undefined beyond this point: approach more cautiously.
            step *= 0.5;
            if (step < 1e-14) return std::nullopt;
            continue;
        }
        if ((*zc - target) * (*zu - target) <= 0.0) {
            const auto g = [&](double s) { return Z(s) - target; };
            std::uintmax_t it = 200;
            const double lo = std::min(u, cand);
            const double hi = std::max(u, cand);
            const double glo = lo == u ? *zu - target : *zc - target;
            const double ghi = hi == u ? *zu - target : *zc - target;
            if (glo == 0.0) return lo;
            if (ghi == 0.0) return hi;
            const auto r = boost::math::tools::toms748_solve(
                g, lo, hi, glo, ghi, boost::math::tools::eps_tolerance<double>(), it);
            return 0.5 * (r.first + r.second);
        }
        u = cand;
        zu = zc;
        if (!past_edge) step *= 2.0;
    }
    return std::nullopt;
}

}  // namespace

Instance Builder::finish() {
    if (!have_coeffs_ || !have_zeta_ || !have_theta_) {
        throw Error("entry " + entry_.id + " did not define all of its parts");
    }
    Instance& in = inst_;
    in.sol.xt_window = window_;
    const Window& w = window_;

    // Range of theta over the window.
    double tmin = kInf;
    double tmax = -kInf;
    try {
        for (double x : uniform_nodes(w.x0, w.x1, 41)) {
            for (double t : uniform_nodes(w.t0, w.t1, 41)) {
                const double v = in.sol.theta(x, t);
                if (!std::isfinite(v)) throw WindowError("theta is not finite on the xt window");
                tmin = std::min(tmin, v);
                tmax = std::max(tmax, v);
            }
        }
    } catch (const DomainError& e) {
        throw WindowError(std::string("theta undefined on the xt window: ") + e.what());
    } catch (const QuadratureFailure& e) {
        throw WindowError(std::string("theta undefined on the xt window: ") + e.what());
    }
    const double margin = 0.1 * (tmax - tmin) + 1e-6 * std::max({1.0, std::abs(tmin), std::abs(tmax)});

    double zsign = 0.0;
    try {
        zsign = in.sol.zeta(u_anchor_) > 0 ? 1.0 : -1.0;
        if (in.sol.zeta(u_anchor_) == 0.0) throw WindowError("zeta vanishes at the u anchor");
    } catch (const DomainError& e) {
        throw WindowError(std::string("zeta undefined at the u anchor: ") + e.what());
    }
    const ImplicitSolution& sol = in.sol;
    const auto Zf = [&sol](double u) { return sol.Z(u); };
    const Interval zdom = udom_.intersect(sol.zeta.domain());
    const auto u1 = solve_for_window(Zf, zdom, u_anchor_, zsign, tmin - margin);
    const auto u2 = solve_for_window(Zf, zdom, u_anchor_, zsign, tmax + margin);
    if (!u1 || !u2) {
        throw WindowError("theta range [" + short_fmt(tmin) + ", " + short_fmt(tmax) +
                          "] is not inside Z(u domain) with a 10% margin");
    }
    in.sol.u_window = {std::min(*u1, *u2), std::max(*u1, *u2)};
    try {
        (void)MonotoneMap::from_solution(in.sol);
    } catch (const NonMonotone& e) {
        throw WindowError(std::string("zeta changes sign on the fitted u window: ") + e.what());
    }

    // Coefficients must be finite, and a, f nonzero, on the windows.
    try {
        for (double x : uniform_nodes(w.x0, w.x1, 41)) {
            const double a = in.coeffs.a(x);
            const double b = in.coeffs.b(x);
            const double c = in.coeffs.c(x);
            if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
                throw WindowError("a coefficient of x is not finite at x = " + short_fmt(x));
            }
            if (a == 0.0) throw WindowError("a vanishes at x = " + short_fmt(x));
        }
        for (double u : uniform_nodes(in.sol.u_window.lo, in.sol.u_window.hi, 41)) {
            const double f = in.coeffs.f(u);
            const double g = in.coeffs.g(u);
            const double h = in.coeffs.h(u);
            if (!std::isfinite(f) || !std::isfinite(g) || !std::isfinite(h)) {
                throw WindowError("a coefficient of u is not finite at u = " + short_fmt(u));
            }
            if (f == 0.0) throw WindowError("f vanishes at u = " + short_fmt(u));
        }
    } catch (const DomainError& e) {
        throw WindowError(std::string("coefficient undefined on the windows: ") + e.what());
    }

    if (in.variant == Variant::ThetaWeighted || in.variant == Variant::Power) {
        const double z0 = in.sol.Z(in.sol.u_window.lo);
        const double z1 = in.sol.Z(in.sol.u_window.hi);
        if (z0 * z1 <= 0.0) throw WindowError("Z vanishes on the u window of a Z-weighted variant");
    }
    if (in.aux_ode) {
        AuxOdeSpec& a = *in.aux_ode;
        if (a.var == 'x') {
            a.s0 = w.x0;
            a.s1 = w.x1;
        } else {
            a.s0 = in.sol.u_window.lo;
            a.s1 = in.sol.u_window.hi;
        }
        if (a.analytic) {
            a.y0 = (*a.analytic)(a.s0);
            a.dy0 = a.analytic->derivative()(a.s0);
        }
    }

    refresh_derivatives(in);
    return in;
}

std::string relation_name(const std::vector<RelationTerm>& terms) {
    std::string s;
    bool first = true;
    for (const RelationTerm& t : terms) {
        const double c = t.coef;
        const double m = std::abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (m != 1.0) s += short_fmt(m) + "*";
        s += to_string(t.term);
        first = false;
    }
    return s + " = 0";
}

CatalogEntry make_entry(std::string id, std::string description, std::string formulas,
                        std::vector<SlotSpec> free_slots,
                        std::vector<std::pair<std::string, double>> constants, Variant variant,
                        bool branches, bool aux, std::function<void(Builder&)> body,
                        std::function<void(Slots&)> fill_defaults, EntryWindows windows) {
    CatalogEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.formulas = std::move(formulas);
    e.free_slots = std::move(free_slots);
    e.constant_slots = std::move(constants);
    e.variant = variant;
    e.has_branches = branches;
    e.has_aux_ode = aux;
    const std::string eid = e.id;
    e.build = [eid, body, windows](const Slots& s, int branch) {
        Builder b(find_entry(eid), s, branch, windows);
        body(b);
        return b.finish();
    };
    const auto consts = e.constant_slots;
    e.defaults = [consts, fill_defaults]() {
        Slots s;
        for (const auto& [k, v] : consts) s.constants[k] = v;
        fill_defaults(s);
        return s;
    };
    return e;
}

}  // namespace detail

// Registry -------------------------------------------------------------------

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        detail::append_entries_a(v);
        detail::append_entries_b(v);
        return v;
    }();
    return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
    for (const CatalogEntry& e : catalog()) {
        if (e.id == id) return e;
    }
    throw UnknownEntry("no catalog entry " + id);
}

std::vector<EntrySummary> list_entries() {
    std::vector<EntrySummary> out;
    for (const CatalogEntry& e : catalog()) {
        EntrySummary s;
        s.id = e.id;
        s.description = e.description;
        for (const SlotSpec& f : e.free_slots) s.free_slots.push_back(f.name + "(" + f.var + ")");
        for (const auto& [k, v] : e.constant_slots) {
            (void)v;
            s.constant_slots.push_back(k);
        }
        s.has_aux_ode = e.has_aux_ode;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> all_instance_ids() {
    std::vector<std::string> ids;
    for (const CatalogEntry& e : catalog()) {
        if (e.has_branches) {
            ids.push_back(e.id + "+");
            ids.push_back(e.id + "-");
        } else {
            ids.push_back(e.id);
        }
    }
    return ids;
}

std::pair<std::string, int> parse_instance_id(const std::string& id) {
    std::string base = id;
    int branch = 0;
    if (!base.empty() && (base.back() == '+' || base.back() == '-')) {
        branch = base.back() == '+' ? 1 : -1;
        base.pop_back();
    }
    // Accept S1 as well as S01.
    if (base.size() == 2 && (base[0] == 'S' || base[0] == 's') && std::isdigit(static_cast<unsigned char>(base[1]))) {
        base = std::string("S0") + base[1];
    }
    if (!base.empty() && base[0] == 's') base[0] = 'S';
    const CatalogEntry& e = find_entry(base);
    if (branch != 0 && !e.has_branches) throw UnknownEntry(id + ": entry has no +/- branches");
    if (branch == 0 && e.has_branches) branch = 1;
    return {base, branch};
}

void refresh_derivatives(Instance& in) {
    in.d.theta = partials(in.sol.theta);
    in.d.a_x = in.coeffs.a.derivative();
    in.d.zeta_u = in.sol.zeta.derivative();
    in.d.f_over_zeta_u = (in.coeffs.f / in.sol.zeta).derivative();
    in.d.f_u = in.coeffs.f.derivative();
}

Instance instantiate(const std::string& id, const Slots& slots) {
    const auto [base, branch] = parse_instance_id(id);
    return find_entry(base).build(slots, branch);
}

Slots default_slots(const std::string& id) { return find_entry(parse_instance_id(id).first).defaults(); }

Instance default_instantiation(const std::string& id) { return instantiate(id, default_slots(id)); }

std::vector<ConstraintResidual> self_check(const Instance& inst) {
    constexpr int kSamples = 50;
    const Window& w = inst.sol.xt_window;
    const Interval& uw = inst.sol.u_window;
    std::vector<double> us;
    std::vector<double> xs;
    std::vector<std::pair<double, double>> xts;
    const double golden = 0.6180339887498949;
    for (int i = 0; i < kSamples; ++i) {
        const double s = (i + 0.5) / kSamples;
        us.push_back(uw.lo + (uw.hi - uw.lo) * s);
        xs.push_back(w.x0 + (w.x1 - w.x0) * s);
        const double r = std::fmod(0.5 + i * golden, 1.0);
        xts.emplace_back(w.x0 + (w.x1 - w.x0) * s, w.t0 + (w.t1 - w.t0) * r);
    }
    std::vector<ConstraintResidual> out;
    for (const Constraint& c : inst.constraints) {
        double worst = 0.0;
        const auto take = [&](ConstraintValue v) {
            worst = std::max(worst, std::abs(v.value) / std::max(1.0, v.scale));
            if (!std::isfinite(v.value)) worst = kInf;
        };
        switch (c.domain) {
            case ConstraintDomain::U:
                for (double u : us) take(c.eval(inst, u, 0.0));
                break;
            case ConstraintDomain::X:
                for (double x : xs) take(c.eval(inst, x, 0.0));
                break;
            case ConstraintDomain::XT:
                for (auto [x, t] : xts) take(c.eval(inst, x, t));
                break;
        }
        out.push_back({c.name, worst});
    }
    for (const SplittingRelation& r : inst.relations) {
        double worst = 0.0;
        if (r.phi_side()) {
            for (auto [x, t] : xts) {
                const PhiValues p = eval_phi(inst, inst.variant, inst.variant_param, x, t);
                double scale = 0.0;
                const double v = relation_value(r, &p, nullptr, &scale);
                worst = std::max(worst, std::abs(v) / std::max(1.0, scale));
            }
        } else {
            for (double u : us) {
                const PsiValues p = eval_psi(inst, inst.variant, inst.variant_param, u);
                double scale = 0.0;
                const double v = relation_value(r, nullptr, &p, &scale);
                worst = std::max(worst, std::abs(v) / std::max(1.0, scale));
            }
        }
        out.push_back({"relation " + r.name, worst});
    }
    return out;
}

std::string export_entries() {
    std::ostringstream os;
    for (const CatalogEntry& e : catalog()) {
        os << "[" << e.id << "]\n";
        os << "description = " << e.description << "\n";
        os << "variant = " << to_string(e.variant) << "\n";
        os << "formulas = " << e.formulas << "\n";
        os << "free_slots =";
        for (const SlotSpec& s : e.free_slots) os << " " << s.name << "(" << s.var << ")";
        os << "\nconstants =";
        for (const auto& [k, v] : e.constant_slots) os << " " << k << "=" << short_fmt(v);
        os << "\nbranches = " << (e.has_branches ? "+,-" : "none") << "\n";
        os << "aux_ode = " << (e.has_aux_ode ? "yes" : "no") << "\n";
        const Slots d = e.defaults();
        os << "defaults =";
        for (const SlotSpec& s : e.free_slots) {
            auto it = d.functions.find(s.name);
            if (it != d.functions.end()) {
                os << " " << s.name << "(" << s.var << ")=" << it->second.str(std::string(1, s.var)) << ";";
            }
        }
        os << "\n\n";
    }
    return os.str();
}

// Function pool --------------------------------------------------------------

const std::vector<PoolFunction>& function_pool() {
    static const std::vector<PoolFunction> pool = [] {
        const Expr u = Expr::variable();
        std::vector<PoolFunction> v;
        v.push_back({"one", Expr(1.0), u});
        v.push_back({"linear", u, 0.5 * pow(u, 2.0)});
        v.push_back({"exp", exp(u), exp(u)});
        v.push_back({"exp_neg", exp(-u), -exp(-u)});
        v.push_back({"quadratic_plus_one", 1.0 + pow(u, 2.0), u + pow(u, 3.0) / 3.0});
        v.push_back({"cos_plus_two", cos(u) + 2.0, sin(u) + 2.0 * u});
        return v;
    }();
    return pool;
}

const PoolFunction& pool_function(const std::string& name) {
    for (const PoolFunction& p : function_pool()) {
        if (p.name == name) return p;
    }
    throw Error("unknown pool function " + name);
}

void set_pool_function(Slots& s, const std::string& slot, const std::string& name) {
    const PoolFunction& p = pool_function(name);
    s.functions[slot] = p.expr;
    s.closed_forms["int_" + slot] = p.primitive;
}

}  // namespace fsv
