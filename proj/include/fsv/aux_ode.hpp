#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fsv/funcalg.hpp"

namespace fsv {

enum class AuxOdeKind { Linear2ndOrder, EmdenFowler, Abel2ndKind };

/// An auxiliary ODE whose solution enters a catalog entry.
///
/// First-order problems integrate y' = rhs(s, y, 0); second-order problems
/// integrate y'' = rhs(s, y, y').
struct AuxOdeSpec {
    AuxOdeKind kind = AuxOdeKind::Linear2ndOrder;
    std::string unknown;
    /// Independent variable, 'x' or 'u'.
    char var = 'x';
    std::string equation;
    int order = 2;
    std::function<double(double, double, double)> rhs;
    /// Integration interval; the catalog sets it to the instance window.
    double s0 = 0.0;
    double s1 = 1.0;
    double y0 = 0.0;
    double dy0 = 0.0;
    /// Closed-form solution of the shipped branch, when one exists.
    std::optional<Expr> analytic;
};

const char* to_string(AuxOdeKind kind);

}  // namespace fsv
