#pragma once

#include <array>
#include <string>
#include <vector>

#include "lieops/omega.hpp"

namespace lieops {

enum class Status { Exists, NotExists, ZeroOperator };

std::string status_str(Status s);

struct Solution {
    Rational s, t;
};

struct SpecialValueReport {
    std::string algebra;
    Submodule submodule;
    Rational sFromEq47;
    std::vector<Solution> solutions;
    int equationCount = 0;
    Status status = Status::NotExists;
    bool nonRationalRootDetected = false;
};

// Coefficients [c0, c1, c2] in s of the infinitesimal-character constraint
// ||varpi + (s-1)gamma + rho||^2 - ||s gamma + rho||^2. c2 vanishes
// identically.
std::array<Rational, 3> character_equation(const RootSystem& rs, const Weight& varpi);

// The unique solution s0 of the constraint; throws
// DegenerateCharacterEquation when the linear coefficient vanishes.
Rational infinitesimal_s(const RootSystem& rs, const Weight& varpi);

// For every Y = X_beta with beta in E and every alpha in Delta(V+) u {gamma},
// the PBW coefficients of act(X_alpha, omega3(Y)), each a polynomial in
// (s, t). Canonical (beta, alpha, monomial) order.
std::vector<PolySC> annihilation_system(const Context& ctx, const Submodule& E);

// Full pipeline: pin s by the character constraint, solve the annihilation
// system for t, verify candidates by specialization.
SpecialValueReport solve_special_values(const Context& ctx, const Submodule& E);

// Audit path: solve the annihilation system in both variables at once via
// pairwise resultants in t (every equation is linear in t here).
std::vector<Solution> solve_special_values_full(const Context& ctx, const Submodule& E);

// Matrix of act(Z, .) on the basis {omega3(X_beta)}_{beta in E} specialized
// at (s0, t0); throws NotInvariant if the span is not stable.
std::vector<std::vector<Rational>> l_action_matrix(const Context& ctx, const Submodule& E,
                                                   const Rational& s0, const Rational& t0,
                                                   const LieElement& Z);

struct Omega2Report {
    std::string algebra;
    std::vector<int> component;  // simple-root indices
    std::vector<Rational> sValues;
    int equationCount = 0;
    Status status = Status::NotExists;
    bool nonRationalRootDetected = false;
};

// n-annihilation check for span{omega2(Z) : Z in l(component)}, s symbolic;
// returns the solved special values of s.
Omega2Report omega2_invariance(const Context& ctx, const std::vector<int>& component);

}  // namespace lieops
