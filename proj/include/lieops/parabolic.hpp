#pragma once

#include <vector>

#include "lieops/chevalley.hpp"

namespace lieops {

// Eigenspace decomposition of g under ad(H_gamma), eigenvalues -2..2.
struct Grading {
    const StructureTable* tab = nullptr;
    Root gamma;
    std::vector<Root> vplus;   // Delta(V+): positive roots with (beta,gamma) = 1, graded lex
    std::vector<Root> vminus;  // Delta(V-) = -Delta(V+), same order
    std::vector<Root> lroots;  // Delta(l): roots with (beta,gamma) = 0, both signs

    const RootSystem& rs() const { return tab->rs; }
    bool in_vplus(const Root& r) const;
    bool in_vminus(const Root& r) const;
    bool in_l(const Root& r) const;
    // eigenvalue of ad(H_gamma) on the root space, in {-2,...,2}
    int grade(const Root& r) const;

    // true iff all basis components of x lie in the grade-0 part
    bool element_in_l(const LieElement& x) const;
    bool element_in_vminus(const LieElement& x) const;
};

// Connected components of the Dynkin diagram restricted to the simple roots
// orthogonal to gamma.
struct DeletedDiagram {
    std::vector<std::vector<int>> components;  // simple-root indices, each sorted
};

// Subset of Delta(V-) spanning an irreducible l-submodule.
struct Submodule {
    std::vector<Root> roots;  // graded lex
    Weight highestWeight;     // relative to Delta+(l)
};

Grading grade(const StructureTable& tab);

// d(chi) evaluated on Z in l: gamma(Z_h) on the Cartan component, 0 on root
// vectors of l. Throws NotInLevi if Z has components outside grade 0.
Rational dchi(const Grading& grad, const LieElement& Z);

// beta' = gamma - beta, guaranteed in Delta(V+).
Root gamma_partner(const Grading& grad, const Root& beta);

// Coefficient of X_beta in [Z, X_alpha], for alpha, beta in Delta(V+), Z in l.
Rational m_coeff(const StructureTable& tab, const Grading& grad, const LieElement& Z, const Root& alpha,
                 const Root& beta);

DeletedDiagram deleted_components(const RootSystem& rs);

// Components of Delta(V-) under addition of Delta(l)-roots, each with its
// highest weight.
std::vector<Submodule> vminus_components(const Grading& grad);

}  // namespace lieops
