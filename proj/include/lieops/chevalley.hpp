#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieops/rootsys.hpp"

namespace lieops {

// Sparse exact-rational combination of the Chevalley basis
// {X_alpha (alpha in Delta), H_{alpha_i} (simple)}.
struct LieElement {
    std::map<Root, Rational> rootPart;  // root vector coefficients
    std::vector<Rational> cartanPart;   // over the simple coroots H_{alpha_i}

    LieElement() = default;
    explicit LieElement(int rank) : cartanPart(rank, Rational(0)) {}

    static LieElement X(const Root& alpha);
    // H_alpha for alpha = sum c_i alpha_i is sum c_i H_{alpha_i} (simply laced).
    static LieElement H(const Root& alpha);
    static LieElement H_simple(int i, int rank);

    bool is_zero() const;
    int rank() const { return static_cast<int>(cartanPart.size()); }

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
    bool operator==(const LieElement& o) const;

    // beta(H) for the Cartan component H of this element.
    Rational evaluate_on_cartan(const RootSystem& rs, const Root& beta) const;

    void prune();
};

// Seed for the free sign choices at the extraspecial pairs. All other
// structure constants are determined from these.
enum class SignSeed { Plus, Alternating };

// Complete bracket table: N_{alpha,beta} on all root pairs plus the (C1)-(C5)
// Cartan normalizations.
struct StructureTable {
    RootSystem rs;
    SignSeed seed;
    // defined exactly when alpha, beta, alpha+beta are all roots
    std::map<std::pair<Root, Root>, int> N;

    // 0 when alpha+beta is not a root.
    int structure_constant(const Root& alpha, const Root& beta) const;
};

StructureTable build_chevalley(const RootSystem& rs, SignSeed seed = SignSeed::Plus);

LieElement bracket(const StructureTable& tab, const LieElement& x, const LieElement& y);

// Normalized invariant form: B(X_a, X_{-a}) = 1, B(H_a, H_b) = (a, b).
Rational killing_form(const StructureTable& tab, const LieElement& x, const LieElement& y);

// Jacobi identity on all basis triples plus the sl(2)-triple relations.
// Throws InternalConsistencyError on failure. `maxTriples` caps the check for
// large algebras (0 = exhaustive).
void verify_structure_table(const StructureTable& tab, size_t maxTriples = 0);

// Text cache, one record per line: alpha_coords beta_coords N.
void write_sc_cache(const StructureTable& tab, const std::string& path);
// Loads and re-validates (Jacobi spot-check); corruption is a hard error.
StructureTable load_sc_cache(const RootSystem& rs, const std::string& path);

std::string lie_str(const LieElement& x);

}  // namespace lieops
