#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lieops/parabolic.hpp"
#include "lieops/poly.hpp"

namespace lieops {

// Shared immutable context: algebra data plus the PBW generator order for
// U(nbar). Generators are Delta(V-) in the module-wide root order, X_{-gamma}
// last.
struct Context {
    std::shared_ptr<const StructureTable> tab;
    Grading grad;
    std::vector<Root> generators;  // roots of Delta(nbar)
    std::map<Root, int> genIndex;

    static Context build(AlgebraType type, SignSeed seed = SignSeed::Plus);
    static Context from_table(std::shared_ptr<const StructureTable> tab);

    const RootSystem& rs() const { return tab->rs; }
    int num_generators() const { return static_cast<int>(generators.size()); }
    int central_index() const { return num_generators() - 1; }  // X_{-gamma}
};

// Exponent vector over the context's generators, always normal-ordered.
using PBWMonomial = std::vector<int>;

int monomial_degree(const PBWMonomial& m);

// Sparse map PBW monomial -> Q[s,t] coefficient.
struct VermaElement {
    std::map<PBWMonomial, PolySC> terms;

    static VermaElement zero() { return {}; }
    static VermaElement vacuum(const Context& ctx);  // 1 (x) 1

    bool is_zero() const { return terms.empty(); }
    VermaElement& operator+=(const VermaElement& o);
    VermaElement& operator-=(const VermaElement& o);
    VermaElement& operator*=(const PolySC& c);
    friend VermaElement operator+(VermaElement a, const VermaElement& b) { return a += b; }
    friend VermaElement operator-(VermaElement a, const VermaElement& b) { return a -= b; }
    friend VermaElement operator*(const PolySC& c, VermaElement v) { return v *= c; }
    bool operator==(const VermaElement& o) const { return terms == o.terms; }

    void prune();
};

// PBW normal form of the product of the given letters (roots of Delta(nbar)).
VermaElement normal_order(const Context& ctx, const std::vector<Root>& word);

// Left multiplication by a single PBW generator, straightened.
VermaElement left_mul_gen(const Context& ctx, int gen, const VermaElement& v);

// Left multiplication by an element of nbar (no Cartan or grade >= 0 parts).
VermaElement left_mul(const Context& ctx, const LieElement& x, const VermaElement& v);

// The left U(g)-action on U(nbar) (x) C_{s dchi}; s stays symbolic.
VermaElement act(const Context& ctx, const LieElement& Y, const VermaElement& v);

VermaElement specialize(const VermaElement& v, const Rational& s0, const Rational& t0);

// Canonical text rendering for golden-file comparison.
std::string render(const Context& ctx, const VermaElement& v);

}  // namespace lieops
