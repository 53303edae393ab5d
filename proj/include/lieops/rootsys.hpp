#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieops/errors.hpp"
#include "lieops/rational.hpp"

namespace lieops {

enum class Series { A, D, E };

// Simply-laced type label: A_n (n>=2), D_n (n>=4), E6/E7/E8.
struct AlgebraType {
    Series series;
    int rank;

    AlgebraType(Series s, int r);
    static AlgebraType parse(const std::string& label);  // e.g. "A2", "D4"
    std::string name() const;
};

// Integer coordinate vector over the simple-root basis.
using Root = std::vector<int>;
// Rational coordinate vector over the simple-root basis.
using Weight = std::vector<Rational>;

int height(const Root& r);
Root negate(const Root& r);
Root add(const Root& a, const Root& b);
Root sub(const Root& a, const Root& b);
Weight to_weight(const Root& r);

// Graded lexicographic: by height, then lexicographic on coords. The
// deterministic order used everywhere in this library.
bool root_less(const Root& a, const Root& b);

struct RootSystem {
    AlgebraType type;
    std::vector<Root> simples;
    std::vector<Root> positives;  // graded lex order
    std::vector<std::vector<int>> cartan;
    Root gamma;  // highest root
    Weight rho;  // (rho, alpha_i) = 1 for all simple alpha_i

    int rank() const { return type.rank; }
    bool is_positive_root(const Root& r) const;
    bool is_root(const Root& r) const;  // positive or negative
    // Index into `positives`; throws for non-roots.
    int positive_index(const Root& r) const;

    // Bilinear form from the Cartan matrix, (alpha_i, alpha_i) = 2.
    Rational inner(const Weight& v, const Weight& w) const;
    long inner_int(const Root& v, const Root& w) const;

  private:
    friend RootSystem build_root_system(AlgebraType);
    explicit RootSystem(AlgebraType t) : type(t) {}
    std::map<Root, int> posIndex_;
};

RootSystem build_root_system(AlgebraType type);
const Root& highest_root(const RootSystem& rs);

inline Rational inner(const RootSystem& rs, const Weight& v, const Weight& w) {
    return rs.inner(v, w);
}

std::string root_str(const Root& r);

}  // namespace lieops
