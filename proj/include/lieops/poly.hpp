#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieops/rational.hpp"

namespace lieops {

// Element of Q[s,t], the Verma coefficient ring. Sparse map
// (s-degree, t-degree) -> rational, no zero coefficients stored.
class PolySC {
  public:
    PolySC() = default;
    PolySC(const Rational& c) {  // NOLINT(google-explicit-constructor): constants embed
        if (c != 0)
            terms_[{0, 0}] = c;
    }
    PolySC(int c) : PolySC(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static PolySC s() { return monomial(1, 0, 1); }
    static PolySC t() { return monomial(0, 1, 1); }
    static PolySC monomial(int sdeg, int tdeg, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    PolySC& operator+=(const PolySC& o);
    PolySC& operator-=(const PolySC& o);
    PolySC operator-() const;
    friend PolySC operator+(PolySC a, const PolySC& b) { return a += b; }
    friend PolySC operator-(PolySC a, const PolySC& b) { return a -= b; }
    friend PolySC operator*(const PolySC& a, const PolySC& b);
    bool operator==(const PolySC& o) const { return terms_ == o.terms_; }

    Rational evaluate(const Rational& s0, const Rational& t0) const;
    // substitute s = s0, leaving a univariate polynomial in t
    // (coefficient vector, index = t-degree)
    std::vector<Rational> substitute_s(const Rational& s0) const;
    // substitute t = t0, leaving a univariate polynomial in s
    std::vector<Rational> substitute_t(const Rational& t0) const;

    std::string str() const;  // canonical rendering, e.g. "t - 3/4"

  private:
    std::map<std::pair<int, int>, Rational> terms_;
    void prune();
};

// --- univariate helpers over Q, coefficient index = degree ---

int poly_degree(const std::vector<Rational>& p);  // -1 for the zero polynomial
bool poly_is_zero(const std::vector<Rational>& p);
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b);

struct RationalRoots {
    std::vector<Rational> roots;     // distinct rational roots
    bool nonRationalRemainder = false;  // a nonconstant factor without rational roots remains
};

// All rational roots via the rational-root theorem (degrees here are small).
RationalRoots rational_roots(const std::vector<Rational>& p);

}  // namespace lieops
