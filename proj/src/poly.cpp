#include "lieops/poly.hpp"

#include <algorithm>
#include <sstream>

namespace lieops {

PolySC PolySC::monomial(int sdeg, int tdeg, const Rational& c) {
    PolySC p;
    if (c != 0)
        p.terms_[{sdeg, tdeg}] = c;
    return p;
}

PolySC& PolySC::operator+=(const PolySC& o) {
    for (const auto& [k, v] : o.terms_) terms_[k] += v;
    prune();
    return *this;
}

PolySC& PolySC::operator-=(const PolySC& o) {
    for (const auto& [k, v] : o.terms_) terms_[k] -= v;
    prune();
    return *this;
}

PolySC PolySC::operator-() const {
    PolySC out;
    for (const auto& [k, v] : terms_) out.terms_[k] = -v;
    return out;
}

PolySC operator*(const PolySC& a, const PolySC& b) {
    PolySC out;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_)
            out.terms_[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    out.prune();
    return out;
}

Rational PolySC::evaluate(const Rational& s0, const Rational& t0) const {
    Rational acc = 0;
    for (const auto& [k, v] : terms_) {
        Rational term = v;
        for (int i = 0; i < k.first; ++i) term *= s0;
        for (int i = 0; i < k.second; ++i) term *= t0;
        acc += term;
    }
    return acc;
}

std::vector<Rational> PolySC::substitute_s(const Rational& s0) const {
    int deg = 0;
    for (const auto& [k, v] : terms_) deg = std::max(deg, k.second);
    std::vector<Rational> out(deg + 1, Rational(0));
    for (const auto& [k, v] : terms_) {
        Rational c = v;
        for (int i = 0; i < k.first; ++i) c *= s0;
        out[k.second] += c;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<Rational> PolySC::substitute_t(const Rational& t0) const {
    int deg = 0;
    for (const auto& [k, v] : terms_) deg = std::max(deg, k.first);
    std::vector<Rational> out(deg + 1, Rational(0));
    for (const auto& [k, v] : terms_) {
        Rational c = v;
        for (int i = 0; i < k.second; ++i) c *= t0;
        out[k.first] += c;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string PolySC::str() const {
    if (terms_.empty())
        return "0";
    // highest total degree first, then s-degree
    std::vector<std::pair<std::pair<int, int>, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db)
            return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : ts) {
        Rational av = v < 0 ? Rational(-v) : v;
        if (first) {
            if (v < 0)
                os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        std::string vars;
        if (k.first > 0)
            vars += "s" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) {
            if (!vars.empty())
                vars += "*";
            vars += "t" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        if (vars.empty())
            os << av;
        else if (av == 1)
            os << vars;
        else
            os << av << "*" << vars;
        first = false;
    }
    return os.str();
}

void PolySC::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

int poly_degree(const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0)
            return i;
    return -1;
}

bool poly_is_zero(const std::vector<Rational>& p) {
    return poly_degree(p) < 0;
}

namespace {

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    trim(a);
    int db = poly_degree(b);
    while (poly_degree(a) >= db) {
        int da = poly_degree(a);
        Rational f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        trim(a);
    }
    return a;
}

void make_monic(std::vector<Rational>& p) {
    int d = poly_degree(p);
    if (d < 0)
        return;
    Rational lead = p[d];
    for (auto& c : p) c /= lead;
}

}  // namespace

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!poly_is_zero(b)) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0)
        n = -n;
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

RationalRoots rational_roots(const std::vector<Rational>& p) {
    RationalRoots result;
    std::vector<Rational> q(p);
    trim(q);
    if (poly_degree(q) <= 0)
        return result;
    // strip t^k
    while (!q.empty() && q.front() == 0) {
        q.erase(q.begin());
        if (result.roots.empty() || result.roots.front() != 0)
            result.roots.insert(result.roots.begin(), Rational(0));
    }
    while (poly_degree(q) > 0) {
        // clear denominators -> integer polynomial
        Int lcm = 1;
        for (const auto& c : q) {
            Int den = boost::multiprecision::denominator(c);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::vector<Int> ip;
        for (const auto& c : q)
            ip.push_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
        Int a0 = ip.front(), an = ip.back();
        bool foundRoot = false;
        for (const auto& pnum : positive_divisors(a0)) {
            for (const auto& pden : positive_divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * pnum, pden);
                    Rational val = 0, pw = 1;
                    for (const auto& c : q) {
                        val += c * pw;
                        pw *= cand;
                    }
                    if (val == 0) {
                        if (std::find(result.roots.begin(), result.roots.end(), cand) == result.roots.end())
                            result.roots.push_back(cand);
                        // divide out (x - cand)
                        std::vector<Rational> quot(q.size() - 1, Rational(0));
                        Rational carry = q.back();
                        for (int i = static_cast<int>(q.size()) - 2; i >= 0; --i) {
                            quot[i] = carry;
                            carry = q[i] + carry * cand;
                        }
                        q = quot;
                        trim(q);
                        foundRoot = true;
                        break;
                    }
                }
                if (foundRoot)
                    break;
            }
            if (foundRoot)
                break;
        }
        if (!foundRoot) {
            result.nonRationalRemainder = true;
            break;
        }
    }
    std::sort(result.roots.begin(), result.roots.end());
    return result;
}

}  // namespace lieops
