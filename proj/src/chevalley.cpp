#include "lieops/chevalley.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace lieops {

LieElement LieElement::X(const Root& alpha) {
    LieElement e(static_cast<int>(alpha.size()));
    e.rootPart[alpha] = 1;
    return e;
}

LieElement LieElement::H(const Root& alpha) {
    LieElement e(static_cast<int>(alpha.size()));
    for (size_t i = 0; i < alpha.size(); ++i) e.cartanPart[i] = alpha[i];
    return e;
}

LieElement LieElement::H_simple(int i, int rank) {
    LieElement e(rank);
    e.cartanPart[i] = 1;
    return e;
}

bool LieElement::is_zero() const {
    if (!rootPart.empty())
        return false;
    for (const auto& c : cartanPart)
        if (c != 0)
            return false;
    return true;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (cartanPart.empty())
        cartanPart.assign(o.cartanPart.size(), Rational(0));
    for (const auto& [r, c] : o.rootPart) rootPart[r] += c;
    for (size_t i = 0; i < o.cartanPart.size(); ++i) cartanPart[i] += o.cartanPart[i];
    prune();
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (cartanPart.empty())
        cartanPart.assign(o.cartanPart.size(), Rational(0));
    for (const auto& [r, c] : o.rootPart) rootPart[r] -= c;
    for (size_t i = 0; i < o.cartanPart.size(); ++i) cartanPart[i] -= o.cartanPart[i];
    prune();
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c == 0) {
        rootPart.clear();
        std::fill(cartanPart.begin(), cartanPart.end(), Rational(0));
        return *this;
    }
    for (auto& [r, v] : rootPart) v *= c;
    for (auto& v : cartanPart) v *= c;
    return *this;
}

bool LieElement::operator==(const LieElement& o) const {
    LieElement d = *this;
    d -= o;
    return d.is_zero();
}

Rational LieElement::evaluate_on_cartan(const RootSystem& rs, const Root& beta) const {
    Rational acc = 0;
    for (int i = 0; i < rank(); ++i) {
        if (cartanPart[i] == 0)
            continue;
        acc += cartanPart[i] * rs.inner_int(beta, rs.simples[i]);
    }
    return acc;
}

void LieElement::prune() {
    for (auto it = rootPart.begin(); it != rootPart.end();) {
        if (it->second == 0)
            it = rootPart.erase(it);
        else
            ++it;
    }
}

std::string lie_str(const LieElement& x) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, c] : x.rootPart) {
        os << (first ? "" : " + ") << "(" << c << ")*X" << root_str(r);
        first = false;
    }
    for (size_t i = 0; i < x.cartanPart.size(); ++i) {
        if (x.cartanPart[i] == 0)
            continue;
        os << (first ? "" : " + ") << "(" << x.cartanPart[i] << ")*H" << (i + 1);
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

int StructureTable::structure_constant(const Root& alpha, const Root& beta) const {
    auto it = N.find({alpha, beta});
    return it == N.end() ? 0 : it->second;
}

namespace {

struct Builder {
    const RootSystem& rs;
    SignSeed seed;
    std::map<std::pair<Root, Root>, int> memo;
    // extraspecial pair cache: delta -> (a1, b1)
    std::map<Root, std::pair<Root, Root>> extra;

    int seed_sign(const Root& delta) const {
        if (seed == SignSeed::Plus)
            return 1;
        return rs.positive_index(delta) % 2 == 0 ? 1 : -1;
    }

    const std::pair<Root, Root>& extraspecial(const Root& delta) {
        auto it = extra.find(delta);
        if (it != extra.end())
            return it->second;
        for (const auto& a : rs.positives) {
            Root b = sub(delta, a);
            if (rs.is_positive_root(b))
                return extra.emplace(delta, std::make_pair(a, b)).first->second;
        }
        throw InternalConsistencyError("no decomposition of non-simple root " + root_str(delta));
    }

    // N_{a,b} for roots a, b with a+b a root.
    int N(const Root& a, const Root& b) {
        auto key = std::make_pair(a, b);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        int v = compute(a, b);
        memo[key] = v;
        return v;
    }

    int compute(const Root& a, const Root& b) {
        bool aPos = rs.is_positive_root(a);
        bool bPos = rs.is_positive_root(b);
        if (aPos && bPos) {
            if (root_less(b, a))
                return -N(b, a);
            Root delta = add(a, b);
            const auto& [a1, b1] = extraspecial(delta);
            if (a == a1 && b == b1)
                return seed_sign(delta);
            // Jacobi on (X_{-a1}, X_a, X_b), using N_{delta,-a1} = -seed(delta).
            int t1 = 0, t3 = 0;
            Root aa = sub(a, a1);
            if (rs.is_root(aa))
                t1 = N(negate(a1), a) * N(aa, b);
            Root bb = sub(b, a1);
            if (rs.is_root(bb))
                t3 = N(b, negate(a1)) * N(bb, a);
            return seed_sign(delta) * (t1 + t3);
        }
        if (!aPos && !bPos)
            return -N(negate(a), negate(b));
        if (!aPos)
            return -N(b, a);
        // a positive, b = -mu negative, a - mu a root; reduce via the rule
        // N_{x,y} = N_{y,z} = N_{z,x} for x+y+z = 0 (equal root norms).
        Root mu = negate(b);
        Root diff = sub(a, mu);
        if (rs.is_positive_root(diff))
            return -N(mu, diff);
        return N(negate(diff), a);
    }
};

}  // namespace

StructureTable build_chevalley(const RootSystem& rs, SignSeed seed) {
    Builder builder{rs, seed, {}, {}};
    StructureTable tab{rs, seed, {}};
    std::vector<Root> all = tab.rs.positives;
    for (const auto& r : tab.rs.positives) all.push_back(negate(r));
    for (const auto& a : all)
        for (const auto& b : all) {
            Root s = add(a, b);
            if (tab.rs.is_root(s)) {
                int n = builder.N(a, b);
                if (n != 1 && n != -1)
                    throw InternalConsistencyError("structure constant " + std::to_string(n) + " for " +
                                                   root_str(a) + ", " + root_str(b));
                tab.N[{a, b}] = n;
            }
        }
    return tab;
}

LieElement bracket(const StructureTable& tab, const LieElement& x, const LieElement& y) {
    const RootSystem& rs = tab.rs;
    LieElement out(rs.rank());
    // [X_a, X_b]
    for (const auto& [a, ca] : x.rootPart) {
        for (const auto& [b, cb] : y.rootPart) {
            Rational c = ca * cb;
            Root s = add(a, b);
            if (height(s) == 0 && s == Root(s.size(), 0)) {
                // [X_a, X_{-a}] = H_a
                for (int i = 0; i < rs.rank(); ++i) out.cartanPart[i] += c * a[i];
            } else if (rs.is_root(s)) {
                out.rootPart[s] += c * tab.structure_constant(a, b);
            }
        }
    }
    // [H, X_b] = b(H) X_b, and [X_a, H] = -a(H) X_a
    for (const auto& [b, cb] : y.rootPart) out.rootPart[b] += cb * x.evaluate_on_cartan(rs, b);
    for (const auto& [a, ca] : x.rootPart) out.rootPart[a] -= ca * y.evaluate_on_cartan(rs, a);
    out.prune();
    return out;
}

Rational killing_form(const StructureTable& tab, const LieElement& x, const LieElement& y) {
    const RootSystem& rs = tab.rs;
    Rational acc = 0;
    for (const auto& [a, ca] : x.rootPart) {
        auto it = y.rootPart.find(negate(a));
        if (it != y.rootPart.end())
            acc += ca * it->second;
    }
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) {
            if (x.cartanPart[i] == 0 || y.cartanPart[j] == 0)
                continue;
            acc += x.cartanPart[i] * y.cartanPart[j] * rs.cartan[i][j];
        }
    return acc;
}

void verify_structure_table(const StructureTable& tab, size_t maxTriples) {
    const RootSystem& rs = tab.rs;
    std::vector<LieElement> basis;
    for (const auto& r : rs.positives) {
        basis.push_back(LieElement::X(r));
        basis.push_back(LieElement::X(negate(r)));
    }
    for (int i = 0; i < rs.rank(); ++i) basis.push_back(LieElement::H_simple(i, rs.rank()));

    // sl(2)-triple relations for every positive root
    for (const auto& a : rs.positives) {
        LieElement Xa = LieElement::X(a), Xma = LieElement::X(negate(a)), Ha = LieElement::H(a);
        if (!(bracket(tab, Xa, Xma) == Ha))
            throw InternalConsistencyError("[X_a, X_{-a}] != H_a at " + root_str(a));
        if (!(bracket(tab, Ha, Xa) == Rational(2) * Xa))
            throw InternalConsistencyError("[H_a, X_a] != 2 X_a at " + root_str(a));
        if (!(bracket(tab, Ha, Xma) == Rational(-2) * Xma))
            throw InternalConsistencyError("[H_a, X_{-a}] != -2 X_{-a} at " + root_str(a));
    }

    // antisymmetry of N
    for (const auto& [key, n] : tab.N) {
        if (tab.structure_constant(key.second, key.first) != -n)
            throw InternalConsistencyError("N antisymmetry failure");
        if (tab.structure_constant(negate(key.first), negate(key.second)) != -n)
            throw InternalConsistencyError("N negation failure");
    }

    size_t d = basis.size();
    size_t total = d * d * d;
    if (maxTriples == 0 || total <= maxTriples) {
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    LieElement j = bracket(tab, bracket(tab, x, y), z);
                    j += bracket(tab, bracket(tab, y, z), x);
                    j += bracket(tab, bracket(tab, z, x), y);
                    if (!j.is_zero())
                        throw InternalConsistencyError("Jacobi identity failure");
                }
    } else {
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_int_distribution<size_t> pick(0, d - 1);
        for (size_t k = 0; k < maxTriples; ++k) {
            const auto& x = basis[pick(rng)];
            const auto& y = basis[pick(rng)];
            const auto& z = basis[pick(rng)];
            LieElement j = bracket(tab, bracket(tab, x, y), z);
            j += bracket(tab, bracket(tab, y, z), x);
            j += bracket(tab, bracket(tab, z, x), y);
            if (!j.is_zero())
                throw InternalConsistencyError("Jacobi identity failure (sampled)");
        }
    }
}

void write_sc_cache(const StructureTable& tab, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw CacheError("cannot open cache file for writing: " + path);
    for (const auto& [key, n] : tab.N) {
        for (int c : key.first) out << c << " ";
        for (int c : key.second) out << c << " ";
        out << n << "\n";
    }
}

StructureTable load_sc_cache(const RootSystem& rs, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CacheError("cannot open cache file: " + path);
    StructureTable tab{rs, SignSeed::Plus, {}};
    std::string line;
    int rank = rs.rank();
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        Root a(rank), b(rank);
        int n = 0;
        for (int i = 0; i < rank; ++i)
            if (!(ls >> a[i]))
                throw CacheError("corrupt cache record at line " + std::to_string(lineno));
        for (int i = 0; i < rank; ++i)
            if (!(ls >> b[i]))
                throw CacheError("corrupt cache record at line " + std::to_string(lineno));
        if (!(ls >> n) || (n != 1 && n != -1))
            throw CacheError("corrupt cache record at line " + std::to_string(lineno));
        if (!rs.is_root(a) || !rs.is_root(b) || !rs.is_root(add(a, b)))
            throw CacheError("cache record is not a root pair at line " + std::to_string(lineno));
        tab.N[{a, b}] = n;
    }
    // every root pair must be present
    std::vector<Root> all = rs.positives;
    for (const auto& r : rs.positives) all.push_back(negate(r));
    for (const auto& a : all)
        for (const auto& b : all)
            if (rs.is_root(add(a, b)) && !tab.N.count({a, b}))
                throw CacheError("cache is missing pair " + root_str(a) + ", " + root_str(b));
    try {
        verify_structure_table(tab, 4096);
    } catch (const InternalConsistencyError& e) {
        throw CacheError(std::string("cache failed validation: ") + e.what());
    }
    return tab;
}

}  // namespace lieops
