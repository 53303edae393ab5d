#include "lieops/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lieops {

AlgebraType::AlgebraType(Series s, int r) : series(s), rank(r) {
    switch (series) {
        case Series::A:
            if (rank < 2)
                throw UnsupportedAlgebra("A_n requires n >= 2, got n = " + std::to_string(rank));
            break;
        case Series::D:
            if (rank < 4)
                throw UnsupportedAlgebra("D_n requires n >= 4, got n = " + std::to_string(rank));
            break;
        case Series::E:
            if (rank < 6 || rank > 8)
                throw UnsupportedAlgebra("E_n requires n in {6,7,8}, got n = " + std::to_string(rank));
            break;
    }
}

AlgebraType AlgebraType::parse(const std::string& label) {
    if (label.size() < 2)
        throw UnsupportedAlgebra("malformed algebra label: '" + label + "'");
    char c = label[0];
    int r = 0;
    try {
        size_t pos = 0;
        r = std::stoi(label.substr(1), &pos);
        if (pos + 1 != label.size())
            throw UnsupportedAlgebra("malformed algebra label: '" + label + "'");
    } catch (const std::logic_error&) {
        throw UnsupportedAlgebra("malformed algebra label: '" + label + "'");
    }
    switch (c) {
        case 'A':
            return {Series::A, r};
        case 'D':
            return {Series::D, r};
        case 'E':
            return {Series::E, r};
        default:
            throw UnsupportedAlgebra(std::string("only simply-laced types A, D, E are supported; got '") +
                                     c + "'");
    }
}

std::string AlgebraType::name() const {
    const char* s = series == Series::A ? "A" : series == Series::D ? "D" : "E";
    return s + std::to_string(rank);
}

int height(const Root& r) {
    return std::accumulate(r.begin(), r.end(), 0);
}

Root negate(const Root& r) {
    Root out(r.size());
    for (size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
    return out;
}

Root add(const Root& a, const Root& b) {
    Root out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Root sub(const Root& a, const Root& b) {
    Root out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Weight to_weight(const Root& r) {
    Weight w(r.size());
    for (size_t i = 0; i < r.size(); ++i) w[i] = r[i];
    return w;
}

bool root_less(const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb)
        return ha < hb;
    // within a height level, larger leading coordinates first, so that
    // alpha_1 precedes alpha_2 etc.
    return a > b;
}

std::string root_str(const Root& r) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i)
            os << ",";
        os << r[i];
    }
    os << "]";
    return os.str();
}

bool RootSystem::is_positive_root(const Root& r) const {
    return posIndex_.count(r) != 0;
}

bool RootSystem::is_root(const Root& r) const {
    return is_positive_root(r) || is_positive_root(negate(r));
}

int RootSystem::positive_index(const Root& r) const {
    auto it = posIndex_.find(r);
    if (it == posIndex_.end())
        throw std::invalid_argument("not a positive root: " + root_str(r));
    return it->second;
}

Rational RootSystem::inner(const Weight& v, const Weight& w) const {
    if (static_cast<int>(v.size()) != rank() || static_cast<int>(w.size()) != rank())
        throw DimensionMismatch("inner: expected vectors of length " + std::to_string(rank()));
    Rational acc = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) acc += v[i] * w[j] * cartan[i][j];
    return acc;
}

long RootSystem::inner_int(const Root& v, const Root& w) const {
    if (static_cast<int>(v.size()) != rank() || static_cast<int>(w.size()) != rank())
        throw DimensionMismatch("inner_int: expected vectors of length " + std::to_string(rank()));
    long acc = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) acc += static_cast<long>(v[i]) * w[j] * cartan[i][j];
    return acc;
}

namespace {

// Bourbaki numbering. Simply laced, so the Cartan matrix doubles as the
// Gram matrix of the simple roots.
std::vector<std::vector<int>> cartan_matrix(const AlgebraType& type) {
    int n = type.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (type.series) {
        case Series::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Series::D:
            for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case Series::E:
            // chain 1-3-4-5-...-n, with node 2 attached to node 4
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
    }
    return c;
}

size_t expected_positive_count(const AlgebraType& type) {
    int n = type.rank;
    switch (type.series) {
        case Series::A:
            return static_cast<size_t>(n) * (n + 1) / 2;
        case Series::D:
            return static_cast<size_t>(n) * (n - 1);
        case Series::E:
            return n == 6 ? 36 : n == 7 ? 63 : 120;
    }
    return 0;
}

// Solve gram * x = rhs exactly (gram symmetric positive definite here).
Weight solve_linear(std::vector<std::vector<Rational>> m, Weight rhs) {
    int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw InternalConsistencyError("singular Gram matrix");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational f = m[r][col] / m[col][col];
            for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
            rhs[r] -= f * rhs[col];
        }
    }
    Weight x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

}  // namespace

RootSystem build_root_system(AlgebraType type) {
    RootSystem rs(type);
    int n = type.rank;
    rs.cartan = cartan_matrix(type);

    for (int i = 0; i < n; ++i) {
        Root a(n, 0);
        a[i] = 1;
        rs.simples.push_back(a);
    }

    // Closure under root addition, level by level. beta + alpha_i is a root
    // iff p - (beta, alpha_i) > 0, where p is the length of the alpha_i-string
    // below beta. All strings below the current height are already known.
    std::map<Root, int> found;
    std::vector<Root> level = rs.simples;
    for (auto& a : level) found[a] = 1;
    while (!level.empty()) {
        std::vector<Root> next;
        for (const auto& beta : level) {
            for (int i = 0; i < n; ++i) {
                Root cand = add(beta, rs.simples[i]);
                if (found.count(cand))
                    continue;
                int p = 0;
                Root down = sub(beta, rs.simples[i]);
                while (height(down) > 0 && found.count(down)) {
                    ++p;
                    down = sub(down, rs.simples[i]);
                }
                long pairing = rs.inner_int(beta, rs.simples[i]);
                if (p - pairing > 0) {
                    found[cand] = 1;
                    next.push_back(cand);
                }
            }
        }
        level = std::move(next);
    }

    for (auto& [r, _] : found) rs.positives.push_back(r);
    std::sort(rs.positives.begin(), rs.positives.end(), root_less);
    for (size_t i = 0; i < rs.positives.size(); ++i) rs.posIndex_[rs.positives[i]] = static_cast<int>(i);

    if (rs.positives.size() != expected_positive_count(type))
        throw InternalConsistencyError("positive root count mismatch for " + type.name() + ": got " +
                                       std::to_string(rs.positives.size()));
    for (const auto& r : rs.positives)
        if (rs.inner_int(r, r) != 2)
            throw InternalConsistencyError("non-normalized root " + root_str(r));

    rs.gamma = rs.positives.back();  // unique root of maximal height
    for (const auto& r : rs.positives)
        if (r != rs.gamma && height(r) == height(rs.gamma))
            throw InternalConsistencyError("highest root is not unique");

    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = rs.cartan[i][j];
    rs.rho = solve_linear(gram, Weight(n, Rational(1)));
    return rs;
}

const Root& highest_root(const RootSystem& rs) {
    return rs.gamma;
}

}  // namespace lieops
