#include "lieops/selftest.hpp"

namespace lieops {

namespace {

std::vector<LieElement> full_basis(const RootSystem& rs) {
    std::vector<LieElement> basis;
    for (const auto& r : rs.positives) {
        basis.push_back(LieElement::X(r));
        basis.push_back(LieElement::X(negate(r)));
    }
    for (int i = 0; i < rs.rank(); ++i) basis.push_back(LieElement::H_simple(i, rs.rank()));
    return basis;
}

std::vector<LieElement> levi_basis(const Context& ctx) {
    std::vector<LieElement> basis;
    for (const auto& r : ctx.grad.lroots) basis.push_back(LieElement::X(r));
    for (int i = 0; i < ctx.rs().rank(); ++i) basis.push_back(LieElement::H_simple(i, ctx.rs().rank()));
    return basis;
}

void fail(const std::string& suite, const std::string& detail) {
    throw InternalConsistencyError("selftest [" + suite + "]: " + detail);
}

Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int n = num(rng);
    return Rational(n == 0 ? 1 : n, den(rng));
}

size_t check_representation_property(const Context& ctx, std::mt19937_64& rng) {
    const auto basis = full_basis(ctx.rs());
    size_t checks = 0;
    auto probe = [&](const LieElement& x, const LieElement& y, const VermaElement& v) {
        VermaElement lhs = act(ctx, bracket(*ctx.tab, x, y), v);
        VermaElement rhs = act(ctx, x, act(ctx, y, v)) - act(ctx, y, act(ctx, x, v));
        if (!(lhs == rhs))
            fail("representation", "act([X,Y],v) != act(X,act(Y,v)) - act(Y,act(X,v))");
        ++checks;
    };
    if (basis.size() <= 10) {
        // exhaustive over basis pairs with a fixed low-degree corpus
        std::vector<VermaElement> corpus{VermaElement::vacuum(ctx)};
        for (const auto& g : ctx.generators) corpus.push_back(normal_order(ctx, {g}));
        corpus.push_back(normal_order(ctx, {ctx.generators[0], ctx.generators[0], ctx.generators.back()}));
        corpus.push_back(random_verma_element(ctx, rng));
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& v : corpus) probe(x, y, v);
    } else {
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        for (int trial = 0; trial < 200; ++trial)
            probe(basis[pick(rng)], basis[pick(rng)], random_verma_element(ctx, rng));
    }
    return checks;
}

size_t check_basis_independence(const Context& ctx, std::mt19937_64& rng) {
    const auto& vp = ctx.grad.vplus;
    size_t m = vp.size();
    size_t checks = 0;
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int change = 0; change < 5; ++change) {
        // random invertible rational change of basis of V+
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
        std::vector<std::vector<Rational>> b;
        while (true) {
            for (auto& row : a)
                for (auto& x : row) x = entry(rng);
            // invert by Gauss-Jordan; retry on singular
            std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(2 * m, Rational(0)));
            for (size_t i = 0; i < m; ++i) {
                for (size_t j = 0; j < m; ++j) aug[i][j] = a[i][j];
                aug[i][m + i] = 1;
            }
            bool singular = false;
            for (size_t col = 0; col < m; ++col) {
                size_t piv = col;
                while (piv < m && aug[piv][col] == 0) ++piv;
                if (piv == m) {
                    singular = true;
                    break;
                }
                std::swap(aug[piv], aug[col]);
                Rational lead = aug[col][col];
                for (auto& x : aug[col]) x /= lead;
                for (size_t r = 0; r < m; ++r) {
                    if (r == col || aug[r][col] == 0)
                        continue;
                    Rational f = aug[r][col];
                    for (size_t c2 = 0; c2 < 2 * m; ++c2) aug[r][c2] -= f * aug[col][c2];
                }
            }
            if (singular)
                continue;
            b.assign(m, std::vector<Rational>(m));
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) b[i][j] = aug[i][m + j];
            break;
        }
        for (const auto& betaRoot : ctx.grad.vminus) {
            LieElement Y = LieElement::X(betaRoot);
            VermaElement direct = omega3_tilde(ctx, Y);
            VermaElement viaBasis;
            for (size_t i = 0; i < m; ++i) {
                LieElement Wi(ctx.rs().rank());
                for (size_t j = 0; j < m; ++j)
                    if (a[i][j] != 0)
                        Wi.rootPart[vp[j]] += a[i][j];
                Wi.prune();
                LieElement WiStar(ctx.rs().rank());
                for (size_t k = 0; k < m; ++k)
                    if (b[k][i] != 0)
                        WiStar.rootPart[negate(vp[k])] += b[k][i];
                WiStar.prune();
                LieElement z = bracket(*ctx.tab, Wi, Y);
                if (z.is_zero())
                    continue;
                viaBasis += left_mul(ctx, WiStar, omega2(ctx, z));
            }
            if (!(direct == viaBasis))
                fail("basis-independence", "basis dependence detected");
            ++checks;
        }
    }
    return checks;
}

}  // namespace

VermaElement random_verma_element(const Context& ctx, std::mt19937_64& rng, int maxDegree) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> deg(0, maxDegree);
    std::uniform_int_distribution<size_t> gen(0, ctx.generators.size() - 1);
    VermaElement out;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<Root> word;
        int d = deg(rng);
        for (int j = 0; j < d; ++j) word.push_back(ctx.generators[gen(rng)]);
        VermaElement term = normal_order(ctx, word);
        term *= PolySC(random_small_rational(rng));
        out += term;
    }
    return out;
}

SelftestReport run_selftest(const Context& ctx, std::uint64_t seed) {
    SelftestReport rep;
    rep.algebra = ctx.rs().type.name();
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const RootSystem& rs = ctx.rs();

    // Jacobi + sl(2)-triples + N antisymmetry (exhaustive up to dim 45)
    size_t dim = 2 * rs.positives.size() + rs.rank();
    size_t cap = dim <= 45 ? 0 : 100000;
    verify_structure_table(*ctx.tab, cap);
    rep.suites.push_back({"jacobi+sl2", cap == 0 ? dim * dim * dim : cap});

    // ad-invariance of the normalized form on basis triples
    {
        auto basis = full_basis(rs);
        size_t checks = 0;
        bool capped = false;
        for (size_t i = 0; i < basis.size() && !capped; ++i)
            for (size_t j = 0; j < basis.size() && !capped; ++j)
                for (size_t k = 0; k < basis.size() && !capped; ++k) {
                    const auto &x = basis[i], &y = basis[j], &z = basis[k];
                    Rational v = killing_form(*ctx.tab, bracket(*ctx.tab, x, y), z) +
                                 killing_form(*ctx.tab, y, bracket(*ctx.tab, x, z));
                    if (v != 0)
                        fail("killing", "ad-invariance failure");
                    if (++checks >= 30000)
                        capped = true;
                }
        rep.suites.push_back({"killing-invariance", checks});
    }

    rep.suites.push_back({"representation", check_representation_property(ctx, rng)});
    rep.suites.push_back({"basis-independence", check_basis_independence(ctx, rng)});

    // omega2(H_gamma) = 0
    if (!omega2(ctx, LieElement::H(rs.gamma)).is_zero())
        fail("omega2-Hgamma", "omega2(H_gamma) != 0");
    rep.suites.push_back({"omega2-Hgamma", 1});

    // equivariance of omega2 at s = -1, over all Levi basis pairs
    {
        auto lb = levi_basis(ctx);
        size_t checks = 0;
        for (const auto& Z : lb)
            for (const auto& W : lb) {
                VermaElement lhs = omega2(ctx, bracket(*ctx.tab, Z, W));
                VermaElement rhs = specialize(act(ctx, Z, omega2(ctx, W)), -1, 0);
                rhs += PolySC(2 * dchi(ctx.grad, Z)) * omega2(ctx, W);
                if (!(lhs == rhs))
                    fail("eq-omega2-equivariance", "failure at a Levi pair");
                ++checks;
            }
        rep.suites.push_back({"omega2-equivariance", checks});
    }

    // equivariance of omega3 with s, t symbolic, over all (Z, Y) basis pairs
    {
        auto lb = levi_basis(ctx);
        size_t checks = 0;
        PolySC oneMinusS = PolySC(1) - PolySC::s();
        for (const auto& Z : lb)
            for (const auto& betaRoot : ctx.grad.vminus) {
                LieElement Y = LieElement::X(betaRoot);
                VermaElement lhs = omega3(ctx, bracket(*ctx.tab, Z, Y));
                VermaElement rhs = act(ctx, Z, omega3(ctx, Y));
                rhs += (oneMinusS * PolySC(dchi(ctx.grad, Z))) * omega3(ctx, Y);
                if (!(lhs == rhs))
                    fail("omega3-equivariance", "failure at a (Z, Y) pair");
                ++checks;
            }
        rep.suites.push_back({"omega3-equivariance", checks});
    }

    // H_gamma eigenvalue 2s - 3 on omega3(Y)
    {
        size_t checks = 0;
        PolySC ev = PolySC::monomial(1, 0, 2) - PolySC(3);
        for (const auto& betaRoot : ctx.grad.vminus) {
            VermaElement w = omega3(ctx, LieElement::X(betaRoot));
            if (!(act(ctx, LieElement::H(rs.gamma), w) == ev * w))
                fail("hgamma-eigenvalue", "eigenvalue is not 2s-3");
            ++checks;
        }
        rep.suites.push_back({"hgamma-eigenvalue", checks});
    }

    // trace identity on nested brackets (D4 only)
    if (rs.type.series == Series::D && rs.type.rank == 4) {
        size_t checks = 0;
        for (const auto& alpha : ctx.grad.vplus)
            for (const auto& betaRoot : ctx.grad.vminus) {
                LieElement X = LieElement::X(alpha), Y = LieElement::X(betaRoot);
                VermaElement lhs;
                for (const auto& eps : ctx.grad.vplus) {
                    LieElement inner1 = bracket(*ctx.tab, X, LieElement::X(negate(eps)));
                    LieElement inner2 = bracket(*ctx.tab, LieElement::X(eps), Y);
                    LieElement z = bracket(*ctx.tab, inner1, inner2);
                    if (!z.is_zero())
                        lhs += omega2(ctx, z);
                }
                VermaElement rhs = PolySC(2) * omega2(ctx, bracket(*ctx.tab, X, Y));
                if (!(lhs == rhs))
                    fail("nested-bracket-trace", "identity failure");
                ++checks;
            }
        rep.suites.push_back({"nested-bracket-trace", checks});
    }

    return rep;
}

}  // namespace lieops
