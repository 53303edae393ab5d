#include "lieops/invariance.hpp"

#include <algorithm>

namespace lieops {

std::string status_str(Status s) {
    switch (s) {
        case Status::Exists:
            return "Exists";
        case Status::NotExists:
            return "NotExists";
        case Status::ZeroOperator:
            return "ZeroOperator";
    }
    return "?";
}

std::array<Rational, 3> character_equation(const RootSystem& rs, const Weight& varpi) {
    Weight gammaW = to_weight(rs.gamma);
    // ||varpi + (s-1)gamma + rho||^2 = ||u||^2 + 2s(u,gamma) + s^2||gamma||^2
    // with u = varpi - gamma + rho
    Weight u(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) u[i] = varpi[i] - gammaW[i] + rs.rho[i];
    Rational g2 = rs.inner(gammaW, gammaW);
    Rational lhs0 = rs.inner(u, u), lhs1 = 2 * rs.inner(u, gammaW), lhs2 = g2;
    Rational rhs0 = rs.inner(rs.rho, rs.rho), rhs1 = 2 * rs.inner(rs.rho, gammaW), rhs2 = g2;
    return {lhs0 - rhs0, lhs1 - rhs1, lhs2 - rhs2};
}

Rational infinitesimal_s(const RootSystem& rs, const Weight& varpi) {
    if (static_cast<int>(varpi.size()) != rs.rank())
        throw DimensionMismatch("infinitesimal_s: weight has wrong length");
    auto [c0, c1, c2] = character_equation(rs, varpi);
    if (c2 != 0)
        throw InternalConsistencyError("character equation has a quadratic term");
    if (c1 == 0)
        throw DegenerateCharacterEquation(c0 == 0 ? "character equation is identically true"
                                                  : "character equation is inconsistent");
    return -c0 / c1;
}

namespace {

std::vector<Root> annihilator_roots(const Context& ctx) {
    std::vector<Root> alphas = ctx.grad.vplus;
    alphas.push_back(ctx.rs().gamma);  // cheap safeguard; redundant in theory
    return alphas;
}

void collect_coeffs(const VermaElement& v, std::vector<PolySC>& out) {
    for (const auto& [m, c] : v.terms) out.push_back(c);
}

bool system_is_zero(const std::vector<VermaElement>& ops) {
    return std::all_of(ops.begin(), ops.end(), [](const VermaElement& v) { return v.is_zero(); });
}

}  // namespace

std::vector<PolySC> annihilation_system(const Context& ctx, const Submodule& E) {
    std::vector<PolySC> polys;
    for (const auto& beta : E.roots) {
        VermaElement w = omega3(ctx, LieElement::X(beta));
        for (const auto& alpha : annihilator_roots(ctx))
            collect_coeffs(act(ctx, LieElement::X(alpha), w), polys);
    }
    return polys;
}

namespace {

// exhaustive specialization check; also reports whether the specialized
// system is nonzero
bool verify_candidate(const Context& ctx, const Submodule& E, const Rational& s0, const Rational& t0) {
    bool nonzero = false;
    for (const auto& beta : E.roots) {
        VermaElement w = specialize(omega3(ctx, LieElement::X(beta)), s0, t0);
        if (!w.is_zero())
            nonzero = true;
        for (const auto& alpha : annihilator_roots(ctx))
            if (!specialize(act(ctx, LieElement::X(alpha), w), s0, t0).is_zero())
                return false;
    }
    return nonzero;
}

}  // namespace

SpecialValueReport solve_special_values(const Context& ctx, const Submodule& E) {
    SpecialValueReport rep;
    rep.algebra = ctx.rs().type.name();
    rep.submodule = E;
    rep.sFromEq47 = infinitesimal_s(ctx.rs(), E.highestWeight);

    std::vector<VermaElement> ops;
    for (const auto& beta : E.roots) ops.push_back(omega3(ctx, LieElement::X(beta)));
    if (system_is_zero(ops)) {
        rep.status = Status::ZeroOperator;
        return rep;
    }

    std::vector<PolySC> polys = annihilation_system(ctx, E);
    std::vector<Rational> g;  // gcd accumulator over Q[t]
    int count = 0;
    for (const auto& p : polys) {
        auto ut = p.substitute_s(rep.sFromEq47);
        if (poly_is_zero(ut))
            continue;
        ++count;
        g = g.empty() ? ut : poly_gcd(g, ut);
    }
    rep.equationCount = count;
    if (g.empty())
        throw InternalConsistencyError("annihilation system vanished identically; t unconstrained");
    if (poly_degree(g) == 0) {
        rep.status = Status::NotExists;
        return rep;
    }
    RationalRoots roots = rational_roots(g);
    rep.nonRationalRootDetected = roots.nonRationalRemainder;
    for (const auto& t0 : roots.roots)
        if (verify_candidate(ctx, E, rep.sFromEq47, t0))
            rep.solutions.push_back({rep.sFromEq47, t0});
    rep.status = rep.solutions.empty() ? Status::NotExists : Status::Exists;
    return rep;
}

std::vector<Solution> solve_special_values_full(const Context& ctx, const Submodule& E) {
    std::vector<PolySC> polys = annihilation_system(ctx, E);
    // every equation is p(s) + t q(s); pairwise t-resultants p_i q_j - p_j q_i
    struct Lin {
        std::vector<Rational> p, q;
    };
    std::vector<Lin> lin;
    for (const auto& poly : polys) {
        for (const auto& [k, v] : poly.terms())
            if (k.second > 1)
                throw InternalConsistencyError("audit solver expects equations linear in t");
        Lin l;
        PolySC pPart, qPart;
        for (const auto& [k, v] : poly.terms()) {
            if (k.second == 0)
                pPart += PolySC::monomial(k.first, 0, v);
            else
                qPart += PolySC::monomial(k.first, 0, v);
        }
        l.p = pPart.substitute_t(0);
        l.q = qPart.substitute_t(0);
        if (!poly_is_zero(l.p) || !poly_is_zero(l.q))
            lin.push_back(std::move(l));
    }
    std::vector<Rational> g;
    auto fold = [&](const std::vector<Rational>& f) {
        if (poly_is_zero(f))
            return;
        g = g.empty() ? f : poly_gcd(g, f);
    };
    for (size_t i = 0; i < lin.size(); ++i) {
        if (poly_is_zero(lin[i].q))
            fold(lin[i].p);
        for (size_t j = i + 1; j < lin.size(); ++j) {
            // resultant_t of (p_i + t q_i, p_j + t q_j)
            size_t n = std::max({lin[i].p.size(), lin[i].q.size(), lin[j].p.size(), lin[j].q.size()}) * 2;
            std::vector<Rational> res(n, Rational(0));
            auto acc = [&](const std::vector<Rational>& a, const std::vector<Rational>& b, int sign) {
                for (size_t x = 0; x < a.size(); ++x)
                    for (size_t y = 0; y < b.size(); ++y) res[x + y] += sign * a[x] * b[y];
            };
            acc(lin[i].p, lin[j].q, 1);
            acc(lin[j].p, lin[i].q, -1);
            fold(res);
        }
    }
    std::vector<Solution> out;
    if (g.empty() || poly_degree(g) == 0)
        return out;
    for (const auto& s0 : rational_roots(g).roots) {
        // solve for t at this s
        std::vector<Rational> tg;
        for (const auto& poly : polys) {
            auto ut = poly.substitute_s(s0);
            if (poly_is_zero(ut))
                continue;
            tg = tg.empty() ? ut : poly_gcd(tg, ut);
        }
        if (tg.empty() || poly_degree(tg) == 0)
            continue;
        for (const auto& t0 : rational_roots(tg).roots)
            if (verify_candidate(ctx, E, s0, t0))
                out.push_back({s0, t0});
    }
    return out;
}

std::vector<std::vector<Rational>> l_action_matrix(const Context& ctx, const Submodule& E,
                                                   const Rational& s0, const Rational& t0,
                                                   const LieElement& Z) {
    if (!ctx.grad.element_in_l(Z))
        throw NotInLevi("l_action_matrix: Z is not in the Levi factor");
    size_t k = E.roots.size();
    std::vector<VermaElement> basis(k), images(k);
    for (size_t i = 0; i < k; ++i) {
        basis[i] = specialize(omega3(ctx, LieElement::X(E.roots[i])), s0, t0);
        images[i] = specialize(act(ctx, Z, basis[i]), s0, t0);
    }
    // coordinates over the union of PBW monomials
    std::map<PBWMonomial, size_t> monoIndex;
    for (const auto& v : basis)
        for (const auto& [m, c] : v.terms) monoIndex.emplace(m, monoIndex.size());
    for (const auto& v : images)
        for (const auto& [m, c] : v.terms)
            if (!monoIndex.count(m))
                throw NotInvariant("image leaves the span of the system");
    size_t rows = monoIndex.size();
    auto column = [&](const VermaElement& v) {
        std::vector<Rational> col(rows, Rational(0));
        for (const auto& [m, c] : v.terms) col[monoIndex.at(m)] = c.evaluate(0, 0);
        return col;
    };
    // solve basisMatrix * a_col = image_col for each image, by Gaussian
    // elimination on the augmented system
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(k + k, Rational(0)));
    for (size_t j = 0; j < k; ++j) {
        auto col = column(basis[j]);
        for (size_t r = 0; r < rows; ++r) M[r][j] = col[r];
    }
    for (size_t j = 0; j < k; ++j) {
        auto col = column(images[j]);
        for (size_t r = 0; r < rows; ++r) M[r][k + j] = col[r];
    }
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows)
            throw NotInvariant("system basis is linearly dependent");
        std::swap(M[piv], M[rank]);
        Rational lead = M[rank][col];
        for (auto& x : M[rank]) x /= lead;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][col] == 0)
                continue;
            Rational f = M[r][col];
            for (size_t c2 = 0; c2 < 2 * k; ++c2) M[r][c2] -= f * M[rank][c2];
        }
        ++rank;
    }
    if (rank != k)
        throw NotInvariant("system basis is linearly dependent");
    // consistency: rows below rank must be zero on the augmented side
    for (size_t r = rank; r < rows; ++r)
        for (size_t j = 0; j < k; ++j)
            if (M[r][k + j] != 0)
                throw NotInvariant("image leaves the span of the system");
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (size_t r = 0; r < k; ++r)
        for (size_t j = 0; j < k; ++j) a[r][j] = M[r][k + j];
    return a;
}

Omega2Report omega2_invariance(const Context& ctx, const std::vector<int>& component) {
    Omega2Report rep;
    rep.algebra = ctx.rs().type.name();
    rep.component = component;

    // basis of l(component): l-roots supported on the component plus the
    // corresponding simple coroots
    std::vector<LieElement> zbasis;
    for (const auto& r : ctx.grad.lroots) {
        bool supported = true;
        for (int i = 0; i < ctx.rs().rank(); ++i)
            if (r[i] != 0 && std::find(component.begin(), component.end(), i) == component.end())
                supported = false;
        if (supported)
            zbasis.push_back(LieElement::X(r));
    }
    for (int i : component) zbasis.push_back(LieElement::H_simple(i, ctx.rs().rank()));

    std::vector<VermaElement> ops;
    for (const auto& z : zbasis) ops.push_back(omega2(ctx, z));
    if (system_is_zero(ops)) {
        rep.status = Status::ZeroOperator;
        return rep;
    }

    std::vector<Rational> g;
    int count = 0;
    for (const auto& w : ops) {
        for (const auto& alpha : annihilator_roots(ctx)) {
            VermaElement img = act(ctx, LieElement::X(alpha), w);
            for (const auto& [m, c] : img.terms) {
                auto us = c.substitute_t(0);  // t does not occur
                if (poly_is_zero(us))
                    continue;
                ++count;
                g = g.empty() ? us : poly_gcd(g, us);
            }
        }
    }
    rep.equationCount = count;
    if (g.empty())
        throw InternalConsistencyError("omega2 annihilation system vanished identically");
    if (poly_degree(g) == 0) {
        rep.status = Status::NotExists;
        return rep;
    }
    RationalRoots roots = rational_roots(g);
    rep.nonRationalRootDetected = roots.nonRationalRemainder;
    for (const auto& s0 : roots.roots) {
        bool ok = true;
        for (const auto& w : ops) {
            VermaElement ws = specialize(w, s0, 0);
            for (const auto& alpha : annihilator_roots(ctx))
                if (!specialize(act(ctx, LieElement::X(alpha), ws), s0, 0).is_zero()) {
                    ok = false;
                    break;
                }
            if (!ok)
                break;
        }
        if (ok)
            rep.sValues.push_back(s0);
    }
    rep.status = rep.sValues.empty() ? Status::NotExists : Status::Exists;
    return rep;
}

}  // namespace lieops
