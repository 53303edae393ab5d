#include <doctest.h>

#include <random>

#include "lieops/invariance.hpp"

using namespace lieops;

namespace {

const Context& a2() {
    static Context ctx = Context::build(AlgebraType::parse("A2"));
    return ctx;
}

const Context& d4() {
    static Context ctx = Context::build(AlgebraType::parse("D4"));
    return ctx;
}

}  // namespace

TEST_CASE("character constraint: s^2 cancels and known values come out") {
    const auto& rsA = a2().rs();
    auto [c0, c1, c2] = character_equation(rsA, Weight{-1, 0});
    CHECK(c2 == 0);
    CHECK(infinitesimal_s(rsA, Weight{-1, 0}) == 0);
    CHECK(infinitesimal_s(rsA, Weight{0, -1}) == 0);

    const auto& rsD = d4().rs();
    CHECK(infinitesimal_s(rsD, Weight{0, -1, 0, 0}) == -1);
}

TEST_CASE("character constraint: degenerate direction") {
    const auto& rs = a2().rs();
    // varpi - gamma orthogonal to gamma but with nonzero constant term
    Weight varpi{2, 0};  // varpi - gamma = alpha_1 - alpha_2
    auto [c0, c1, c2] = character_equation(rs, varpi);
    CHECK(c1 == 0);
    CHECK(c0 != 0);
    CHECK_THROWS_AS(infinitesimal_s(rs, varpi), DegenerateCharacterEquation);
}

TEST_CASE("annihilation system sizes") {
    const auto& ctx = a2();
    auto comps = vminus_components(ctx.grad);
    REQUIRE(comps.size() == 2);
    // |E| * |Delta(V+) u {gamma}| image monomials, pruned to nonzero polys
    auto sys0 = annihilation_system(ctx, comps[0]);
    CHECK(!sys0.empty());
    for (const auto& p : sys0) CHECK(!p.is_zero());
}

TEST_CASE("special values in rank 2") {
    const auto& ctx = a2();
    for (const auto& E : vminus_components(ctx.grad)) {
        auto rep = solve_special_values(ctx, E);
        CHECK(rep.status == Status::Exists);
        CHECK(rep.sFromEq47 == 0);
        REQUIRE(rep.solutions.size() == 1);
        CHECK(rep.solutions[0].s == 0);
        CHECK(rep.solutions[0].t == Rational(3, 4));
        CHECK(!rep.nonRationalRootDetected);
    }
}

TEST_CASE("audit solver agrees in rank 2") {
    const auto& ctx = a2();
    for (const auto& E : vminus_components(ctx.grad)) {
        auto sols = solve_special_values_full(ctx, E);
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].s == 0);
        CHECK(sols[0].t == Rational(3, 4));
    }
}

TEST_CASE("nonexistence at A3") {
    Context ctx = Context::build(AlgebraType::parse("A3"));
    auto comps = vminus_components(ctx.grad);
    REQUIRE(comps.size() == 2);
    for (const auto& E : comps) {
        auto rep = solve_special_values(ctx, E);
        CHECK(rep.status == Status::NotExists);
        CHECK(rep.solutions.empty());
    }
}

TEST_CASE("Levi action on the solution span") {
    const auto& ctx = d4();
    auto comps = vminus_components(ctx.grad);
    REQUIRE(comps.size() == 1);
    const auto& E = comps[0];

    // H_gamma acts by the scalar 2s - 3 = -5 at s = -1
    auto m = l_action_matrix(ctx, E, -1, 0, LieElement::H(ctx.rs().gamma));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) CHECK(m[i][j] == (i == j ? Rational(-5) : Rational(0)));

    // a Levi root vector acts exactly as ad on the index roots
    LieElement z = LieElement::X(ctx.grad.lroots.front());
    auto mz = l_action_matrix(ctx, E, -1, 0, z);
    for (size_t j = 0; j < E.roots.size(); ++j) {
        LieElement img = bracket(*ctx.tab, z, LieElement::X(E.roots[j]));
        for (size_t i = 0; i < E.roots.size(); ++i) {
            Rational expect = 0;
            auto it = img.rootPart.find(E.roots[i]);
            if (it != img.rootPart.end())
                expect = it->second;
            CHECK(mz[i][j] == expect);
        }
    }

    // a strict subset of the irreducible component escapes under some of l
    Submodule half;
    half.roots.assign(E.roots.begin(), E.roots.begin() + 2);
    half.highestWeight = E.highestWeight;
    bool escaped = false;
    for (const auto& lr : ctx.grad.lroots) {
        try {
            l_action_matrix(ctx, half, -1, 0, LieElement::X(lr));
        } catch (const NotInvariant&) {
            escaped = true;
        }
    }
    CHECK(escaped);
}

TEST_CASE("A2 span: scalar H_gamma action at the special value") {
    const auto& ctx = a2();
    for (const auto& E : vminus_components(ctx.grad)) {
        auto m = l_action_matrix(ctx, E, 0, Rational(3, 4), LieElement::H(ctx.rs().gamma));
        REQUIRE(m.size() == 1);
        CHECK(m[0][0] == -3);  // 2s - 3 at s = 0
    }
}

TEST_CASE("second-order systems on singleton components") {
    const auto& ctx = d4();
    auto comps = deleted_components(ctx.rs()).components;
    REQUIRE(comps.size() == 3);
    for (const auto& c : comps) {
        REQUIRE(c.size() == 1);
        auto rep = omega2_invariance(ctx, c);
        CHECK(rep.status == Status::Exists);
        REQUIRE(rep.sValues.size() == 1);
        CHECK(rep.sValues[0] == -1);
        CHECK(rep.equationCount > 0);
    }
}

TEST_CASE("s^2 coefficient of the character constraint vanishes identically") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (const Context* ctx : {&a2(), &d4()}) {
        const auto& rs = ctx->rs();
        for (int trial = 0; trial < 10; ++trial) {
            Weight varpi(rs.rank());
            for (auto& x : varpi) x = Rational(num(rng), den(rng));
            auto [c0, c1, c2] = character_equation(rs, varpi);
            CHECK(c2 == 0);
        }
    }
}
