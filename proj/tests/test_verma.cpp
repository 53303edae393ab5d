#include <doctest.h>

#include <random>

#include "lieops/selftest.hpp"
#include "lieops/verma.hpp"

using namespace lieops;

namespace {

const Context& a2() {
    static Context ctx = Context::build(AlgebraType::parse("A2"));
    return ctx;
}

}  // namespace

TEST_CASE("generator order: Delta(V-) in root order, X_{-gamma} last") {
    const auto& ctx = a2();
    REQUIRE(ctx.generators.size() == 3);
    CHECK(ctx.generators[0] == Root{-1, 0});
    CHECK(ctx.generators[1] == Root{0, -1});
    CHECK(ctx.generators[2] == Root{-1, -1});
    CHECK(ctx.central_index() == 2);

    Context d4 = Context::build(AlgebraType::parse("D4"));
    CHECK(d4.generators.size() == 9);
    CHECK(d4.generators.back() == negate(d4.rs().gamma));
}

TEST_CASE("normal ordering straightens out-of-order words") {
    const auto& ctx = a2();
    Root m1{-1, 0}, m2{0, -1}, mg{-1, -1};

    VermaElement fwd = normal_order(ctx, {m1, m2});
    VermaElement rev = normal_order(ctx, {m2, m1});
    // X2 X1 = X1 X2 - [X1, X2]; the commutator is N_{-a1,-a2} X_{-gamma}
    int n = ctx.tab->structure_constant(m1, m2);
    VermaElement diff = rev - fwd;
    REQUIRE(diff.terms.size() == 1);
    CHECK(diff.terms.begin()->first == PBWMonomial{0, 0, 1});
    CHECK(diff.terms.begin()->second == PolySC(-n));

    // X_{-gamma} is central in U(nbar)
    CHECK(normal_order(ctx, {mg, m1, m2}) == normal_order(ctx, {m1, m2, mg}));

    // already-ordered words are single monomials
    VermaElement sq = normal_order(ctx, {m1, m1, m2});
    REQUIRE(sq.terms.size() == 1);
    CHECK(sq.terms.begin()->first == PBWMonomial{2, 1, 0});
}

TEST_CASE("left_mul rejects letters outside nbar") {
    const auto& ctx = a2();
    CHECK_THROWS_AS(left_mul(ctx, LieElement::X(Root{1, 0}), VermaElement::vacuum(ctx)),
                    LetterNotInNbar);
    CHECK_THROWS_AS(left_mul(ctx, LieElement::H_simple(0, 2), VermaElement::vacuum(ctx)),
                    LetterNotInNbar);
}

TEST_CASE("action on the vacuum") {
    const auto& ctx = a2();
    VermaElement vac = VermaElement::vacuum(ctx);

    // n kills the vacuum
    CHECK(act(ctx, LieElement::X(Root{1, 0}), vac).is_zero());
    CHECK(act(ctx, LieElement::X(Root{1, 1}), vac).is_zero());

    // Cartan acts by s * dchi = s * gamma
    VermaElement h1 = act(ctx, LieElement::H_simple(0, 2), vac);
    REQUIRE(h1.terms.size() == 1);
    CHECK(h1.terms.begin()->second == PolySC::s());  // gamma(H_1) = 1
    VermaElement hg = act(ctx, LieElement::H(ctx.rs().gamma), vac);
    CHECK(hg.terms.begin()->second == PolySC(2) * PolySC::s());

    // nbar multiplies
    VermaElement x1 = act(ctx, LieElement::X(Root{-1, 0}), vac);
    CHECK(x1 == normal_order(ctx, {Root{-1, 0}}));
}

TEST_CASE("weight grading of the action") {
    const auto& ctx = a2();
    // H acts on X_{-a1}^2 X_{-a2} (x) 1 with eigenvalue s*gamma(H) - (2a1 + a2)(H)
    VermaElement v = normal_order(ctx, {Root{-1, 0}, Root{-1, 0}, Root{0, -1}});
    LieElement h = LieElement::H_simple(0, 2);
    VermaElement hv = act(ctx, h, v);
    // gamma(H_1) = 1, (2a1 + a2)(H_1) = 4 - 1 = 3
    CHECK(hv == (PolySC::s() - PolySC(3)) * v);
}

TEST_CASE("representation property on a sampled corpus") {
    const auto& ctx = a2();
    std::mt19937_64 rng(7);
    std::vector<LieElement> basis;
    for (const auto& r : ctx.rs().positives) {
        basis.push_back(LieElement::X(r));
        basis.push_back(LieElement::X(negate(r)));
    }
    basis.push_back(LieElement::H_simple(0, 2));
    basis.push_back(LieElement::H_simple(1, 2));
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        const LieElement &x = basis[pick(rng)], &y = basis[pick(rng)];
        VermaElement v = random_verma_element(ctx, rng);
        CHECK(act(ctx, bracket(*ctx.tab, x, y), v) ==
              act(ctx, x, act(ctx, y, v)) - act(ctx, y, act(ctx, x, v)));
    }
}

TEST_CASE("specialization") {
    const auto& ctx = a2();
    VermaElement v = normal_order(ctx, {Root{-1, 0}});
    v *= PolySC::t() - PolySC(Rational(3, 4));
    CHECK(specialize(v, 0, Rational(3, 4)).is_zero());
    VermaElement w = specialize(v, 0, 1);
    REQUIRE(w.terms.size() == 1);
    CHECK(w.terms.begin()->second == PolySC(Rational(1, 4)));
}

TEST_CASE("rendering") {
    const auto& ctx = a2();
    CHECK(render(ctx, VermaElement::zero()) == "0");
    CHECK(render(ctx, VermaElement::vacuum(ctx)) == "(1) 1");
    VermaElement v = normal_order(ctx, {Root{-1, 0}, Root{-1, 0}, Root{0, -1}});
    CHECK(render(ctx, v) == "(1) X[-1,0]^2*X[0,-1]");
    v *= PolySC::t() - PolySC(Rational(3, 4));
    CHECK(render(ctx, v) == "(t - 3/4) X[-1,0]^2*X[0,-1]");
}
