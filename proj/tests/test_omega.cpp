#include <doctest.h>

#include "lieops/omega.hpp"

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

TEST_CASE("omega2 vanishes on H_gamma") {
    CHECK(omega2(a2(), LieElement::H(a2().rs().gamma)).is_zero());
    CHECK(omega2(d4(), LieElement::H(d4().rs().gamma)).is_zero());
}

TEST_CASE("omega2(H_1) in rank 2: hand expansion") {
    const auto& ctx = a2();
    Root a1{1, 0}, a2r{0, 1};
    int n = ctx.tab->structure_constant(a1, a2r);
    // -(3N/2) X_{-a1}X_{-a2} - (3/4) X_{-gamma}
    VermaElement expect = PolySC(Rational(-3 * n, 2)) * normal_order(ctx, {negate(a1), negate(a2r)});
    expect += PolySC(Rational(-3, 4)) * normal_order(ctx, {negate(ctx.rs().gamma)});
    CHECK(omega2(ctx, LieElement::H_simple(0, 2)) == expect);
}

TEST_CASE("omega2 is linear and rejects arguments outside l") {
    const auto& ctx = d4();
    LieElement z1 = LieElement::H_simple(0, 4);
    LieElement z2 = LieElement::X(ctx.grad.lroots.front());
    CHECK(omega2(ctx, z1 + z2) == omega2(ctx, z1) + omega2(ctx, z2));
    CHECK_THROWS_AS(omega2(ctx, LieElement::X(ctx.grad.vplus.front())), NotInLevi);
}

TEST_CASE("omega2 has PBW degree 2 and H_gamma-grade -2") {
    const auto& ctx = d4();
    for (const auto& r : ctx.grad.lroots) {
        VermaElement w = omega2(ctx, LieElement::X(r));
        for (const auto& [m, c] : w.terms) {
            int deg = monomial_degree(m);
            CHECK((deg == 1 || deg == 2));  // X_{-gamma} counts as grade -2
            int grade = 0;
            for (size_t i = 0; i < m.size(); ++i)
                grade += m[i] * ctx.grad.grade(ctx.generators[i]);
            CHECK(grade == -2);
        }
    }
}

TEST_CASE("c3 multiplies by the central generator") {
    const auto& ctx = a2();
    Root m1{-1, 0};
    VermaElement w = c3(ctx, LieElement::X(m1));
    REQUIRE(w.terms.size() == 1);
    CHECK(w.terms.begin()->first == PBWMonomial{1, 0, 1});
    CHECK(w.terms.begin()->second == PolySC(1));
}

TEST_CASE("omega3 = omega3_tilde + t * c3") {
    const auto& ctx = a2();
    for (const auto& b : ctx.grad.vminus) {
        LieElement y = LieElement::X(b);
        CHECK(omega3(ctx, y) == omega3_tilde(ctx, y) + PolySC::t() * c3(ctx, y));
    }
}

TEST_CASE("rank-2 golden expansion of omega3") {
    const auto& ctx = a2();
    CHECK(render(ctx, omega3(ctx, LieElement::X(Root{-1, 0}))) ==
          "(t - 3/4) X[-1,0]*X[-1,-1] + (-3/2) X[-1,0]^2*X[0,-1]");
}

TEST_CASE("omega3 has H_gamma-grade -3") {
    const auto& ctx = d4();
    for (const auto& b : ctx.grad.vminus) {
        VermaElement w = omega3(ctx, LieElement::X(b));
        CHECK(!w.is_zero());
        for (const auto& [m, c] : w.terms) {
            int grade = 0;
            for (size_t i = 0; i < m.size(); ++i)
                grade += m[i] * ctx.grad.grade(ctx.generators[i]);
            CHECK(grade == -3);
        }
    }
}
