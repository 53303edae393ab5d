#include "lieops/omega.hpp"

namespace lieops {

namespace {

// (1/2)(X_{-a} X_{-b} + X_{-b} X_{-a}), normal-ordered.
VermaElement sym_product(const Context& ctx, const Root& negA, const Root& negB) {
    VermaElement out = normal_order(ctx, {negA, negB});
    out += normal_order(ctx, {negB, negA});
    out *= PolySC(Rational(1, 2));
    return out;
}

}  // namespace

VermaElement omega2(const Context& ctx, const LieElement& Z) {
    if (!ctx.grad.element_in_l(Z))
        throw NotInLevi("omega2: Z is not in the Levi factor");
    const auto& tab = *ctx.tab;
    VermaElement out;
    for (const auto& alpha : ctx.grad.vplus) {
        for (const auto& beta : ctx.grad.vplus) {
            Root betaP = sub(ctx.rs().gamma, beta);
            Rational m = m_coeff(tab, ctx.grad, Z, alpha, betaP);
            if (m == 0)
                continue;
            int n = tab.structure_constant(beta, betaP);
            if (n == 0)
                throw InternalConsistencyError("degenerate pairing at " + root_str(beta));
            VermaElement part = sym_product(ctx, negate(alpha), negate(beta));
            part *= PolySC(Rational(n) * m / 2);
            out += part;
        }
    }
    return out;
}

VermaElement omega3_tilde(const Context& ctx, const LieElement& Y) {
    if (!ctx.grad.element_in_vminus(Y))
        throw NotInVminus("omega3_tilde: Y is not in V-");
    VermaElement out;
    for (const auto& eps : ctx.grad.vplus) {
        LieElement z = bracket(*ctx.tab, LieElement::X(eps), Y);
        if (z.is_zero())
            continue;
        out += left_mul_gen(ctx, ctx.genIndex.at(negate(eps)), omega2(ctx, z));
    }
    return out;
}

VermaElement c3(const Context& ctx, const LieElement& Y) {
    if (!ctx.grad.element_in_vminus(Y))
        throw NotInVminus("c3: Y is not in V-");
    VermaElement center = left_mul_gen(ctx, ctx.central_index(), VermaElement::vacuum(ctx));
    return left_mul(ctx, Y, center);
}

VermaElement omega3(const Context& ctx, const LieElement& Y) {
    VermaElement out = omega3_tilde(ctx, Y);
    out += PolySC::t() * c3(ctx, Y);
    return out;
}

}  // namespace lieops
