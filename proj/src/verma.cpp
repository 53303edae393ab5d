#include "lieops/verma.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lieops {

Context Context::build(AlgebraType type, SignSeed seed) {
    auto tab = std::make_shared<StructureTable>(build_chevalley(build_root_system(type), seed));
    return from_table(std::move(tab));
}

Context Context::from_table(std::shared_ptr<const StructureTable> tab) {
    Context ctx;
    ctx.tab = std::move(tab);
    ctx.grad = grade(*ctx.tab);
    ctx.grad.tab = ctx.tab.get();
    ctx.generators = ctx.grad.vminus;  // already in module-wide order
    ctx.generators.push_back(negate(ctx.rs().gamma));
    for (size_t i = 0; i < ctx.generators.size(); ++i) ctx.genIndex[ctx.generators[i]] = static_cast<int>(i);
    return ctx;
}

int monomial_degree(const PBWMonomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

VermaElement VermaElement::vacuum(const Context& ctx) {
    VermaElement v;
    v.terms[PBWMonomial(ctx.num_generators(), 0)] = PolySC(1);
    return v;
}

VermaElement& VermaElement::operator+=(const VermaElement& o) {
    for (const auto& [m, c] : o.terms) terms[m] += c;
    prune();
    return *this;
}

VermaElement& VermaElement::operator-=(const VermaElement& o) {
    for (const auto& [m, c] : o.terms) terms[m] -= c;
    prune();
    return *this;
}

VermaElement& VermaElement::operator*=(const PolySC& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v = v * c;
    return *this;
}

void VermaElement::prune() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
}

namespace {

// N_{g,h} contribution to the center when swapping generators g and h;
// nonzero only when root(g) + root(h) = -gamma.
int central_constant(const Context& ctx, int g, int h) {
    int m = ctx.central_index();
    if (g == m || h == m)
        return 0;
    const Root& a = ctx.generators[g];
    const Root& b = ctx.generators[h];
    if (add(a, b) != negate(ctx.rs().gamma))
        return 0;
    return ctx.tab->structure_constant(a, b);
}

// X_g * mono, straightened; result has rational coefficients.
VermaElement straighten(const Context& ctx, int g, const PBWMonomial& mono) {
    int first = -1;
    for (int i = 0; i < static_cast<int>(mono.size()); ++i)
        if (mono[i] > 0) {
            first = i;
            break;
        }
    VermaElement out;
    if (first < 0 || g <= first) {
        PBWMonomial m = mono;
        ++m[g];
        out.terms[m] = PolySC(1);
        return out;
    }
    // X_g X_h^e rest = X_h^e (X_g rest) + e c_{g,h} X_h^{e-1} X_{-gamma} rest
    int h = first, e = mono[h];
    PBWMonomial rest = mono;
    rest[h] = 0;
    VermaElement inner = straighten(ctx, g, rest);
    for (auto& [m, c] : inner.terms) {
        PBWMonomial mm = m;
        mm[h] += e;
        out.terms[mm] += c;
    }
    int cgh = central_constant(ctx, g, h);
    if (cgh != 0) {
        PBWMonomial mm = mono;
        --mm[h];
        ++mm[ctx.central_index()];
        out.terms[mm] += PolySC(Rational(e) * cgh);
    }
    out.prune();
    return out;
}

}  // namespace

VermaElement left_mul_gen(const Context& ctx, int gen, const VermaElement& v) {
    VermaElement out;
    for (const auto& [m, c] : v.terms) {
        VermaElement part = straighten(ctx, gen, m);
        part *= c;
        out += part;
    }
    return out;
}

VermaElement left_mul(const Context& ctx, const LieElement& x, const VermaElement& v) {
    for (const auto& c : x.cartanPart)
        if (c != 0)
            throw LetterNotInNbar("left_mul: element has a Cartan component");
    VermaElement out;
    for (const auto& [r, c] : x.rootPart) {
        auto it = ctx.genIndex.find(r);
        if (it == ctx.genIndex.end())
            throw LetterNotInNbar("left_mul: " + root_str(r) + " is not in Delta(nbar)");
        VermaElement part = left_mul_gen(ctx, it->second, v);
        part *= PolySC(c);
        out += part;
    }
    return out;
}

VermaElement normal_order(const Context& ctx, const std::vector<Root>& word) {
    VermaElement v = VermaElement::vacuum(ctx);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto g = ctx.genIndex.find(*it);
        if (g == ctx.genIndex.end())
            throw LetterNotInNbar("normal_order: " + root_str(*it) + " is not in Delta(nbar)");
        v = left_mul_gen(ctx, g->second, v);
    }
    return v;
}

namespace {

VermaElement act_on_monomial(const Context& ctx, const LieElement& Y, const PBWMonomial& mono);

VermaElement act_impl(const Context& ctx, const LieElement& Y, const VermaElement& v) {
    VermaElement out;
    for (const auto& [m, c] : v.terms) {
        VermaElement part = act_on_monomial(ctx, Y, m);
        part *= c;
        out += part;
    }
    return out;
}

VermaElement act_on_monomial(const Context& ctx, const LieElement& Y, const PBWMonomial& mono) {
    int first = -1;
    for (int i = 0; i < static_cast<int>(mono.size()); ++i)
        if (mono[i] > 0) {
            first = i;
            break;
        }
    if (first < 0) {
        // vacuum: nbar part multiplies in, l part scales by s*dchi, n part dies
        VermaElement out;
        LieElement nbarPart(ctx.rs().rank());
        Rational dchiL = 0;
        for (const auto& [r, c] : Y.rootPart) {
            int g = ctx.grad.grade(r);
            if (g < 0)
                nbarPart.rootPart[r] = c;
            // grade 0 root vectors are killed by dchi; grade > 0 kills the vacuum
        }
        for (int i = 0; i < ctx.rs().rank(); ++i)
            if (Y.cartanPart[i] != 0)
                dchiL += Y.cartanPart[i] * ctx.rs().inner_int(ctx.rs().gamma, ctx.rs().simples[i]);
        if (!nbarPart.rootPart.empty())
            out += left_mul(ctx, nbarPart, VermaElement::vacuum(ctx));
        if (dchiL != 0)
            out += PolySC::monomial(1, 0, dchiL) * VermaElement::vacuum(ctx);
        return out;
    }
    // Y (X_h rest) = X_h (Y rest) + [Y, X_h] rest
    PBWMonomial rest = mono;
    --rest[first];
    VermaElement restV;
    restV.terms[rest] = PolySC(1);
    VermaElement out = left_mul_gen(ctx, first, act_impl(ctx, Y, restV));
    LieElement comm = bracket(*ctx.tab, Y, LieElement::X(ctx.generators[first]));
    if (!comm.is_zero())
        out += act_impl(ctx, comm, restV);
    return out;
}

}  // namespace

VermaElement act(const Context& ctx, const LieElement& Y, const VermaElement& v) {
    if (static_cast<int>(Y.cartanPart.size()) != ctx.rs().rank() && !Y.cartanPart.empty())
        throw DimensionMismatch("act: element rank mismatch");
    for (const auto& [r, c] : Y.rootPart)
        if (!ctx.rs().is_root(r))
            throw std::invalid_argument("act: malformed Lie element");
    return act_impl(ctx, Y, v);
}

VermaElement specialize(const VermaElement& v, const Rational& s0, const Rational& t0) {
    VermaElement out;
    for (const auto& [m, c] : v.terms) {
        Rational val = c.evaluate(s0, t0);
        if (val != 0)
            out.terms[m] = PolySC(val);
    }
    return out;
}

std::string render(const Context& ctx, const VermaElement& v) {
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v.terms) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        bool any = false;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (m[i] == 0)
                continue;
            os << (any ? "*" : " ") << "X" << root_str(ctx.generators[i]);
            if (m[i] > 1)
                os << "^" << m[i];
            any = true;
        }
        if (!any)
            os << " 1";
    }
    return os.str();
}

}  // namespace lieops
