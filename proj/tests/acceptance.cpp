// Acceptance gate: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <random>

#include "lieops/selftest.hpp"

using namespace lieops;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what, Clock::time_point started) {
    double secs = std::chrono::duration<double>(Clock::now() - started).count();
    std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << " — " << what << " ("
              << secs << "s)\n";
    if (!ok)
        ++failures;
}

// expected rank-2 expansion: -(3/2) N_{ai,ak} X_{-ai}^2 X_{-ak} + (t - 3/4) X_{-ai} X_{-gamma}
VermaElement expected_rank2(const Context& ctx, int i) {
    int k = 1 - i;
    Root ai(2, 0), ak(2, 0);
    ai[i] = 1;
    ak[k] = 1;
    int n = ctx.tab->structure_constant(ai, ak);
    VermaElement out =
        PolySC(Rational(-3 * n, 2)) * normal_order(ctx, {negate(ai), negate(ai), negate(ak)});
    out += (PolySC::t() - PolySC(Rational(3, 4))) * normal_order(ctx, {negate(ai), negate(ctx.rs().gamma)});
    return out;
}

bool solutions_equal(const std::vector<Solution>& got, const Rational& s, const Rational& t) {
    return got.size() == 1 && got[0].s == s && got[0].t == t;
}

}  // namespace

int main() {
    Context a2 = Context::build(AlgebraType::parse("A2"));
    Context d4 = Context::build(AlgebraType::parse("D4"));

    {  // 1: rank-2 golden expansion
        auto t0 = Clock::now();
        bool ok = omega3(a2, LieElement::X(Root{-1, 0})) == expected_rank2(a2, 0) &&
                  omega3(a2, LieElement::X(Root{0, -1})) == expected_rank2(a2, 1) &&
                  render(a2, omega3(a2, LieElement::X(Root{-1, 0}))) ==
                      "(t - 3/4) X[-1,0]*X[-1,-1] + (-3/2) X[-1,0]^2*X[0,-1]";
        report(1, ok, "rank-2 golden expansion of omega3", t0);
    }

    {  // 2: rank-2 special values
        auto t0 = Clock::now();
        auto comps = vminus_components(a2.grad);
        bool ok = comps.size() == 2;
        for (const auto& E : comps) {
            auto rep = solve_special_values(a2, E);
            ok = ok && rep.status == Status::Exists && rep.sFromEq47 == 0 &&
                 solutions_equal(rep.solutions, 0, Rational(3, 4));
        }
        report(2, ok, "rank-2 special values (0, 3/4) on both submodules", t0);
    }

    {  // 3: D4 annihilation at (-1, 0), 72 exact zero checks
        auto t0 = Clock::now();
        size_t zeros = 0;
        std::vector<Root> annihilators = d4.grad.vplus;
        annihilators.push_back(d4.rs().gamma);
        bool nonzeroOp = false;
        for (const auto& beta : d4.grad.vminus) {
            VermaElement w = specialize(omega3(d4, LieElement::X(beta)), -1, 0);
            nonzeroOp = nonzeroOp || !w.is_zero();
            for (const auto& alpha : annihilators)
                if (specialize(act(d4, LieElement::X(alpha), omega3(d4, LieElement::X(beta))), -1, 0)
                        .is_zero())
                    ++zeros;
        }
        report(3, zeros == 72 && nonzeroOp, "D4 invariance at (-1, 0): 72/72 images vanish", t0);
    }

    {  // 4: D4 solver
        auto t0 = Clock::now();
        auto comps = vminus_components(d4.grad);
        bool ok = comps.size() == 1;
        if (ok) {
            auto rep = solve_special_values(d4, comps[0]);
            ok = rep.status == Status::Exists && rep.sFromEq47 == -1 &&
                 solutions_equal(rep.solutions, -1, 0);
        }
        report(4, ok, "D4 solver finds (-1, 0) with s pinned to -1", t0);
    }

    {  // 5: nonexistence at A3 and D5
        auto t0 = Clock::now();
        bool ok = true;
        for (const char* label : {"A3", "D5"}) {
            Context ctx = Context::build(AlgebraType::parse(label));
            for (const auto& E : vminus_components(ctx.grad)) {
                auto rep = solve_special_values(ctx, E);
                ok = ok && rep.status == Status::NotExists && rep.solutions.empty();
            }
        }
        report(5, ok, "no special values at A3 or D5", t0);
    }

    {  // 6: second-order special value on the D4 singletons
        auto t0 = Clock::now();
        auto comps = deleted_components(d4.rs()).components;
        bool ok = comps.size() == 3;
        for (const auto& c : comps) {
            auto rep = omega2_invariance(d4, c);
            ok = ok && c.size() == 1 && rep.status == Status::Exists && rep.sValues.size() == 1 &&
                 rep.sValues[0] == -1;
        }
        report(6, ok, "second-order systems invariant at s = -1 on all three singletons", t0);
    }

    {  // 7: character constraint solver
        auto t0 = Clock::now();
        bool ok = infinitesimal_s(a2.rs(), Weight{-1, 0}) == 0 &&
                  infinitesimal_s(a2.rs(), Weight{0, -1}) == 0 &&
                  infinitesimal_s(d4.rs(), Weight{0, -1, 0, 0}) == -1;
        std::mt19937_64 rng(20260823);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 7);
        for (int trial = 0; trial < 20; ++trial) {
            const RootSystem& rs = (trial % 2 ? d4 : a2).rs();
            Weight varpi(rs.rank());
            for (auto& x : varpi) x = Rational(num(rng), den(rng));
            ok = ok && character_equation(rs, varpi)[2] == 0;
        }
        report(7, ok, "character constraint: known roots and identically-zero s^2 term", t0);
    }

    {  // 8: property batteries
        auto t0 = Clock::now();
        bool ok = true;
        try {
            run_selftest(a2);
            run_selftest(d4);
        } catch (const std::exception& e) {
            std::cerr << "selftest: " << e.what() << "\n";
            ok = false;
        }
        report(8, ok, "property batteries pass at both scales", t0);
    }

    {  // 9: sign-seed robustness
        auto t0 = Clock::now();
        bool ok = true;
        for (const char* label : {"A2", "A3", "D4"}) {
            Context plus = Context::build(AlgebraType::parse(label), SignSeed::Plus);
            Context alt = Context::build(AlgebraType::parse(label), SignSeed::Alternating);
            auto compsP = vminus_components(plus.grad);
            auto compsA = vminus_components(alt.grad);
            ok = ok && compsP.size() == compsA.size();
            for (size_t i = 0; i < compsP.size() && ok; ++i) {
                auto repP = solve_special_values(plus, compsP[i]);
                auto repA = solve_special_values(alt, compsA[i]);
                ok = repP.status == repA.status && repP.sFromEq47 == repA.sFromEq47 &&
                     repP.solutions.size() == repA.solutions.size();
                for (size_t j = 0; ok && j < repP.solutions.size(); ++j)
                    ok = repP.solutions[j].s == repA.solutions[j].s &&
                         repP.solutions[j].t == repA.solutions[j].t;
            }
            for (const auto& c : deleted_components(plus.rs()).components) {
                if (c.size() != 1)
                    continue;
                auto repP = omega2_invariance(plus, c);
                auto repA = omega2_invariance(alt, c);
                ok = ok && repP.status == repA.status && repP.sValues == repA.sValues;
            }
        }
        report(9, ok, "verdicts unchanged under the alternating sign seed", t0);
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
