// omega3 — driver for the third-order operator systems.
//
// Commands:
//   build           algebra summary: roots, grading, V- decomposition
//   special-values  solve for the invariance parameters (s, t)
//   verify          check annihilation at a given (s, t)
//   omega2-check    second-order systems on singleton deleted components
//   nonexist        assert no special value exists for any component
//   selftest        property batteries
//
// Exit codes: 0 pass, 1 fail, 2 usage, 3 unsupported algebra.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieops/invariance.hpp"
#include "lieops/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace lieops;

namespace {

json rat_json(const Rational& r) { return to_string(r); }

json weight_json(const Weight& w) {
    json a = json::array();
    for (const auto& x : w) a.push_back(rat_json(x));
    return a;
}

json root_json(const Root& r) { return json(r); }

json submodule_json(const SpecialValueReport& rep) {
    json sub;
    sub["roots"] = json::array();
    for (const auto& r : rep.submodule.roots) sub["roots"].push_back(root_json(r));
    sub["highest_weight"] = weight_json(rep.submodule.highestWeight);
    sub["s_eq47"] = rat_json(rep.sFromEq47);
    sub["solutions"] = json::array();
    for (const auto& sol : rep.solutions)
        sub["solutions"].push_back({{"s", rat_json(sol.s)}, {"t", rat_json(sol.t)}});
    sub["status"] = status_str(rep.status);
    sub["equation_count"] = rep.equationCount;
    if (rep.nonRationalRootDetected)
        sub["non_rational_root"] = true;
    return sub;
}

void emit(const json& doc, bool asJson) {
    if (asJson) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // flat text rendering, one "key: value" line per leaf
    std::function<void(const json&, const std::string&)> walk = [&](const json& node,
                                                                    const std::string& prefix) {
        if (node.is_object()) {
            for (const auto& [k, v] : node.items()) walk(v, prefix.empty() ? k : prefix + "." + k);
        } else if (node.is_array() && !node.empty() && (node[0].is_object() || node[0].is_array())) {
            for (size_t i = 0; i < node.size(); ++i) walk(node[i], prefix + "[" + std::to_string(i) + "]");
        } else {
            std::cout << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
                      << "\n";
        }
    };
    walk(doc, "");
}

Context make_context(const AlgebraType& type, SignSeed seed, const std::string& cachePath) {
    if (cachePath.empty())
        return Context::build(type, seed);
    RootSystem rs = build_root_system(type);
    if (std::filesystem::exists(cachePath))
        return Context::from_table(std::make_shared<StructureTable>(load_sc_cache(rs, cachePath)));
    auto tab = std::make_shared<StructureTable>(build_chevalley(rs, seed));
    write_sc_cache(*tab, cachePath);
    return Context::from_table(tab);
}

// eigenvalue of H_gamma on the solution span; scalar by construction
Rational hgamma_eigenvalue(const Context& ctx, const Submodule& E, const Solution& sol) {
    auto m = l_action_matrix(ctx, E, sol.s, sol.t, LieElement::H(ctx.rs().gamma));
    return m[0][0];
}

int cmd_build(const Context& ctx, bool asJson) {
    const RootSystem& rs = ctx.rs();
    json doc;
    doc["algebra"] = rs.type.name();
    doc["command"] = "build";
    doc["positive_roots"] = rs.positives.size();
    doc["gamma"] = root_json(rs.gamma);
    doc["vplus_dim"] = ctx.grad.vplus.size();
    doc["levi_roots"] = ctx.grad.lroots.size();
    json comps = json::array();
    for (const auto& E : vminus_components(ctx.grad)) {
        json c;
        c["dim"] = E.roots.size();
        c["highest_weight"] = weight_json(E.highestWeight);
        comps.push_back(c);
    }
    doc["vminus_components"] = comps;
    json deleted = json::array();
    for (const auto& c : deleted_components(rs).components) {
        json nodes = json::array();
        for (int i : c) nodes.push_back(i + 1);
        deleted.push_back(nodes);
    }
    doc["deleted_diagram"] = deleted;
    emit(doc, asJson);
    return 0;
}

int cmd_special_values(const Context& ctx, bool asJson, bool audit) {
    json doc;
    doc["algebra"] = ctx.rs().type.name();
    doc["command"] = "special-values";
    doc["submodules"] = json::array();
    bool anyExists = false;
    for (const auto& E : vminus_components(ctx.grad)) {
        SpecialValueReport rep = solve_special_values(ctx, E);
        json sub = submodule_json(rep);
        if (audit) {
            json full = json::array();
            for (const auto& sol : solve_special_values_full(ctx, E))
                full.push_back({{"s", rat_json(sol.s)}, {"t", rat_json(sol.t)}});
            sub["audit_solutions"] = full;
        }
        for (const auto& sol : rep.solutions) {
            Rational ev = hgamma_eigenvalue(ctx, E, sol);
            Rational vac = 2 * sol.s;  // H_gamma on 1 (x) 1
            if (ev != vac) {
                // nonzero annihilated span with a different H_gamma eigenvalue
                // than the vacuum: the module has a proper submodule
                sub["hgamma_on_span"] = rat_json(ev);
                sub["hgamma_on_vacuum"] = rat_json(vac);
                sub["reducible"] = true;
                if (sol.s == -1)
                    sub["note"] = "M_q(C_{-dchi}) reducible";
            }
        }
        if (rep.status == Status::Exists)
            anyExists = true;
        doc["submodules"].push_back(sub);
    }
    emit(doc, asJson);
    return anyExists ? 0 : 1;
}

int cmd_verify(const Context& ctx, bool asJson, const Rational& s, const Rational& t) {
    json doc;
    doc["algebra"] = ctx.rs().type.name();
    doc["command"] = "verify";
    doc["s"] = rat_json(s);
    doc["t"] = rat_json(t);
    size_t checks = 0, failures = 0;
    std::vector<Root> annihilators = ctx.grad.vplus;
    annihilators.push_back(ctx.rs().gamma);
    for (const auto& beta : ctx.grad.vminus) {
        VermaElement w = omega3(ctx, LieElement::X(beta));
        for (const auto& alpha : annihilators) {
            VermaElement image = specialize(act(ctx, LieElement::X(alpha), w), s, t);
            ++checks;
            if (!image.is_zero())
                ++failures;
        }
    }
    doc["checks"] = checks;
    doc["failures"] = failures;
    doc["status"] = failures == 0 ? "Invariant" : "NotInvariant";
    emit(doc, asJson);
    return failures == 0 ? 0 : 1;
}

int cmd_omega2_check(const Context& ctx, bool asJson) {
    json doc;
    doc["algebra"] = ctx.rs().type.name();
    doc["command"] = "omega2-check";
    doc["components"] = json::array();
    bool allExist = true;
    for (const auto& comp : deleted_components(ctx.rs()).components) {
        if (comp.size() != 1)
            continue;  // second-order systems are built per singleton ideal
        Omega2Report rep = omega2_invariance(ctx, comp);
        json c;
        json nodes = json::array();
        for (int i : comp) nodes.push_back(i + 1);
        c["component"] = nodes;
        c["s_values"] = json::array();
        for (const auto& s : rep.sValues) c["s_values"].push_back(rat_json(s));
        c["status"] = status_str(rep.status);
        c["equation_count"] = rep.equationCount;
        doc["components"].push_back(c);
        if (rep.status != Status::Exists)
            allExist = false;
    }
    emit(doc, asJson);
    return allExist ? 0 : 1;
}

int cmd_nonexist(const Context& ctx, bool asJson) {
    json doc;
    doc["algebra"] = ctx.rs().type.name();
    doc["command"] = "nonexist";
    doc["submodules"] = json::array();
    bool allAbsent = true;
    for (const auto& E : vminus_components(ctx.grad)) {
        SpecialValueReport rep = solve_special_values(ctx, E);
        doc["submodules"].push_back(submodule_json(rep));
        if (rep.status != Status::NotExists)
            allAbsent = false;
    }
    emit(doc, asJson);
    return allAbsent ? 0 : 1;
}

int cmd_selftest(const Context& ctx, bool asJson, std::uint64_t seed) {
    SelftestReport rep = run_selftest(ctx, seed);
    json doc;
    doc["algebra"] = rep.algebra;
    doc["command"] = "selftest";
    doc["seed"] = rep.seed;
    doc["suites"] = json::array();
    for (const auto& s : rep.suites) doc["suites"].push_back({{"name", s.name}, {"checks", s.checks}});
    emit(doc, asJson);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"third-order operator systems on Heisenberg parabolics"};
    app.require_subcommand(1);

    std::string typeLabel, format = "text", cachePath, sStr, tStr, seedLabel = "plus";
    std::uint64_t seed = 20260823;
    bool audit = false;

    if (const char* dir = std::getenv("OMEGA3_CACHE_DIR"))
        cachePath = dir;  // directory; per-algebra file name appended below

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--type", typeLabel, "algebra label, e.g. A2, D4, E6")->required();
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cache", cachePath, "structure-constant cache directory");
        cmd->add_option("--sign-seed", seedLabel, "extraspecial sign seed: plus or alternating")
            ->check(CLI::IsMember({"plus", "alternating"}));
        return cmd;
    };

    auto* cBuild = add_common(app.add_subcommand("build", "algebra and grading summary"));
    auto* cSpecial = add_common(app.add_subcommand("special-values", "solve for (s, t)"));
    cSpecial->add_option("--audit", audit, "also run the bivariate resultant solver")
        ->expected(0)
        ->default_val(false);
    auto* cVerify = add_common(app.add_subcommand("verify", "check annihilation at fixed (s, t)"));
    cVerify->add_option("--s", sStr, "rational value of s, e.g. -1 or 3/4")->required();
    cVerify->add_option("--t", tStr, "rational value of t")->required();
    auto* cOmega2 = add_common(app.add_subcommand("omega2-check", "second-order special values"));
    auto* cNonexist = add_common(app.add_subcommand("nonexist", "assert no special value exists"));
    auto* cSelftest = add_common(app.add_subcommand("selftest", "property batteries"));
    cSelftest->add_option("--seed", seed, "RNG seed for the sampled suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        AlgebraType type = AlgebraType::parse(typeLabel);
        SignSeed sign = seedLabel == "plus" ? SignSeed::Plus : SignSeed::Alternating;
        std::string cacheFile;
        if (!cachePath.empty())
            cacheFile = (std::filesystem::path(cachePath) / (type.name() + ".sc")).string();
        Context ctx = make_context(type, sign, cacheFile);
        bool asJson = format == "json";

        if (*cBuild)
            return cmd_build(ctx, asJson);
        if (*cSpecial)
            return cmd_special_values(ctx, asJson, audit);
        if (*cVerify)
            return cmd_verify(ctx, asJson, parse_rational(sStr), parse_rational(tStr));
        if (*cOmega2)
            return cmd_omega2_check(ctx, asJson);
        if (*cNonexist)
            return cmd_nonexist(ctx, asJson);
        if (*cSelftest)
            return cmd_selftest(ctx, asJson, seed);
        return 2;
    } catch (const UnsupportedAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
