#include "lieops/parabolic.hpp"

#include <algorithm>
#include <set>

namespace lieops {

bool Grading::in_vplus(const Root& r) const {
    return rs().is_positive_root(r) && grade(r) == 1;
}

bool Grading::in_vminus(const Root& r) const {
    return rs().is_positive_root(negate(r)) && grade(r) == -1;
}

bool Grading::in_l(const Root& r) const {
    return rs().is_root(r) && grade(r) == 0;
}

int Grading::grade(const Root& r) const {
    return static_cast<int>(rs().inner_int(r, gamma));
}

bool Grading::element_in_l(const LieElement& x) const {
    for (const auto& [r, c] : x.rootPart)
        if (grade(r) != 0)
            return false;
    return true;
}

bool Grading::element_in_vminus(const LieElement& x) const {
    for (const auto& [r, c] : x.rootPart)
        if (grade(r) != -1)
            return false;
    for (const auto& c : x.cartanPart)
        if (c != 0)
            return false;
    return true;
}

Grading grade(const StructureTable& tab) {
    Grading g;
    g.tab = &tab;
    g.gamma = tab.rs.gamma;
    for (const auto& r : tab.rs.positives) {
        long p = tab.rs.inner_int(r, g.gamma);
        if (r == g.gamma) {
            if (p != 2)
                throw InternalConsistencyError("(gamma,gamma) != 2");
            continue;
        }
        if (p == 1) {
            g.vplus.push_back(r);
        } else if (p == 0) {
            g.lroots.push_back(r);
            g.lroots.push_back(negate(r));
        } else {
            throw InternalConsistencyError("unexpected grade for " + root_str(r));
        }
    }
    std::sort(g.vplus.begin(), g.vplus.end(), root_less);
    for (const auto& r : g.vplus) g.vminus.push_back(negate(r));
    std::sort(g.lroots.begin(), g.lroots.end(), root_less);
    // Heisenberg property: every beta in Delta(V+) has the unique partner gamma-beta
    for (const auto& b : g.vplus)
        if (!g.in_vplus(sub(g.gamma, b)))
            throw InternalConsistencyError("missing gamma-partner for " + root_str(b));
    return g;
}

Rational dchi(const Grading& grad, const LieElement& Z) {
    if (!grad.element_in_l(Z))
        throw NotInLevi("dchi: element has components outside the Levi factor");
    return Z.evaluate_on_cartan(grad.rs(), grad.gamma);
}

Root gamma_partner(const Grading& grad, const Root& beta) {
    if (!grad.in_vplus(beta))
        throw NotInVplus("gamma_partner: " + root_str(beta) + " is not in Delta(V+)");
    Root partner = sub(grad.gamma, beta);
    if (!grad.in_vplus(partner))
        throw InternalConsistencyError("gamma-partner escaped Delta(V+)");
    return partner;
}

Rational m_coeff(const StructureTable& tab, const Grading& grad, const LieElement& Z, const Root& alpha,
                 const Root& beta) {
    if (!grad.element_in_l(Z))
        throw NotInLevi("m_coeff: Z is not in the Levi factor");
    if (!grad.in_vplus(alpha))
        throw NotInVplus("m_coeff: alpha not in Delta(V+): " + root_str(alpha));
    if (!grad.in_vplus(beta))
        throw NotInVplus("m_coeff: beta not in Delta(V+): " + root_str(beta));
    LieElement br = bracket(tab, Z, LieElement::X(alpha));
    auto it = br.rootPart.find(beta);
    return it == br.rootPart.end() ? Rational(0) : it->second;
}

DeletedDiagram deleted_components(const RootSystem& rs) {
    int n = rs.rank();
    std::vector<int> kept;
    for (int i = 0; i < n; ++i)
        if (rs.inner_int(rs.simples[i], rs.gamma) == 0)
            kept.push_back(i);
    std::set<int> remaining(kept.begin(), kept.end());
    DeletedDiagram dd;
    while (!remaining.empty()) {
        std::vector<int> comp{*remaining.begin()};
        remaining.erase(remaining.begin());
        for (size_t k = 0; k < comp.size(); ++k) {
            for (auto it = remaining.begin(); it != remaining.end();) {
                if (rs.cartan[comp[k]][*it] < 0) {
                    comp.push_back(*it);
                    it = remaining.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        dd.components.push_back(comp);
    }
    std::sort(dd.components.begin(), dd.components.end());
    return dd;
}

std::vector<Submodule> vminus_components(const Grading& grad) {
    std::set<Root> pool(grad.vminus.begin(), grad.vminus.end());
    std::set<Root> all = pool;
    std::vector<Submodule> out;
    while (!pool.empty()) {
        std::vector<Root> comp{*pool.begin()};
        pool.erase(pool.begin());
        for (size_t k = 0; k < comp.size(); ++k) {
            for (const auto& d : grad.lroots) {
                Root nb = add(comp[k], d);
                auto it = pool.find(nb);
                if (it != pool.end()) {
                    comp.push_back(nb);
                    pool.erase(it);
                }
            }
        }
        std::sort(comp.begin(), comp.end(), root_less);
        std::set<Root> compSet(comp.begin(), comp.end());
        Submodule sm;
        sm.roots = comp;
        // the unique weight with w + delta outside Delta(V-) for every
        // positive l-root delta
        int hits = 0;
        for (const auto& w : comp) {
            bool maximal = true;
            for (const auto& d : grad.lroots) {
                if (height(d) <= 0)
                    continue;
                if (all.count(add(w, d))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) {
                ++hits;
                sm.highestWeight = to_weight(w);
            }
        }
        if (hits != 1)
            throw InternalConsistencyError("component highest weight not unique");
        out.push_back(std::move(sm));
    }
    std::sort(out.begin(), out.end(),
              [](const Submodule& a, const Submodule& b) { return root_less(a.roots.front(), b.roots.front()); });
    return out;
}

}  // namespace lieops
