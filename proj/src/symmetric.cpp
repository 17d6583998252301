#include "monogen/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "monogen/errors.hpp"

namespace monogen {

MultiPoly elementary_symmetric(std::vector<std::string> const & variables,
                               std::vector<std::string> const & roots, unsigned k)
{
    // e_k via the recurrence over prefixes of the root list
    std::vector<MultiPoly> e(k + 1, MultiPoly(variables));
    e[0] = MultiPoly::constant(variables, 1);
    for (auto const & r : roots) {
        MultiPoly x = MultiPoly::variable(variables, r);
        for (unsigned j = k; j >= 1; --j)
            e[j] += e[j - 1] * x;
    }
    return e[k];
}

namespace {

struct LexGreater {
    bool operator()(Monomial const & a, Monomial const & b) const { return a.exp > b.exp; }
};

MultiPoly permute_roots(MultiPoly const & p, std::vector<std::size_t> const & root_idx,
                        std::vector<int> const & perm)
{
    std::vector<Term> out;
    out.reserve(p.size());
    for (auto const & [m, c] : p.terms()) {
        Monomial mm = m;
        for (std::size_t i = 0; i < root_idx.size(); ++i)
            mm.exp[root_idx[perm[i]]] = m.exp[root_idx[i]];
        out.emplace_back(mm, c);
    }
    return MultiPoly::from_terms(p.variables(), std::move(out));
}

}  // namespace

MultiPoly symmetric_reduce(MultiPoly const & p, std::vector<std::string> const & roots,
                           std::vector<std::string> const & elementary)
{
    std::size_t n = roots.size();
    if (n == 0 || elementary.size() != n)
        throw DomainError("symmetric_reduce needs one elementary name per root");

    std::vector<std::size_t> root_idx(n);
    for (std::size_t i = 0; i < n; ++i)
        root_idx[i] = p.index_of(roots[i]);
    std::vector<std::size_t> passenger_idx;
    std::vector<std::string> out_vars = elementary;
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
        if (std::find(root_idx.begin(), root_idx.end(), i) == root_idx.end()) {
            passenger_idx.push_back(i);
            out_vars.push_back(p.variables()[i]);
        }
    }

    // S_n is generated by (1 2) and (1 2 ... n)
    if (n > 1) {
        std::vector<int> swap(n), cycle(n);
        for (std::size_t i = 0; i < n; ++i) {
            swap[i] = static_cast<int>(i);
            cycle[i] = static_cast<int>((i + 1) % n);
        }
        std::swap(swap[0], swap[1]);
        for (auto const & perm : {swap, cycle})
            if (permute_roots(p, root_idx, perm) != p)
                throw NonSymmetricError(perm, "polynomial is not symmetric in the given roots");
    }

    // split into root parts keyed by the passenger monomial
    std::map<Monomial, std::map<Monomial, Integer, LexGreater>, LexGreater> groups;
    for (auto const & [m, c] : p.terms()) {
        Monomial rm, pm;
        for (std::size_t i = 0; i < n; ++i)
            rm.exp[i] = m.exp[root_idx[i]];
        for (std::size_t i = 0; i < passenger_idx.size(); ++i)
            pm.exp[i] = m.exp[passenger_idx[i]];
        groups[pm][rm] = c;
    }

    // expansions of e-monomials over roots only, cached across groups
    std::vector<std::string> root_ring(roots.begin(), roots.end());
    std::vector<MultiPoly> e;
    for (unsigned k = 1; k <= n; ++k)
        e.push_back(elementary_symmetric(root_ring, roots, k));
    std::map<Monomial, std::vector<Term>, LexGreater> cache;
    auto expansion = [&](Monomial const & emon) -> std::vector<Term> const & {
        auto it = cache.find(emon);
        if (it != cache.end())
            return it->second;
        MultiPoly prod = MultiPoly::constant(root_ring, 1);
        for (std::size_t k = 0; k < n; ++k)
            if (emon.exp[k] != 0)
                prod = prod * e[k].pow(emon.exp[k]);
        return cache.emplace(emon, prod.terms()).first->second;
    };

    std::vector<Term> out;
    for (auto & [pm, part] : groups) {
        while (!part.empty()) {
            auto lead = part.begin();
            Monomial rm = lead->first;
            Integer c = lead->second;
            Monomial emon;
            for (std::size_t k = 0; k < n; ++k) {
                int next = k + 1 < n ? rm.exp[k + 1] : 0;
                if (rm.exp[k] < next)
                    throw InvariantViolation("leading monomial of a symmetric polynomial is not a partition");
                emon.exp[k] = static_cast<std::uint8_t>(rm.exp[k] - next);
            }
            for (auto const & [tm, tc] : expansion(emon)) {
                auto [slot, inserted] = part.try_emplace(tm, 0);
                slot->second -= c * tc;
                if (slot->second == 0)
                    part.erase(slot);
            }
            Monomial om;
            for (std::size_t k = 0; k < n; ++k)
                om.exp[k] = emon.exp[k];
            for (std::size_t i = 0; i < passenger_idx.size(); ++i)
                om.exp[n + i] = pm.exp[i];
            out.emplace_back(om, std::move(c));
        }
    }
    return MultiPoly::from_terms(std::move(out_vars), std::move(out));
}

}  // namespace monogen
