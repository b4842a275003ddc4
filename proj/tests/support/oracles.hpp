#pragma once

// Independent test oracles. These deliberately use the most literal
// definitions (full subset enumeration, set comprehensions over pairs) so
// the production implementations are checked against something that shares
// no code with them.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pfa/concrete_algebra.hpp"
#include "pfa/finite_algebra.hpp"

namespace pfa::oracles {

using PairSet = std::set<std::pair<int, int>>;

inline PairSet graph_of(const PartialFunction& f) {
    PairSet s;
    for (auto [x, y] : f.graph()) s.insert({x, y});
    return s;
}

// Def-style composition on raw pair sets.
inline PairSet compose_pairs(const PairSet& f, const PairSet& g) {
    PairSet out;
    for (auto [x, y] : f)
        for (auto [y2, z] : g)
            if (y == y2) out.insert({x, z});
    return out;
}

inline PairSet intersect_pairs(const PairSet& f, const PairSet& g) {
    PairSet out;
    for (const auto& p : f)
        if (g.count(p)) out.insert(p);
    return out;
}

inline PairSet antidomain_pairs(const PairSet& f, int base_size) {
    PairSet out;
    for (int x = 0; x < base_size; ++x) {
        bool defined = false;
        for (const auto& [a, b] : f) defined = defined || a == x;
        if (!defined) out.insert({x, x});
    }
    return out;
}

inline PairSet domain_pairs(const PairSet& f) {
    PairSet out;
    for (const auto& [x, y] : f) out.insert({x, x});
    return out;
}

inline PairSet range_pairs(const PairSet& f) {
    PairSet out;
    for (const auto& [x, y] : f) out.insert({y, y});
    return out;
}

// Meet completeness by its definition: every nonempty subset whose meet
// exists. Only usable for small sources (2^n subsets).
inline bool meet_complete_literal(const Representation& rep) {
    const FiniteAlgebra& alg = *rep.source;
    const int n = alg.n();
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Elem> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        const auto m = meet_set(alg, s);
        if (!m) continue;
        PairSet expected = graph_of(rep.assignment[static_cast<size_t>(s[0])]);
        for (size_t i = 1; i < s.size(); ++i)
            expected = intersect_pairs(expected, graph_of(rep.assignment[static_cast<size_t>(s[i])]));
        if (graph_of(rep.assignment[static_cast<size_t>(*m)]) != expected) return false;
    }
    return true;
}

// Join completeness by its definition, including the empty set.
inline bool join_complete_literal(const Representation& rep) {
    const FiniteAlgebra& alg = *rep.source;
    const int n = alg.n();
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Elem> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        const auto j = join(alg, s);
        if (!j) continue;
        PairSet expected;
        for (Elem e : s)
            for (const auto& p : graph_of(rep.assignment[static_cast<size_t>(e)])) expected.insert(p);
        if (graph_of(rep.assignment[static_cast<size_t>(*j)]) != expected) return false;
    }
    return true;
}

} // namespace pfa::oracles
