#pragma once

// Exhaustive enumeration of every valid algebra with up to four elements,
// one representative per relabeling class. Meet tables are enumerated as
// semilattices, the derived zero's absorption laws and A(a);a = z are baked
// into the compose table, and layered lex-minimality (meet table, then
// antidomain under Aut(meet), then compose under Aut(meet, antidomain))
// picks exactly one member of each isomorphism orbit. The decision
// procedure and the oracle are relabeling-invariant, so verdicts transfer
// to the whole orbit.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pfa/finite_algebra.hpp"

namespace pfa::sweep {

struct Tables {
    int n = 0;
    std::array<int8_t, 16> meet{};
    std::array<int8_t, 16> compose{};
    std::array<int8_t, 4> antidomain{};
};

namespace detail {

using Perm = std::array<int8_t, 4>;

inline std::vector<Perm> all_perms(int n) {
    Perm p{};
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = static_cast<int8_t>(i);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return out;
}

inline std::array<int8_t, 16> permute_table(const std::array<int8_t, 16>& t, const Perm& s,
                                            int n) {
    std::array<int8_t, 16> out{};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[static_cast<size_t>(s[static_cast<size_t>(a)]) * static_cast<size_t>(n) +
                static_cast<size_t>(s[static_cast<size_t>(b)])] =
                s[static_cast<size_t>(t[static_cast<size_t>(a) * static_cast<size_t>(n) +
                                        static_cast<size_t>(b)])];
    return out;
}

inline std::array<int8_t, 4> permute_unary(const std::array<int8_t, 4>& t, const Perm& s, int n) {
    std::array<int8_t, 4> out{};
    for (int a = 0; a < n; ++a)
        out[static_cast<size_t>(s[static_cast<size_t>(a)])] = s[static_cast<size_t>(t[static_cast<size_t>(a)])];
    return out;
}

template <size_t N>
int cmp(const std::array<int8_t, N>& a, const std::array<int8_t, N>& b, int len) {
    for (int i = 0; i < len; ++i) {
        if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)])
            return a[static_cast<size_t>(i)] < b[static_cast<size_t>(i)] ? -1 : 1;
    }
    return 0;
}

inline bool semilattice(const std::array<int8_t, 16>& m, int n) {
    for (int a = 0; a < n; ++a)
        if (m[static_cast<size_t>(a) * n + a] != a) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (m[static_cast<size_t>(a) * n + b] != m[static_cast<size_t>(b) * n + a]) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m[static_cast<size_t>(m[static_cast<size_t>(a) * n + b]) * n + c] !=
                    m[static_cast<size_t>(a) * n + m[static_cast<size_t>(b) * n + c]])
                    return false;
    return true;
}

} // namespace detail

/// Calls `fn` with every canonical valid algebra of exactly n elements
/// (n <= 4). Returns the number of algebras visited.
inline uint64_t enumerate_valid(int n, const std::function<void(const Tables&)>& fn) {
    using namespace detail;
    const auto perms = all_perms(n);
    uint64_t visited = 0;

    // Labeled semilattices, canonical under relabeling.
    std::vector<std::pair<std::array<int8_t, 16>, std::vector<Perm>>> canonical_meets;
    {
        std::vector<std::pair<int, int>> cells;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) cells.emplace_back(a, b);
        std::vector<int> digits(cells.size(), 0);
        while (true) {
            std::array<int8_t, 16> m{};
            for (int a = 0; a < n; ++a) m[static_cast<size_t>(a) * n + a] = static_cast<int8_t>(a);
            for (size_t i = 0; i < cells.size(); ++i) {
                m[static_cast<size_t>(cells[i].first) * n + cells[i].second] =
                    static_cast<int8_t>(digits[i]);
                m[static_cast<size_t>(cells[i].second) * n + cells[i].first] =
                    static_cast<int8_t>(digits[i]);
            }
            if (semilattice(m, n)) {
                bool minimal = true;
                std::vector<Perm> aut;
                for (const Perm& s : perms) {
                    const auto pm = permute_table(m, s, n);
                    const int c = cmp(pm, m, n * n);
                    if (c < 0) {
                        minimal = false;
                        break;
                    }
                    if (c == 0) aut.push_back(s);
                }
                if (minimal) canonical_meets.emplace_back(m, std::move(aut));
            }
            size_t i = 0;
            for (; i < digits.size(); ++i) {
                if (++digits[i] < n) break;
                digits[i] = 0;
            }
            if (i == digits.size()) break;
        }
    }

    for (const auto& [meet, aut_m] : canonical_meets) {
        // Least element of the semilattice (the fold).
        int z = 0;
        for (int a = 1; a < n; ++a) z = meet[static_cast<size_t>(z) * n + a];

        std::array<int8_t, 4> anti{};
        std::vector<int> adig(static_cast<size_t>(n), 0);
        while (true) {
            for (int a = 0; a < n; ++a) anti[static_cast<size_t>(a)] = static_cast<int8_t>(adig[static_cast<size_t>(a)]);
            bool minimal = true;
            std::vector<Perm> aut_ma;
            for (const Perm& s : aut_m) {
                const auto pa = permute_unary(anti, s, n);
                const int c = cmp(pa, anti, n);
                if (c < 0) {
                    minimal = false;
                    break;
                }
                if (c == 0) aut_ma.push_back(s);
            }
            if (minimal) {
                // Forced compose entries: row and column of z, plus A(a);a = z.
                std::array<int8_t, 16> compose{};
                std::array<bool, 16> forced{};
                auto force = [&](int i, int j) {
                    compose[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(z);
                    forced[static_cast<size_t>(i) * n + j] = true;
                };
                for (int a = 0; a < n; ++a) {
                    force(z, a);
                    force(a, z);
                    force(anti[static_cast<size_t>(a)], a);
                }
                std::vector<int> free_cells;
                for (int i = 0; i < n * n; ++i)
                    if (!forced[static_cast<size_t>(i)]) free_cells.push_back(i);

                std::vector<int> cdig(free_cells.size(), 0);
                const bool trivial_aut = aut_ma.size() == 1;
                while (true) {
                    for (size_t i = 0; i < free_cells.size(); ++i)
                        compose[static_cast<size_t>(free_cells[i])] = static_cast<int8_t>(cdig[i]);
                    bool use = true;
                    if (!trivial_aut) {
                        for (const Perm& s : aut_ma) {
                            const auto pc = permute_table(compose, s, n);
                            if (cmp(pc, compose, n * n) < 0) {
                                use = false;
                                break;
                            }
                        }
                    }
                    if (use) {
                        Tables t;
                        t.n = n;
                        t.meet = meet;
                        t.compose = compose;
                        t.antidomain = anti;
                        fn(t);
                        ++visited;
                    }
                    size_t i = 0;
                    for (; i < cdig.size(); ++i) {
                        if (++cdig[i] < n) break;
                        cdig[i] = 0;
                    }
                    if (i == cdig.size()) break;
                    if (cdig.empty()) break;
                }
            }
            size_t i = 0;
            for (; i < adig.size(); ++i) {
                if (++adig[i] < n) break;
                adig[i] = 0;
            }
            if (i == adig.size()) break;
        }
    }
    return visited;
}

/// Builds a FiniteAlgebra from sweep tables (element names e0..).
inline FiniteAlgebra to_algebra(const Tables& t) {
    std::vector<std::string> names;
    for (int i = 0; i < t.n; ++i) names.push_back("e" + std::to_string(i));
    std::vector<Elem> compose(static_cast<size_t>(t.n) * t.n), meet(static_cast<size_t>(t.n) * t.n),
        anti(static_cast<size_t>(t.n));
    for (int i = 0; i < t.n * t.n; ++i) {
        compose[static_cast<size_t>(i)] = t.compose[static_cast<size_t>(i)];
        meet[static_cast<size_t>(i)] = t.meet[static_cast<size_t>(i)];
    }
    for (int i = 0; i < t.n; ++i) anti[static_cast<size_t>(i)] = t.antidomain[static_cast<size_t>(i)];
    return FiniteAlgebra::from_tables(std::move(names), std::move(compose), std::move(meet),
                                      std::move(anti));
}

} // namespace pfa::sweep
