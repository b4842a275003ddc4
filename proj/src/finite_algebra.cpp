#include "pfa/finite_algebra.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pfa/errors.hpp"

namespace pfa {

int FiniteAlgebra::index_of(const std::string& name) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == name) return static_cast<int>(i);
    return -1;
}

FiniteAlgebra FiniteAlgebra::from_tables(std::vector<std::string> elements,
                                         std::vector<Elem> compose,
                                         std::vector<Elem> meet,
                                         std::vector<Elem> antidomain) {
    const size_t n = elements.size();
    if (n == 0) throw Error("algebra: element list is empty");
    {
        std::unordered_set<std::string> seen;
        for (const auto& e : elements) {
            if (e.empty()) throw Error("algebra: empty element name");
            if (!seen.insert(e).second) throw Error("algebra: duplicate element '" + e + "'");
        }
    }
    if (compose.size() != n * n) throw Error("algebra: compose table is not n*n");
    if (meet.size() != n * n) throw Error("algebra: meet table is not n*n");
    if (antidomain.size() != n) throw Error("algebra: antidomain table is not n");
    auto in_range = [&](Elem v) { return v >= 0 && v < static_cast<Elem>(n); };
    for (Elem v : compose)
        if (!in_range(v)) throw Error("algebra: compose entry out of range");
    for (Elem v : meet)
        if (!in_range(v)) throw Error("algebra: meet entry out of range");
    for (Elem v : antidomain)
        if (!in_range(v)) throw Error("algebra: antidomain entry out of range");
    return FiniteAlgebra{std::move(elements), std::move(compose), std::move(meet),
                         std::move(antidomain)};
}

ValidationReport validate(const FiniteAlgebra& alg) {
    ValidationReport rep;
    const int n = alg.n();
    auto fail = [&](const char* law, std::vector<Elem> witness) {
        rep.passed = false;
        rep.failures.push_back(LawFailure{law, std::move(witness)});
    };

    for (Elem a = 0; a < n; ++a)
        if (alg.meet(a, a) != a) {
            fail("meet-idempotent", {a});
            break;
        }
    [&] {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (alg.meet(a, b) != alg.meet(b, a)) {
                    fail("meet-commutative", {a, b});
                    return;
                }
    }();
    [&] {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (alg.meet(alg.meet(a, b), c) != alg.meet(a, alg.meet(b, c))) {
                        fail("meet-associative", {a, b, c});
                        return;
                    }
    }();

    const Elem z = alg.compose(alg.antidomain(0), 0);
    bool zero_ok = true;
    for (Elem a = 1; a < n; ++a)
        if (alg.compose(alg.antidomain(a), a) != z) {
            fail("zero-consistent", {0, a});
            zero_ok = false;
            break;
        }
    if (zero_ok) {
        for (Elem a = 0; a < n; ++a)
            if (alg.meet(z, a) != z || alg.meet(a, z) != z) {
                fail("zero-meet-absorbing", {a});
                break;
            }
        for (Elem a = 0; a < n; ++a)
            if (alg.compose(z, a) != z || alg.compose(a, z) != z) {
                fail("zero-compose-absorbing", {a});
                break;
            }
    }
    return rep;
}

Elem zero(const FiniteAlgebra& alg) {
    const Elem z = alg.compose(alg.antidomain(0), 0);
    for (Elem a = 1; a < alg.n(); ++a)
        if (alg.compose(alg.antidomain(a), a) != z)
            throw InconsistentZero("A(a);a differs between elements '" + alg.elements[0] +
                                   "' and '" + alg.elements[static_cast<size_t>(a)] + "'");
    return z;
}

std::vector<Elem> atoms(const FiniteAlgebra& alg) {
    const Elem z = zero(alg);
    std::vector<Elem> result;
    for (Elem a = 0; a < alg.n(); ++a) {
        if (a == z) continue;
        bool minimal = true;
        for (Elem b = 0; b < alg.n(); ++b) {
            if (b == z || b == a) continue;
            if (leq(alg, b, a)) {
                minimal = false;
                break;
            }
        }
        if (minimal) result.push_back(a);
    }
    return result;
}

bool is_atomic(const FiniteAlgebra& alg) {
    const Elem z = zero(alg);
    const auto at = atoms(alg);
    for (Elem a = 0; a < alg.n(); ++a) {
        if (a == z) continue;
        bool covered = false;
        for (Elem x : at)
            if (leq(alg, x, a)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::optional<Elem> join(const FiniteAlgebra& alg, const std::vector<Elem>& s) {
    if (s.empty()) return zero(alg);
    std::vector<Elem> ub;
    for (Elem u = 0; u < alg.n(); ++u) {
        bool bound = true;
        for (Elem x : s)
            if (!leq(alg, x, u)) {
                bound = false;
                break;
            }
        if (bound) ub.push_back(u);
    }
    for (Elem u0 : ub) {
        bool least = true;
        for (Elem u : ub)
            if (!leq(alg, u0, u)) {
                least = false;
                break;
            }
        if (least) return u0;
    }
    return std::nullopt;
}

std::optional<Elem> meet_set(const FiniteAlgebra& alg, const std::vector<Elem>& s) {
    if (s.empty()) throw EmptyMeet();
    std::vector<Elem> lb;
    for (Elem l = 0; l < alg.n(); ++l) {
        bool bound = true;
        for (Elem x : s)
            if (!leq(alg, l, x)) {
                bound = false;
                break;
            }
        if (bound) lb.push_back(l);
    }
    for (Elem l0 : lb) {
        bool greatest = true;
        for (Elem l : lb)
            if (!leq(alg, l, l0)) {
                greatest = false;
                break;
            }
        if (greatest) return l0;
    }
    return std::nullopt;
}

bool is_atomistic(const FiniteAlgebra& alg) {
    const auto at = atoms(alg);
    for (Elem a = 0; a < alg.n(); ++a) {
        std::vector<Elem> below;
        for (Elem x : at)
            if (leq(alg, x, a)) below.push_back(x);
        auto j = join(alg, below);
        if (!j || *j != a) return false;
    }
    return true;
}

BooleanView downset_boolean(const FiniteAlgebra& alg, Elem a) {
    const Elem z = zero(alg);
    BooleanView view;
    view.top = a;
    view.bottom = z;
    for (Elem b = 0; b < alg.n(); ++b)
        if (leq(alg, b, a)) view.carrier.push_back(b);

    auto comp = [&](Elem b) { return alg.compose(alg.antidomain(b), a); };
    auto in_carrier = [&](Elem b) { return leq(alg, b, a); };
    auto bail = [&](const char* law, std::vector<Elem> witness) {
        throw NotBoolean(law, std::vector<int>(witness.begin(), witness.end()),
                         std::string("down-set of '") + alg.elements[static_cast<size_t>(a)] +
                             "' is not Boolean: " + law);
    };

    for (Elem b : view.carrier) {
        view.complement.push_back(comp(b));
        if (!in_carrier(comp(b))) bail("complement-in-downset", {b});
    }
    if (comp(z) != a) bail("complement-bottom", {z});
    if (comp(a) != z) bail("complement-top", {a});
    // Boolean join derived from meet and complement.
    auto bjoin = [&](Elem b, Elem c) { return comp(alg.meet(comp(b), comp(c))); };
    for (Elem b : view.carrier) {
        if (alg.meet(b, a) != b) bail("meet-top-identity", {b});
        if (bjoin(b, z) != b) bail("join-bottom-identity", {b});
        if (alg.meet(b, comp(b)) != z) bail("meet-complement", {b});
        if (bjoin(b, comp(b)) != a) bail("join-complement", {b});
        if (comp(comp(b)) != b) bail("double-complement", {b});
    }
    for (Elem b : view.carrier)
        for (Elem c : view.carrier) {
            if (!in_carrier(alg.meet(b, c))) bail("meet-in-downset", {b, c});
            for (Elem d : view.carrier) {
                if (alg.meet(b, bjoin(c, d)) != bjoin(alg.meet(b, c), alg.meet(b, d)))
                    bail("distribute-meet-over-join", {b, c, d});
                if (bjoin(b, alg.meet(c, d)) != alg.meet(bjoin(b, c), bjoin(b, d)))
                    bail("distribute-join-over-meet", {b, c, d});
            }
        }
    return view;
}

PhiResult check_phi(const FiniteAlgebra& alg) {
    const auto at = atoms(alg);
    const int n = alg.n();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                bool premise = true;
                for (Elem x : at) {
                    if (!leq(alg, x, b)) continue;
                    if (!leq(alg, alg.compose(a, x), c)) {
                        premise = false;
                        break;
                    }
                }
                if (premise && !leq(alg, alg.compose(a, b), c))
                    return PhiResult{false, {a, b, c}};
            }
    return PhiResult{};
}

FiniteAlgebra direct_product(const FiniteAlgebra& a1, const FiniteAlgebra& a2) {
    const int n1 = a1.n(), n2 = a2.n();
    const int n = n1 * n2;
    std::vector<std::string> elements;
    elements.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            elements.push_back("(" + a1.elements[static_cast<size_t>(i)] + "|" +
                               a2.elements[static_cast<size_t>(j)] + ")");
    auto pack = [n2](Elem i, Elem j) { return i * n2 + j; };
    std::vector<Elem> compose(static_cast<size_t>(n) * n), meet(static_cast<size_t>(n) * n),
        anti(static_cast<size_t>(n));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            const Elem a = pack(i, j);
            anti[static_cast<size_t>(a)] = pack(a1.antidomain(i), a2.antidomain(j));
            for (int k = 0; k < n1; ++k)
                for (int l = 0; l < n2; ++l) {
                    const Elem b = pack(k, l);
                    compose[static_cast<size_t>(a) * n + b] =
                        pack(a1.compose(i, k), a2.compose(j, l));
                    meet[static_cast<size_t>(a) * n + b] = pack(a1.meet(i, k), a2.meet(j, l));
                }
        }
    return FiniteAlgebra{std::move(elements), std::move(compose), std::move(meet), std::move(anti)};
}

FiniteAlgebra boolean_as_algebra(int atom_count) {
    if (atom_count < 0 || atom_count > 8)
        throw Error("boolean_as_algebra: atom count out of the desk-scale range 0..8");
    const int n = 1 << atom_count;
    std::vector<std::string> elements;
    elements.reserve(static_cast<size_t>(n));
    for (int mask = 0; mask < n; ++mask) {
        std::string name = "{";
        for (int i = 0; i < atom_count; ++i)
            if (mask & (1 << i)) {
                if (name.size() > 1) name += ",";
                name += std::to_string(i + 1);
            }
        name += "}";
        elements.push_back(std::move(name));
    }
    std::vector<Elem> compose(static_cast<size_t>(n) * n), meet(static_cast<size_t>(n) * n),
        anti(static_cast<size_t>(n));
    const int full = n - 1;
    for (int a = 0; a < n; ++a) {
        anti[static_cast<size_t>(a)] = full & ~a;
        for (int b = 0; b < n; ++b) {
            compose[static_cast<size_t>(a) * n + b] = a & b;
            meet[static_cast<size_t>(a) * n + b] = a & b;
        }
    }
    return FiniteAlgebra{std::move(elements), std::move(compose), std::move(meet), std::move(anti)};
}

namespace {

// Atom-set of each element as a bitmask over the atom list.
std::vector<uint64_t> atom_masks(const FiniteAlgebra& alg, const std::vector<Elem>& at) {
    std::vector<uint64_t> masks(static_cast<size_t>(alg.n()), 0);
    for (size_t i = 0; i < at.size(); ++i)
        for (Elem a = 0; a < alg.n(); ++a)
            if (leq(alg, at[i], a)) masks[static_cast<size_t>(a)] |= (1ull << i);
    return masks;
}

struct IsoSearch {
    const FiniteAlgebra& a1;
    const FiniteAlgebra& a2;
    const std::vector<Elem>& at1;
    const std::vector<Elem>& at2;
    std::vector<int> sigma;  // atom index in a1 -> atom index in a2
    std::vector<bool> used;

    bool compatible(size_t i, size_t j) const {
        const Elem x = at1[i], y = at2[j];
        if ((a1.compose(x, x) == x) != (a2.compose(y, y) == y)) return false;
        for (size_t k = 0; k < i; ++k) {
            const Elem xk = at1[k], yk = at2[static_cast<size_t>(sigma[k])];
            if ((a1.meet(x, xk) == x) != (a2.meet(y, yk) == y)) return false;
            if ((a1.compose(x, xk) == x) != (a2.compose(y, yk) == y)) return false;
            if ((a1.compose(xk, x) == xk) != (a2.compose(yk, y) == yk)) return false;
        }
        return true;
    }

    bool run(size_t i, const std::vector<uint64_t>& m1,
             const std::unordered_map<uint64_t, Elem>& by_mask2, std::vector<Elem>& out) {
        if (i == at1.size()) return finish(m1, by_mask2, out);
        for (size_t j = 0; j < at2.size(); ++j) {
            if (used[j] || !compatible(i, j)) continue;
            sigma[i] = static_cast<int>(j);
            used[j] = true;
            if (run(i + 1, m1, by_mask2, out)) return true;
            used[j] = false;
        }
        return false;
    }

    bool finish(const std::vector<uint64_t>& m1,
                const std::unordered_map<uint64_t, Elem>& by_mask2, std::vector<Elem>& out) {
        const int n = a1.n();
        out.assign(static_cast<size_t>(n), -1);
        for (Elem a = 0; a < n; ++a) {
            uint64_t mapped = 0;
            for (size_t i = 0; i < at1.size(); ++i)
                if (m1[static_cast<size_t>(a)] & (1ull << i)) mapped |= (1ull << sigma[i]);
            auto it = by_mask2.find(mapped);
            if (it == by_mask2.end()) return false;
            out[static_cast<size_t>(a)] = it->second;
        }
        std::vector<bool> hit(static_cast<size_t>(n), false);
        for (Elem a = 0; a < n; ++a) {
            if (hit[static_cast<size_t>(out[static_cast<size_t>(a)])]) return false;
            hit[static_cast<size_t>(out[static_cast<size_t>(a)])] = true;
        }
        for (Elem a = 0; a < n; ++a) {
            if (out[static_cast<size_t>(a1.antidomain(a))] !=
                a2.antidomain(out[static_cast<size_t>(a)]))
                return false;
            for (Elem b = 0; b < n; ++b) {
                if (out[static_cast<size_t>(a1.compose(a, b))] !=
                    a2.compose(out[static_cast<size_t>(a)], out[static_cast<size_t>(b)]))
                    return false;
                if (out[static_cast<size_t>(a1.meet(a, b))] !=
                    a2.meet(out[static_cast<size_t>(a)], out[static_cast<size_t>(b)]))
                    return false;
            }
        }
        return true;
    }
};

} // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteAlgebra& a1, const FiniteAlgebra& a2) {
    if (a1.n() != a2.n()) return std::nullopt;
    std::vector<Elem> at1, at2;
    try {
        at1 = atoms(a1);
        at2 = atoms(a2);
    } catch (const InconsistentZero&) {
        return std::nullopt;
    }
    if (at1.size() != at2.size()) return std::nullopt;
    if (at1.size() > 63) throw Error("find_isomorphism: more than 63 atoms");

    const auto m1 = atom_masks(a1, at1);
    const auto m2 = atom_masks(a2, at2);
    // The atom-matching search extends an atom bijection to the whole map via
    // atom sets, so each element must be determined by its atom set.
    std::unordered_map<uint64_t, Elem> by_mask2;
    for (Elem a = 0; a < a2.n(); ++a)
        if (!by_mask2.emplace(m2[static_cast<size_t>(a)], a).second) return std::nullopt;

    IsoSearch search{a1, a2, at1, at2,
                     std::vector<int>(at1.size(), -1),
                     std::vector<bool>(at2.size(), false)};
    std::vector<Elem> out;
    if (search.run(0, m1, by_mask2, out)) return out;
    return std::nullopt;
}

} // namespace pfa
