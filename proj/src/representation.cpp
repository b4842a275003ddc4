#include "pfa/representation.hpp"

#include <algorithm>
#include <numeric>

#include "pfa/errors.hpp"

namespace pfa {

const char* refutation_kind_name(Refutation::Kind kind) {
    switch (kind) {
        case Refutation::Kind::NonAtomImage: return "non_atom_image";
        case Refutation::Kind::InjectivityCollision: return "injectivity_collision";
        case Refutation::Kind::OperationMismatch: return "operation_mismatch";
        case Refutation::Kind::InvalidAlgebra: return "invalid_algebra";
    }
    return "unknown";
}

namespace {

// Index-level core of the theta construction. Assumes validate() passed.
// Runs the exact check order of build_theta + verify_representation so the
// two paths can be cross-checked against each other.
struct ThetaCore {
    std::optional<Refutation> refutation;
    std::vector<Elem> atom_list;
    // n * m image table over atom indices, -1 undefined.
    std::vector<int8_t> maps;
};

ThetaCore theta_core(const FiniteAlgebra& alg) {
    ThetaCore core;
    const Elem z = zero(alg);
    core.atom_list = atoms(alg);
    const int n = alg.n();
    const int m = static_cast<int>(core.atom_list.size());
    if (m > 127) throw Error("theta: more than 127 atoms");
    std::vector<int> atom_index(static_cast<size_t>(n), -1);
    for (int i = 0; i < m; ++i) atom_index[static_cast<size_t>(core.atom_list[static_cast<size_t>(i)])] = i;

    core.maps.assign(static_cast<size_t>(n) * static_cast<size_t>(m), -1);
    auto map_of = [&](Elem a) { return core.maps.data() + static_cast<size_t>(a) * static_cast<size_t>(m); };
    for (Elem a = 0; a < n; ++a) {
        int8_t* row = map_of(a);
        for (int xi = 0; xi < m; ++xi) {
            const Elem t = alg.compose(core.atom_list[static_cast<size_t>(xi)], a);
            if (t == z) continue;
            if (atom_index[static_cast<size_t>(t)] < 0) {
                core.refutation = Refutation{Refutation::Kind::NonAtomImage, "",
                                             {core.atom_list[static_cast<size_t>(xi)], a}};
                return core;
            }
            row[xi] = static_cast<int8_t>(atom_index[static_cast<size_t>(t)]);
        }
    }

    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (std::equal(map_of(a), map_of(a) + m, map_of(b))) {
                core.refutation =
                    Refutation{Refutation::Kind::InjectivityCollision, "", {a, b}};
                return core;
            }

    std::vector<int8_t> tmp(static_cast<size_t>(m));
    for (Elem a = 0; a < n; ++a) {
        const int8_t* fa = map_of(a);
        for (int xi = 0; xi < m; ++xi) tmp[static_cast<size_t>(xi)] = fa[xi] < 0 ? static_cast<int8_t>(xi) : int8_t{-1};
        if (!std::equal(tmp.begin(), tmp.end(), map_of(alg.antidomain(a)))) {
            core.refutation = Refutation{Refutation::Kind::OperationMismatch, "antidomain", {a}};
            return core;
        }
        for (Elem b = 0; b < n; ++b) {
            const int8_t* fb = map_of(b);
            for (int xi = 0; xi < m; ++xi) {
                const int8_t y = fa[xi];
                tmp[static_cast<size_t>(xi)] = y < 0 ? int8_t{-1} : fb[y];
            }
            if (!std::equal(tmp.begin(), tmp.end(), map_of(alg.compose(a, b)))) {
                core.refutation = Refutation{Refutation::Kind::OperationMismatch, "compose", {a, b}};
                return core;
            }
            for (int xi = 0; xi < m; ++xi)
                tmp[static_cast<size_t>(xi)] = fa[xi] == fb[xi] ? fa[xi] : int8_t{-1};
            if (!std::equal(tmp.begin(), tmp.end(), map_of(alg.meet(a, b)))) {
                core.refutation = Refutation{Refutation::Kind::OperationMismatch, "meet", {a, b}};
                return core;
            }
        }
    }
    return core;
}

std::optional<Refutation> invalid_algebra_refutation(const FiniteAlgebra& alg) {
    const auto report = validate(alg);
    if (report.passed) return std::nullopt;
    return Refutation{Refutation::Kind::InvalidAlgebra, report.failures.front().law,
                      report.failures.front().witness};
}

} // namespace

ThetaOutcome build_theta(const FiniteAlgebra& alg) {
    ThetaOutcome out;
    if (auto bad = invalid_algebra_refutation(alg)) {
        out.refutation = std::move(bad);
        return out;
    }
    ThetaCore core = theta_core(alg);
    if (core.refutation) {
        out.refutation = std::move(core.refutation);
        return out;
    }

    const int n = alg.n();
    const int m = static_cast<int>(core.atom_list.size());
    std::vector<std::string> points;
    points.reserve(static_cast<size_t>(m));
    for (Elem x : core.atom_list) points.push_back(alg.elements[static_cast<size_t>(x)]);
    Base base(std::move(points));

    Representation rep;
    rep.source = std::make_shared<const FiniteAlgebra>(alg);
    rep.base = base;
    rep.assignment.reserve(static_cast<size_t>(n));
    for (Elem a = 0; a < n; ++a) {
        std::vector<int32_t> im(static_cast<size_t>(m));
        for (int xi = 0; xi < m; ++xi)
            im[static_cast<size_t>(xi)] = core.maps[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(xi)];
        rep.assignment.emplace_back(base, std::move(im));
    }
    rep = verify_representation(std::move(rep));
    if (!rep.verified())
        throw std::logic_error("build_theta: index-level checks passed but verification failed");
    out.representation = std::move(rep);
    return out;
}

CompletenessReport check_completeness(const Representation& rep) {
    if (!rep.verified()) throw Unverified("check_completeness: representation not verified");
    CompletenessReport r;
    r.meet_complete = is_meet_complete(rep);
    r.join_complete = is_join_complete(rep);
    r.atomic = is_atomic_rep(rep);
    if (r.meet_complete != r.join_complete || r.join_complete != r.atomic)
        throw std::logic_error("completeness predicates disagree on a verified representation");
    return r;
}

Verdict decide_complete_representability(const FiniteAlgebra& alg) {
    Verdict v;
    if (auto bad = invalid_algebra_refutation(alg)) {
        v.refutation = std::move(bad);
        return v;
    }
    // Refutations are produced without assembling partial functions; the
    // index-level core and the full construction share the check order.
    ThetaCore core = theta_core(alg);
    if (core.refutation) {
        v.refutation = std::move(core.refutation);
        return v;
    }
    ThetaOutcome theta = build_theta(alg);
    if (!theta.verified())
        throw std::logic_error("decide: index-level core accepted but theta verification refuted");
    if (!check_completeness(*theta.representation).all_true())
        throw std::logic_error("decide: theta representation is not complete");
    v.completely_representable = true;
    v.witness = std::move(theta.representation);
    return v;
}

// ---------------------------------------------------------------------------
// Brute-force oracle.
//
// Partial functions on a base of size k <= 15 are packed 4 bits per point
// (0xF = undefined). The search assigns functions to a small generating set
// of elements; every operation image of assigned elements is propagated and
// checked, so a complete assignment is a verified representation.
// ---------------------------------------------------------------------------

namespace {

using Packed = uint64_t;
constexpr int kNibUndef = 0xF;

inline int get_nib(Packed f, int x) { return static_cast<int>((f >> (4 * x)) & 0xFull); }

struct PackedOps {
    int k = 0;

    Packed undef_all() const {
        Packed r = 0;
        for (int x = 0; x < k; ++x) r |= static_cast<Packed>(kNibUndef) << (4 * x);
        return r;
    }
    Packed compose(Packed f, Packed g) const {
        Packed r = 0;
        for (int x = 0; x < k; ++x) {
            const int y = get_nib(f, x);
            const int v = y == kNibUndef ? kNibUndef : get_nib(g, y);
            r |= static_cast<Packed>(v) << (4 * x);
        }
        return r;
    }
    Packed intersect(Packed f, Packed g) const {
        Packed r = 0;
        for (int x = 0; x < k; ++x) {
            const int a = get_nib(f, x);
            const int v = a == get_nib(g, x) ? a : kNibUndef;
            r |= static_cast<Packed>(v) << (4 * x);
        }
        return r;
    }
    Packed anti(Packed f) const {
        Packed r = 0;
        for (int x = 0; x < k; ++x) {
            const int v = get_nib(f, x) == kNibUndef ? x : kNibUndef;
            r |= static_cast<Packed>(v) << (4 * x);
        }
        return r;
    }
    bool subfunc(Packed f, Packed g) const {
        for (int x = 0; x < k; ++x) {
            const int a = get_nib(f, x);
            if (a != kNibUndef && a != get_nib(g, x)) return false;
        }
        return true;
    }
};

// All partial functions on k points, in a fixed deterministic order.
std::vector<Packed> all_functions(int k) {
    std::vector<Packed> out;
    uint64_t total = 1;
    for (int x = 0; x < k; ++x) total *= static_cast<uint64_t>(k + 1);
    out.reserve(total);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        Packed f = 0;
        for (int x = 0; x < k; ++x) {
            const int digit = static_cast<int>(c % static_cast<uint64_t>(k + 1));
            c /= static_cast<uint64_t>(k + 1);
            const int v = digit == 0 ? kNibUndef : digit - 1;
            f |= static_cast<Packed>(v) << (4 * x);
        }
        out.push_back(f);
    }
    return out;
}

// Representatives of the base-relabeling orbits: keep f iff it is the
// numeric minimum of {s o f o s^-1}. Only used for small k where the
// permutation set is cheap.
std::vector<Packed> canonical_functions(int k, const std::vector<Packed>& all) {
    if (k > 5) return all;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<Packed> out;
    for (Packed f : all) {
        bool minimal = true;
        for (const auto& perm : perms) {
            Packed g = 0;
            for (int x = 0; x < k; ++x) {
                const int y = get_nib(f, x);
                const int v = y == kNibUndef ? kNibUndef : perm[static_cast<size_t>(y)];
                g |= static_cast<Packed>(v) << (4 * perm[static_cast<size_t>(x)]);
            }
            if (g < f) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(f);
    }
    return out;
}

// Elements whose images are forced once the seed's images are known:
// closure of the seed under the three table operations.
std::vector<bool> table_closure(const FiniteAlgebra& alg, std::vector<bool> covered) {
    const int n = alg.n();
    bool grew = true;
    while (grew) {
        grew = false;
        for (Elem a = 0; a < n; ++a) {
            if (!covered[static_cast<size_t>(a)]) continue;
            if (!covered[static_cast<size_t>(alg.antidomain(a))]) {
                covered[static_cast<size_t>(alg.antidomain(a))] = true;
                grew = true;
            }
            for (Elem b = 0; b < n; ++b) {
                if (!covered[static_cast<size_t>(b)]) continue;
                for (Elem t : {alg.compose(a, b), alg.compose(b, a), alg.meet(a, b), alg.meet(b, a)})
                    if (!covered[static_cast<size_t>(t)]) {
                        covered[static_cast<size_t>(t)] = true;
                        grew = true;
                    }
            }
        }
    }
    return covered;
}

// Greedy generating set: repeatedly add the element whose table closure
// grows the covered set the most (ties to the smallest index). The search
// only branches on these slots; everything else is propagated.
std::vector<Elem> slot_order(const FiniteAlgebra& alg, Elem z) {
    const int n = alg.n();
    std::vector<bool> covered(static_cast<size_t>(n), false);
    if (z >= 0) {
        covered[static_cast<size_t>(z)] = true;
        covered = table_closure(alg, std::move(covered));
    }
    std::vector<Elem> slots;
    auto count = [](const std::vector<bool>& v) {
        return std::count(v.begin(), v.end(), true);
    };
    while (count(covered) < n) {
        Elem best = -1;
        long best_gain = -1;
        for (Elem e = 0; e < n; ++e) {
            if (covered[static_cast<size_t>(e)]) continue;
            auto trial = covered;
            trial[static_cast<size_t>(e)] = true;
            const long gain = count(table_closure(alg, std::move(trial)));
            if (gain > best_gain) {
                best_gain = gain;
                best = e;
            }
        }
        slots.push_back(best);
        covered[static_cast<size_t>(best)] = true;
        covered = table_closure(alg, std::move(covered));
    }
    return slots;
}

struct Searcher {
    const FiniteAlgebra& alg;
    const std::vector<Elem>& slots;
    PackedOps ops;
    const std::vector<Packed>& candidates;
    const std::vector<Packed>& first_candidates;
    uint64_t budget;
    uint64_t& nodes;

    std::vector<Packed> value;
    std::vector<uint8_t> assigned;
    std::vector<Elem> trail;

    explicit Searcher(const FiniteAlgebra& a, const std::vector<Elem>& s, PackedOps o,
                      const std::vector<Packed>& cands, const std::vector<Packed>& first,
                      uint64_t b, uint64_t& n)
        : alg(a), slots(s), ops(o), candidates(cands), first_candidates(first), budget(b),
          nodes(n), value(static_cast<size_t>(a.n()), 0),
          assigned(static_cast<size_t>(a.n()), 0) {}

    bool place(Elem e, Packed v) {
        for (Elem d = 0; d < alg.n(); ++d)
            if (assigned[static_cast<size_t>(d)] && value[static_cast<size_t>(d)] == v) return false;
        value[static_cast<size_t>(e)] = v;
        assigned[static_cast<size_t>(e)] = 1;
        trail.push_back(e);
        return true;
    }

    bool check_or_place(Elem t, Packed v) {
        if (assigned[static_cast<size_t>(t)]) return value[static_cast<size_t>(t)] == v;
        return place(t, v);
    }

    bool propagate(size_t qhead) {
        while (qhead < trail.size()) {
            const Elem e = trail[qhead++];
            const Packed ve = value[static_cast<size_t>(e)];
            if (!check_or_place(alg.antidomain(e), ops.anti(ve))) return false;
            for (Elem d = 0; d < alg.n(); ++d) {
                if (!assigned[static_cast<size_t>(d)]) continue;
                const Packed vd = value[static_cast<size_t>(d)];
                if (!check_or_place(alg.compose(e, d), ops.compose(ve, vd))) return false;
                if (!check_or_place(alg.compose(d, e), ops.compose(vd, ve))) return false;
                if (!check_or_place(alg.meet(e, d), ops.intersect(ve, vd))) return false;
                if (!check_or_place(alg.meet(d, e), ops.intersect(vd, ve))) return false;
            }
        }
        return true;
    }

    void unwind(size_t mark) {
        while (trail.size() > mark) {
            assigned[static_cast<size_t>(trail.back())] = 0;
            trail.pop_back();
        }
    }

    bool assign_and_propagate(Elem e, Packed v) {
        const size_t mark = trail.size();
        if (place(e, v) && propagate(mark)) return true;
        unwind(mark);
        return false;
    }

    bool search(size_t slot_idx) {
        while (slot_idx < slots.size() && assigned[static_cast<size_t>(slots[slot_idx])]) ++slot_idx;
        if (slot_idx == slots.size())
            return std::all_of(assigned.begin(), assigned.end(), [](uint8_t b) { return b != 0; });
        const Elem e = slots[slot_idx];
        const auto& cands = slot_idx == 0 ? first_candidates : candidates;
        for (Packed v : cands) {
            if (++nodes > budget) throw SearchBudgetExceeded("representation search budget exhausted");
            bool plausible = true;
            for (Elem d = 0; d < alg.n() && plausible; ++d) {
                if (!assigned[static_cast<size_t>(d)]) continue;
                const Packed vd = value[static_cast<size_t>(d)];
                if (vd == v) plausible = false;
                else if (alg.meet(d, e) == d && !ops.subfunc(vd, v)) plausible = false;
                else if (alg.meet(e, d) == e && !ops.subfunc(v, vd)) plausible = false;
            }
            if (!plausible) continue;
            const size_t mark = trail.size();
            if (place(e, v) && propagate(mark)) {
                if (search(slot_idx + 1)) return true;
            }
            unwind(mark);
        }
        return false;
    }
};

Representation empty_base_representation(const FiniteAlgebra& alg) {
    Representation rep;
    rep.source = std::make_shared<const FiniteAlgebra>(alg);
    rep.base = Base(std::vector<std::string>{});
    rep.assignment.assign(1, empty_function(rep.base));
    rep = verify_representation(std::move(rep));
    return rep;
}

} // namespace

std::optional<Representation> brute_force_search(const FiniteAlgebra& alg,
                                                 BruteForceOptions options) {
    if (alg.n() == 1) return empty_base_representation(alg);

    Elem z;
    try {
        z = zero(alg);
    } catch (const InconsistentZero&) {
        // Every A(a);a is forced to the empty function, so two distinct
        // values of A(a);a rule out injectivity in any representation.
        return std::nullopt;
    }
    const int atom_count = static_cast<int>(atoms(alg).size());
    const int max_base = options.max_base < 0 ? atom_count : options.max_base;
    if (max_base > 15) throw Error("brute_force_search: base sizes above 15 are not supported");

    const std::vector<Elem> slots = slot_order(alg, z);
    uint64_t nodes = 0;
    for (int k = 1; k <= max_base; ++k) {
        PackedOps ops{k};
        const std::vector<Packed> cands = all_functions(k);
        const std::vector<Packed> first = canonical_functions(k, cands);
        Searcher searcher(alg, slots, ops, cands, first, options.node_budget, nodes);
        if (!searcher.assign_and_propagate(z, ops.undef_all())) continue;
        if (!searcher.search(0)) continue;

        std::vector<std::string> points;
        points.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) points.push_back("p" + std::to_string(i));
        Base base(std::move(points));
        Representation rep;
        rep.source = std::make_shared<const FiniteAlgebra>(alg);
        rep.base = base;
        for (Elem a = 0; a < alg.n(); ++a) {
            std::vector<int32_t> im(static_cast<size_t>(k));
            for (int x = 0; x < k; ++x) {
                const int v = get_nib(searcher.value[static_cast<size_t>(a)], x);
                im[static_cast<size_t>(x)] = v == kNibUndef ? PartialFunction::kUndefined : v;
            }
            rep.assignment.emplace_back(base, std::move(im));
        }
        rep = verify_representation(std::move(rep));
        if (!rep.verified())
            throw std::logic_error("brute_force_search: found assignment failed re-verification");
        return rep;
    }
    return std::nullopt;
}

} // namespace pfa
