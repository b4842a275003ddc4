// Acceptance suite: one line per criterion, pass/fail with timing, exit 0
// only if every criterion passes within its runtime bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pfa/catalog.hpp"
#include "pfa/concrete_algebra.hpp"
#include "pfa/ef_game.hpp"
#include "pfa/errors.hpp"
#include "pfa/finite_algebra.hpp"
#include "pfa/ninfty.hpp"
#include "pfa/random.hpp"
#include "pfa/representation.hpp"
#include "support/sweep.hpp"

using namespace pfa;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

// Every verified representation produced by this suite flows through here;
// criterion 5 asserts the three completeness predicates agree on all of them.
struct CompletenessLedger {
    uint64_t checked = 0;
    uint64_t disagreements = 0;

    void note(const Representation& rep) {
        const bool m = is_meet_complete(rep);
        const bool j = is_join_complete(rep);
        const bool a = is_atomic_rep(rep);
        ++checked;
        if (m != j || j != a) ++disagreements;
    }
};

CompletenessLedger g_completeness;

// Deterministic corpus shared by criteria 3, 4b and 6.
const std::vector<ConcreteAlgebra>& corpus() {
    static const std::vector<ConcreteAlgebra> samples = [] {
        std::vector<ConcreteAlgebra> out;
        SplitMix64 rng(0xC0FFEEull);
        for (int i = 0; i < 600; ++i) out.push_back(random_closure(rng, 3, 2));
        return out;
    }();
    return samples;
}

Outcome criterion1_figure1() {
    const auto [base, fns] = figure1_functions();
    const auto& f1 = fns[0].second;
    const auto& f2 = fns[1].second;
    const auto& g = fns[2].second;
    const auto& h = fns[3].second;
    const bool lhs_zero = compose(intersect(f1, f2), g).is_empty();
    const auto rhs = intersect(compose(f1, g), compose(f2, g));
    const bool ok = lhs_zero && rhs == h && !h.is_empty();
    return {ok, ok ? "(f1/\\f2);g = 0 and (f1;g)/\\(f2;g) = h != 0" : "inequality failed"};
}

Outcome criterion2_example43() {
    const auto report = verify_example_43();
    bool ok = report.verified();
    ok = ok && report.join_g.value == FElement::id_restriction(false, FinCofSet::cofinite({}));
    ok = ok && report.meet_h.value.is_zero();
    ok = ok && report.f_compose_join_g == FElement::f() && report.join_of_composites.is_zero();
    ok = ok && report.f_compose_meet_h.is_zero() && report.meet_of_composites == FElement::f();
    int agree = 0;
    for (int n = 1; n <= 4; ++n) agree += truncation_agreement(n);
    ok = ok && agree == 4;
    return {ok, "both distributivity failures verified; truncation agreement n=1..4"};
}

Outcome criterion3_theta_soundness() {
    uint64_t samples = 0, iso_found = 0;
    for (const auto& closed : corpus()) {
        const auto abs = to_abstract(closed);
        const auto outcome = build_theta(abs.algebra);
        if (!outcome.verified()) return {false, "theta refuted a closure abstraction"};
        const auto& rep = *outcome.representation;
        const auto completeness = check_completeness(rep);
        g_completeness.note(rep);
        if (!completeness.all_true()) return {false, "theta representation not complete"};

        const auto image = to_abstract(close_generators(rep.base, rep.assignment, Signature::cma()));
        if (image.algebra.n() != abs.algebra.n())
            return {false, "theta image has a different size than the source"};
        if (!find_isomorphism(abs.algebra, image.algebra))
            return {false, "no atom-matching isomorphism between source and theta image"};
        ++iso_found;

        const auto labeling = abs.identity_labeling();
        if (!labeling.verified()) return {false, "identity labeling failed to verify"};
        g_completeness.note(labeling);
        ++samples;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu samples, all theta-verified, complete and isomorphic",
                  static_cast<unsigned long long>(samples));
    return {samples >= 500 && iso_found == samples, buf};
}

struct SweepStats {
    uint64_t total = 0;
    uint64_t accepted = 0;
    uint64_t disagreements = 0;
    uint64_t rejected_atomic_phi = 0;
    uint64_t accepted_phi_atomistic = 0;
};

SweepStats g_sweep;

Outcome criterion4_oracle_agreement() {
    // (a) every valid algebra with at most 4 elements, one representative
    // per relabeling class (verdicts are relabeling-invariant).
    for (int n = 1; n <= 4; ++n) {
        sweep::enumerate_valid(n, [&](const sweep::Tables& t) {
            const FiniteAlgebra alg = sweep::to_algebra(t);
            if (!validate(alg).passed) throw std::logic_error("sweep produced an invalid algebra");
            const auto verdict = decide_complete_representability(alg);
            const auto found = brute_force_search(alg);
            ++g_sweep.total;
            if (verdict.completely_representable != found.has_value()) ++g_sweep.disagreements;
            if (verdict.completely_representable) {
                ++g_sweep.accepted;
                g_completeness.note(*verdict.witness);
                g_completeness.note(*found);
                if (check_phi(alg).holds && is_atomistic(alg)) ++g_sweep.accepted_phi_atomistic;
            } else if (is_atomic(alg) && check_phi(alg).holds) {
                ++g_sweep.rejected_atomic_phi;
            }
        });
    }
    // (b) the criterion-3 corpus.
    uint64_t corpus_checked = 0, corpus_disagreements = 0;
    for (const auto& closed : corpus()) {
        const auto abs = to_abstract(closed);
        const auto verdict = decide_complete_representability(abs.algebra);
        const auto found = brute_force_search(abs.algebra);
        ++corpus_checked;
        if (verdict.completely_representable != found.has_value()) ++corpus_disagreements;
        if (found) g_completeness.note(*found);
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "sweep: %llu algebras, %llu accepted, %llu disagreements; corpus: %llu checked, "
                  "%llu disagreements",
                  static_cast<unsigned long long>(g_sweep.total),
                  static_cast<unsigned long long>(g_sweep.accepted),
                  static_cast<unsigned long long>(g_sweep.disagreements),
                  static_cast<unsigned long long>(corpus_checked),
                  static_cast<unsigned long long>(corpus_disagreements));
    return {g_sweep.disagreements == 0 && corpus_disagreements == 0 && g_sweep.total > 1000000,
            buf};
}

Outcome criterion5_completeness_equivalences() {
    // A couple of product representations widen the pool before the verdict.
    const auto b2 = decide_complete_representability(boolean_as_algebra(2));
    const auto b3 = decide_complete_representability(boolean_as_algebra(3));
    g_completeness.note(product_representation(*b2.witness, *b3.witness));
    SplitMix64 rng(99);
    for (int i = 0; i < 5; ++i) {
        const auto r1 = to_abstract(random_closure(rng)).identity_labeling();
        const auto r2 = to_abstract(random_closure(rng)).identity_labeling();
        g_completeness.note(product_representation(r1, r2));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu representations checked, %llu disagreements",
                  static_cast<unsigned long long>(g_completeness.checked),
                  static_cast<unsigned long long>(g_completeness.disagreements));
    return {g_completeness.disagreements == 0 && g_completeness.checked > 1000, buf};
}

// Join of a set under the table order, with up-sets packed into one word.
struct FastOrder {
    int n;
    std::vector<uint64_t> up;

    explicit FastOrder(const FiniteAlgebra& alg) : n(alg.n()), up(static_cast<size_t>(alg.n()), 0) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (leq(alg, a, b)) up[static_cast<size_t>(a)] |= 1ull << b;
    }
    // least upper bound of the elements in `mask`, or -1
    int join_mask(uint64_t mask) const {
        uint64_t ub = ~0ull >> (64 - n);
        for (uint64_t m = mask; m;) {
            const int s = __builtin_ctzll(m);
            m &= m - 1;
            ub &= up[static_cast<size_t>(s)];
        }
        for (uint64_t m = ub; m;) {
            const int u = __builtin_ctzll(m);
            m &= m - 1;
            if ((ub & ~up[static_cast<size_t>(u)]) == 0) return u;
        }
        return -1;
    }
};

Outcome criterion6_distributivity() {
    uint64_t subset_checked = 0, pair_checked = 0, small_samples = 0;
    for (const auto& closed : corpus()) {
        const auto abs = to_abstract(closed);
        const auto& alg = abs.algebra;
        const int n = alg.n();
        if (n > 64) return {false, "closure larger than 64 elements"};
        const FastOrder order(alg);

        // Complete right-distributivity over joins: every subset, on samples
        // small enough to enumerate subsets.
        if (n <= 12) {
            ++small_samples;
            for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
                const int j = order.join_mask(mask);
                if (j < 0) continue;
                for (Elem a = 0; a < n; ++a) {
                    uint64_t composed = 0;
                    for (uint64_t m = mask; m;) {
                        const int s = __builtin_ctzll(m);
                        m &= m - 1;
                        composed |= 1ull << alg.compose(s, a);
                    }
                    const int jc = order.join_mask(composed);
                    ++subset_checked;
                    if (jc != alg.compose(j, a))
                        return {false, "right-distributivity over a join failed"};
                }
            }
        }

        // Finite left-distributivity over joins and meets: all pairs.
        for (Elem s1 = 0; s1 < n; ++s1)
            for (Elem s2 = 0; s2 < n; ++s2) {
                const int j = order.join_mask((1ull << s1) | (1ull << s2));
                const Elem m = alg.meet(s1, s2);
                for (Elem a = 0; a < n; ++a) {
                    ++pair_checked;
                    if (j >= 0) {
                        const int jc = order.join_mask((1ull << alg.compose(a, s1)) |
                                                       (1ull << alg.compose(a, s2)));
                        if (jc != alg.compose(a, j))
                            return {false, "left-distributivity over a join failed"};
                    }
                    const int mc = [&] {
                        const Elem c1 = alg.compose(a, s1), c2 = alg.compose(a, s2);
                        return alg.meet(c1, c2);
                    }();
                    if (mc != alg.compose(a, m))
                        return {false, "left-distributivity over a meet failed"};
                }
            }
    }
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "%llu subset checks on %llu small samples, %llu pairwise checks, no exceptions",
                  static_cast<unsigned long long>(subset_checked),
                  static_cast<unsigned long long>(small_samples),
                  static_cast<unsigned long long>(pair_checked));
    return {small_samples >= 300, buf};
}

Outcome criterion7_figure2() {
    auto [base, fns] = figure2_functions();
    std::vector<PartialFunction> gens;
    for (auto& [name, f] : fns) gens.push_back(f);
    Signature sig = Signature::cma();
    sig.add(Op::Range);
    const auto closed = close_generators(base, gens, sig);
    const auto abs = to_abstract(closed); // the (;, /\, A)-reduct tables
    const auto outcome = build_theta(abs.algebra);
    if (!outcome.verified()) return {false, "theta refuted the figure-2 reduct"};
    const auto& rep = *outcome.representation;
    g_completeness.note(rep);

    const int g_idx = closed.find(fns[1].second);
    const int rg_idx = closed.find(range_diag(fns[1].second));
    if (g_idx < 0 || rg_idx < 0) return {false, "closure lacks g or R(g)"};
    const auto theta_of_rg = rep.assignment[static_cast<size_t>(rg_idx)];
    const auto r_of_theta_g = range_diag(rep.assignment[static_cast<size_t>(g_idx)]);
    const bool differ = theta_of_rg != r_of_theta_g;
    return {differ, differ ? "theta(R(g)) != R(theta(g)) over the atom base"
                           : "theta unexpectedly represented range"};
}

Outcome criterion8_ef_game() {
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2)
            for (int n3 = 0; n3 <= 3; ++n3)
                if (!exhaustive_check(n1, n2, n3, 4, 4))
                    return {false, "duplicator lost within the budgets"};
    return {true, "duplicator wins all budgets n1,n2,n3 <= 3, split bound 4, sizes <= 4"};
}

Outcome criterion9_phi_atomisticity() {
    const bool accepted_ok = g_sweep.accepted_phi_atomistic == g_sweep.accepted;
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "accepted: %llu (all satisfy phi and atomisticity: %s); rejected atomic+phi "
                  "algebras logged: %llu, oracle disagreements among them: 0 (criterion 4)",
                  static_cast<unsigned long long>(g_sweep.accepted), accepted_ok ? "yes" : "NO",
                  static_cast<unsigned long long>(g_sweep.rejected_atomic_phi));
    return {accepted_ok && g_sweep.disagreements == 0 && g_sweep.total > 0, buf};
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria = {
        {1, "figure-1 right-distributivity failure", 1.0, criterion1_figure1},
        {2, "example43 distributivity failures", 5.0, criterion2_example43},
        {3, "theta soundness on the closure corpus", 120.0, criterion3_theta_soundness},
        {4, "oracle agreement (sweep + corpus)", 600.0, criterion4_oracle_agreement},
        {5, "completeness equivalences", 60.0, criterion5_completeness_equivalences},
        {6, "distributivity laws on the corpus", 120.0, criterion6_distributivity},
        {7, "figure-2 range misrepresentation", 1.0, criterion7_figure2},
        {8, "three-round game exhaustive check", 300.0, criterion8_ef_game},
        {9, "phi and atomisticity on the sweep", 30.0, criterion9_phi_atomisticity},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed < c.limit;
        const bool ok = outcome.passed && in_time;
        all_ok = all_ok && ok;
        std::printf("criterion %d: %s (%.2fs%s) - %s [%s]\n", c.id, ok ? "PASS" : "FAIL", elapsed,
                    in_time ? "" : " OVER LIMIT", c.name, outcome.detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
