#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pfa {

/// A finite or infinite quantity (atom counts and cell sizes).
struct Extent {
    int32_t value = 0;
    bool infinite = false;

    static Extent finite(int32_t n) { return Extent{n, false}; }
    static Extent inf() { return Extent{0, true}; }
    bool is_finite() const { return !infinite; }
    friend bool operator==(const Extent&, const Extent&) = default;
};

/// Cell of the partition on the atomic algebra: an element that is the join
/// of finitely many atoms (its size), or one of infinite size.
struct CellB {
    Extent size;
    bool valid() const { return size.infinite || size.value >= 1; }
};

/// Cell of the partition on the non-atomic algebra, described by the number
/// of atoms below it and whether it has a nonzero atomless part. Its size
/// for matching purposes is the atom count when there is no atomless part,
/// and infinite otherwise.
struct CellBPrime {
    Extent atoms;
    bool atomless = false;

    bool valid() const { return atoms.infinite || atoms.value >= 1 || atomless; }
    Extent size_for_matching() const {
        return (atoms.infinite || atomless) ? Extent::inf() : atoms;
    }
};

struct CellPair {
    CellB b;
    CellBPrime bp;
};

enum class Side { B, BPrime };

/// The proof's round pattern: spoiler plays on B, then B', then B.
inline Side side_to_move(int round) { return round == 2 ? Side::BPrime : Side::B; }

/// An element chosen during the game, recorded as the set of correspondence
/// indices whose join it is; duplicator's reply is the join of the same
/// indices on the other side.
struct ChosenElement {
    Side side = Side::B;
    int round = 1;
    std::vector<int> cells;
};

struct SplitB {
    int cell = 0;
    std::vector<CellB> parts;
};

struct SplitBPrime {
    int cell = 0;
    std::vector<CellBPrime> parts;
};

/// One round's worth of spoiler activity: a refinement (at most one split
/// per cell) plus the chosen elements as subsets of post-refinement indices.
struct SpoilerMoveB {
    std::vector<SplitB> splits;
    std::vector<std::vector<int>> chosen;
};

struct SpoilerMoveBPrime {
    std::vector<SplitBPrime> splits;
    std::vector<std::vector<int>> chosen;
};

/// Immutable game position; moves return new states.
struct GameState {
    int round = 1;               ///< 1..3 while playing; 4 when finished
    bool awaiting_reply = false;
    bool conceded = false;
    std::vector<CellPair> correspondence;
    std::vector<ChosenElement> history;

    // Pending spoiler refinement, parallel to the correspondence; only one
    // of the two is populated, matching the side that moved. Chosen elements
    // are recorded into the history when the round completes.
    std::vector<std::vector<CellB>> pending_b;
    std::vector<std::vector<CellBPrime>> pending_bp;
    std::vector<std::vector<int>> pending_chosen;

    bool finished() const { return round > 3 && !awaiting_reply; }
};

/// One-cell partitions: B = [infinite], B' = [infinitely many atoms, with an
/// atomless part], matched.
GameState new_game();

/// Applies a spoiler refinement on the side owned by the current round.
/// Throws IllegalSplit when a split breaks the conservation laws: finite
/// sizes must sum exactly, an infinite cell must keep an infinite part,
/// atom counts are conserved with infinity absorbing, and an atomless part
/// can neither appear from nowhere nor vanish.
GameState spoiler_move(const GameState& state, const SpoilerMoveB& move);
GameState spoiler_move(const GameState& state, const SpoilerMoveBPrime& move);

/// Applies the built-in duplicator strategy to the pending refinement and
/// completes the round. Round 1 mirrors sizes exactly; round 2 mirrors
/// finite cells size-for-size and answers a split of an infinite cell by
/// matching one infinite part with the remainder and everything else with
/// distinct single atoms; round 3 mirrors against the greater-or-equal
/// matched cell. Throws StrategyUnavailable if the state violates the
/// strategy's invariants (unreachable via strategy play).
GameState duplicator_reply(const GameState& state);

/// Completes the round with an arbitrary (legal) duplicator reply instead of
/// the built-in strategy; parts[i] refines cell i of the non-moved side.
/// Used to play deliberately broken duplicators in tests.
GameState apply_reply(const GameState& state, const std::vector<std::vector<CellBPrime>>& parts);
GameState apply_reply(const GameState& state, const std::vector<std::vector<CellB>>& parts);

/// Marks the game as lost by duplicator (no reply was possible).
GameState concede(const GameState& state);

enum class Winner { Duplicator, Spoiler };

/// Requires a finished (or conceded) game; throws GameIncomplete otherwise.
/// Duplicator wins iff no concession happened, every cell pair respects the
/// size order (B-cell size <= matched size, infinite only against infinite)
/// and every chosen element's cell set maps consistently across the final
/// correspondence.
Winner winner(const GameState& state);

/// Verifies that the duplicator strategy survives every legal spoiler
/// behavior within the given budgets: in round r each cell may be refined
/// into at most min(2^n_r, split_bound) parts (n_r elements cut each cell at
/// most 2^n_r ways), with finite sizes and atom counts up to `max_finite`.
/// Because replies and win conditions are per-cell, the game tree factors
/// into independent cell histories, which this check enumerates exhaustively
/// with memoization; the equivalence with whole-game enumeration is covered
/// by tests. Returns true iff duplicator always wins. Throws BudgetExceeded
/// past `node_budget` states.
bool exhaustive_check(int n1, int n2, int n3, int split_bound, int max_finite = 4,
                      uint64_t node_budget = 100'000'000);

} // namespace pfa
