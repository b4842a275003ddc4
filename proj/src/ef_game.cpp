#include "pfa/ef_game.hpp"

#include <algorithm>
#include <unordered_set>

#include "pfa/errors.hpp"

namespace pfa {

namespace {

std::string extent_str(Extent e) { return e.infinite ? "inf" : std::to_string(e.value); }

void check_split_b(const CellB& cell, const std::vector<CellB>& parts) {
    if (parts.empty()) throw IllegalSplit("split into zero parts");
    int64_t total = 0;
    bool has_inf = false;
    for (const CellB& p : parts) {
        if (!p.valid()) throw IllegalSplit("empty part in a split");
        if (p.size.infinite)
            has_inf = true;
        else
            total += p.size.value;
    }
    if (cell.size.is_finite()) {
        if (has_inf)
            throw IllegalSplit("finite cell of size " + extent_str(cell.size) +
                               " split with an infinite part");
        if (total != cell.size.value)
            throw IllegalSplit("parts of a finite cell must sum to its size (" +
                               std::to_string(total) + " vs " + extent_str(cell.size) + ")");
    } else if (!has_inf) {
        throw IllegalSplit("an infinite cell must keep at least one infinite part");
    }
}

void check_split_bp(const CellBPrime& cell, const std::vector<CellBPrime>& parts) {
    if (parts.empty()) throw IllegalSplit("split into zero parts");
    int64_t total = 0;
    bool has_inf = false;
    bool any_atomless = false;
    for (const CellBPrime& p : parts) {
        if (!p.valid()) throw IllegalSplit("zero part in a split");
        if (p.atomless && !cell.atomless)
            throw IllegalSplit("an atomless part cannot appear inside an atom-only cell");
        any_atomless = any_atomless || p.atomless;
        if (p.atoms.infinite)
            has_inf = true;
        else
            total += p.atoms.value;
    }
    if (cell.atoms.is_finite()) {
        if (has_inf)
            throw IllegalSplit("cell with finitely many atoms split with an infinite atom count");
        if (total != cell.atoms.value)
            throw IllegalSplit("atom counts must be conserved (" + std::to_string(total) +
                               " vs " + extent_str(cell.atoms) + ")");
    } else if (!has_inf) {
        throw IllegalSplit("a cell with infinitely many atoms must keep one part with "
                           "infinitely many");
    }
    if (cell.atomless && !any_atomless)
        throw IllegalSplit("the atomless mass of a cell cannot vanish");
}

// ---- the built-in duplicator strategy, one cell at a time ----

// Rounds 1 and 3: spoiler refined the B side of `pair`; produce the B' parts.
std::vector<CellBPrime> reply_on_bprime(int round, const CellPair& pair,
                                        const std::vector<CellB>& parts) {
    std::vector<CellBPrime> out;
    out.reserve(parts.size());
    // A one-part refinement leaves the cell alone; so does the reply.
    if (parts.size() == 1) return {pair.bp};
    if (round == 1) {
        // Mirror sizes exactly; hang the atomless mass on the first infinite
        // part.
        bool placed_inf = false;
        for (const CellB& p : parts)
            out.push_back(p.size.infinite ? CellBPrime{Extent::inf(), false}
                                          : CellBPrime{p.size, false});
        for (auto& p : out)
            if (p.atoms.infinite) {
                placed_inf = true;
                break;
            }
        if (pair.bp.atoms.is_finite()) {
            // Exact mirroring is only available when the matched sizes agree.
            if (placed_inf || !pair.bp.size_for_matching().is_finite() ||
                pair.b.size != pair.bp.atoms)
                throw StrategyUnavailable("size-exact reply unavailable");
        } else if (!placed_inf) {
            throw StrategyUnavailable("no infinite part to carry the infinite atom count");
        }
        if (pair.bp.atomless) {
            bool placed = false;
            for (auto& p : out)
                if (p.atoms.infinite) {
                    p.atomless = true;
                    placed = true;
                    break;
                }
            if (!placed) throw StrategyUnavailable("no infinite part to carry the atomless mass");
        }
        return out;
    }
    // Round 3 against a cell with infinitely many atoms: mirror sizes, but
    // the infinite atom count must survive in some part, and the cell may be
    // matched to a strictly smaller (even finite) B cell after round 2.
    if (pair.bp.atoms.infinite) {
        for (const CellB& p : parts)
            out.push_back(p.size.infinite ? CellBPrime{Extent::inf(), false}
                                          : CellBPrime{p.size, false});
        const bool has_inf = std::any_of(out.begin(), out.end(),
                                         [](const CellBPrime& p) { return p.atoms.infinite; });
        if (!has_inf) out.back() = CellBPrime{Extent::inf(), false};
        if (pair.bp.atomless) {
            for (auto& p : out)
                if (p.atoms.infinite) {
                    p.atomless = true;
                    break;
                }
        }
        return out;
    }
    // Round 3 against a finite-atom B' cell.
    const int m = pair.bp.atoms.value;
    if (pair.bp.atomless) {
        // Every part keeps an atomless piece, so sizes stay infinite.
        for (size_t i = 0; i < parts.size(); ++i)
            out.push_back(CellBPrime{Extent::finite(i == 0 ? m : 0), true});
        return out;
    }
    int total = 0;
    for (const CellB& p : parts) {
        if (p.size.infinite)
            throw StrategyUnavailable("infinite B part against a finite-size B' cell");
        total += p.size.value;
    }
    if (m < total) throw StrategyUnavailable("matched cell is smaller than the refined one");
    for (size_t i = 0; i < parts.size(); ++i) {
        int c = parts[i].size.value;
        if (i + 1 == parts.size()) c += m - total;
        out.push_back(CellBPrime{Extent::finite(c), false});
    }
    return out;
}

// Round 2: spoiler refined the B' side of `pair`; produce the B parts.
std::vector<CellB> reply_on_b(const CellPair& pair, const std::vector<CellBPrime>& parts) {
    std::vector<CellB> out;
    out.reserve(parts.size());
    if (parts.size() == 1) return {pair.b};
    if (pair.bp.size_for_matching().is_finite()) {
        // Finite-size cell: sizes agree after rounds 1 and 2, mirror exactly.
        if (pair.b.size != pair.bp.size_for_matching())
            throw StrategyUnavailable("finite cell matched with a different size");
        for (const CellBPrime& p : parts) {
            if (!p.size_for_matching().is_finite())
                throw StrategyUnavailable("infinite part inside a finite-size cell");
            out.push_back(CellB{p.size_for_matching()});
        }
        return out;
    }
    if (!pair.b.size.infinite)
        throw StrategyUnavailable("infinite-size cell matched with a finite one");
    // Select one infinite-size part for the remainder; everything else is
    // matched with a distinct single atom.
    size_t selected = parts.size();
    for (size_t i = 0; i < parts.size(); ++i)
        if (!parts[i].size_for_matching().is_finite()) {
            selected = i;
            break;
        }
    if (selected == parts.size())
        throw StrategyUnavailable("no infinite-size part in a split of an infinite-size cell");
    for (size_t i = 0; i < parts.size(); ++i)
        out.push_back(i == selected ? CellB{Extent::inf()} : CellB{Extent::finite(1)});
    return out;
}

GameState complete_round(GameState state, const std::vector<std::vector<CellB>>& b_parts,
                         const std::vector<std::vector<CellBPrime>>& bp_parts) {
    const size_t n = state.correspondence.size();
    if (b_parts.size() != n || bp_parts.size() != n)
        throw IllegalSplit("reply does not cover every cell");

    std::vector<CellPair> next;
    std::vector<std::pair<int, int>> spans(n); // old index -> [begin, end) in next
    for (size_t i = 0; i < n; ++i) {
        const auto& pb = b_parts[i];
        const auto& pp = bp_parts[i];
        if (pb.size() != pp.size())
            throw IllegalSplit("reply part count differs from the spoiler's refinement");
        check_split_b(state.correspondence[i].b, pb);
        check_split_bp(state.correspondence[i].bp, pp);
        spans[i].first = static_cast<int>(next.size());
        for (size_t j = 0; j < pb.size(); ++j) next.push_back(CellPair{pb[j], pp[j]});
        spans[i].second = static_cast<int>(next.size());
    }

    for (ChosenElement& e : state.history) {
        std::vector<int> remapped;
        for (int c : e.cells)
            for (int j = spans[static_cast<size_t>(c)].first; j < spans[static_cast<size_t>(c)].second; ++j)
                remapped.push_back(j);
        e.cells = std::move(remapped);
    }
    for (const auto& chosen : state.pending_chosen) {
        ChosenElement e;
        e.side = side_to_move(state.round);
        e.round = state.round;
        e.cells = chosen;
        for (int c : e.cells)
            if (c < 0 || c >= static_cast<int>(next.size()))
                throw IllegalSplit("chosen element refers to a cell outside the refinement");
        state.history.push_back(std::move(e));
    }

    state.correspondence = std::move(next);
    state.pending_b.clear();
    state.pending_bp.clear();
    state.pending_chosen.clear();
    state.awaiting_reply = false;
    state.round += 1;
    return state;
}

} // namespace

GameState new_game() {
    GameState s;
    s.correspondence.push_back(
        CellPair{CellB{Extent::inf()}, CellBPrime{Extent::inf(), true}});
    return s;
}

GameState spoiler_move(const GameState& state, const SpoilerMoveB& move) {
    if (state.finished() || state.conceded) throw IllegalSplit("game is over");
    if (state.awaiting_reply) throw IllegalSplit("duplicator has not replied yet");
    if (side_to_move(state.round) != Side::B)
        throw IllegalSplit("round " + std::to_string(state.round) + " is played on the other side");

    GameState next = state;
    next.pending_b.assign(state.correspondence.size(), {});
    for (size_t i = 0; i < state.correspondence.size(); ++i)
        next.pending_b[i] = {state.correspondence[i].b};
    for (const SplitB& split : move.splits) {
        if (split.cell < 0 || split.cell >= static_cast<int>(state.correspondence.size()))
            throw IllegalSplit("split of a cell that does not exist");
        if (next.pending_b[static_cast<size_t>(split.cell)].size() != 1)
            throw IllegalSplit("cell split twice in one round");
        check_split_b(state.correspondence[static_cast<size_t>(split.cell)].b, split.parts);
        next.pending_b[static_cast<size_t>(split.cell)] = split.parts;
    }
    next.pending_chosen = move.chosen;
    next.awaiting_reply = true;
    return next;
}

GameState spoiler_move(const GameState& state, const SpoilerMoveBPrime& move) {
    if (state.finished() || state.conceded) throw IllegalSplit("game is over");
    if (state.awaiting_reply) throw IllegalSplit("duplicator has not replied yet");
    if (side_to_move(state.round) != Side::BPrime)
        throw IllegalSplit("round " + std::to_string(state.round) + " is played on the other side");

    GameState next = state;
    next.pending_bp.assign(state.correspondence.size(), {});
    for (size_t i = 0; i < state.correspondence.size(); ++i)
        next.pending_bp[i] = {state.correspondence[i].bp};
    for (const SplitBPrime& split : move.splits) {
        if (split.cell < 0 || split.cell >= static_cast<int>(state.correspondence.size()))
            throw IllegalSplit("split of a cell that does not exist");
        if (next.pending_bp[static_cast<size_t>(split.cell)].size() != 1)
            throw IllegalSplit("cell split twice in one round");
        check_split_bp(state.correspondence[static_cast<size_t>(split.cell)].bp, split.parts);
        next.pending_bp[static_cast<size_t>(split.cell)] = split.parts;
    }
    next.pending_chosen = move.chosen;
    next.awaiting_reply = true;
    return next;
}

GameState duplicator_reply(const GameState& state) {
    if (!state.awaiting_reply) throw Error("duplicator_reply: no pending spoiler move");
    const size_t n = state.correspondence.size();
    if (side_to_move(state.round) == Side::B) {
        std::vector<std::vector<CellBPrime>> bp(n);
        for (size_t i = 0; i < n; ++i)
            bp[i] = reply_on_bprime(state.round, state.correspondence[i], state.pending_b[i]);
        return complete_round(state, state.pending_b, bp);
    }
    std::vector<std::vector<CellB>> b(n);
    for (size_t i = 0; i < n; ++i)
        b[i] = reply_on_b(state.correspondence[i], state.pending_bp[i]);
    return complete_round(state, b, state.pending_bp);
}

GameState apply_reply(const GameState& state, const std::vector<std::vector<CellBPrime>>& parts) {
    if (!state.awaiting_reply) throw Error("apply_reply: no pending spoiler move");
    if (side_to_move(state.round) != Side::B)
        throw IllegalSplit("reply must refine the B' side only after a B move");
    return complete_round(state, state.pending_b, parts);
}

GameState apply_reply(const GameState& state, const std::vector<std::vector<CellB>>& parts) {
    if (!state.awaiting_reply) throw Error("apply_reply: no pending spoiler move");
    if (side_to_move(state.round) != Side::BPrime)
        throw IllegalSplit("reply must refine the B side only after a B' move");
    return complete_round(state, parts, state.pending_bp);
}

GameState concede(const GameState& state) {
    GameState s = state;
    s.conceded = true;
    s.awaiting_reply = false;
    s.round = 4;
    s.pending_b.clear();
    s.pending_bp.clear();
    s.pending_chosen.clear();
    return s;
}

namespace {

bool size_respecting(const CellPair& pair) {
    const Extent b = pair.b.size;
    const Extent p = pair.bp.size_for_matching();
    if (b.infinite) return p.infinite;
    if (p.infinite) return true;
    return b.value <= p.value;
}

} // namespace

Winner winner(const GameState& state) {
    if (state.conceded) return Winner::Spoiler;
    if (!state.finished()) throw GameIncomplete("winner: the game has not finished");
    for (const CellPair& pair : state.correspondence) {
        if (!pair.b.valid() || !pair.bp.valid()) return Winner::Spoiler;
        if (!size_respecting(pair)) return Winner::Spoiler;
    }
    for (const ChosenElement& e : state.history) {
        std::vector<int> cells = e.cells;
        std::sort(cells.begin(), cells.end());
        if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) return Winner::Spoiler;
        for (int c : cells)
            if (c < 0 || c >= static_cast<int>(state.correspondence.size()))
                return Winner::Spoiler;
    }
    return Winner::Duplicator;
}

// ---------------------------------------------------------------------------
// Exhaustive verification. Replies and win conditions are local to a cell
// pair, so it suffices to follow every splitting history of a single pair
// through the three rounds; a cell is refined into at most
// min(2^n_r, split_bound) parts in round r.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<CellB>> b_split_options(const CellB& cell, int max_parts, int max_finite) {
    std::vector<std::vector<CellB>> out;
    std::vector<CellB> parts;
    // Canonical: infinite parts first, then finite sizes non-increasing.
    auto rec = [&](auto&& self, int prev_finite, bool has_inf) -> void {
        if (static_cast<int>(parts.size()) >= 2) {
            int64_t total = 0;
            for (const CellB& p : parts)
                if (p.size.is_finite()) total += p.size.value;
            const bool ok = cell.size.infinite ? has_inf : (!has_inf && total == cell.size.value);
            if (ok) out.push_back(parts);
        }
        if (static_cast<int>(parts.size()) == max_parts) return;
        if (cell.size.infinite && prev_finite == 0) { // still in the infinite prefix
            parts.push_back(CellB{Extent::inf()});
            self(self, 0, true);
            parts.pop_back();
        }
        const int hi = prev_finite == 0 ? max_finite : prev_finite;
        for (int s = hi; s >= 1; --s) {
            if (cell.size.is_finite() && s > cell.size.value) continue;
            parts.push_back(CellB{Extent::finite(s)});
            self(self, s, has_inf);
            parts.pop_back();
        }
    };
    rec(rec, 0, false);
    return out;
}

// Encode B' parts for canonical non-increasing enumeration.
std::vector<std::vector<CellBPrime>> bp_split_options(const CellBPrime& cell, int max_parts,
                                                      int max_finite) {
    std::vector<CellBPrime> menu;
    menu.push_back(CellBPrime{Extent::inf(), true});
    menu.push_back(CellBPrime{Extent::inf(), false});
    for (int c = max_finite; c >= 0; --c) {
        menu.push_back(CellBPrime{Extent::finite(c), true});
        if (c > 0) menu.push_back(CellBPrime{Extent::finite(c), false});
    }
    std::vector<std::vector<CellBPrime>> out;
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (pick.size() >= 2) {
            int64_t total = 0;
            bool has_inf = false, any_atomless = false, ok = true;
            for (size_t idx : pick) {
                const CellBPrime& p = menu[idx];
                if (p.atomless && !cell.atomless) ok = false;
                any_atomless = any_atomless || p.atomless;
                if (p.atoms.infinite)
                    has_inf = true;
                else
                    total += p.atoms.value;
            }
            if (cell.atoms.is_finite())
                ok = ok && !has_inf && total == cell.atoms.value;
            else
                ok = ok && has_inf;
            if (cell.atomless && !any_atomless) ok = false;
            if (ok) {
                std::vector<CellBPrime> parts;
                for (size_t idx : pick) parts.push_back(menu[idx]);
                out.push_back(std::move(parts));
            }
        }
        if (static_cast<int>(pick.size()) == max_parts) return;
        for (size_t i = from; i < menu.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct PairChecker {
    int parts_bound[4] = {0, 0, 0, 0}; // indexed by round
    int max_finite = 4;
    uint64_t budget = 0;
    uint64_t nodes = 0;
    std::unordered_set<uint32_t> verified;

    static uint32_t key(const CellPair& pair, int round) {
        const uint32_t b = pair.b.size.infinite ? 31u : static_cast<uint32_t>(pair.b.size.value);
        const uint32_t c =
            pair.bp.atoms.infinite ? 31u : static_cast<uint32_t>(pair.bp.atoms.value);
        return b | (c << 5) | (static_cast<uint32_t>(pair.bp.atomless) << 10) |
               (static_cast<uint32_t>(round) << 11);
    }

    bool check(const CellPair& pair, int round) {
        if (!size_respecting(pair)) return false;
        if (round > 3) return true;
        const uint32_t k = key(pair, round);
        if (verified.count(k)) return true;
        if (++nodes > budget) throw BudgetExceeded("exhaustive game enumeration budget exhausted");

        // Spoiler may leave the cell alone this round.
        if (!check(pair, round + 1)) return false;
        const int bound = parts_bound[round];
        try {
            if (side_to_move(round) == Side::B) {
                for (const auto& parts : b_split_options(pair.b, bound, max_finite)) {
                    const auto reply = reply_on_bprime(round, pair, parts);
                    check_split_bp(pair.bp, reply);
                    for (size_t i = 0; i < parts.size(); ++i)
                        if (!check(CellPair{parts[i], reply[i]}, round + 1)) return false;
                }
            } else {
                for (const auto& parts : bp_split_options(pair.bp, bound, max_finite)) {
                    const auto reply = reply_on_b(pair, parts);
                    check_split_b(pair.b, reply);
                    for (size_t i = 0; i < parts.size(); ++i)
                        if (!check(CellPair{reply[i], parts[i]}, round + 1)) return false;
                }
            }
        } catch (const StrategyUnavailable&) {
            return false;
        } catch (const IllegalSplit&) {
            return false; // a strategy reply broke a conservation law
        }
        verified.insert(k);
        return true;
    }
};

} // namespace

bool exhaustive_check(int n1, int n2, int n3, int split_bound, int max_finite,
                      uint64_t node_budget) {
    if (split_bound < 1 || max_finite < 1) throw Error("exhaustive_check: bounds must be positive");
    if (max_finite > 16 || split_bound > 16)
        throw Error("exhaustive_check: desk-scale bounds stop at 16"); // keys pack into 5 bits
    PairChecker checker;
    auto clamp = [&](int nr) {
        if (nr <= 0) return 1;
        const int cap = nr >= 30 ? split_bound : std::min((1 << nr), split_bound);
        return std::max(cap, 1);
    };
    checker.parts_bound[1] = clamp(n1);
    checker.parts_bound[2] = clamp(n2);
    checker.parts_bound[3] = clamp(n3);
    checker.max_finite = max_finite;
    checker.budget = node_budget;
    const GameState start = new_game();
    return checker.check(start.correspondence.front(), 1);
}

} // namespace pfa
