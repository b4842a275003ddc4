#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfa/concrete_algebra.hpp"
#include "pfa/finite_algebra.hpp"

namespace pfa {

/// Certificate that an algebra has no representation over its atoms, hence
/// (for finite algebras) no representation at all.
struct Refutation {
    enum class Kind {
        NonAtomImage,         ///< witness = (atom x, element a): x;a is neither 0 nor an atom
        InjectivityCollision, ///< witness = (a, b): theta(a) = theta(b)
        OperationMismatch,    ///< operation + witness args where tables and graphs disagree
        InvalidAlgebra,       ///< operation = violated law, witness from validate()
    };
    Kind kind;
    std::string operation;
    std::vector<Elem> witness;
};

const char* refutation_kind_name(Refutation::Kind kind);

/// Result of the atom-base construction: either a verified representation
/// with base At(A), or a refutation.
struct ThetaOutcome {
    std::optional<Representation> representation;
    std::optional<Refutation> refutation;
    bool verified() const { return representation.has_value(); }
};

/// theta(a) maps atom x to x;a whenever that is nonzero. Returns the first
/// failure of well-definedness (images must be atoms), injectivity or the
/// homomorphism laws, found in a fixed check order; the verification runs
/// through verify_representation on the assembled assignment. Refutations
/// are data, not errors; an algebra whose tables fail validate() is refuted
/// as InvalidAlgebra.
ThetaOutcome build_theta(const FiniteAlgebra& alg);

struct CompletenessReport {
    bool meet_complete = false;
    bool join_complete = false;
    bool atomic = false;
    bool all_true() const { return meet_complete && join_complete && atomic; }
};

/// Evaluates the three completeness predicates on a verified representation
/// and insists they agree (they are provably equivalent); disagreement is an
/// internal invariant violation and throws std::logic_error.
CompletenessReport check_completeness(const Representation& rep);

struct Verdict {
    enum class Method { Theta, BruteForce, BothAgree };
    bool completely_representable = false;
    std::optional<Representation> witness;   ///< verified and complete when yes
    std::optional<Refutation> refutation;    ///< when no
    Method method = Method::Theta;
};

/// Decision procedure for finite algebras: theta verifies iff the algebra is
/// (completely) representable. The equivalence with plain representability
/// is a derived consequence of the atom-base construction (finite algebras
/// are atomic, and finite joins distribute), guarded by oracle agreement in
/// the test suite rather than assumed silently.
Verdict decide_complete_representability(const FiniteAlgebra& alg);

struct BruteForceOptions {
    /// Largest base size to try; -1 means the atom count, which suffices:
    /// a representable finite algebra has a representation over its atoms.
    int max_base = -1;
    /// Node budget; exceeding it throws SearchBudgetExceeded.
    uint64_t node_budget = 200'000'000;
};

/// Independent oracle: exhaustive backtracking search for a representation
/// over bases of size 1..max_base, pruned by the forced image of 0, order
/// constraints, propagation of operation images, and base-point symmetry on
/// the first free choice. Returns the first verified representation found
/// (deterministically) or nullopt when none exists within max_base.
std::optional<Representation> brute_force_search(const FiniteAlgebra& alg,
                                                 BruteForceOptions options = {});

} // namespace pfa
