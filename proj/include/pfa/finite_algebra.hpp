#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pfa {

using Elem = int32_t;

/// A finite algebra in the signature (composition, meet, antidomain), given
/// by total operation tables over an ordered element list. Element names are
/// display-only; all computation is on indices.
struct FiniteAlgebra {
    std::vector<std::string> elements;
    std::vector<Elem> compose_tab;    ///< n*n, row-major: compose_tab[a*n+b] = a;b
    std::vector<Elem> meet_tab;       ///< n*n, row-major
    std::vector<Elem> antidomain_tab; ///< n

    int n() const { return static_cast<int>(elements.size()); }
    Elem compose(Elem a, Elem b) const { return compose_tab[static_cast<size_t>(a) * elements.size() + static_cast<size_t>(b)]; }
    Elem meet(Elem a, Elem b) const { return meet_tab[static_cast<size_t>(a) * elements.size() + static_cast<size_t>(b)]; }
    Elem antidomain(Elem a) const { return antidomain_tab[static_cast<size_t>(a)]; }

    int index_of(const std::string& name) const;

    /// Checks shape and closedness (every entry a valid index) and throws on
    /// structural problems. Algebraic laws are validate()'s job.
    static FiniteAlgebra from_tables(std::vector<std::string> elements,
                                     std::vector<Elem> compose,
                                     std::vector<Elem> meet,
                                     std::vector<Elem> antidomain);
};

struct LawFailure {
    std::string law;
    std::vector<Elem> witness;
};

struct ValidationReport {
    bool passed = true;
    std::vector<LawFailure> failures;
};

/// Checks the laws the decision procedure relies on: meet is a semilattice
/// operation, A(a);a is the same element z for every a, and z is absorbing
/// for meet and composition. This list is a pragmatic selection, not a
/// representability axiomatisation; full representability is decided by the
/// representation module. Violations are reported with minimal witnesses.
ValidationReport validate(const FiniteAlgebra& alg);

/// Semilattice order: a <= b iff a/\b = a.
inline bool leq(const FiniteAlgebra& alg, Elem a, Elem b) { return alg.meet(a, b) == a; }

/// The least element A(a);a. Throws InconsistentZero if the value varies
/// with a (which signals a non-representable table).
Elem zero(const FiniteAlgebra& alg);

/// Derived domain element A(A(a)).
inline Elem domain_of(const FiniteAlgebra& alg, Elem a) { return alg.antidomain(alg.antidomain(a)); }

/// Minimal nonzero elements, ascending by index.
std::vector<Elem> atoms(const FiniteAlgebra& alg);

/// Every nonzero element dominates an atom. True for every finite algebra
/// with a consistent zero; implemented per the definition regardless.
bool is_atomic(const FiniteAlgebra& alg);

/// Every element is the join of the atoms below it.
bool is_atomistic(const FiniteAlgebra& alg);

/// Least upper bound by bound enumeration, if one exists among the
/// elements. join of the empty set is the zero.
std::optional<Elem> join(const FiniteAlgebra& alg, const std::vector<Elem>& s);

/// Greatest lower bound by bound enumeration. Throws EmptyMeet on the empty
/// set.
std::optional<Elem> meet_set(const FiniteAlgebra& alg, const std::vector<Elem>& s);

/// The down-set of `a` as a Boolean algebra: bottom 0, top a, meet the
/// algebra meet, complement of b given by A(b);a.
struct BooleanView {
    std::vector<Elem> carrier;   ///< elements of the down-set, ascending
    Elem top = 0;
    Elem bottom = 0;
    std::vector<Elem> complement; ///< parallel to carrier
};

/// Builds the down-set view of `a` and verifies the Boolean-algebra axioms
/// on it. Throws NotBoolean with the failed law and witness; on algebras
/// accepted by the decision procedure this never happens.
BooleanView downset_boolean(const FiniteAlgebra& alg, Elem a);

struct PhiResult {
    bool holds = true;
    std::array<Elem, 3> witness{0, 0, 0}; ///< (a, b, c) when holds is false
};

/// The sentence phi: for all a, b, c, if c >= a;x for every atom x <= b,
/// then c >= a;b.
PhiResult check_phi(const FiniteAlgebra& alg);

/// Componentwise product on the Cartesian product of the element lists.
FiniteAlgebra direct_product(const FiniteAlgebra& a1, const FiniteAlgebra& a2);

/// The powerset Boolean algebra on `atom_count` atoms, read as an algebra of
/// this signature: composition and meet are both Boolean meet, antidomain is
/// Boolean complement.
FiniteAlgebra boolean_as_algebra(int atom_count);

/// Searches for an isomorphism by matching atoms and extending to joins;
/// suitable for the atomistic algebras this toolkit produces. Returns the
/// element map a1 -> a2, or nullopt.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteAlgebra& a1, const FiniteAlgebra& a2);

} // namespace pfa
