#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfa/concrete_algebra.hpp"

namespace pfa {

/// A subset of N_inf = {1, 2, ...} u {inf} that is either finite and free of
/// inf, or cofinite and containing inf. `support` is sorted and holds the
/// members when finite and the exceptions (always naturals) when cofinite,
/// so complementation is a kind flip on the same support.
struct FinCofSet {
    enum class Kind { Finite, Cofinite };
    Kind kind = Kind::Finite;
    std::vector<uint32_t> support;

    static FinCofSet finite(std::vector<uint32_t> members);
    static FinCofSet cofinite(std::vector<uint32_t> exceptions);

    bool contains_nat(uint32_t n) const;
    bool contains_inf() const { return kind == Kind::Cofinite; }
    bool is_empty() const { return kind == Kind::Finite && support.empty(); }

    FinCofSet intersect(const FinCofSet& other) const;
    FinCofSet complement() const;
    bool subset_of(const FinCofSet& other) const;

    std::string to_string() const;
    friend bool operator==(const FinCofSet&, const FinCofSet&) = default;
};

/// Element of the algebra F over {p} u N_inf: a restriction of the identity
/// to A u B with A a subset of {p} and B a finite/cofinite set, or the
/// single extra function taking p to inf.
struct FElement {
    bool is_f = false;
    bool p_flag = false;
    FinCofSet b;

    static FElement f();
    static FElement id_restriction(bool p_flag, FinCofSet b);
    static FElement zero() { return id_restriction(false, FinCofSet::finite({})); }

    bool is_zero() const { return !is_f && !p_flag && b.is_empty(); }
    std::string to_string() const;
    friend bool operator==(const FElement&, const FElement&) = default;
};

FElement f_compose(const FElement& x, const FElement& y);
FElement f_meet(const FElement& x, const FElement& y);
FElement f_antidomain(const FElement& x);
/// Semilattice order of F.
bool f_leq(const FElement& x, const FElement& y);

/// g_i: identity on {1,...,i}. h_i: identity on {i,...} u {inf}. i >= 1.
FElement g_element(uint32_t i);
FElement h_element(uint32_t i);

/// One case of a symbolic bound or extremality argument.
struct ProofStep {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// A claimed supremum or infimum of one of the two hard-coded families,
/// together with the case analysis that proves it: the bound property is
/// checked symbolically for a universally quantified index, and extremality
/// by exhausting the structural shapes a competing bound could take.
struct ChainReport {
    FElement value;
    std::vector<ProofStep> bound_cases;
    std::vector<ProofStep> extremality_cases;
    bool verified() const;
};

/// sup of the g chain: the identity on N_inf.
ChainReport chain_join_g();
/// inf of the h chain: the nowhere-defined function.
ChainReport chain_meet_h();

/// True iff the candidate is an upper bound of every g_i; used by the
/// extremality analysis and exposed for tests.
bool bounds_all_g(const FElement& candidate);
/// True iff the candidate is a lower bound of every h_i.
bool below_all_h(const FElement& candidate);

/// Both displayed failures of complete left-distributivity, with every
/// intermediate value.
struct Example43Report {
    ChainReport join_g;
    ChainReport meet_h;
    FElement f_compose_join_g;  ///< f ; sup g_i          (= f)
    FElement join_of_composites;///< sup of the f ; g_i   (= 0)
    FElement f_compose_meet_h;  ///< f ; inf h_i          (= 0)
    FElement meet_of_composites;///< inf of the f ; h_i   (= f)
    bool left_dist_join_fails = false;
    bool left_dist_meet_fails = false;
    bool f_is_atom = false;
    bool verified() const;
};

Example43Report verify_example_43();

/// The finite cross-check: the concrete algebra over {p, 1..n, inf} whose
/// functions are the images of the elements with support inside {1..n}.
struct Truncation {
    int n = 0;
    ConcreteAlgebra algebra;
    std::vector<FElement> elements; ///< parallel to algebra.functions

    PartialFunction to_concrete(const FElement& x) const;
};

Truncation truncate(int n);

/// Cross-check: the symbolic operations agree with the concrete ones on
/// every pair of truncation-n elements (all three operations stay inside
/// the truncation).
bool truncation_agreement(int n);

} // namespace pfa
