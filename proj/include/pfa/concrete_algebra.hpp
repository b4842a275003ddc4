#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfa/finite_algebra.hpp"
#include "pfa/partial_function.hpp"

namespace pfa {

/// Operation signature for concrete algebras, as a bitmask.
enum class Op : uint8_t {
    Compose = 1 << 0,
    Meet = 1 << 1,
    Zero = 1 << 2,
    Identity = 1 << 3,
    Domain = 1 << 4,
    Range = 1 << 5,
    Antidomain = 1 << 6,
};

class Signature {
  public:
    Signature() = default;
    Signature(std::initializer_list<Op> ops) {
        for (Op o : ops) bits_ |= static_cast<uint8_t>(o);
    }
    bool has(Op o) const { return bits_ & static_cast<uint8_t>(o); }
    Signature& add(Op o) {
        bits_ |= static_cast<uint8_t>(o);
        return *this;
    }
    bool contains(Signature other) const { return (bits_ & other.bits_) == other.bits_; }
    /// The signature of composition, meet and antidomain.
    static Signature cma() { return Signature{Op::Compose, Op::Meet, Op::Antidomain}; }

  private:
    uint8_t bits_ = 0;
};

/// A set of partial functions on a shared base, closed under the operations
/// of its signature, with stable names in discovery order.
struct ConcreteAlgebra {
    Base base;
    std::vector<PartialFunction> functions;
    std::vector<std::string> names;
    Signature signature;

    int size() const { return static_cast<int>(functions.size()); }
    /// Index of a function, or -1.
    int find(const PartialFunction& f) const;

    /// Re-checks closure and, when antidomain or zero is in the signature,
    /// the presence of the empty function. Returns the offending operation
    /// description, or nullopt when closed.
    std::optional<std::string> closure_defect() const;
};

/// Least closed superset of the generators under the signature operations,
/// by worklist fixpoint. The empty function is seeded whenever the signature
/// contains antidomain or zero, the identity whenever it contains the
/// identity constant. Deterministic: functions are numbered g0, g1, ... in
/// discovery order (generators first). Throws SizeLimitExceeded past
/// `max_functions`.
ConcreteAlgebra close_generators(const Base& base, const std::vector<PartialFunction>& generators,
                                 Signature signature, int max_functions = 10000);

struct Representation;

/// Reads the operation tables off a concrete algebra with signature
/// containing composition, meet and antidomain. The labeling sending element
/// i to functions[i] is returned as a verified Representation.
struct AbstractedAlgebra {
    FiniteAlgebra algebra;
    Representation identity_labeling() const;
    std::shared_ptr<const ConcreteAlgebra> concrete;
};
AbstractedAlgebra to_abstract(const ConcreteAlgebra& conc);

/// A candidate isomorphism from a finite algebra onto partial functions over
/// a named base, with its verification status.
struct Representation {
    enum class Status { Unverified, Verified, Failed };

    /// First point of disagreement between tables and graphs.
    struct FailureWitness {
        std::string operation; ///< "compose", "meet", "antidomain", "injectivity"
        std::vector<Elem> args;
    };

    std::shared_ptr<const FiniteAlgebra> source;
    Base base;
    std::vector<PartialFunction> assignment; ///< indexed by element
    Status status = Status::Unverified;
    std::optional<FailureWitness> failure;

    bool verified() const { return status == Status::Verified; }
};

/// Checks injectivity and that the assignment respects compose, meet and
/// antidomain pointwise on graphs; sets the status accordingly.
Representation verify_representation(Representation rep);

/// Meet completeness: theta(/\S) = intersection of theta[S] for every
/// nonempty S whose meet exists. Decided exactly via the witness-set
/// reduction: a failure at any S implies a failure at the set of all
/// elements whose image contains the offending pair, so only those sets are
/// checked. Requires a verified representation (throws Unverified).
bool is_meet_complete(const Representation& rep);

/// Join completeness: theta(\/S) = union of theta[S] for every S whose join
/// exists. Decided exactly via the dual reduction over the sets
/// {s <= a : pair not in theta(s)}.
bool is_join_complete(const Representation& rep);

/// Atomic representation: every pair in any represented element lies in the
/// image of some atom.
bool is_atomic_rep(const Representation& rep);

/// Representation of the direct product over the disjoint union of the
/// bases; inputs must be verified. The result is re-verified.
Representation product_representation(const Representation& r1, const Representation& r2);

} // namespace pfa
