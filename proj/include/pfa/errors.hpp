#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pfa {

/// Base class for all errors raised by this library. Law violations found by
/// validate() and refutations produced by the decision procedure are data,
/// not exceptions; these types cover genuine misuse and resource limits.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two partial functions over different bases were combined.
struct BaseMismatch : Error {
    using Error::Error;
};

/// meet_set() was given the empty set.
struct EmptyMeet : Error {
    EmptyMeet() : Error("meet_set: empty set has no meet") {}
};

/// A(a);a is not the same element for every a, so the algebra has no
/// consistent least element.
struct InconsistentZero : Error {
    using Error::Error;
};

/// A down-set failed a Boolean-algebra axiom; carries the law and witness.
struct NotBoolean : Error {
    std::string law;
    std::vector<int> witness;
    NotBoolean(std::string law_, std::vector<int> witness_, const std::string& msg)
        : Error(msg), law(std::move(law_)), witness(std::move(witness_)) {}
};

/// Closure exceeded the configured function cap.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

/// Brute-force representation search exceeded its node budget.
struct SearchBudgetExceeded : Error {
    using Error::Error;
};

/// A completeness check was asked about a representation that is not verified.
struct Unverified : Error {
    using Error::Error;
};

/// A spoiler or duplicator move is not a legal refinement.
struct IllegalSplit : Error {
    using Error::Error;
};

/// The built-in duplicator strategy has no reply. Reachable only from states
/// constructed with a non-strategy reply; on strategy-played games this is a
/// bug.
struct StrategyUnavailable : Error {
    using Error::Error;
};

/// winner() was called before all three rounds finished.
struct GameIncomplete : Error {
    using Error::Error;
};

/// Exhaustive game enumeration exceeded its node budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// catalog() was asked for a fixture it does not know.
struct UnknownFixture : Error {
    using Error::Error;
};

/// Malformed input file; message carries the position.
struct ParseError : Error {
    using Error::Error;
};

} // namespace pfa
