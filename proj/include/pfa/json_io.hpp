#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfa/concrete_algebra.hpp"
#include "pfa/finite_algebra.hpp"
#include "pfa/ninfty.hpp"
#include "pfa/representation.hpp"

namespace pfa {

/// Parses the algebra file format: an object with "elements" (list of
/// names), "compose" and "meet" (square tables of names, row i column j
/// holding elements[i] op elements[j]) and "antidomain" (list of names).
/// Unknown identifiers and ragged tables are rejected with a
/// position-annotated ParseError.
FiniteAlgebra parse_algebra_json(const std::string& text);
std::string emit_algebra_json(const FiniteAlgebra& alg);

struct NamedFunctions {
    Base base;
    std::vector<std::pair<std::string, PartialFunction>> functions;
};

/// Parses the partial-function file format: {"base": [points],
/// "functions": {name: [[from, to], ...]}}.
NamedFunctions parse_pfun_json(const std::string& text);
std::string emit_pfun_json(const Base& base,
                           const std::vector<std::pair<std::string, PartialFunction>>& functions);
std::string emit_concrete_json(const ConcreteAlgebra& alg);

std::string emit_validation_json(const ValidationReport& report, const FiniteAlgebra& alg);
/// Witness assignment in the partial-function format, keyed by element name
/// over the representation's base.
std::string emit_representation_json(const Representation& rep);
std::string emit_refutation_json(const Refutation& refutation, const FiniteAlgebra& alg);
std::string emit_example43_json(const Example43Report& report);

} // namespace pfa
