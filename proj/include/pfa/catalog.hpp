#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfa/partial_function.hpp"

namespace pfa {

/// A named fixture file, byte-stable across runs.
struct Fixture {
    std::string filename;
    std::string contents;
};

/// Emits one of the named fixtures: "figure1" and "figure2" (the two drawn
/// counterexample algebras, in the partial-function format), "boolean-N"
/// (the 2^N-element powerset algebra, in the algebra table format) and
/// "example43-truncation-N" (the finite truncations). Throws UnknownFixture.
Fixture catalog_fixture(const std::string& name);

/// The four functions of the first counterexample picture on the base
/// {w, x, y, z}: f1: w->x, f2: w->y, g: x->z and y->z, h: w->z.
std::pair<Base, std::vector<std::pair<std::string, PartialFunction>>> figure1_functions();

/// The two functions of the range counterexample picture on {u, v, t}:
/// f: u->t, g: v->t.
std::pair<Base, std::vector<std::pair<std::string, PartialFunction>>> figure2_functions();

} // namespace pfa
