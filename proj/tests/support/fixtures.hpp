#pragma once

// Shared test fixtures built from the catalog pictures.

#include "pfa/catalog.hpp"
#include "pfa/concrete_algebra.hpp"

namespace pfa::fixtures {

// Closure of the four drawn functions f1, f2, g, h under (;, /\, A).
inline const ConcreteAlgebra& figure1_closure() {
    static const ConcreteAlgebra closed = [] {
        auto [base, fns] = figure1_functions();
        std::vector<PartialFunction> gens;
        for (auto& [name, f] : fns) gens.push_back(f);
        return close_generators(base, gens, Signature::cma());
    }();
    return closed;
}

inline const AbstractedAlgebra& figure1_abstract() {
    static const AbstractedAlgebra abs = to_abstract(figure1_closure());
    return abs;
}

// Closure of the two drawn functions f, g under (;, /\, A, R).
inline const ConcreteAlgebra& figure2_closure() {
    static const ConcreteAlgebra closed = [] {
        auto [base, fns] = figure2_functions();
        std::vector<PartialFunction> gens;
        for (auto& [name, f] : fns) gens.push_back(f);
        Signature sig = Signature::cma();
        sig.add(Op::Range);
        return close_generators(base, gens, sig);
    }();
    return closed;
}

inline int index_of_function(const ConcreteAlgebra& alg, const PartialFunction& f) {
    const int i = alg.find(f);
    if (i < 0) throw std::runtime_error("fixture function missing from closure");
    return i;
}

} // namespace pfa::fixtures
