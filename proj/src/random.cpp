#include "pfa/random.hpp"

namespace pfa {

PartialFunction random_partial_function(SplitMix64& rng, const Base& base) {
    const int k = base.size();
    std::vector<int32_t> im(static_cast<size_t>(k));
    for (int x = 0; x < k; ++x) {
        const auto v = rng.below(static_cast<uint64_t>(k) + 1);
        im[static_cast<size_t>(x)] =
            v == static_cast<uint64_t>(k) ? PartialFunction::kUndefined : static_cast<int32_t>(v);
    }
    return PartialFunction(base, std::move(im));
}

ConcreteAlgebra random_closure(SplitMix64& rng, int max_points, int max_generators,
                               int max_functions) {
    const int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_points)));
    std::vector<std::string> points;
    for (int i = 0; i < k; ++i) points.push_back("p" + std::to_string(i));
    Base base(std::move(points));
    const int gens = static_cast<int>(rng.below(static_cast<uint64_t>(max_generators) + 1));
    std::vector<PartialFunction> generators;
    for (int i = 0; i < gens; ++i) generators.push_back(random_partial_function(rng, base));
    return close_generators(base, generators, Signature::cma(), max_functions);
}

} // namespace pfa
