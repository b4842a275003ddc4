#include "pfa/catalog.hpp"

#include <charconv>

#include "pfa/errors.hpp"
#include "pfa/json_io.hpp"
#include "pfa/ninfty.hpp"

namespace pfa {

std::pair<Base, std::vector<std::pair<std::string, PartialFunction>>> figure1_functions() {
    Base base(std::vector<std::string>{"w", "x", "y", "z"});
    std::vector<std::pair<std::string, PartialFunction>> fns;
    fns.emplace_back("f1", PartialFunction::from_pairs(base, {{"w", "x"}}));
    fns.emplace_back("f2", PartialFunction::from_pairs(base, {{"w", "y"}}));
    fns.emplace_back("g", PartialFunction::from_pairs(base, {{"x", "z"}, {"y", "z"}}));
    fns.emplace_back("h", PartialFunction::from_pairs(base, {{"w", "z"}}));
    return {base, fns};
}

std::pair<Base, std::vector<std::pair<std::string, PartialFunction>>> figure2_functions() {
    Base base(std::vector<std::string>{"u", "v", "t"});
    std::vector<std::pair<std::string, PartialFunction>> fns;
    fns.emplace_back("f", PartialFunction::from_pairs(base, {{"u", "t"}}));
    fns.emplace_back("g", PartialFunction::from_pairs(base, {{"v", "t"}}));
    return {base, fns};
}

namespace {

std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string digits = name.substr(prefix.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
}

} // namespace

Fixture catalog_fixture(const std::string& name) {
    if (name == "figure1") {
        const auto [base, fns] = figure1_functions();
        return Fixture{"figure1.pfun.json", emit_pfun_json(base, fns)};
    }
    if (name == "figure2") {
        const auto [base, fns] = figure2_functions();
        return Fixture{"figure2.pfun.json", emit_pfun_json(base, fns)};
    }
    if (auto n = suffix_number(name, "boolean-")) {
        if (*n < 0 || *n > 8) throw UnknownFixture("boolean fixture size out of range: " + name);
        return Fixture{name + ".algebra.json", emit_algebra_json(boolean_as_algebra(*n))};
    }
    if (auto n = suffix_number(name, "example43-truncation-")) {
        if (*n < 1 || *n > 6)
            throw UnknownFixture("truncation fixture size out of range: " + name);
        return Fixture{name + ".pfun.json", emit_concrete_json(truncate(*n).algebra)};
    }
    throw UnknownFixture("unknown fixture '" + name + "'");
}

} // namespace pfa
