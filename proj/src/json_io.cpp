#include "pfa/json_io.hpp"

#include <json.hpp>

#include "pfa/errors.hpp"

namespace pfa {

using Json = nlohmann::ordered_json;

namespace {

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<std::string> out;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

} // namespace

FiniteAlgebra parse_algebra_json(const std::string& text) {
    const Json j = parse_text(text);
    if (!j.is_object()) throw ParseError("top level: expected an object");
    for (const char* key : {"elements", "compose", "meet", "antidomain"})
        if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

    const auto elements = string_list(j["elements"], "elements");
    const size_t n = elements.size();
    if (n == 0) throw ParseError("elements: must be nonempty");
    auto index_of = [&](const std::string& name, const std::string& where) -> Elem {
        for (size_t i = 0; i < n; ++i)
            if (elements[i] == name) return static_cast<Elem>(i);
        throw ParseError(where + ": unknown element '" + name + "'");
    };

    auto read_table = [&](const Json& table, const std::string& where) {
        if (!table.is_array() || table.size() != n)
            throw ParseError(where + ": expected " + std::to_string(n) + " rows");
        std::vector<Elem> out(n * n);
        for (size_t i = 0; i < n; ++i) {
            const Json& row = table[i];
            const std::string row_where = where + "[" + std::to_string(i) + "]";
            if (!row.is_array() || row.size() != n)
                throw ParseError(row_where + ": expected " + std::to_string(n) + " entries");
            for (size_t k = 0; k < n; ++k) {
                const std::string cell_where = row_where + "[" + std::to_string(k) + "]";
                if (!row[k].is_string()) throw ParseError(cell_where + ": expected a string");
                out[i * n + k] = index_of(row[k].get<std::string>(), cell_where);
            }
        }
        return out;
    };

    std::vector<Elem> anti(n);
    {
        const Json& a = j["antidomain"];
        if (!a.is_array() || a.size() != n)
            throw ParseError("antidomain: expected " + std::to_string(n) + " entries");
        for (size_t i = 0; i < n; ++i) {
            const std::string where = "antidomain[" + std::to_string(i) + "]";
            if (!a[i].is_string()) throw ParseError(where + ": expected a string");
            anti[i] = index_of(a[i].get<std::string>(), where);
        }
    }
    try {
        return FiniteAlgebra::from_tables(elements, read_table(j["compose"], "compose"),
                                          read_table(j["meet"], "meet"), std::move(anti));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string emit_algebra_json(const FiniteAlgebra& alg) {
    Json j;
    j["elements"] = alg.elements;
    const int n = alg.n();
    auto table = [&](auto op) {
        Json rows = Json::array();
        for (Elem a = 0; a < n; ++a) {
            Json row = Json::array();
            for (Elem b = 0; b < n; ++b) row.push_back(alg.elements[static_cast<size_t>(op(a, b))]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["compose"] = table([&](Elem a, Elem b) { return alg.compose(a, b); });
    j["meet"] = table([&](Elem a, Elem b) { return alg.meet(a, b); });
    Json anti = Json::array();
    for (Elem a = 0; a < n; ++a) anti.push_back(alg.elements[static_cast<size_t>(alg.antidomain(a))]);
    j["antidomain"] = std::move(anti);
    return j.dump(2) + "\n";
}

NamedFunctions parse_pfun_json(const std::string& text) {
    const Json j = parse_text(text);
    if (!j.is_object()) throw ParseError("top level: expected an object");
    if (!j.contains("base")) throw ParseError("missing field 'base'");
    if (!j.contains("functions")) throw ParseError("missing field 'functions'");

    NamedFunctions out;
    out.base = Base(string_list(j["base"], "base"));
    const Json& fns = j["functions"];
    if (!fns.is_object()) throw ParseError("functions: expected an object");
    for (auto it = fns.begin(); it != fns.end(); ++it) {
        const std::string where = "functions['" + it.key() + "']";
        if (!it.value().is_array()) throw ParseError(where + ": expected an array of pairs");
        std::vector<std::pair<std::string, std::string>> pairs;
        for (size_t i = 0; i < it.value().size(); ++i) {
            const Json& p = it.value()[i];
            const std::string pair_where = where + "[" + std::to_string(i) + "]";
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
                throw ParseError(pair_where + ": expected a [from, to] pair of strings");
            pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        try {
            out.functions.emplace_back(it.key(), PartialFunction::from_pairs(out.base, pairs));
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return out;
}

std::string emit_pfun_json(const Base& base,
                           const std::vector<std::pair<std::string, PartialFunction>>& functions) {
    Json j;
    j["base"] = base.names();
    Json fns = Json::object();
    for (const auto& [name, f] : functions) {
        Json pairs = Json::array();
        for (const auto& [from, to] : f.named_graph()) pairs.push_back(Json::array({from, to}));
        fns[name] = std::move(pairs);
    }
    j["functions"] = std::move(fns);
    return j.dump(2) + "\n";
}

std::string emit_concrete_json(const ConcreteAlgebra& alg) {
    std::vector<std::pair<std::string, PartialFunction>> fns;
    for (size_t i = 0; i < alg.functions.size(); ++i)
        fns.emplace_back(alg.names[i], alg.functions[i]);
    return emit_pfun_json(alg.base, fns);
}

std::string emit_validation_json(const ValidationReport& report, const FiniteAlgebra& alg) {
    Json j;
    j["passed"] = report.passed;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json witness = Json::array();
        for (Elem w : f.witness) witness.push_back(alg.elements[static_cast<size_t>(w)]);
        failures.push_back(Json{{"law", f.law}, {"witness", std::move(witness)}});
    }
    j["failures"] = std::move(failures);
    return j.dump(2) + "\n";
}

std::string emit_representation_json(const Representation& rep) {
    std::vector<std::pair<std::string, PartialFunction>> fns;
    for (size_t i = 0; i < rep.assignment.size(); ++i)
        fns.emplace_back(rep.source->elements[i], rep.assignment[i]);
    return emit_pfun_json(rep.base, fns);
}

std::string emit_refutation_json(const Refutation& refutation, const FiniteAlgebra& alg) {
    Json j;
    j["kind"] = refutation_kind_name(refutation.kind);
    if (!refutation.operation.empty()) j["operation"] = refutation.operation;
    Json witness = Json::array();
    for (Elem w : refutation.witness) witness.push_back(alg.elements[static_cast<size_t>(w)]);
    j["witness"] = std::move(witness);
    return j.dump(2) + "\n";
}

std::string emit_example43_json(const Example43Report& report) {
    auto steps = [](const std::vector<ProofStep>& v) {
        Json arr = Json::array();
        for (const auto& s : v)
            arr.push_back(Json{{"case", s.name}, {"holds", s.holds}, {"detail", s.detail}});
        return arr;
    };
    Json j;
    j["join_g"] = report.join_g.value.to_string();
    j["meet_h"] = report.meet_h.value.to_string();
    j["left_dist_join_fails"] = report.left_dist_join_fails;
    j["left_dist_meet_fails"] = report.left_dist_meet_fails;
    j["intermediates"] = Json{
        {"f_compose_join_g", report.f_compose_join_g.to_string()},
        {"join_of_composites", report.join_of_composites.to_string()},
        {"f_compose_meet_h", report.f_compose_meet_h.to_string()},
        {"meet_of_composites", report.meet_of_composites.to_string()},
        {"f_is_atom", report.f_is_atom},
    };
    j["proof"] = Json{
        {"join_g_bound", steps(report.join_g.bound_cases)},
        {"join_g_extremality", steps(report.join_g.extremality_cases)},
        {"meet_h_bound", steps(report.meet_h.bound_cases)},
        {"meet_h_extremality", steps(report.meet_h.extremality_cases)},
    };
    return j.dump(2) + "\n";
}

} // namespace pfa
