// pfalg - construct, check and decide complete representability of finite
// algebras of partial functions in the signature (composition, meet,
// antidomain). Machine output goes to stdout as JSON, diagnostics to stderr.
// Exit codes: 0 success / YES, 3 negative verdict, 1 usage or input error,
// 2 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfa/catalog.hpp"
#include "pfa/concrete_algebra.hpp"
#include "pfa/ef_game.hpp"
#include "pfa/errors.hpp"
#include "pfa/finite_algebra.hpp"
#include "pfa/json_io.hpp"
#include "pfa/ninfty.hpp"
#include "pfa/random.hpp"
#include "pfa/representation.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNegative = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pfa::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pfa::Signature parse_signature(const std::string& spec) {
    pfa::Signature sig;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "compose")
            sig.add(pfa::Op::Compose);
        else if (item == "meet")
            sig.add(pfa::Op::Meet);
        else if (item == "zero")
            sig.add(pfa::Op::Zero);
        else if (item == "identity")
            sig.add(pfa::Op::Identity);
        else if (item == "domain")
            sig.add(pfa::Op::Domain);
        else if (item == "range")
            sig.add(pfa::Op::Range);
        else if (item == "antidomain")
            sig.add(pfa::Op::Antidomain);
        else
            throw pfa::Error("unknown operation '" + item + "' in --signature");
    }
    return sig;
}

int cmd_validate(const std::string& path) {
    const pfa::FiniteAlgebra alg = pfa::parse_algebra_json(read_file(path));
    const pfa::ValidationReport report = pfa::validate(alg);
    std::cout << pfa::emit_validation_json(report, alg);
    return report.passed ? kExitOk : kExitNegative;
}

int cmd_close(const std::string& path, const std::string& signature, int max_closure) {
    const pfa::NamedFunctions input = pfa::parse_pfun_json(read_file(path));
    std::vector<pfa::PartialFunction> generators;
    for (const auto& [name, f] : input.functions) generators.push_back(f);
    const pfa::ConcreteAlgebra closed =
        pfa::close_generators(input.base, generators, parse_signature(signature), max_closure);
    std::cout << pfa::emit_concrete_json(closed);
    return kExitOk;
}

int cmd_atoms(const std::string& path) {
    const pfa::FiniteAlgebra alg = pfa::parse_algebra_json(read_file(path));
    Json j;
    Json names = Json::array();
    for (pfa::Elem a : pfa::atoms(alg)) names.push_back(alg.elements[static_cast<size_t>(a)]);
    j["atoms"] = std::move(names);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_represent(const std::string& path) {
    const pfa::FiniteAlgebra alg = pfa::parse_algebra_json(read_file(path));
    const pfa::ThetaOutcome outcome = pfa::build_theta(alg);
    if (outcome.verified()) {
        std::cout << "YES\n" << pfa::emit_representation_json(*outcome.representation);
        return kExitOk;
    }
    std::cout << "NO\n" << pfa::emit_refutation_json(*outcome.refutation, alg);
    return kExitNegative;
}

int cmd_decide(const std::string& path, bool with_oracle) {
    const pfa::FiniteAlgebra alg = pfa::parse_algebra_json(read_file(path));
    pfa::Verdict verdict = pfa::decide_complete_representability(alg);
    if (with_oracle) {
        const auto found = pfa::brute_force_search(alg);
        if (found.has_value() != verdict.completely_representable)
            throw std::logic_error("decision procedure disagrees with the brute-force oracle");
        verdict.method = pfa::Verdict::Method::BothAgree;
        std::cerr << "oracle agrees: " << (found ? "found" : "absent") << "\n";
    }
    if (verdict.completely_representable) {
        std::cout << "YES\n" << pfa::emit_representation_json(*verdict.witness);
        return kExitOk;
    }
    std::cout << "NO\n" << pfa::emit_refutation_json(*verdict.refutation, alg);
    return kExitNegative;
}

int cmd_example43() {
    const pfa::Example43Report report = pfa::verify_example_43();
    Json j = Json::parse(pfa::emit_example43_json(report));
    bool truncations_agree = true;
    for (int n = 1; n <= 4; ++n) truncations_agree = truncations_agree && pfa::truncation_agreement(n);
    j["truncation_agreement_up_to_4"] = truncations_agree;
    std::cout << j.dump(2) << "\n";
    if (!report.verified() || !truncations_agree)
        throw std::logic_error("the symbolic verification of the distributivity failures failed");
    return kExitOk;
}

int cmd_laws_figure1() {
    const auto [base, fns] = pfa::figure1_functions();
    const pfa::PartialFunction &f1 = fns[0].second, &f2 = fns[1].second, &g = fns[2].second,
                               &h = fns[3].second;
    const pfa::PartialFunction lhs = pfa::compose(pfa::intersect(f1, f2), g);
    const pfa::PartialFunction rhs = pfa::intersect(pfa::compose(f1, g), pfa::compose(f2, g));
    const bool reproduced = lhs.is_empty() && rhs == h && !rhs.is_empty();
    auto graph = [](const pfa::PartialFunction& f) {
        Json pairs = Json::array();
        for (const auto& [from, to] : f.named_graph()) pairs.push_back(Json::array({from, to}));
        return pairs;
    };
    Json j;
    j["law"] = "composition right-distributes over meet";
    j["holds"] = false;
    j["base"] = base.names();
    j["witness"] = Json{
        {"(f1 /\\ f2);g", graph(lhs)},
        {"(f1;g) /\\ (f2;g)", graph(rhs)},
    };
    std::cout << j.dump(2) << "\n";
    if (!reproduced)
        throw std::logic_error("the drawn counterexample did not reproduce");
    return kExitOk;
}

// Seeded law driver: the partial-function laws on random functions, plus the
// distributivity laws that hold in every concrete algebra.
int cmd_laws_random(int iterations, uint64_t seed) {
    pfa::SplitMix64 rng(seed);
    for (int it = 0; it < iterations; ++it) {
        const int k = 1 + static_cast<int>(rng.below(4));
        std::vector<std::string> points;
        for (int i = 0; i < k; ++i) points.push_back("p" + std::to_string(i));
        pfa::Base base(points);
        const auto f = pfa::random_partial_function(rng, base);
        const auto g = pfa::random_partial_function(rng, base);
        const auto h = pfa::random_partial_function(rng, base);
        auto fail = [&](const std::string& law) {
            Json j;
            j["law"] = law;
            j["holds"] = false;
            j["witness"] = Json::parse(pfa::emit_pfun_json(base, {{"f", f}, {"g", g}, {"h", h}}));
            std::cout << j.dump(2) << "\n";
            return kExitNegative;
        };
        using namespace pfa;
        if (compose(compose(f, g), h) != compose(f, compose(g, h)))
            return fail("compose-associative");
        if (intersect(f, g) != intersect(g, f)) return fail("intersect-commutative");
        if (intersect(intersect(f, g), h) != intersect(f, intersect(g, h)))
            return fail("intersect-associative");
        if (intersect(f, f) != f) return fail("intersect-idempotent");
        if (!compose(antidomain(f), f).is_empty()) return fail("antidomain-annihilates");
        if (domain_diag(f) != antidomain(antidomain(f))) return fail("domain-is-antidomain-squared");
        if (!intersect(domain_diag(f), antidomain(f)).is_empty())
            return fail("domain-antidomain-disjoint");
        {
            // D(f) and A(f) partition the identity.
            std::vector<int32_t> un(static_cast<size_t>(k), PartialFunction::kUndefined);
            for (int x = 0; x < k; ++x)
                un[static_cast<size_t>(x)] =
                    domain_diag(f).defined_at(x) || antidomain(f).defined_at(x) ? x : -1;
            if (PartialFunction(base, un) != identity(base)) return fail("domain-antidomain-cover");
        }
    }
    Json j;
    j["checked"] = iterations;
    j["violations"] = 0;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

pfa::Extent parse_extent(const Json& v, const std::string& where) {
    if (v.is_string() && v.get<std::string>() == "inf") return pfa::Extent::inf();
    if (v.is_number_integer()) return pfa::Extent::finite(v.get<int>());
    throw pfa::Error(where + ": expected a number or \"inf\"");
}

Json extent_json(pfa::Extent e) {
    return e.infinite ? Json("inf") : Json(e.value);
}

Json correspondence_json(const pfa::GameState& state) {
    Json arr = Json::array();
    for (const auto& pair : state.correspondence)
        arr.push_back(Json{{"b", extent_json(pair.b.size)},
                           {"atoms", extent_json(pair.bp.atoms)},
                           {"atomless", pair.bp.atomless}});
    return arr;
}

int cmd_ef_game(const std::string& rounds_spec, int split_bound, int max_finite,
                const std::string& mode) {
    int n[3] = {0, 0, 0};
    {
        std::stringstream ss(rounds_spec);
        std::string item;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ss, item, ',')) throw pfa::Error("--rounds expects n1,n2,n3");
            n[i] = std::stoi(item);
        }
    }
    if (mode == "exhaustive") {
        const bool wins = pfa::exhaustive_check(n[0], n[1], n[2], split_bound, max_finite);
        Json j;
        j["mode"] = "exhaustive";
        j["rounds"] = Json::array({n[0], n[1], n[2]});
        j["split_bound"] = split_bound;
        j["max_finite"] = max_finite;
        j["duplicator_wins"] = wins;
        std::cout << j.dump(2) << "\n";
        return wins ? kExitOk : kExitNegative;
    }
    if (mode != "interactive-script") throw pfa::Error("--mode must be exhaustive or interactive-script");

    // One JSON line per spoiler split: {"cell": i, "parts": [...]}, at most
    // n_r lines per round; {"pass": true} ends a round early. Replies are
    // printed per round.
    pfa::GameState state = pfa::new_game();
    std::string line;
    for (int round = 1; round <= 3; ++round) {
        pfa::SpoilerMoveB move_b;
        pfa::SpoilerMoveBPrime move_bp;
        int taken = 0;
        while (taken < n[round - 1] && std::getline(std::cin, line)) {
            if (line.empty()) continue;
            const Json j = Json::parse(line, nullptr, true);
            if (j.contains("pass")) break;
            const int cell = j.at("cell").get<int>();
            if (pfa::side_to_move(round) == pfa::Side::B) {
                pfa::SplitB split;
                split.cell = cell;
                for (size_t i = 0; i < j.at("parts").size(); ++i)
                    split.parts.push_back(
                        pfa::CellB{parse_extent(j["parts"][i], "parts[" + std::to_string(i) + "]")});
                move_b.splits.push_back(std::move(split));
            } else {
                pfa::SplitBPrime split;
                split.cell = cell;
                for (size_t i = 0; i < j.at("parts").size(); ++i) {
                    const Json& p = j["parts"][i];
                    split.parts.push_back(pfa::CellBPrime{
                        parse_extent(p.at("atoms"), "parts.atoms"),
                        p.value("atomless", false)});
                }
                move_bp.splits.push_back(std::move(split));
            }
            ++taken;
        }
        state = pfa::side_to_move(round) == pfa::Side::B ? pfa::spoiler_move(state, move_b)
                                                         : pfa::spoiler_move(state, move_bp);
        state = pfa::duplicator_reply(state);
        Json reply;
        reply["round"] = round;
        reply["correspondence"] = correspondence_json(state);
        std::cout << reply.dump() << "\n";
    }
    const pfa::Winner w = pfa::winner(state);
    Json j;
    j["winner"] = w == pfa::Winner::Duplicator ? "duplicator" : "spoiler";
    std::cout << j.dump() << "\n";
    return w == pfa::Winner::Duplicator ? kExitOk : kExitNegative;
}

int cmd_catalog(const std::string& name, const std::string& out_dir) {
    const pfa::Fixture fixture = pfa::catalog_fixture(name);
    const std::filesystem::path path = std::filesystem::path(out_dir) / fixture.filename;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pfa::Error("cannot write '" + path.string() + "'");
    out << fixture.contents;
    std::cout << path.string() << "\n";
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"algebras of partial functions: composition, meet, antidomain"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pfalg 0.1.0");
    uint64_t seed = 0;

    std::string path, signature = "compose,meet,antidomain", out_dir = ".";
    int max_closure = 10000;

    auto* validate_cmd = app.add_subcommand("validate", "check the algebra laws of a table file");
    validate_cmd->add_option("file", path, "algebra JSON file")->required();

    auto* close_cmd = app.add_subcommand("close", "close generators under a signature");
    close_cmd->add_option("file", path, "partial-function JSON file")->required();
    close_cmd->add_option("--signature", signature, "comma list of operations")
        ->capture_default_str();
    close_cmd->add_option("--max-closure", max_closure, "function cap")->capture_default_str();

    auto* atoms_cmd = app.add_subcommand("atoms", "list the atoms of an algebra");
    atoms_cmd->add_option("file", path, "algebra JSON file")->required();

    auto* represent_cmd =
        app.add_subcommand("represent", "build the atom-base representation or refute");
    represent_cmd->add_option("file", path, "algebra JSON file")->required();

    bool with_oracle = false;
    auto* decide_cmd = app.add_subcommand("decide", "decide complete representability");
    decide_cmd->add_option("file", path, "algebra JSON file")->required();
    decide_cmd->add_flag("--oracle", with_oracle, "cross-check with the brute-force search");

    bool figure1 = false;
    int random_n = 0;
    auto* laws_cmd = app.add_subcommand("laws", "distributivity and partial-function laws");
    laws_cmd->add_flag("--figure1", figure1, "print the drawn right-distributivity failure");
    laws_cmd->add_option("--random", random_n, "run N seeded random law checks");
    laws_cmd->add_option("--seed", seed, "seed for the random driver")->capture_default_str();

    app.add_subcommand("example43", "verify both infinite distributivity failures");

    std::string rounds = "1,1,1", mode = "exhaustive";
    int split_bound = 4, max_finite = 4;
    auto* ef_cmd = app.add_subcommand("ef-game", "the three-round partition game");
    ef_cmd->add_option("--rounds", rounds, "budgets n1,n2,n3")->capture_default_str();
    ef_cmd->add_option("--split-bound", split_bound, "max parts per split")->capture_default_str();
    ef_cmd->add_option("--max-finite", max_finite, "largest finite size")->capture_default_str();
    ef_cmd->add_option("--mode", mode, "exhaustive | interactive-script")->capture_default_str();

    std::string fixture_name;
    auto* catalog_cmd = app.add_subcommand("catalog", "emit a named fixture file");
    catalog_cmd->add_option("name", fixture_name, "fixture name")->required();
    catalog_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput; // help/version succeed; usage errors are input errors
    }

    if (validate_cmd->parsed()) return cmd_validate(path);
    if (close_cmd->parsed()) return cmd_close(path, signature, max_closure);
    if (atoms_cmd->parsed()) return cmd_atoms(path);
    if (represent_cmd->parsed()) return cmd_represent(path);
    if (decide_cmd->parsed()) return cmd_decide(path, with_oracle);
    if (app.got_subcommand("example43")) return cmd_example43();
    if (laws_cmd->parsed()) {
        if (figure1) return cmd_laws_figure1();
        if (random_n > 0) return cmd_laws_random(random_n, seed);
        throw pfa::Error("laws: pass --figure1 or --random N");
    }
    if (ef_cmd->parsed()) return cmd_ef_game(rounds, split_bound, max_finite, mode);
    if (catalog_cmd->parsed()) return cmd_catalog(fixture_name, out_dir);
    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const pfa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
