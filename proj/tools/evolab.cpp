#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "evolab/corpus.hpp"
#include "evolab/document.hpp"
#include "evolab/errors.hpp"
#include "evolab/verify.hpp"

using namespace evolab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kParse = 2, kCharTwo = 3, kCap = 4, kInfinite = 5, kOther = 6 };

std::uint64_t enumeration_cap() {
    const char* env = std::getenv("EVOLAB_CAP");
    if (!env || !*env) return kDefaultEnumerationCap;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("EVOLAB_CAP must be a non-negative integer, got \"") + env + "\"");
}

SubalgebraSet subalgebras(const EvolutionAlgebra& a, const std::string& method) {
    if (method == "structural") return enumerate_structural(a);
    if (method == "brute") return enumerate_brute_force(a, enumeration_cap());
    if (structural_enumeration_applies(a)) return enumerate_structural(a);
    return enumerate_brute_force(a, enumeration_cap());
}

json strings(const Subspace& u, const AlgebraDocument& doc) { return u.to_strings(doc.labels()); }

json lattice_summary(const Lattice& l, const SubalgebraSet& set, const AlgebraDocument& doc) {
    const auto dist = is_distributive(l);
    const auto mod = is_modular(l);
    json out{{"method", to_string(set.method)},
             {"nodes", l.size()},
             {"hasse_edges", l.hasse().size()},
             {"counts_by_dim", set.count_by_dim(doc.dim())},
             {"chain", is_chain(l)},
             {"distributive", dist.holds},
             {"modular", mod.holds},
             {"upper_semimodular", is_upper_semimodular(l).holds},
             {"lower_semimodular", is_lower_semimodular(l).holds},
             {"j_algebra", is_j_algebra(l).holds}};
    if (auto p = find_pentagon(l)) {
        json w = json::array();
        for (auto i : *p) w.push_back(strings(l.node(i), doc));
        out["pentagon"] = w;
    }
    if (auto d = find_diamond(l)) {
        json w = json::array();
        for (auto i : *d) w.push_back(strings(l.node(i), doc));
        out["diamond"] = w;
    }
    return out;
}

int cmd_analyze(const std::string& path) {
    const auto doc = read_document(path);
    const auto a = doc.algebra();
    const auto v = analyze(a);
    json j = verdict_to_json(doc, v);
    if (!a.spec().is_finite() && !structural_enumeration_applies(a)) {
        j["lattice"] = nullptr;
        j["notes"].push_back("subalgebra lattice not computed: no structural shape and brute force needs a prime field");
    } else {
        const auto set = subalgebras(a, "auto");
        j["lattice"] = lattice_summary(build_lattice(a, set), set, doc);
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_lattice(const std::string& path, const std::string& emit, const std::string& method, const std::string& labels) {
    const auto doc = read_document(path);
    const auto a = doc.algebra();
    const auto set = subalgebras(a, method);
    const auto l = build_lattice(a, set);
    if (emit == "dot") {
        std::cout << emit_hasse_dot(l, labels == "dims" ? DotLabels::Dims : DotLabels::BasisStrings, doc.labels());
    } else {
        std::cout << lattice_to_json(l, set, doc.labels()).dump(2) << "\n";
    }
    return kOk;
}

void print_witness(const std::string& title, const std::vector<std::pair<std::string, Subspace>>& items,
                   const AlgebraDocument& doc) {
    std::cout << "witness " << title << ":\n";
    for (const auto& [name, u] : items) std::cout << "  " << name << " = " << u.to_string(doc.labels()) << "\n";
}

/// First pair of subalgebras whose generated subalgebra exceeds their sum.
std::optional<std::pair<Subspace, Subspace>> non_quasi_ideal_pair(const EvolutionAlgebra& a, const SubalgebraSet& set) {
    for (const auto& u : set.members) {
        if (auto r = is_quasi_ideal(a, u, set); !r.holds) return std::pair{u, *r.witness};
    }
    return std::nullopt;
}

int cmd_check(const std::string& path, const std::string& property, const std::string& method) {
    const auto doc = read_document(path);
    const auto a = doc.algebra();
    auto verdict = [](bool holds, const std::string& name) {
        std::cout << name << ": " << (holds ? "true" : "false") << "\n";
        return holds ? kOk : kFalse;
    };
    if (property == "supersolvable") {
        const auto r = is_supersolvable(a);
        const int code = verdict(r.holds, property);
        std::vector<std::pair<std::string, Subspace>> flag;
        for (std::size_t i = 0; i < r.flag.size(); ++i) flag.emplace_back("I" + std::to_string(i + 1), r.flag[i]);
        if (!flag.empty()) print_witness(r.holds ? "flag of ideals" : "partial flag of ideals", flag, doc);
        if (!r.holds) {
            const auto ideals = onedim_ideals(a);
            std::cout << "one-dimensional ideals: " << ideals.size() << "\n";
        }
        return code;
    }
    const auto set = subalgebras(a, method);
    const auto l = build_lattice(a, set);
    auto node = [&](std::size_t i) { return l.node(i); };
    if (property == "distributive") {
        const auto r = is_distributive(l);
        const int code = verdict(r.holds, property);
        if (auto d = find_diamond(l)) {
            print_witness("diamond", {{"bottom", node((*d)[0])}, {"x", node((*d)[1])}, {"y", node((*d)[2])},
                                      {"z", node((*d)[3])}, {"top", node((*d)[4])}}, doc);
        } else if (auto p = find_pentagon(l)) {
            print_witness("pentagon", {{"bottom", node((*p)[0])}, {"a", node((*p)[1])}, {"c", node((*p)[2])},
                                       {"b", node((*p)[3])}, {"top", node((*p)[4])}}, doc);
        }
        return code;
    }
    if (property == "modular") {
        const auto r = is_modular(l);
        const int code = verdict(r.holds, property);
        if (!r.holds) {
            if (auto pair = non_quasi_ideal_pair(a, set)) {
                print_witness("subalgebras whose join exceeds their sum",
                              {{"E1", pair->first}, {"E2", pair->second}, {"join", join(a, pair->first, pair->second)}},
                              doc);
            }
            if (auto p = find_pentagon(l)) {
                print_witness("pentagon", {{"bottom", node((*p)[0])}, {"a", node((*p)[1])}, {"c", node((*p)[2])},
                                           {"b", node((*p)[3])}, {"top", node((*p)[4])}}, doc);
            }
        }
        return code;
    }
    if (property == "usemi" || property == "lsemi") {
        const auto r = property == "usemi" ? is_upper_semimodular(l) : is_lower_semimodular(l);
        const int code = verdict(r.holds, property == "usemi" ? "upper-semimodular" : "lower-semimodular");
        if (r.witness) print_witness("pair", {{"U", node(r.witness->first)}, {"V", node(r.witness->second)}}, doc);
        return code;
    }
    if (property == "jalgebra") {
        const auto r = is_j_algebra(l);
        const int code = verdict(r.holds, property);
        if (r.interval) {
            print_witness("interval with maximal chains of lengths " + std::to_string(r.shortest) + " and " +
                              std::to_string(r.longest),
                          {{"U", node(r.interval->first)}, {"V", node(r.interval->second)}}, doc);
        }
        return code;
    }
    // quasi-ideals
    bool all = true;
    for (const auto& u : set.members) {
        const auto r = is_quasi_ideal(a, u, set);
        std::cout << "  " << u.to_string(doc.labels()) << ": " << (r.holds ? "quasi-ideal" : "not a quasi-ideal");
        if (!r.holds) std::cout << " (with " << r.witness->to_string(doc.labels()) << ")";
        std::cout << "\n";
        all = all && r.holds;
    }
    return verdict(all, "all subalgebras are quasi-ideals");
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed, std::size_t count) {
    bool ok = true;
    for (const auto& s : suites.empty() ? kVerifySuites : suites) {
        const auto report = run_suite(s, seed, count);
        std::cout << report.render();
        ok = ok && report.ok();
    }
    return ok ? kOk : kFalse;
}

int cmd_corpus(const std::string& dir) {
    for (const auto& e : corpus()) {
        if (dir.empty()) {
            std::cout << e.id << "  " << e.field.to_string() << "  " << e.note << "\n";
            continue;
        }
        const std::string path = dir + "/" + e.id + ".json";
        std::ofstream out(path);
        if (!out) throw InvalidArgument("cannot write " + path);
        out << render_document(e.document());
    }
    return kOk;
}

int exit_code_for(const Error& e) {
    const std::string& c = e.code();
    if (c == "ParseError") return kParse;
    if (c == "CharacteristicTwoError") return kCharTwo;
    if (c == "EnumerationCapExceeded") return kCap;
    if (c == "UnsupportedOverInfiniteField") return kInfinite;
    return kOther;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolab: evolution algebras and their subalgebra lattices"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 ok/true, 1 false or failed checks, 2 parse error, 3 characteristic 2,\n"
        "4 enumeration cap exceeded (EVOLAB_CAP overrides the cap), 5 needs a prime field, 6 other errors.");

    std::string file;
    std::string emit = "dot", method = "auto", labels = "basis", property;
    std::vector<std::string> suites;
    std::uint64_t seed = 20240601;
    std::size_t count = 0;
    std::string corpus_dir;

    auto* analyze_cmd = app.add_subcommand("analyze", "structure report as JSON");
    analyze_cmd->add_option("file", file, "algebra document")->required();

    auto* lattice_cmd = app.add_subcommand("lattice", "emit the subalgebra lattice");
    lattice_cmd->add_option("file", file, "algebra document")->required();
    lattice_cmd->add_option("--emit", emit, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    lattice_cmd->add_option("--method", method, "brute, structural or auto")
        ->check(CLI::IsMember({"brute", "structural", "auto"}));
    lattice_cmd->add_option("--labels", labels, "DOT node labels: basis or dims")->check(CLI::IsMember({"basis", "dims"}));

    auto* check_cmd = app.add_subcommand("check", "decide one lattice or structure property");
    check_cmd->add_option("file", file, "algebra document")->required();
    check_cmd->add_option("--property", property, "property to decide")
        ->required()
        ->check(CLI::IsMember({"distributive", "modular", "usemi", "lsemi", "jalgebra", "supersolvable", "quasi-ideals"}));
    check_cmd->add_option("--method", method, "brute, structural or auto")
        ->check(CLI::IsMember({"brute", "structural", "auto"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the property suites and golden examples");
    verify_cmd->add_option("--suite", suites, "suite name (repeatable; default all)")->check(CLI::IsMember(kVerifySuites));
    verify_cmd->add_option("--seed", seed, "base seed");
    verify_cmd->add_option("--count", count, "samples per randomized suite (0 = default)");

    auto* corpus_cmd = app.add_subcommand("corpus", "list the built-in algebras or write them as documents");
    corpus_cmd->add_option("--write", corpus_dir, "directory to write <id>.json files into");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kOther;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(file);
        if (*lattice_cmd) return cmd_lattice(file, emit, method, labels);
        if (*check_cmd) return cmd_check(file, property, method);
        if (*verify_cmd) return cmd_verify(suites, seed, count);
        if (*corpus_cmd) return cmd_corpus(corpus_dir);
    } catch (const Error& e) {
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
    return kOther;
}
