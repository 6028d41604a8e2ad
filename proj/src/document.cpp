#include "evolab/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "evolab/errors.hpp"

namespace evolab {

using nlohmann::json;

std::vector<std::string> AlgebraDocument::labels() const {
    if (!basis_labels.empty()) return basis_labels;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back("e" + std::to_string(i + 1));
    return out;
}

namespace {

FieldSpec parse_field(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
    if (j.is_object() && j.size() == 1 && j.contains("GF") && j["GF"].is_number_integer()) {
        try {
            return FieldSpec::prime(j["GF"].get<std::int64_t>());
        } catch (const Error& e) {
            throw ParseError(std::string("bad field: ") + e.what());
        }
    }
    throw ParseError("field must be \"Q\" or {\"GF\": p}");
}

Scalar parse_entry(const FieldSpec& f, const json& j) {
    std::string text;
    if (j.is_number_integer()) {
        text = j.dump();
    } else if (j.is_string()) {
        text = j.get<std::string>();
    } else {
        throw ParseError("matrix entries must be integers or strings, got " + j.dump());
    }
    try {
        return Scalar::parse(f, text);
    } catch (const Error& e) {
        throw ParseError("entry " + j.dump() + ": " + e.what());
    }
}

json entry_to_json(const Scalar& s) {
    const std::string text = s.to_string();
    if (text.find('/') == std::string::npos) return json::parse(text);
    return text;
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        static const std::vector<std::string> known{"schema", "field", "dim", "matrix", "name", "basis_labels", "note"};
        if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("unknown key \"" + key + "\"");
    }
    if (j.contains("schema") && !(j["schema"].is_number_integer() && j["schema"].get<int>() == kSchemaVersion)) {
        throw ParseError("unsupported schema version");
    }
    if (!j.contains("field")) throw ParseError("missing \"field\"");
    if (!j.contains("matrix") || !j["matrix"].is_array()) throw ParseError("missing \"matrix\" array");
    const FieldSpec f = parse_field(j["field"]);
    const json& rows = j["matrix"];
    const std::size_t n = rows.size();
    if (j.contains("dim")) {
        if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() != n) {
            throw ParseError("\"dim\" does not match the matrix");
        }
    }
    if (n == 0) throw ParseError("empty matrix");
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix must be square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = parse_entry(f, rows[i][k]);
    }
    AlgebraDocument doc{f, std::move(m), std::nullopt, {}, std::nullopt};
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("note")) {
        if (!j["note"].is_string()) throw ParseError("\"note\" must be a string");
        doc.note = j["note"].get<std::string>();
    }
    if (j.contains("basis_labels")) {
        const json& l = j["basis_labels"];
        if (!l.is_array() || l.size() != n) throw ParseError("\"basis_labels\" needs one string per basis vector");
        for (const auto& s : l) {
            if (!s.is_string()) throw ParseError("basis labels must be strings");
            doc.basis_labels.push_back(s.get<std::string>());
        }
    }
    return doc;
}

AlgebraDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

json field_to_json(const FieldSpec& f) {
    if (!f.is_finite()) return "Q";
    return json{{"GF", f.characteristic()}};
}

std::string render_document(const AlgebraDocument& doc) {
    json j;
    j["schema"] = kSchemaVersion;
    if (doc.name) j["name"] = *doc.name;
    j["field"] = field_to_json(doc.field);
    j["dim"] = doc.dim();
    j["matrix"] = "@matrix@";
    if (!doc.basis_labels.empty()) j["basis_labels"] = doc.basis_labels;
    if (doc.note) j["note"] = *doc.note;
    std::string rows = "[";
    for (std::size_t i = 0; i < doc.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < doc.dim(); ++k) row.push_back(entry_to_json(doc.matrix(i, k)));
        rows += (i ? ",\n    " : "\n    ") + row.dump();
    }
    rows += "\n  ]";
    std::string out = j.dump(2);
    out.replace(out.find("\"@matrix@\""), 10, rows);
    return out + "\n";
}

json subspace_to_json(const Subspace& u, const std::vector<std::string>& labels) {
    return u.to_strings(labels);
}

json series_to_json(const SeriesReport& s, const std::vector<std::string>& labels) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(subspace_to_json(t, labels));
    json out{{"dims", s.dims()}, {"terms", terms}};
    out["index"] = s.index ? json(*s.index) : json(nullptr);
    return out;
}

json verdict_to_json(const AlgebraDocument& doc, const StructureVerdict& v) {
    const auto labels = doc.labels();
    json j;
    j["schema"] = kSchemaVersion;
    if (doc.name) j["name"] = *doc.name;
    j["field"] = field_to_json(doc.field);
    j["dim"] = doc.dim();
    j["flags"] = {{"nilpotent", v.nilpotent},
                  {"solvable", v.solvable},
                  {"max_solvability_index", v.max_solvability_index},
                  {"max_nilpotency_index", v.max_nilpotency_index},
                  {"supersolvable", v.supersolvable},
                  {"degenerate", v.degenerate}};
    j["indices"] = {{"nilpotency", v.nilpotency_index ? json(*v.nilpotency_index) : json(nullptr)},
                    {"solvability", v.solvability_index ? json(*v.solvability_index) : json(nullptr)}};
    j["series"] = {{"lower_central", series_to_json(v.lower, labels)}, {"derived", series_to_json(v.derived, labels)}};
    j["derived_basic"] = v.derived_basic;
    j["annihilator"] = subspace_to_json(v.annihilator, labels);
    json flag = json::array();
    for (const auto& u : v.supersolvable_flag) flag.push_back(subspace_to_json(u, labels));
    j["supersolvable_flag"] = flag;
    if (v.normal_form) {
        const auto& nf = *v.normal_form;
        json scales = json::array();
        for (const auto& s : nf.change.scales) scales.push_back(s.to_string());
        j["normal_form"] = {{"m", nf.m}, {"permutation", nf.change.perm}, {"scales", scales}};
    } else {
        j["normal_form"] = nullptr;
    }
    if (v.block_form) {
        json scales = json::array();
        for (const auto& s : v.block_form->change.scales) scales.push_back(s.to_string());
        j["block_form"] = {{"permutation", v.block_form->change.perm},
                           {"scales", scales},
                           {"pairs", v.block_form->pairs}};
    } else {
        j["block_form"] = nullptr;
    }
    j["notes"] = v.notes;
    return j;
}

json lattice_to_json(const Lattice& l, const SubalgebraSet& set, const std::vector<std::string>& labels) {
    json nodes = json::array();
    for (std::size_t i = 0; i < l.size(); ++i) {
        nodes.push_back({{"id", i}, {"dim", l.node(i).dim()}, {"basis", subspace_to_json(l.node(i), labels)}});
    }
    json edges = json::array();
    for (auto [lo, hi] : l.hasse()) edges.push_back(json::array({lo, hi}));
    const std::size_t n = l.node(l.top()).ambient_dim();
    return {{"schema", kSchemaVersion},
            {"method", to_string(set.method)},
            {"counts_by_dim", set.count_by_dim(n)},
            {"nodes", nodes},
            {"hasse", edges}};
}

}  // namespace evolab
