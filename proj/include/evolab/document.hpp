#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evolab/structure.hpp"

namespace evolab {

inline constexpr int kSchemaVersion = 1;

/// JSON description of an algebra:
///   {"schema": 1, "field": "Q" | {"GF": p}, "dim": n,
///    "matrix": [[...], ...], "name": ..., "basis_labels": [...], "note": ...}
/// Matrix entries are integers or strings such as "-3/4".
struct AlgebraDocument {
    FieldSpec field;
    Matrix matrix;
    std::optional<std::string> name;
    std::vector<std::string> basis_labels;
    std::optional<std::string> note;

    std::size_t dim() const { return matrix.rows(); }
    EvolutionAlgebra algebra() const { return EvolutionAlgebra(matrix); }
    /// Labels to print, defaulting to e1..en.
    std::vector<std::string> labels() const;

    bool operator==(const AlgebraDocument&) const = default;
};

/// ParseError on malformed JSON, unknown fields, shape mismatches or entries
/// that do not live in the declared field.
AlgebraDocument parse_document(const std::string& text);
AlgebraDocument read_document(const std::string& path);
std::string render_document(const AlgebraDocument& doc);

nlohmann::json field_to_json(const FieldSpec& f);
nlohmann::json subspace_to_json(const Subspace& u, const std::vector<std::string>& labels);
nlohmann::json series_to_json(const SeriesReport& s, const std::vector<std::string>& labels);
nlohmann::json verdict_to_json(const AlgebraDocument& doc, const StructureVerdict& v);
nlohmann::json lattice_to_json(const Lattice& l, const SubalgebraSet& set, const std::vector<std::string>& labels);

}  // namespace evolab
