#pragma once

#include <string>
#include <vector>

#include "evolab/document.hpp"

namespace evolab {

/// A named algebra with integer structure constants, reducible to any field.
struct CorpusEntry {
    std::string id;
    std::string note;
    std::vector<std::vector<long>> rows;
    /// Field of the shipped data file.
    FieldSpec field;

    AlgebraDocument document() const { return document(field); }
    AlgebraDocument document(FieldSpec f) const;
    EvolutionAlgebra algebra(FieldSpec f) const { return document(f).algebra(); }
};

const std::vector<CorpusEntry>& corpus();
/// InvalidArgument for unknown ids.
const CorpusEntry& corpus_entry(const std::string& id);

}  // namespace evolab
