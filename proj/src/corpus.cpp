#include "evolab/corpus.hpp"

#include "evolab/errors.hpp"

namespace evolab {

AlgebraDocument CorpusEntry::document(FieldSpec f) const {
    const std::size_t n = rows.size();
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) m(i, k) = Scalar(f, rows[i][k]);
    }
    return AlgebraDocument{f, std::move(m), id, {}, note};
}

const std::vector<CorpusEntry>& corpus() {
    static const FieldSpec q = FieldSpec::rationals();
    static const std::vector<CorpusEntry> entries{
        {"max-solvable-nondistributive",
         "Solvable with maximum solvability index; four one-dimensional subalgebras and a non-distributive lattice.",
         {{2, 2, 4}, {2, 2, 0}, {-4, -4, -4}},
         q},
        {"rhombus-three",
         "Distributive and supersolvable, yet the subalgebra lattice is not a chain.",
         {{1, 1, 0}, {-1, -1, 0}, {0, 1, 0}},
         q},
        {"nilpotent-six-nonmodular",
         "Nilpotent; span{e1+e2,e4+e6} and span{e1+e3,e4+e5} generate more than their sum.",
         {{0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1},
          {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
         FieldSpec::prime(3)},
        {"equal-squares-gf5",
         "e1^2 = e2^2 = e3 over GF(5), where -1 is a square: absolute nilpotents e1 +- 2e2 appear.",
         {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}},
         FieldSpec::prime(5)},
        {"equal-squares-gf3",
         "e1^2 = e2^2 = e3 over GF(3), where -1 is not a square: no absolute nilpotent outside the annihilator.",
         {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}},
         FieldSpec::prime(3)},
        {"nilpotent-wide-annihilator",
         "e1^2 = e2 with a two-dimensional annihilator: modular but not distributive.",
         {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
         FieldSpec::prime(3)},
        {"rhombus-four-modular",
         "Max-solvable with a (1 1; -1 -1) block and lower rows balanced on it; modular.",
         {{1, 1, 0, 0}, {-1, -1, 0, 0}, {1, -1, 1, 1}, {1, -1, -1, -1}},
         FieldSpec::prime(5)},
        {"rhombus-four-nonmodular",
         "Max-solvable, every other derived term basic, yet span{e1-e2,e3+e4} is not a quasi-ideal.",
         {{1, 1, 0, 0}, {-1, -1, 0, 0}, {1, 0, 1, 1}, {0, -1, -1, -1}},
         FieldSpec::prime(5)},
        {"max-solvable-not-supersolvable",
         "Solvable with maximum index but no one-dimensional ideal.",
         {{1, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
         q},
        {"opposite-squares-nonbasic",
         "e3^2 = -e1^2 while E^2 = span{e2, e1+e3} is not a basic ideal.",
         {{0, 1, 0}, {1, 0, 1}, {0, -1, 0}},
         q},
        {"regular-three",
         "e_i^2 = e_i: supersolvable but not solvable.",
         {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
         q},
        {"nilpotent-chain-three",
         "e1^2 = e2, e2^2 = e3: maximum nilpotency index, chain lattice.",
         {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
         q},
        {"zero-three",
         "The zero product.",
         {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
         q},
    };
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
    for (const auto& e : corpus()) {
        if (e.id == id) return e;
    }
    throw InvalidArgument("unknown corpus entry \"" + id + "\"");
}

}  // namespace evolab
