#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evolab/lattice.hpp"

namespace evolab {

/// dim E^2 = n - 1. NotSolvable when the algebra is not solvable.
bool has_max_solvability_index(const EvolutionAlgebra& a);

struct MaxSolvableNormalForm {
    BasisChange change;
    /// Number of squares entering the dependency e_n^2 = -e_1^2 - ... - e_m^2.
    std::size_t m;
    EvolutionAlgebra algebra;
};

/// Reorders the basis so the dependency among the squares reads
/// e_n^2 = -(e_1^2 + ... + e_m^2) after rescaling f_i = lambda_i e_i.
/// StructuralPreconditionFailed unless codim E^2 = 1,
/// NormalFormScalingUnavailable when a dependency coefficient has no square
/// root in the field, NotSolvable when the algebra is not solvable.
MaxSolvableNormalForm max_solvable_normal_form(const EvolutionAlgebra& a);

/// Lines span{e_j^2} (e_j^2 != 0) and span{e_i} (e_i^2 = 0) that are ideals,
/// sorted. Every one-dimensional ideal outside the annihilator is listed;
/// inside a annihilator of dimension >= 2 every line is an ideal and only the
/// coordinate ones are reported.
std::vector<Subspace> onedim_ideals(const EvolutionAlgebra& a);

struct SupersolvableResult {
    bool holds;
    /// Ideals of dimensions 1, 2, ..., n when `holds`; otherwise the partial
    /// flag built before the recursion got stuck.
    std::vector<Subspace> flag;
};
SupersolvableResult is_supersolvable(const EvolutionAlgebra& a);

struct TheoremLevel {
    std::size_t dim;
    bool degenerate;
    /// Support of a basic ideal I with dim I^2 = 1 and I^2 absolute nilpotent
    /// (an E_k(lambda) copy), when one exists.
    std::optional<std::vector<std::size_t>> basic_support;
    bool has_onedim_ideal;
    bool consistent;
};

struct SupersolvableTheoremReport {
    bool supersolvable;
    bool criterion;
    bool consistent;
    std::vector<TheoremLevel> levels;
    std::vector<std::string> notes;
};

/// Walks the quotients along the flag built by is_supersolvable and checks at
/// each level that a one-dimensional ideal exists exactly when the algebra is
/// degenerate or has a basic E_k(lambda) ideal. NotSolvable otherwise.
SupersolvableTheoremReport check_supersolvable_theorem(const EvolutionAlgebra& a);

struct DistributivityBundle {
    bool max_nilpotency;          // codim E^2 = 1
    bool chain;                   // lattice is a chain of length n
    bool distributive;
    bool principal_generator;     // E = span{u, u^2, ..., u^n} for some u
    std::optional<Vector> generator;
    /// A triple (U, V, W) with U v (V ^ W) != (U v V) ^ (U v W), when found.
    std::optional<std::array<Subspace, 3>> witness;
    std::vector<std::size_t> triangular_order;
    bool exhaustive;  // lattice and generator decided by brute force
    bool agree() const {
        return max_nilpotency == chain && chain == distributive && distributive == principal_generator;
    }
};

/// The four equivalent conditions for nilpotent algebras. Over GF(p) the
/// lattice conditions use the brute-force lattice and the generator is
/// searched exhaustively; over Q they are decided from the superdiagonal of
/// the triangular form. StructuralPreconditionFailed unless nilpotent with a
/// triangularizing permutation.
DistributivityBundle nilpotent_distributivity_bundle(const EvolutionAlgebra& a,
                                                     std::uint64_t cap = kDefaultEnumerationCap);

enum class SearchOutcome { Found, None, Unknown };
std::string to_string(SearchOutcome s);

struct NilpotentModularityReport {
    SearchOutcome absolute_nilpotent;  // outside the annihilator
    std::optional<Vector> witness;
    std::optional<bool> modular;       // lattice verdict, GF(p) only
    std::optional<bool> distributive;
    /// A modular lattice never coexists with an absolute nilpotent element
    /// outside the annihilator.
    bool no_modular_with_absolute_nilpotent;
    /// Modular == distributive, evaluated when dim ann = 1 over GF(p) with
    /// p = 1 mod 4 (standing in for a quadratically closed field).
    std::optional<bool> modular_matches_distributive;
    std::vector<std::string> notes;
};
NilpotentModularityReport nilpotent_modularity_checks(const EvolutionAlgebra& a,
                                                      std::uint64_t cap = kDefaultEnumerationCap);

struct BasicPatternResult {
    bool holds;
    /// 1-based positions (k, k+1) of two consecutive non-basic derived terms.
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};
/// NotSolvable when the algebra is not solvable.
BasicPatternResult derived_series_basic_pattern(const EvolutionAlgebra& a);

/// Permutation and rescaling bringing the structure matrix to block lower
/// triangular form with zero or (1 1; -1 -1) diagonal blocks. `pairs` lists
/// the 0-based first index t of each 2-block (t, t+1) in the new basis.
struct BlockForm {
    BasisChange change;
    EvolutionAlgebra algebra;
    std::vector<std::size_t> pairs;
};
/// Exhaustive over permutations; InvalidArgument for n > kMaxPermutationSearch.
std::optional<BlockForm> find_block_form(const EvolutionAlgebra& a);
inline constexpr std::size_t kMaxPermutationSearch = 8;

struct SupersolvableEquivalence {
    bool supersolvable;
    bool block_form;
    bool basic_pattern;
    std::optional<BlockForm> form;
    bool agree() const { return supersolvable == block_form && block_form == basic_pattern; }
};
/// StructuralPreconditionFailed unless solvable with codim E^2 = 1 and
/// n <= kMaxPermutationSearch.
SupersolvableEquivalence max_solvable_supersolvable_equivalence(const EvolutionAlgebra& a);

struct ModularityCriterion {
    bool derived_clause;
    /// A subalgebra K + span{e_i - e_{i+1}, e_j +- e_{j+1}} with a projection of
    /// e_j^2 or e_{j+1}^2 to span{e_i, e_{i+1}} outside span{e_i - e_{i+1}},
    /// expressed in the original basis.
    std::optional<Subspace> witness;
    bool modular;
    BlockForm form;
    std::optional<bool> lattice_modular;  // GF(p) cross-check
    bool agrees() const { return !lattice_modular || *lattice_modular == modular; }
};
/// StructuralPreconditionFailed unless solvable with codim E^2 = 1 and a block
/// form exists.
ModularityCriterion modularity_criterion_max_solvable(const EvolutionAlgebra& a, bool cross_check = true,
                                                      std::uint64_t cap = kDefaultEnumerationCap);

struct StructureVerdict {
    bool nilpotent;
    bool solvable;
    bool max_solvability_index;
    bool max_nilpotency_index;
    bool supersolvable;
    bool degenerate;
    std::optional<std::size_t> nilpotency_index;
    std::optional<std::size_t> solvability_index;
    SeriesReport lower;
    SeriesReport derived;
    std::vector<bool> derived_basic;  // per derived term
    Subspace annihilator;
    std::vector<Subspace> supersolvable_flag;
    std::optional<MaxSolvableNormalForm> normal_form;
    std::optional<BlockForm> block_form;
    std::vector<std::string> notes;
};

/// Everything above that applies to the algebra. CharacteristicTwoError
/// over GF(2).
StructureVerdict analyze(const EvolutionAlgebra& a);

}  // namespace evolab
