#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evolab/algebra.hpp"

namespace evolab {

struct SubalgebraSet {
    enum class Method { BruteForce, StructuralChain, StructuralMaxSolvable };

    /// Sorted by the Subspace order; always contains 0 and the whole space.
    std::vector<Subspace> members;
    Method method;

    std::vector<std::size_t> count_by_dim(std::size_t n) const;
};

std::string to_string(SubalgebraSet::Method m);

/// Least subalgebra containing `generators` (fixpoint of U <- U + UU).
Subspace generated_subalgebra(const EvolutionAlgebra& a, const std::vector<Vector>& generators,
                              std::size_t ambient);
Subspace generated_subalgebra(const EvolutionAlgebra& a, const Subspace& u);
Subspace join(const EvolutionAlgebra& a, const Subspace& u, const Subspace& v);

/// Every subspace closed under the product. UnsupportedOverInfiniteField
/// over Q, EnumerationCapExceeded when GF(p)^n has more than `cap` subspaces.
SubalgebraSet enumerate_brute_force(const EvolutionAlgebra& a, std::uint64_t cap = kDefaultEnumerationCap);

/// Brute-force subalgebras of one fixed dimension; the cap applies to the
/// number of subspaces of that dimension.
std::vector<Subspace> brute_force_subalgebras_of_dim(const EvolutionAlgebra& a, std::size_t dim,
                                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Closed-form enumeration for two shapes, over any field of characteristic
/// != 2:
///  - nilpotent with codim E^2 = 1: after the triangularizing permutation the
///    subalgebras form the chain span{e_k..e_n};
///  - e_1^2 = -e_2^2 = e_1 + e_2, e_j^2 (j >= 3) in span{e_1..e_{j-1}} with
///    e_j^2 having a nonzero e_{j-1} coefficient for j >= 4, and rank n-1.
/// StructuralPreconditionFailed otherwise.
SubalgebraSet enumerate_structural(const EvolutionAlgebra& a);

/// True when enumerate_structural applies.
bool structural_enumeration_applies(const EvolutionAlgebra& a);

/// One-dimensional subalgebras of a solvable algebra with codim E^2 = 1,
/// sorted. StructuralPreconditionFailed when the algebra is not of that kind.
std::vector<Subspace> onedim_subalgebras_max_solvable(const EvolutionAlgebra& a);

/// Unique (up to scalar) dependency c with sum_i c_i e_i^2 = 0, scaled so
/// that its last nonzero entry is 1. Empty unless rank M = n - 1.
std::optional<Vector> square_dependency(const EvolutionAlgebra& a);

struct QuasiIdealResult {
    bool holds;
    std::optional<Subspace> witness;
};

/// U is a quasi-ideal when U + V is a subalgebra for every V in `set`.
QuasiIdealResult is_quasi_ideal(const EvolutionAlgebra& a, const Subspace& u, const SubalgebraSet& set);
/// Every V in `set` with U + V not a subalgebra.
std::vector<Subspace> quasi_ideal_violations(const EvolutionAlgebra& a, const Subspace& u,
                                             const SubalgebraSet& set);

}  // namespace evolab
