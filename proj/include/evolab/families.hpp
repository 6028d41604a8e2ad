#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evolab/algebra.hpp"

namespace evolab {

/// E_k(lambda_1..lambda_n): e_i^2 = lambda_i (e_1 + ... + e_k).
struct FamilyOneSpec {
    std::size_t n;
    std::size_t k;  // 1-based count of summed basis vectors
    std::vector<Scalar> lambdas;

    /// lambda_i = 0 for every i <= k.
    bool is_nilpotent_member() const;
};

/// Raises InvalidFamilySpec unless 1 <= k <= n, |lambdas| = n,
/// lambda_1 + ... + lambda_k = 0 and some lambda_j != 0.
void validate(const FamilyOneSpec& spec);

EvolutionAlgebra make_family_one(const FamilyOneSpec& spec);

/// Block matrix [[A, 0], [C, L]] with A = diag(parts), L strictly lower
/// triangular.
struct FamilyTwoSpec {
    std::vector<FamilyOneSpec> parts;
    Matrix c;  // (n-m) x m
    Matrix l;  // (n-m) x (n-m)

    std::size_t block_size() const;  // m
    std::size_t dim() const { return block_size() + l.rows(); }
};

void validate(const FamilyTwoSpec& spec);
EvolutionAlgebra make_family_two(const FamilyTwoSpec& spec);

/// Re-expresses a member of F(E_1..E_r) with a nilpotent part E_i as a member
/// of F(E_1..^E_i..E_r). `perm` lists the original basis indices in the order
/// of the new spec's basis, so that
/// change_basis(make_family_two(original), permutation(perm)) equals
/// make_family_two(spec).
struct AbsorbedFamily {
    FamilyTwoSpec spec;
    std::vector<std::size_t> perm;
};
AbsorbedFamily absorb_nilpotent_part(const FamilyTwoSpec& spec, std::size_t part);

enum class Profile {
    General,
    StrictUpperTriangular,
    StrictTriangularFullSuperdiag,
    MaxSolvable,
    FamilyOne,
    FamilyTwo,
};

std::string to_string(Profile p);
std::optional<Profile> parse_profile(const std::string& name);

inline constexpr int kDefaultRetryBudget = 1000;
/// Draws allowed for the MaxSolvable solvability filter.
inline constexpr long kSolvableFilterBudget = 5000000;

/// Deterministic in (spec, n, profile, seed). Needs a prime field; the
/// solvable profiles also need characteristic != 2. MaxSolvable draws rows
/// 1..n-1 with an invertible leading (n-1)x(n-1) block, sets the last row to
/// minus the sum of the first m rows and keeps the sample once it is
/// solvable. `retries` bounds the leading-minor rejection of each draw and
/// kSolvableFilterBudget the number of draws; UnsatisfiableProfile beyond.
EvolutionAlgebra random_algebra(FieldSpec spec, std::size_t n, Profile profile, std::uint64_t seed,
                                int retries = kDefaultRetryBudget);

/// Random FamilyTwo spec of total dimension n (used by random_algebra).
FamilyTwoSpec random_family_two_spec(FieldSpec spec, std::size_t n, std::uint64_t seed);
FamilyOneSpec random_family_one_spec(FieldSpec spec, std::size_t n, std::uint64_t seed);

/// Random solvable algebra with maximum index of solvability whose structure
/// matrix, in a hidden permuted and rescaled natural basis, is block lower
/// triangular with zero or (1 1; -1 -1) diagonal blocks. These are the
/// supersolvable ones; used to populate the corpus for the modularity
/// criterion.
EvolutionAlgebra random_supersolvable_max_solvable(FieldSpec spec, std::size_t n, std::uint64_t seed,
                                                   int retries = kDefaultRetryBudget);

/// Random algebra with e_1^2 = -e_2^2 = e_1 + e_2, e_j^2 in span{e_1..e_{j-1}}
/// with a nonzero e_{j-1} coefficient for j >= 4, and rank n - 1; roughly half
/// of the samples keep e_j^2 in span{e_1 - e_2, e_3, .., e_{j-1}} for a
/// leading run of j. These are the distributive max-solvable algebras.
EvolutionAlgebra random_rhombus_chain(FieldSpec spec, std::size_t n, std::uint64_t seed,
                                      int retries = kDefaultRetryBudget);

}  // namespace evolab
