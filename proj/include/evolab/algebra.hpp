#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evolab/linalg.hpp"

namespace evolab {

/// A finite-dimensional evolution algebra given by its structure matrix
/// relative to a natural basis e_1..e_n: row i holds the coordinates of e_i^2
/// and e_i e_j = 0 for i != j.
class EvolutionAlgebra {
public:
    /// DimensionMismatch unless `structure` is square.
    explicit EvolutionAlgebra(Matrix structure);
    static EvolutionAlgebra of(FieldSpec spec, std::initializer_list<std::initializer_list<long>> rows);
    static EvolutionAlgebra zero(FieldSpec spec, std::size_t n);

    const FieldSpec& spec() const { return m_.spec(); }
    std::size_t dim() const { return m_.rows(); }
    const Matrix& structure() const { return m_; }
    /// Coordinates of e_i^2.
    Vector basis_square(std::size_t i) const { return m_.row(i); }

    Subspace whole() const { return Subspace::whole(spec(), dim()); }
    Subspace zero_subspace() const { return Subspace::zero(spec(), dim()); }

    bool operator==(const EvolutionAlgebra& b) const { return m_ == b.m_; }

private:
    Matrix m_;
};

/// uv = sum_i u_i v_i e_i^2.
Vector product(const EvolutionAlgebra& a, const Vector& u, const Vector& v);
inline Vector square(const EvolutionAlgebra& a, const Vector& u) { return product(a, u, u); }

/// u^1 = u, u^k = u^(k-1) u. Requires k >= 1.
Vector principal_power(const EvolutionAlgebra& a, const Vector& u, std::size_t k);
/// u^(0) = u, u^(k) = u^(k-1) u^(k-1).
Vector plenary_power(const EvolutionAlgebra& a, const Vector& u, std::size_t k);

/// span{e_i : e_i^2 = 0}.
Subspace annihilator(const EvolutionAlgebra& a);
inline bool is_degenerate(const EvolutionAlgebra& a) { return !annihilator(a).is_zero(); }

/// span{uv : u in basis(U), v in basis(V)}; by bilinearity this is the span
/// of the full set product.
Subspace subspace_product(const EvolutionAlgebra& a, const Subspace& u, const Subspace& v);

struct SeriesReport {
    enum class Kind { LowerCentral, Derived };

    Kind kind;
    /// terms[0] is the whole algebra. The sequence ends either at the zero
    /// subspace or at the term where it provably stabilizes.
    std::vector<Subspace> terms;
    /// 1-based position of the first zero term, when there is one.
    std::optional<std::size_t> index;

    std::vector<std::size_t> dims() const;
};

/// E^1 = E, E^(k+1) = sum_{i=1}^{k} E^i E^(k+1-i). Consecutive equal terms can
/// occur before the series reaches zero, so stabilization is only declared
/// once a constant run starting at position k survives to position 2k.
SeriesReport lower_central_series(const EvolutionAlgebra& a);
/// E^(1) = E, E^(k+1) = E^(k) E^(k); stops at the first repeated term.
SeriesReport derived_series(const EvolutionAlgebra& a);

inline bool is_nilpotent(const EvolutionAlgebra& a) { return lower_central_series(a).index.has_value(); }
inline bool is_solvable(const EvolutionAlgebra& a) { return derived_series(a).index.has_value(); }

bool is_subalgebra_subspace(const EvolutionAlgebra& a, const Subspace& u);
bool is_ideal(const EvolutionAlgebra& a, const Subspace& u);
/// An ideal spanned by a subset of the natural basis.
bool is_basic_ideal(const EvolutionAlgebra& a, const Subspace& u);

struct ElementView {
    Vector vector;
    std::vector<std::size_t> support;
};
ElementView element_view(const Vector& u);

struct BasicQuotient {
    EvolutionAlgebra algebra;
    /// Original indices of the surviving basis vectors, ascending.
    std::vector<std::size_t> kept;
};

/// E/I for a basic ideal I: delete the rows and columns of I's indices.
/// NotBasicIdeal otherwise.
BasicQuotient quotient_by_basic_ideal(const EvolutionAlgebra& a, const Subspace& ideal);

/// E/J for a one-dimensional ideal J = span{w}. The largest index j0 of
/// supp(w) is dropped and e_j0 is identified with -w_j0^{-1} sum_{k!=j0} w_k e_k;
/// the images of the remaining e_k form a natural basis of the quotient.
struct OneDimQuotient {
    EvolutionAlgebra algebra;
    std::size_t dropped;
    /// Generator of J normalized to leading coefficient 1.
    Vector generator;
    std::vector<std::size_t> kept;

    /// Image of x in quotient coordinates.
    Vector project(const Vector& x) const;
    /// The representative sum_t y_t e_kept[t].
    Vector lift(const Vector& y) const;
    /// Full preimage J + lift(W) of a quotient subspace.
    Subspace preimage(const Subspace& w) const;
};

/// NotOneDimensional / NotIdeal when the preconditions fail.
OneDimQuotient quotient_by_onedim_ideal(const EvolutionAlgebra& a, const Subspace& ideal);

/// Block-diagonal structure matrix. MixedFieldError for different fields.
EvolutionAlgebra direct_sum(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

/// {x : xu = 0}.
Subspace element_annihilator(const EvolutionAlgebra& a, const Vector& u);

enum class Dim2Class { Abelian, E2_1_minus1, NilpotentChain };
std::string to_string(Dim2Class c);

/// Two-dimensional solvable algebras up to isomorphism. A nonzero derived
/// algebra span{w} has w^2 = 0; full support of w gives e_1^2 = -e_2^2 =
/// e_1+e_2, a single basis vector gives the chain e_1^2 = e_2, e_2^2 = 0.
Dim2Class classify_dim2_solvable(const EvolutionAlgebra& a);

/// A new natural basis f_t = scales[t] * e_perm[t].
struct BasisChange {
    std::vector<std::size_t> perm;
    std::vector<Scalar> scales;

    static BasisChange permutation(FieldSpec spec, std::vector<std::size_t> perm);

    Vector to_new(const Vector& old_coords) const;
    Vector to_old(const Vector& new_coords) const;
    Subspace to_old(const Subspace& new_subspace) const;
    Subspace to_new(const Subspace& old_subspace) const;
};

EvolutionAlgebra change_basis(const EvolutionAlgebra& a, const BasisChange& change);

/// A permutation of the natural basis making the structure matrix strictly
/// upper triangular (e_perm[t]^2 only involves later vectors), found by a
/// topological sort of the graph i -> k for a_ik != 0 with smallest-index
/// tie-breaking. Empty when the graph has a cycle or a loop.
std::optional<std::vector<std::size_t>> strictly_upper_permutation(const EvolutionAlgebra& a);

}  // namespace evolab
