#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evolab/field.hpp"

namespace evolab {

/// Coordinates of an element relative to the natural basis.
class Vector {
public:
    Vector(FieldSpec spec, std::size_t n) : spec_(spec), coords_(n, Scalar::zero(spec)) {}
    Vector(FieldSpec spec, std::vector<Scalar> coords);
    /// Convenience constructor from small integers.
    static Vector of(FieldSpec spec, std::initializer_list<long> values);
    static Vector unit(FieldSpec spec, std::size_t n, std::size_t i);

    const FieldSpec& spec() const { return spec_; }
    std::size_t size() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_zero() const;
    /// Indices with nonzero coordinate, ascending.
    std::vector<std::size_t> support() const;

    Vector operator+(const Vector& b) const;
    Vector operator-(const Vector& b) const;
    Vector operator-() const;
    Vector scaled(const Scalar& s) const;

    bool operator==(const Vector& b) const { return coords_ == b.coords_; }

    /// Renders as a combination of basis vectors, e.g. "e1-e2+2e3".
    std::string to_basis_string(const std::vector<std::string>& labels = {}) const;

private:
    FieldSpec spec_;
    std::vector<Scalar> coords_;
};

class Matrix {
public:
    Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
        : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(spec)) {}
    /// Rows must all have length `cols`; DimensionMismatch otherwise.
    static Matrix from_rows(FieldSpec spec, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix of(FieldSpec spec, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix identity(FieldSpec spec, std::size_t n);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    std::vector<Vector> row_vectors() const;
    Matrix transpose() const;
    std::size_t rank() const;

    bool operator==(const Matrix& b) const {
        return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
    }

private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with the zero rows removed.
Matrix rref(const Matrix& m);

/// Basis (as rows, in RREF) of the right null space {x : m x = 0}.
Matrix kernel(const Matrix& m);

/// A linear subspace of K^n stored as its canonical RREF basis, so that
/// structural equality of the basis decides equality of subspaces.
class Subspace {
public:
    static Subspace zero(FieldSpec spec, std::size_t n);
    static Subspace whole(FieldSpec spec, std::size_t n);
    static Subspace span(FieldSpec spec, std::size_t n, const std::vector<Vector>& vectors);
    /// span{e_i : i in indices}
    static Subspace coordinate(FieldSpec spec, std::size_t n, const std::vector<std::size_t>& indices);

    const FieldSpec& spec() const { return basis_.spec(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
    /// Column index of the leading 1 of each basis row.
    std::vector<std::size_t> pivots() const;

    bool is_zero() const { return dim() == 0; }
    bool is_whole() const { return dim() == ambient_dim(); }
    /// True when every basis row is a standard unit vector.
    bool is_coordinate() const;

    bool operator==(const Subspace& b) const { return basis_ == b.basis_; }
    /// Deterministic order: by dimension, then lexicographic on the
    /// flattened RREF basis.
    bool operator<(const Subspace& b) const;

    /// Basis rows rendered with `Vector::to_basis_string`, or {"0"}.
    std::vector<std::string> to_strings(const std::vector<std::string>& labels = {}) const;
    std::string to_string(const std::vector<std::string>& labels = {}) const;

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

    friend void for_each_subspace(FieldSpec, std::size_t, std::optional<std::size_t>, std::uint64_t,
                                  const std::function<void(const Subspace&)>&);

    Matrix basis_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// True when v is a subspace of u.
bool contains(const Subspace& u, const Subspace& v);
bool member(const Subspace& u, const Vector& x);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Number of k-dimensional subspaces of GF(p)^n (all k when dim is empty),
/// saturated at UINT64_MAX.
std::uint64_t subspace_count(std::int64_t p, std::size_t n, std::optional<std::size_t> dim);

/// Visits every subspace of GF(p)^n exactly once by generating the canonical
/// RREF matrices (pivot columns first, then the free entries), in increasing
/// dimension. InfiniteFieldError over Q; EnumerationCapExceeded when the
/// subspace count exceeds `cap`.
void for_each_subspace(FieldSpec spec, std::size_t n, std::optional<std::size_t> dim, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(FieldSpec spec, std::size_t n, std::optional<std::size_t> dim = std::nullopt,
                                    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace evolab
