#include "evolab/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "evolab/errors.hpp"

namespace evolab {

Vector::Vector(FieldSpec spec, std::vector<Scalar> coords) : spec_(spec), coords_(std::move(coords)) {
    for (const auto& c : coords_) {
        if (!(c.spec() == spec_)) throw MixedFieldError("vector coordinate over a different field");
    }
}

Vector Vector::of(FieldSpec spec, std::initializer_list<long> values) {
    std::vector<Scalar> c;
    c.reserve(values.size());
    for (long v : values) c.emplace_back(spec, v);
    return Vector(spec, std::move(c));
}

Vector Vector::unit(FieldSpec spec, std::size_t n, std::size_t i) {
    Vector v(spec, n);
    v[i] = Scalar::one(spec);
    return v;
}

bool Vector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::size_t> Vector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) s.push_back(i);
    }
    return s;
}

Vector Vector::operator+(const Vector& b) const {
    if (size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
}

Vector Vector::operator-(const Vector& b) const {
    if (size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
}

Vector Vector::operator-() const {
    Vector r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Vector Vector::scaled(const Scalar& s) const {
    Vector r = *this;
    for (auto& c : r.coords_) c *= s;
    return r;
}

std::string Vector::to_basis_string(const std::vector<std::string>& labels) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        const Scalar& c = coords_[i];
        if (c.is_zero()) continue;
        const std::string name = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
        std::string coef = c.to_string();
        bool negative = !coef.empty() && coef.front() == '-';
        if (negative) coef.erase(0, 1);
        if (negative) {
            out << '-';
        } else if (!first) {
            out << '+';
        }
        if (coef != "1") {
            out << (c.is_integral() ? coef : "(" + coef + ")");
        }
        out << name;
        first = false;
    }
    return first ? "0" : out.str();
}

Matrix Matrix::from_rows(FieldSpec spec, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(spec, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
        if (!(rows[i].spec() == spec)) throw MixedFieldError("row over a different field");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::of(FieldSpec spec, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    std::vector<Vector> rv;
    for (const auto& r : rows) rv.push_back(Vector::of(spec, r));
    return from_rows(spec, cols, rv);
}

Matrix Matrix::identity(FieldSpec spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(spec);
    return m;
}

Vector Matrix::row(std::size_t i) const {
    std::vector<Scalar> c(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return Vector(spec_, std::move(c));
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

std::size_t Matrix::rank() const { return rref(*this).rows(); }

Matrix rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && a(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != lead) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(lead, j));
        }
        if (!a(lead, c).is_one()) {
            Scalar inv = a(lead, c).inv();
            for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || a(r, c).is_zero()) continue;
            Scalar f = a(r, c);
            for (std::size_t j = c; j < cols; ++j) a(r, j) -= f * a(lead, j);
        }
        ++lead;
    }
    Matrix out(m.spec(), lead, cols);
    for (std::size_t i = 0; i < lead; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
    }
    return out;
}

Matrix kernel(const Matrix& m) {
    const std::size_t cols = m.cols();
    Matrix r = rref(m);
    std::vector<std::size_t> pivot_of_row;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (r(i, c).is_zero()) ++c;
        pivot_of_row.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector x(m.spec(), cols);
        x[f] = Scalar::one(m.spec());
        for (std::size_t i = 0; i < r.rows(); ++i) x[pivot_of_row[i]] = -r(i, f);
        basis.push_back(std::move(x));
    }
    return rref(Matrix::from_rows(m.spec(), cols, basis));
}

Subspace Subspace::zero(FieldSpec spec, std::size_t n) { return Subspace(Matrix(spec, 0, n)); }

Subspace Subspace::whole(FieldSpec spec, std::size_t n) { return Subspace(Matrix::identity(spec, n)); }

Subspace Subspace::span(FieldSpec spec, std::size_t n, const std::vector<Vector>& vectors) {
    return Subspace(rref(Matrix::from_rows(spec, n, vectors)));
}

Subspace Subspace::coordinate(FieldSpec spec, std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<Vector> v;
    for (std::size_t i : indices) {
        if (i >= n) throw DimensionMismatch("basis index out of range");
        v.push_back(Vector::unit(spec, n, i));
    }
    return span(spec, n, v);
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t c = 0;
        while (basis_(i, c).is_zero()) ++c;
        p.push_back(c);
    }
    return p;
}

bool Subspace::is_coordinate() const {
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < ambient_dim(); ++j) {
            if (!basis_(i, j).is_zero()) ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

bool Subspace::operator<(const Subspace& b) const {
    if (dim() != b.dim()) return dim() < b.dim();
    if (ambient_dim() != b.ambient_dim()) return ambient_dim() < b.ambient_dim();
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < ambient_dim(); ++j) {
            auto c = basis_(i, j) <=> b.basis_(i, j);
            if (c != 0) return c < 0;
        }
    }
    return false;
}

std::vector<std::string> Subspace::to_strings(const std::vector<std::string>& labels) const {
    if (is_zero()) return {"0"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i).to_basis_string(labels));
    return out;
}

std::string Subspace::to_string(const std::vector<std::string>& labels) const {
    if (is_zero()) return "0";
    std::string s = "span{";
    auto parts = to_strings(labels);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += parts[i];
    }
    return s + "}";
}

namespace {

void check_compatible(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
    if (!(u.spec() == v.spec())) throw MixedFieldError("subspaces over different fields");
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    check_compatible(u, v);
    auto rows = u.basis_vectors();
    for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
    return Subspace::span(u.spec(), u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    check_compatible(u, v);
    const std::size_t n = u.ambient_dim();
    const std::size_t k = u.dim();
    const std::size_t l = v.dim();
    if (k == 0 || l == 0) return Subspace::zero(u.spec(), n);
    // Columns are the basis vectors of u followed by the negated basis of v;
    // a kernel vector (a, b) gives the common element sum a_i u_i.
    Matrix stacked(u.spec(), n, k + l);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < n; ++r) stacked(r, i) = u.basis()(i, r);
    }
    for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t r = 0; r < n; ++r) stacked(r, k + j) = -v.basis()(j, r);
    }
    Matrix ker = kernel(stacked);
    std::vector<Vector> common;
    for (std::size_t t = 0; t < ker.rows(); ++t) {
        Vector w(u.spec(), n);
        for (std::size_t i = 0; i < k; ++i) {
            if (ker(t, i).is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r) w[r] += ker(t, i) * u.basis()(i, r);
        }
        common.push_back(std::move(w));
    }
    return Subspace::span(u.spec(), n, common);
}

bool member(const Subspace& u, const Vector& x) {
    if (x.size() != u.ambient_dim()) throw DimensionMismatch("vector length differs from ambient dimension");
    Vector r = x;
    const auto piv = u.pivots();
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Scalar f = r[piv[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = piv[i]; j < r.size(); ++j) r[j] -= f * u.basis()(i, j);
    }
    return r.is_zero();
}

bool contains(const Subspace& u, const Subspace& v) {
    check_compatible(u, v);
    if (v.dim() > u.dim()) return false;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (!member(u, v.basis().row(i))) return false;
    }
    return true;
}

std::uint64_t subspace_count(std::int64_t p, std::size_t n, std::optional<std::size_t> dim) {
    auto gaussian = [&](std::size_t k) {
        mpz_class num = 1, den = 1;
        mpz_class q = p;
        for (std::size_t i = 0; i < k; ++i) {
            mpz_class a, b;
            mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n - i);
            mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), i + 1);
            num *= a - 1;
            den *= b - 1;
        }
        return mpz_class(num / den);
    };
    mpz_class total = 0;
    if (dim) {
        if (*dim <= n) total = gaussian(*dim);
    } else {
        for (std::size_t k = 0; k <= n; ++k) total += gaussian(k);
    }
    if (total > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return std::stoull(total.get_str());
}

void for_each_subspace(FieldSpec spec, std::size_t n, std::optional<std::size_t> dim, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& visit) {
    if (!spec.is_finite()) throw InfiniteFieldError("subspace enumeration needs a finite field");
    const std::uint64_t count = subspace_count(spec.characteristic(), n, dim);
    if (count > cap) {
        throw EnumerationCapExceeded("GF(" + std::to_string(spec.characteristic()) + ")^" + std::to_string(n) +
                                     " has " + std::to_string(count) + " subspaces, cap is " + std::to_string(cap));
    }
    const auto values = all_scalars(spec);
    const std::size_t p = values.size();
    const std::size_t lo = dim ? *dim : 0;
    const std::size_t hi = dim ? std::min(*dim, n) : n;
    for (std::size_t k = lo; k <= hi; ++k) {
        std::vector<std::size_t> pivots(k);
        for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
        while (true) {
            std::vector<bool> is_pivot(n, false);
            for (std::size_t c : pivots) is_pivot[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = pivots[r] + 1; c < n; ++c) {
                    if (!is_pivot[c]) free.emplace_back(r, c);
                }
            }
            Matrix m(spec, k, n);
            for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = Scalar::one(spec);
            std::vector<std::size_t> digits(free.size(), 0);
            while (true) {
                for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = values[digits[f]];
                visit(Subspace(m));
                std::size_t f = 0;
                while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
                if (f == digits.size()) break;
            }
            // next combination of pivot columns
            std::size_t i = k;
            while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++pivots[i - 1];
            for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
}

std::vector<Subspace> all_subspaces(FieldSpec spec, std::size_t n, std::optional<std::size_t> dim,
                                    std::uint64_t cap) {
    std::vector<Subspace> out;
    for_each_subspace(spec, n, dim, cap, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

}  // namespace evolab
