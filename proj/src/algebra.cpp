#include "evolab/algebra.hpp"

#include <algorithm>

#include "evolab/errors.hpp"

namespace evolab {

EvolutionAlgebra::EvolutionAlgebra(Matrix structure) : m_(std::move(structure)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("structure matrix must be square");
}

EvolutionAlgebra EvolutionAlgebra::of(FieldSpec spec, std::initializer_list<std::initializer_list<long>> rows) {
    return EvolutionAlgebra(Matrix::of(spec, rows));
}

EvolutionAlgebra EvolutionAlgebra::zero(FieldSpec spec, std::size_t n) { return EvolutionAlgebra(Matrix(spec, n, n)); }

Vector product(const EvolutionAlgebra& a, const Vector& u, const Vector& v) {
    const std::size_t n = a.dim();
    if (u.size() != n || v.size() != n) throw DimensionMismatch("element length differs from algebra dimension");
    Vector out(a.spec(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero() || v[i].is_zero()) continue;
        Scalar c = u[i] * v[i];
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& m = a.structure()(i, k);
            if (!m.is_zero()) out[k] += c * m;
        }
    }
    return out;
}

Vector principal_power(const EvolutionAlgebra& a, const Vector& u, std::size_t k) {
    if (k == 0) throw InvalidArgument("principal powers start at 1");
    if (u.size() != a.dim()) throw DimensionMismatch("element length differs from algebra dimension");
    Vector p = u;
    for (std::size_t i = 1; i < k; ++i) p = product(a, p, u);
    return p;
}

Vector plenary_power(const EvolutionAlgebra& a, const Vector& u, std::size_t k) {
    if (u.size() != a.dim()) throw DimensionMismatch("element length differs from algebra dimension");
    Vector p = u;
    for (std::size_t i = 0; i < k; ++i) p = square(a, p);
    return p;
}

Subspace annihilator(const EvolutionAlgebra& a) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.basis_square(i).is_zero()) idx.push_back(i);
    }
    return Subspace::coordinate(a.spec(), a.dim(), idx);
}

Subspace subspace_product(const EvolutionAlgebra& a, const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim()) {
        throw DimensionMismatch("subspace does not live in the algebra");
    }
    const auto ub = u.basis_vectors();
    const bool same = u == v;
    const auto vb = same ? ub : v.basis_vectors();
    std::vector<Vector> prods;
    for (std::size_t i = 0; i < ub.size(); ++i) {
        for (std::size_t j = same ? i : 0; j < vb.size(); ++j) prods.push_back(product(a, ub[i], vb[j]));
    }
    return Subspace::span(a.spec(), a.dim(), prods);
}

std::vector<std::size_t> SeriesReport::dims() const {
    std::vector<std::size_t> d;
    for (const auto& t : terms) d.push_back(t.dim());
    return d;
}

SeriesReport lower_central_series(const EvolutionAlgebra& a) {
    SeriesReport r{SeriesReport::Kind::LowerCentral, {a.whole()}, std::nullopt};
    auto& t = r.terms;
    if (t[0].is_zero()) {
        r.index = 1;
        return r;
    }
    std::size_t run_start = 1;  // 1-based start of the current constant run
    while (true) {
        const std::size_t m = t.size();  // computing E^(m+1)
        Subspace next = a.zero_subspace();
        for (std::size_t i = 1; i <= (m + 1) / 2; ++i) {
            next = subspace_sum(next, subspace_product(a, t[i - 1], t[m - i]));
        }
        if (next.is_zero()) {
            t.push_back(next);
            r.index = t.size();
            return r;
        }
        if (next == t.back()) {
            if (m + 1 >= 2 * run_start) {
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(run_start), t.end());
                return r;
            }
        } else {
            run_start = m + 1;
        }
        t.push_back(std::move(next));
    }
}

SeriesReport derived_series(const EvolutionAlgebra& a) {
    SeriesReport r{SeriesReport::Kind::Derived, {a.whole()}, std::nullopt};
    auto& t = r.terms;
    if (t[0].is_zero()) {
        r.index = 1;
        return r;
    }
    while (true) {
        Subspace next = subspace_product(a, t.back(), t.back());
        if (next == t.back()) return r;
        t.push_back(std::move(next));
        if (t.back().is_zero()) {
            r.index = t.size();
            return r;
        }
    }
}

bool is_subalgebra_subspace(const EvolutionAlgebra& a, const Subspace& u) {
    if (u.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not live in the algebra");
    const auto b = u.basis_vectors();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i; j < b.size(); ++j) {
            if (!member(u, product(a, b[i], b[j]))) return false;
        }
    }
    return true;
}

bool is_ideal(const EvolutionAlgebra& a, const Subspace& u) {
    if (u.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not live in the algebra");
    // e_k u = u_k e_k^2, so E U is spanned by the squares over the joint support.
    std::vector<bool> in_support(a.dim(), false);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (!u.basis()(i, k).is_zero()) in_support[k] = true;
        }
    }
    for (std::size_t k = 0; k < a.dim(); ++k) {
        if (in_support[k] && !member(u, a.basis_square(k))) return false;
    }
    return true;
}

bool is_basic_ideal(const EvolutionAlgebra& a, const Subspace& u) { return u.is_coordinate() && is_ideal(a, u); }

ElementView element_view(const Vector& u) { return ElementView{u, u.support()}; }

BasicQuotient quotient_by_basic_ideal(const EvolutionAlgebra& a, const Subspace& ideal) {
    if (ideal.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not live in the algebra");
    if (!is_basic_ideal(a, ideal)) throw NotBasicIdeal(ideal.to_string() + " is not a basic ideal");
    std::vector<bool> in_ideal(a.dim(), false);
    for (std::size_t p : ideal.pivots()) in_ideal[p] = true;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!in_ideal[i]) kept.push_back(i);
    }
    Matrix m(a.spec(), kept.size(), kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        for (std::size_t c = 0; c < kept.size(); ++c) m(r, c) = a.structure()(kept[r], kept[c]);
    }
    return BasicQuotient{EvolutionAlgebra(std::move(m)), std::move(kept)};
}

Vector OneDimQuotient::project(const Vector& x) const {
    const FieldSpec& spec = generator.spec();
    Vector y(spec, kept.size());
    Scalar f = x[dropped] / generator[dropped];
    for (std::size_t t = 0; t < kept.size(); ++t) y[t] = x[kept[t]] - f * generator[kept[t]];
    return y;
}

Vector OneDimQuotient::lift(const Vector& y) const {
    Vector x(generator.spec(), generator.size());
    for (std::size_t t = 0; t < kept.size(); ++t) x[kept[t]] = y[t];
    return x;
}

Subspace OneDimQuotient::preimage(const Subspace& w) const {
    std::vector<Vector> gens{generator};
    for (const auto& b : w.basis_vectors()) gens.push_back(lift(b));
    return Subspace::span(generator.spec(), generator.size(), gens);
}

OneDimQuotient quotient_by_onedim_ideal(const EvolutionAlgebra& a, const Subspace& ideal) {
    if (ideal.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not live in the algebra");
    if (ideal.dim() != 1) throw NotOneDimensional(ideal.to_string() + " is not one-dimensional");
    if (!is_ideal(a, ideal)) throw NotIdeal(ideal.to_string() + " is not an ideal");
    Vector w = ideal.basis().row(0);
    const auto supp = w.support();
    const std::size_t j0 = supp.back();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i != j0) kept.push_back(i);
    }
    OneDimQuotient q{EvolutionAlgebra::zero(a.spec(), kept.size()), j0, w, kept};
    std::vector<Vector> rows;
    for (std::size_t i : kept) rows.push_back(q.project(a.basis_square(i)));
    q.algebra = EvolutionAlgebra(Matrix::from_rows(a.spec(), kept.size(), rows));
    return q;
}

EvolutionAlgebra direct_sum(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    if (!(a.spec() == b.spec())) throw MixedFieldError("direct sum of algebras over different fields");
    const std::size_t n = a.dim() + b.dim();
    Matrix m(a.spec(), n, n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.structure()(i, j);
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.structure()(i, j);
    }
    return EvolutionAlgebra(std::move(m));
}

Subspace element_annihilator(const EvolutionAlgebra& a, const Vector& u) {
    const std::size_t n = a.dim();
    if (u.size() != n) throw DimensionMismatch("element length differs from algebra dimension");
    // column i of the map x -> xu is u_i e_i^2
    Matrix map(a.spec(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r) map(r, i) = u[i] * a.structure()(i, r);
    }
    return Subspace::span(a.spec(), n, kernel(map).row_vectors());
}

std::string to_string(Dim2Class c) {
    switch (c) {
        case Dim2Class::Abelian: return "abelian";
        case Dim2Class::E2_1_minus1: return "E2(1,-1)";
        case Dim2Class::NilpotentChain: return "nilpotent-chain";
    }
    return "?";
}

Dim2Class classify_dim2_solvable(const EvolutionAlgebra& a) {
    if (a.dim() != 2) throw WrongDimension("classification needs a two-dimensional algebra");
    if (!is_solvable(a)) throw NotSolvable("algebra is not solvable");
    Subspace derived = subspace_product(a, a.whole(), a.whole());
    if (derived.is_zero()) return Dim2Class::Abelian;
    // solvable and nonzero product: E^2 = span{w} with w^2 = 0
    const Vector w = derived.basis().row(0);
    return w.support().size() == 2 ? Dim2Class::E2_1_minus1 : Dim2Class::NilpotentChain;
}

BasisChange BasisChange::permutation(FieldSpec spec, std::vector<std::size_t> perm) {
    std::vector<Scalar> scales(perm.size(), Scalar::one(spec));
    return BasisChange{std::move(perm), std::move(scales)};
}

Vector BasisChange::to_new(const Vector& old_coords) const {
    Vector y(old_coords.spec(), perm.size());
    for (std::size_t t = 0; t < perm.size(); ++t) y[t] = old_coords[perm[t]] / scales[t];
    return y;
}

Vector BasisChange::to_old(const Vector& new_coords) const {
    Vector x(new_coords.spec(), perm.size());
    for (std::size_t t = 0; t < perm.size(); ++t) x[perm[t]] = new_coords[t] * scales[t];
    return x;
}

Subspace BasisChange::to_old(const Subspace& s) const {
    std::vector<Vector> v;
    for (const auto& b : s.basis_vectors()) v.push_back(to_old(b));
    return Subspace::span(s.spec(), s.ambient_dim(), v);
}

Subspace BasisChange::to_new(const Subspace& s) const {
    std::vector<Vector> v;
    for (const auto& b : s.basis_vectors()) v.push_back(to_new(b));
    return Subspace::span(s.spec(), s.ambient_dim(), v);
}

EvolutionAlgebra change_basis(const EvolutionAlgebra& a, const BasisChange& change) {
    const std::size_t n = a.dim();
    if (change.perm.size() != n || change.scales.size() != n) throw DimensionMismatch("basis change size");
    // f_t^2 = s_t^2 e_perm[t]^2, re-expressed in the f basis
    Matrix m(a.spec(), n, n);
    for (std::size_t t = 0; t < n; ++t) {
        Vector sq = a.basis_square(change.perm[t]).scaled(change.scales[t] * change.scales[t]);
        Vector y = change.to_new(sq);
        for (std::size_t u = 0; u < n; ++u) m(t, u) = y[u];
    }
    return EvolutionAlgebra(std::move(m));
}

std::optional<std::vector<std::size_t>> strictly_upper_permutation(const EvolutionAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!a.structure()(i, k).is_zero()) {
                if (i == k) return std::nullopt;
                ++indegree[k];
            }
        }
    }
    std::vector<std::size_t> order;
    std::vector<bool> done(n, false);
    while (order.size() < n) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!done[i] && indegree[i] == 0) {
                pick = i;
                break;
            }
        }
        if (pick == n) return std::nullopt;
        done[pick] = true;
        order.push_back(pick);
        for (std::size_t k = 0; k < n; ++k) {
            if (!a.structure()(pick, k).is_zero()) --indegree[k];
        }
    }
    return order;
}

}  // namespace evolab
