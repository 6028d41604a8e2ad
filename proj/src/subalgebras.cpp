#include "evolab/subalgebras.hpp"

#include <algorithm>

#include "evolab/errors.hpp"

namespace evolab {

std::vector<std::size_t> SubalgebraSet::count_by_dim(std::size_t n) const {
    std::vector<std::size_t> out(n + 1, 0);
    for (const auto& m : members) ++out[m.dim()];
    return out;
}

std::string to_string(SubalgebraSet::Method m) {
    switch (m) {
        case SubalgebraSet::Method::BruteForce: return "brute";
        case SubalgebraSet::Method::StructuralChain: return "structural-chain";
        case SubalgebraSet::Method::StructuralMaxSolvable: return "structural-max-solvable";
    }
    return "?";
}

Subspace generated_subalgebra(const EvolutionAlgebra& a, const Subspace& u) {
    Subspace cur = u;
    while (true) {
        Subspace next = subspace_sum(cur, subspace_product(a, cur, cur));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Subspace generated_subalgebra(const EvolutionAlgebra& a, const std::vector<Vector>& generators,
                              std::size_t ambient) {
    if (ambient != a.dim()) throw DimensionMismatch("generators do not live in the algebra");
    return generated_subalgebra(a, Subspace::span(a.spec(), ambient, generators));
}

Subspace join(const EvolutionAlgebra& a, const Subspace& u, const Subspace& v) {
    return generated_subalgebra(a, subspace_sum(u, v));
}

namespace {

void require_prime_field(const EvolutionAlgebra& a) {
    if (!a.spec().is_finite()) {
        throw UnsupportedOverInfiniteField("brute-force enumeration needs a prime field; over Q only the "
                                           "structural method is available");
    }
}

}  // namespace

SubalgebraSet enumerate_brute_force(const EvolutionAlgebra& a, std::uint64_t cap) {
    require_prime_field(a);
    SubalgebraSet out{{}, SubalgebraSet::Method::BruteForce};
    for_each_subspace(a.spec(), a.dim(), std::nullopt, cap, [&](const Subspace& u) {
        if (is_subalgebra_subspace(a, u)) out.members.push_back(u);
    });
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::vector<Subspace> brute_force_subalgebras_of_dim(const EvolutionAlgebra& a, std::size_t dim,
                                                     std::uint64_t cap) {
    require_prime_field(a);
    std::vector<Subspace> out;
    for_each_subspace(a.spec(), a.dim(), dim, cap, [&](const Subspace& u) {
        if (is_subalgebra_subspace(a, u)) out.push_back(u);
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::optional<std::vector<std::size_t>> chain_order(const EvolutionAlgebra& a) {
    auto perm = strictly_upper_permutation(a);
    if (!perm) return std::nullopt;
    for (std::size_t t = 0; t + 1 < perm->size(); ++t) {
        if (a.structure()((*perm)[t], (*perm)[t + 1]).is_zero()) return std::nullopt;
    }
    return perm;
}

/// Largest 1-based K >= 2 such that e_j^2 has opposite e_1, e_2 coefficients
/// for 3 <= j <= K; nullopt when the block shape does not match.
std::optional<std::size_t> rhombus_extent(const EvolutionAlgebra& a) {
    const std::size_t n = a.dim();
    if (n < 2) return std::nullopt;
    const Matrix& m = a.structure();
    const FieldSpec& f = a.spec();
    const Scalar one = Scalar::one(f);
    if (!(m(0, 0) == one && m(0, 1) == one && m(1, 0) == -one && m(1, 1) == -one)) return std::nullopt;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 2; j < n; ++j) {
            if (!m(i, j).is_zero()) return std::nullopt;
        }
    }
    for (std::size_t i = 2; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!m(i, j).is_zero()) return std::nullopt;
        }
        if (i >= 3 && m(i, i - 1).is_zero()) return std::nullopt;
    }
    if (m.rank() + 1 != n) return std::nullopt;
    std::size_t k = 2;
    while (k < n && (m(k, 0) + m(k, 1)).is_zero()) ++k;
    return k;
}

}  // namespace

bool structural_enumeration_applies(const EvolutionAlgebra& a) {
    if (!a.spec().char_ne_2()) return false;
    return chain_order(a).has_value() || rhombus_extent(a).has_value();
}

SubalgebraSet enumerate_structural(const EvolutionAlgebra& a) {
    a.spec().require_char_ne_2("structural subalgebra enumeration");
    const FieldSpec& f = a.spec();
    const std::size_t n = a.dim();
    if (auto perm = chain_order(a)) {
        SubalgebraSet out{{}, SubalgebraSet::Method::StructuralChain};
        for (std::size_t k = 0; k <= n; ++k) {
            out.members.push_back(
                Subspace::coordinate(f, n, std::vector<std::size_t>(perm->begin() + static_cast<long>(n - k), perm->end())));
        }
        std::sort(out.members.begin(), out.members.end());
        return out;
    }
    if (auto extent = rhombus_extent(a)) {
        SubalgebraSet out{{}, SubalgebraSet::Method::StructuralMaxSolvable};
        Vector plus = Vector::unit(f, n, 0) + Vector::unit(f, n, 1);
        Vector minus = Vector::unit(f, n, 0) - Vector::unit(f, n, 1);
        out.members.push_back(a.zero_subspace());
        out.members.push_back(Subspace::span(f, n, {plus}));
        out.members.push_back(Subspace::span(f, n, {minus}));
        std::vector<std::size_t> prefix{0};
        for (std::size_t k = 1; k < n; ++k) {
            prefix.push_back(k);
            out.members.push_back(Subspace::coordinate(f, n, prefix));
        }
        std::vector<Vector> tail{minus};
        for (std::size_t k = 2; k < *extent; ++k) {
            tail.push_back(Vector::unit(f, n, k));
            out.members.push_back(Subspace::span(f, n, tail));
        }
        std::sort(out.members.begin(), out.members.end());
        return out;
    }
    throw StructuralPreconditionFailed(
        "structural enumeration needs a nilpotent chain shape or the (1 1; -1 -1) block shape");
}

std::optional<Vector> square_dependency(const EvolutionAlgebra& a) {
    Matrix k = kernel(a.structure().transpose());
    if (k.rows() != 1) return std::nullopt;
    Vector c = k.row(0);
    const auto supp = c.support();
    return c.scaled(c[supp.back()].inv());
}

std::vector<Subspace> onedim_subalgebras_max_solvable(const EvolutionAlgebra& a) {
    a.spec().require_char_ne_2("one-dimensional subalgebras of max-solvable algebras");
    const std::size_t n = a.dim();
    auto c = square_dependency(a);
    if (!c || !is_solvable(a)) {
        throw StructuralPreconditionFailed("needs a solvable algebra with codim E^2 = 1");
    }
    auto supp = c->support();
    const std::size_t last = supp.back();
    supp.pop_back();
    std::vector<Scalar> roots;
    for (std::size_t i : supp) {
        auto r = (*c)[i].sqrt();
        if (!r) throw StructuralPreconditionFailed("dependency coefficient is not a square");
        roots.push_back(*r);
    }
    std::vector<Subspace> out;
    const std::size_t m = supp.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Vector v(a.spec(), n);
        v[last] = Scalar::one(a.spec());
        for (std::size_t t = 0; t < m; ++t) v[supp[t]] = (mask >> t & 1) ? -roots[t] : roots[t];
        out.push_back(Subspace::span(a.spec(), n, {v}));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Subspace> quasi_ideal_violations(const EvolutionAlgebra& a, const Subspace& u,
                                             const SubalgebraSet& set) {
    std::vector<Subspace> out;
    for (const auto& v : set.members) {
        if (!is_subalgebra_subspace(a, subspace_sum(u, v))) out.push_back(v);
    }
    return out;
}

QuasiIdealResult is_quasi_ideal(const EvolutionAlgebra& a, const Subspace& u, const SubalgebraSet& set) {
    for (const auto& v : set.members) {
        if (!is_subalgebra_subspace(a, subspace_sum(u, v))) return {false, v};
    }
    return {true, std::nullopt};
}

}  // namespace evolab
