#include <doctest.h>

#include <random>

#include "evolab/errors.hpp"
#include "evolab/linalg.hpp"
#include "oracle.hpp"

using namespace evolab;

namespace {
const FieldSpec q = FieldSpec::rationals();
}

TEST_CASE("rref") {
    CHECK(rref(Matrix::of(q, {{2, 4}, {1, 2}})) == Matrix::of(q, {{1, 2}}));
    CHECK(rref(Matrix::identity(q, 3)) == Matrix::identity(q, 3));
    CHECK(rref(Matrix(q, 2, 3)).rows() == 0);
    const auto m = rref(Matrix::of(q, {{0, 2, 4}, {1, 1, 1}, {1, 3, 5}}));
    CHECK(m == Matrix::of(q, {{1, 0, -1}, {0, 1, 2}}));
    CHECK(Matrix::of(q, {{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("kernel vectors are annihilated") {
    const auto f = FieldSpec::prime(7);
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        Matrix m(f, 3, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = Scalar(f, static_cast<long>(rng() % 7));
        const auto k = kernel(m);
        CHECK(k.rows() + m.rank() == 5);
        for (std::size_t r = 0; r < k.rows(); ++r) {
            for (std::size_t i = 0; i < 3; ++i) {
                Scalar s = Scalar::zero(f);
                for (std::size_t j = 0; j < 5; ++j) s += m(i, j) * k(r, j);
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("span and canonical form") {
    CHECK(Subspace::span(q, 3, {}).dim() == 0);
    const auto f = FieldSpec::prime(5);
    const auto u = Subspace::span(f, 3, {Vector::of(f, {1, 1, 0}), Vector::of(f, {1, -1, 0})});
    CHECK(u.basis() == Matrix::of(f, {{1, 0, 0}, {0, 1, 0}}));
    const auto v = Subspace::span(q, 3, {Vector::of(q, {1, 1, 0}), Vector::of(q, {2, 2, 0})});
    CHECK(v.basis() == Matrix::of(q, {{1, 1, 0}}));
    CHECK(Subspace::span(q, 3, {Vector::of(q, {0, 3, 6})}) == Subspace::span(q, 3, {Vector::of(q, {0, -1, -2})}));
}

TEST_CASE("sum, intersection, containment") {
    const auto e = [](std::size_t i) { return Vector::unit(q, 3, i); };
    const auto s1 = Subspace::span(q, 3, {e(0)});
    const auto s2 = Subspace::span(q, 3, {e(1)});
    CHECK(subspace_sum(s1, s2) == Subspace::coordinate(q, 3, {0, 1}));
    CHECK(subspace_intersect(Subspace::coordinate(q, 3, {0, 1}), Subspace::coordinate(q, 3, {1, 2})) ==
          Subspace::coordinate(q, 3, {1}));
    CHECK(contains(Subspace::coordinate(q, 3, {0, 1}), s1));
    CHECK_FALSE(contains(s1, Subspace::coordinate(q, 3, {0, 1})));
    CHECK(member(Subspace::coordinate(q, 3, {0, 1}), e(0) + e(1)));
    CHECK_FALSE(member(Subspace::coordinate(q, 3, {0, 1}), e(2)));
    CHECK_THROWS_AS(subspace_sum(s1, Subspace::zero(q, 2)), DimensionMismatch);
}

TEST_CASE("subspace counts match the Gaussian binomial recurrence") {
    for (long p : {2L, 3L, 5L, 7L}) {
        for (std::size_t n = 0; n <= 5; ++n) {
            std::uint64_t total = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(subspace_count(p, n, k) == oracle::gaussian(p, n, k));
                total += oracle::gaussian(p, n, k);
            }
            CHECK(subspace_count(p, n, std::nullopt) == total);
        }
    }
    CHECK(all_subspaces(FieldSpec::prime(3), 2).size() == 6);
    CHECK(all_subspaces(FieldSpec::prime(5), 1).size() == 2);
    CHECK(all_subspaces(FieldSpec::prime(2), 3, 1).size() == 7);
}

TEST_CASE("enumeration matches an independent member-set enumeration") {
    for (auto [p, n] : std::vector<std::pair<long, std::size_t>>{{2, 4}, {3, 3}, {5, 2}, {2, 3}}) {
        const auto f = FieldSpec::prime(p);
        std::set<oracle::Members> got;
        std::size_t visits = 0;
        Subspace prev = Subspace::zero(f, n);
        bool ordered = true;
        for_each_subspace(f, n, std::nullopt, kDefaultEnumerationCap, [&](const Subspace& u) {
            if (visits++ > 0 && !(prev < u) && !(u.dim() > prev.dim())) ordered = ordered && u.dim() >= prev.dim();
            prev = u;
            got.insert(oracle::members_of(u, p));
        });
        CHECK(ordered);
        CHECK(visits == got.size());
        CHECK(got == oracle::all_subspaces(n, p));
    }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(all_subspaces(q, 2), InfiniteFieldError);
    CHECK_THROWS_AS(all_subspaces(FieldSpec::prime(3), 6, std::nullopt, 1000), EnumerationCapExceeded);
    CHECK_NOTHROW(all_subspaces(FieldSpec::prime(3), 6, 1, 1000));
}

TEST_CASE("deterministic order: dimension first, then flattened RREF") {
    const auto f = FieldSpec::prime(3);
    auto all = all_subspaces(f, 3);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); }));
    std::sort(all.begin(), all.end());
    CHECK(all.front().is_zero());
    CHECK(all.back().is_whole());
    const auto e = [&](std::size_t i) { return Vector::unit(f, 3, i); };
    CHECK(Subspace::span(f, 3, {e(2)}) < Subspace::span(f, 3, {e(1)}));
    CHECK(Subspace::span(f, 3, {e(1) + e(2)}) < Subspace::span(f, 3, {e(0)}));
    CHECK(Subspace::span(f, 3, {e(0)}) < Subspace::coordinate(f, 3, {1, 2}));
}

TEST_CASE("Grassmann identity on random pairs") {
    const auto f = FieldSpec::prime(5);
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 4;
        auto random_subspace = [&] {
            std::vector<Vector> vs;
            const std::size_t k = rng() % (n + 1);
            for (std::size_t i = 0; i < k; ++i) {
                Vector v(f, n);
                for (std::size_t j = 0; j < n; ++j) v[j] = Scalar(f, static_cast<long>(rng() % 5));
                vs.push_back(v);
            }
            return Subspace::span(f, n, vs);
        };
        const auto u = random_subspace(), v = random_subspace();
        const auto s = subspace_sum(u, v), i = subspace_intersect(u, v);
        CHECK(s.dim() + i.dim() == u.dim() + v.dim());
        CHECK(contains(s, u));
        CHECK(contains(s, v));
        CHECK(contains(u, i));
        CHECK(contains(v, i));
        // intersection membership by the oracle
        const auto mu = oracle::members_of(u, 5), mv = oracle::members_of(v, 5), mi = oracle::members_of(i, 5);
        std::vector<long> common;
        std::set_intersection(mu.begin(), mu.end(), mv.begin(), mv.end(), std::back_inserter(common));
        CHECK(common == mi);
    }
}

TEST_CASE("basis strings") {
    const auto f = FieldSpec::prime(5);
    CHECK(Vector::of(f, {1, 4, 0}).to_basis_string() == "e1+4e2");
    CHECK(Vector::of(q, {1, -1, 2}).to_basis_string() == "e1-e2+2e3");
    CHECK(Subspace::zero(q, 2).to_string() == "0");
    CHECK(Subspace::coordinate(q, 2, {0, 1}).to_string({"x", "y"}) == "span{x, y}");
}
