#include <doctest.h>

#include <algorithm>
#include <random>

#include "evolab/errors.hpp"
#include "evolab/families.hpp"
#include "evolab/structure.hpp"
#include "evolab/subalgebras.hpp"
#include "oracle.hpp"

using namespace evolab;

namespace {
const FieldSpec q = FieldSpec::rationals();

Subspace span(FieldSpec f, std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> vs;
    for (auto r : rows) vs.push_back(Vector::of(f, r));
    return Subspace::span(f, n, vs);
}

EvolutionAlgebra six(FieldSpec f) {
    return EvolutionAlgebra::of(f, {{0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1},
                                    {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}});
}
EvolutionAlgebra nondistributive3(FieldSpec f) { return EvolutionAlgebra::of(f, {{2, 2, 4}, {2, 2, 0}, {-4, -4, -4}}); }
EvolutionAlgebra rhombus3(FieldSpec f) { return EvolutionAlgebra::of(f, {{1, 1, 0}, {-1, -1, 0}, {0, 1, 0}}); }

std::set<oracle::Members> as_members(const std::vector<Subspace>& s, long p) {
    std::set<oracle::Members> out;
    for (const auto& u : s) out.insert(oracle::members_of(u, p));
    return out;
}

void check_against_oracle(const EvolutionAlgebra& a, long p) {
    const auto set = enumerate_brute_force(a);
    CHECK(std::is_sorted(set.members.begin(), set.members.end()));
    CHECK(std::adjacent_find(set.members.begin(), set.members.end()) == set.members.end());
    CHECK(as_members(set.members, p) == oracle::subalgebras(oracle::matrix_of(a), p));
}
}  // namespace

TEST_CASE("generated subalgebras") {
    const auto f = FieldSpec::prime(3);
    const auto a = six(q);
    const auto e1 = span(q, 6, {{1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1}});
    const auto e2 = span(q, 6, {{1, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}});
    const auto expect = span(q, 6, {{1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                                    {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    CHECK(join(a, e1, e2) == expect);
    CHECK(join(six(f), Subspace::span(f, 6, {Vector::of(f, {1, 1, 0, 0, 0, 0}), Vector::of(f, {0, 0, 0, 1, 0, 1})}),
               Subspace::span(f, 6, {Vector::of(f, {1, 0, 1, 0, 0, 0}), Vector::of(f, {0, 0, 0, 1, 1, 0})})).dim() == 5);

    CHECK(generated_subalgebra(a, std::vector<Vector>{}, 6).is_zero());

    const auto chain = EvolutionAlgebra::of(q, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(generated_subalgebra(chain, {Vector::of(q, {0, 3, -1, 2})}, 4) == Subspace::coordinate(q, 4, {1, 2, 3}));
    CHECK(generated_subalgebra(chain, {Vector::of(q, {1, 0, 0, 0})}, 4).is_whole());

    const auto b = nondistributive3(q);
    CHECK(join(b, span(q, 3, {{1, 1, 1}}), span(q, 3, {{1, -1, -1}})).is_whole());
    const auto u = span(q, 3, {{1, 1, 1}});
    CHECK(join(b, u, u) == u);
    CHECK(join(b, u, b.zero_subspace()) == u);
}

TEST_CASE("generation is a closure operator") {
    const auto f = FieldSpec::prime(3);
    std::mt19937 rng(17);
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto a = random_algebra(f, 4, Profile::General, s);
        auto pick = [&] {
            Vector v(f, 4);
            for (std::size_t i = 0; i < 4; ++i) v[i] = Scalar(f, static_cast<long>(rng() % 3));
            return v;
        };
        const auto x = pick(), y = pick();
        const auto gx = generated_subalgebra(a, {x}, 4);
        const auto gxy = generated_subalgebra(a, {x, y}, 4);
        CHECK(member(gx, x));
        CHECK(is_subalgebra_subspace(a, gx));
        CHECK(contains(gxy, gx));
        CHECK(generated_subalgebra(a, gx) == gx);
        // the closure of a set is the smallest subalgebra containing it
        const auto members = oracle::subalgebras(oracle::matrix_of(a), 3);
        const auto need = oracle::span({oracle::IVec{x[0].residue(), x[1].residue(), x[2].residue(), x[3].residue()}}, 4, 3);
        std::size_t least = 0;
        bool first = true;
        for (const auto& m : members)
            if (oracle::subset(need, m) && (first || m.size() < least)) {
                least = m.size();
                first = false;
            }
        CHECK(oracle::members_of(gx, 3).size() == least);
    }
}

TEST_CASE("brute force enumeration of the worked examples") {
    const auto f5 = FieldSpec::prime(5);
    const auto r = enumerate_brute_force(rhombus3(f5));
    CHECK(r.method == SubalgebraSet::Method::BruteForce);
    const std::vector<Subspace> expect{Subspace::zero(f5, 3), span(f5, 3, {{1, -1, 0}}), span(f5, 3, {{1, 1, 0}}),
                                       Subspace::coordinate(f5, 3, {0, 1}), Subspace::whole(f5, 3)};
    auto sorted = expect;
    std::sort(sorted.begin(), sorted.end());
    CHECK(r.members == sorted);
    check_against_oracle(rhombus3(f5), 5);

    const auto f7 = FieldSpec::prime(7);
    const auto n = enumerate_brute_force(nondistributive3(f7));
    CHECK(n.count_by_dim(3) == std::vector<std::size_t>{1, 4, 1, 1});
    check_against_oracle(nondistributive3(f7), 7);

    const auto z = enumerate_brute_force(EvolutionAlgebra::zero(FieldSpec::prime(3), 2));
    CHECK(z.members.size() == 6);

}

TEST_CASE("brute force agrees with the oracle on random algebras") {
    const auto f = FieldSpec::prime(3);
    for (std::uint64_t s = 0; s < 30; ++s) {
        for (auto p : {Profile::General, Profile::StrictUpperTriangular, Profile::MaxSolvable}) {
            check_against_oracle(random_algebra(f, 3, p, s), 3);
        }
    }
    for (std::uint64_t s = 0; s < 10; ++s) check_against_oracle(random_algebra(FieldSpec::prime(5), 3, Profile::FamilyTwo, s), 5);
}

TEST_CASE("brute force guards") {
    CHECK_THROWS_AS(enumerate_brute_force(rhombus3(q)), UnsupportedOverInfiniteField);
    CHECK_THROWS_AS(enumerate_brute_force(rhombus3(FieldSpec::prime(5)), 10), EnumerationCapExceeded);
    const auto f = FieldSpec::prime(3);
    const auto a = six(f);
    const auto lines = brute_force_subalgebras_of_dim(a, 1);
    std::vector<Subspace> filtered;
    for (const auto& u : enumerate_brute_force(a).members)
        if (u.dim() == 1) filtered.push_back(u);
    CHECK(lines == filtered);
}

TEST_CASE("structural enumeration") {
    const auto chain = EvolutionAlgebra::of(q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    const auto c = enumerate_structural(chain);
    CHECK(c.method == SubalgebraSet::Method::StructuralChain);
    CHECK(c.members == std::vector<Subspace>{Subspace::zero(q, 3), Subspace::coordinate(q, 3, {2}),
                                             Subspace::coordinate(q, 3, {1, 2}), Subspace::whole(q, 3)});

    const auto e2 = EvolutionAlgebra::of(q, {{1, 1}, {-1, -1}});
    const auto r = enumerate_structural(e2);
    CHECK(r.method == SubalgebraSet::Method::StructuralMaxSolvable);
    std::vector<Subspace> rh{Subspace::zero(q, 2), span(q, 2, {{1, -1}}), span(q, 2, {{1, 1}}), Subspace::whole(q, 2)};
    std::sort(rh.begin(), rh.end());
    CHECK(r.members == rh);

    CHECK(structural_enumeration_applies(rhombus3(q)));
    CHECK_FALSE(structural_enumeration_applies(nondistributive3(q)));
    CHECK_THROWS_AS(enumerate_structural(nondistributive3(q)), StructuralPreconditionFailed);
    CHECK_THROWS_AS(enumerate_structural(EvolutionAlgebra::zero(q, 3)), StructuralPreconditionFailed);
}

TEST_CASE("structural and brute force enumeration agree") {
    const auto f = FieldSpec::prime(5);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto a = random_rhombus_chain(f, 3 + s % 3, s);
        REQUIRE(structural_enumeration_applies(a));
        CHECK(enumerate_structural(a).members == enumerate_brute_force(a).members);
    }
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto a = random_algebra(f, 4, Profile::StrictTriangularFullSuperdiag, s);
        if (!structural_enumeration_applies(a)) continue;
        CHECK(enumerate_structural(a).members == enumerate_brute_force(a).members);
    }
}

TEST_CASE("one-dimensional subalgebras of max-solvable algebras") {
    const auto lines = onedim_subalgebras_max_solvable(nondistributive3(q));
    CHECK(lines.size() == 4);
    for (const auto& u : lines) {
        CHECK(u.dim() == 1);
        CHECK(is_subalgebra_subspace(nondistributive3(q), u));
    }
    CHECK(std::find(lines.begin(), lines.end(), span(q, 3, {{1, 1, 1}})) != lines.end());

    // m = 1: e2^2 = -e1^2
    const auto m1 = rhombus3(q);
    CHECK(onedim_subalgebras_max_solvable(m1).size() == 2);
    CHECK(square_dependency(m1) == std::optional<Vector>{Vector::of(q, {1, 1, 0})});
    CHECK_FALSE(square_dependency(EvolutionAlgebra::of(q, {{1, 0}, {0, 1}})).has_value());
    CHECK_THROWS_AS(onedim_subalgebras_max_solvable(EvolutionAlgebra::of(q, {{1, 0}, {0, 1}})),
                    StructuralPreconditionFailed);

    const auto f = FieldSpec::prime(5);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto a = random_algebra(f, 3 + s % 2, Profile::MaxSolvable, s);
        const auto got = onedim_subalgebras_max_solvable(a);
        CHECK(got == brute_force_subalgebras_of_dim(a, 1));
        const auto dep = *square_dependency(a);
        std::size_t support = 0;
        for (std::size_t i = 0; i < a.dim(); ++i) support += !dep[i].is_zero();
        CHECK(got.size() == (std::size_t{1} << (support - 1)));
    }
}

TEST_CASE("quasi-ideals") {
    const auto f = FieldSpec::prime(3);
    const auto a = six(f);
    const auto set = enumerate_brute_force(a);
    const auto e1 = span(f, 6, {{1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1}});
    const auto e2 = span(f, 6, {{1, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}});
    const auto r = is_quasi_ideal(a, e1, set);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(is_subalgebra_subspace(a, subspace_sum(e1, *r.witness)));
    const auto bad = quasi_ideal_violations(a, e1, set);
    CHECK(bad.front() == *r.witness);
    CHECK(std::find(bad.begin(), bad.end(), e2) != bad.end());
    CHECK_FALSE(is_quasi_ideal(a, e2, set).holds);

    for (const auto& u : set.members) {
        if (is_ideal(a, u)) CHECK(is_quasi_ideal(a, u, set).holds);
    }

    const auto eq = EvolutionAlgebra::of(f, {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
    const auto eqset = enumerate_brute_force(eq);
    CHECK(is_quasi_ideal(eq, span(f, 3, {{0, 0, 1}}), eqset).holds);
    CHECK(is_quasi_ideal(eq, span(f, 3, {{1, 0, 0}, {0, 0, 1}}), eqset).holds);
    CHECK(is_quasi_ideal(eq, span(f, 3, {{0, 1, 0}, {0, 0, 1}}), eqset).holds);
}
