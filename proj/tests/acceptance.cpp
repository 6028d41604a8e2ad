// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evolab/corpus.hpp"
#include "evolab/errors.hpp"
#include "evolab/families.hpp"
#include "evolab/structure.hpp"

using namespace evolab;

namespace {

const FieldSpec q = FieldSpec::rationals();
const FieldSpec f3 = FieldSpec::prime(3);
const FieldSpec f5 = FieldSpec::prime(5);
const FieldSpec f7 = FieldSpec::prime(7);

Subspace span(FieldSpec f, std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> vs;
    for (auto r : rows) vs.push_back(Vector::of(f, r));
    return Subspace::span(f, n, vs);
}

std::vector<Subspace> sorted(std::vector<Subspace> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Subspace> of_dim(const SubalgebraSet& s, std::size_t d) {
    std::vector<Subspace> out;
    for (const auto& u : s.members)
        if (u.dim() == d) out.push_back(u);
    return out;
}

// Collects failed expectations for one criterion.
struct Probe {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Probe&)> body;
};

Lattice brute(const EvolutionAlgebra& a) { return build_lattice(a, enumerate_brute_force(a)); }

void example_one(Probe& p) {
    const auto& e = corpus_entry("max-solvable-nondistributive");
    const auto a = e.algebra(q);
    p.expect(derived_series(a).dims() == std::vector<std::size_t>{3, 2, 1, 0}, "derived series dims");
    p.expect(has_max_solvability_index(a), "maximum solvability index");
    const std::vector<Subspace> table{span(q, 3, {{1, 1, 1}}), span(q, 3, {{1, -1, 1}}), span(q, 3, {{1, 1, -1}}),
                                      span(q, 3, {{1, -1, -1}})};
    p.expect(onedim_subalgebras_max_solvable(a) == sorted(table), "one-dimensional table over Q");

    const auto b = e.algebra(f7);
    const auto set = enumerate_brute_force(b);
    const std::vector<Subspace> table7{span(f7, 3, {{1, 1, 1}}), span(f7, 3, {{1, -1, 1}}), span(f7, 3, {{1, 1, -1}}),
                                       span(f7, 3, {{1, -1, -1}})};
    p.expect(of_dim(set, 1) == sorted(table7), "one-dimensional table over GF(7)");
    p.expect(of_dim(set, 2) == std::vector<Subspace>{span(f7, 3, {{1, 1, 0}, {0, 0, 1}})}, "two-dimensional table");
    const auto l = build_lattice(b, set);
    p.expect(l.size() == 7, "seven lattice nodes");
    p.expect(!is_distributive(l).holds, "not distributive");
}

void example_two(Probe& p) {
    const auto& e = corpus_entry("rhombus-three");
    const auto a = e.algebra(q);
    const auto s = enumerate_structural(a);
    const std::vector<Subspace> proper{span(q, 3, {{1, 1, 0}}), span(q, 3, {{1, -1, 0}}),
                                       Subspace::coordinate(q, 3, {0, 1})};
    auto expect_q = proper;
    expect_q.push_back(Subspace::zero(q, 3));
    expect_q.push_back(Subspace::whole(q, 3));
    p.expect(s.members == sorted(expect_q), "structural table over Q");

    const auto b = e.algebra(f5);
    const auto bs = enumerate_brute_force(b);
    const std::vector<Subspace> expect_5{Subspace::zero(f5, 3), span(f5, 3, {{1, 1, 0}}), span(f5, 3, {{1, -1, 0}}),
                                         Subspace::coordinate(f5, 3, {0, 1}), Subspace::whole(f5, 3)};
    p.expect(bs.members == sorted(expect_5), "brute-force table over GF(5)");

    for (const auto& l : {build_lattice(a, s), build_lattice(b, bs)}) {
        // bottom, two atoms, one coatom above both, top
        p.expect(l.size() == 5 && l.hasse().size() == 5, "five nodes and five covers");
        p.expect(!is_chain(l), "not a chain");
        std::size_t atoms = 0;
        for (std::size_t i = 1; i + 1 < l.size(); ++i) atoms += l.covers(i, l.bottom());
        p.expect(atoms == 2, "two atoms");
        p.expect(l.covers(l.top(), 3) && l.covers(3, 1) && l.covers(3, 2), "coatom covers both atoms");
    }
    p.expect(is_supersolvable(a).holds, "supersolvable");
}

void example_three(Probe& p) {
    const auto a = corpus_entry("nilpotent-six-nonmodular").algebra(f3);
    const auto set = enumerate_brute_force(a);
    const auto e1 = span(f3, 6, {{1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1}});
    const auto e2 = span(f3, 6, {{1, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}});
    const auto r = is_quasi_ideal(a, e1, set);
    p.expect(!r.holds && r.witness.has_value(), "E1 is not a quasi-ideal");
    const auto bad = quasi_ideal_violations(a, e1, set);
    p.expect(std::find(bad.begin(), bad.end(), e2) != bad.end(), "E2 witnesses the failure");
    p.expect(join(a, e1, e2) == span(f3, 6, {{1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                                            {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}),
             "generated subalgebra of E1 and E2");
    const auto l = build_lattice(a, set);
    p.expect(!is_modular(l).holds, "not modular");
    p.expect(!is_upper_semimodular(l).holds, "not upper semimodular");
}

void example_four(Probe& p) {
    const auto c = corpus_entry("equal-squares-gf5").algebra(f5);
    const auto lc = brute(c);
    p.expect(!is_modular(lc).holds, "GF(5): not modular");
    p.expect(find_pentagon(lc).has_value(), "GF(5): pentagon");
    p.expect(nilpotent_modularity_checks(c).absolute_nilpotent == SearchOutcome::Found, "GF(5): e1+2e2 type element");
    p.expect(square(c, Vector::of(f5, {1, 2, 0})).is_zero(), "GF(5): (e1+2e2)^2 = 0");

    const auto r = corpus_entry("equal-squares-gf3").algebra(f3);
    const auto set = enumerate_brute_force(r);
    const auto lr = build_lattice(r, set);
    p.expect(is_modular(lr).holds, "GF(3): modular");
    p.expect(!find_pentagon(lr).has_value(), "GF(3): no pentagon");
    for (const auto& u : {span(f3, 3, {{0, 0, 1}}), span(f3, 3, {{1, 0, 0}, {0, 0, 1}}), span(f3, 3, {{0, 1, 0}, {0, 0, 1}})}) {
        p.expect(is_quasi_ideal(r, u, set).holds, "GF(3): quasi-ideal " + u.to_string());
    }
}

void example_five(Probe& p) {
    const auto l = brute(corpus_entry("nilpotent-wide-annihilator").algebra(f3));
    p.expect(is_modular(l).holds, "modular");
    p.expect(!is_distributive(l).holds, "not distributive");
}

void nilpotent_theorem(Probe& p) {
    std::mt19937_64 seeds(20240601);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 3 + i % 3;
        const auto s = seeds();
        const auto a = random_algebra(f3, n, Profile::StrictUpperTriangular, s);
        const auto b = nilpotent_distributivity_bundle(a);
        p.expect(b.exhaustive && b.agree(), "disagreement for seed " + std::to_string(s));
    }
}

void max_solvable_count(Probe& p) {
    std::mt19937_64 seeds(7);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 3 + i % 3;
        const auto s = seeds();
        const auto a = random_algebra(f5, n, Profile::MaxSolvable, s);
        const auto nf = max_solvable_normal_form(a);
        const std::size_t expected = std::size_t{1} << nf.m;
        const auto lines = onedim_subalgebras_max_solvable(a);
        const auto brute_lines = brute_force_subalgebras_of_dim(a, 1);
        p.expect(lines.size() == expected && brute_lines.size() == expected && lines == brute_lines,
                 "count mismatch for seed " + std::to_string(s));
    }
}

void supersolvable_suite(Probe& p) {
    std::mt19937_64 seeds(11);
    for (int i = 0; i < 60; ++i) {
        const auto s = seeds();
        const FieldSpec f = i % 3 == 2 ? f3 : f5;
        const auto a = random_algebra(f, 3 + i % 3, Profile::FamilyTwo, s);
        p.expect(is_supersolvable(a).holds, "family sample not supersolvable, seed " + std::to_string(s));
        p.expect(is_lower_semimodular(brute(a)).holds, "family sample not lower semimodular, seed " + std::to_string(s));
    }
    const auto rem = corpus_entry("max-solvable-not-supersolvable").algebra(q);
    p.expect(!is_supersolvable(rem).holds, "counterexample is not supersolvable");
    p.expect(onedim_ideals(rem).empty(), "counterexample has no one-dimensional ideals");
    const auto reg = corpus_entry("regular-three").algebra(q);
    p.expect(is_supersolvable(reg).holds, "regular algebra supersolvable");
    p.expect(!is_solvable(reg), "regular algebra not solvable");
}

void modularity_suite(Probe& p) {
    const auto a = corpus_entry("rhombus-four-modular").algebra(f5);
    const auto set = enumerate_brute_force(a);
    const std::vector<Subspace> table{
        Subspace::zero(f5, 4),
        span(f5, 4, {{1, 1, 0, 0}}),
        span(f5, 4, {{1, -1, 0, 0}}),
        Subspace::coordinate(f5, 4, {0, 1}),
        span(f5, 4, {{1, -1, 0, 0}, {0, 0, 1, 1}}),
        span(f5, 4, {{1, -1, 0, 0}, {0, 0, 1, -1}}),
        span(f5, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}),
        span(f5, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}}),
        span(f5, 4, {{1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
        Subspace::whole(f5, 4),
    };
    p.expect(set.members == sorted(table), "ten-entry subalgebra table");
    const auto crit = modularity_criterion_max_solvable(a);
    p.expect(crit.modular && crit.lattice_modular == std::optional<bool>{true}, "modular");

    const auto b = corpus_entry("rhombus-four-nonmodular").algebra(f5);
    const auto cb = modularity_criterion_max_solvable(b);
    p.expect(!cb.modular && cb.lattice_modular == std::optional<bool>{false}, "four-dim counterexample not modular");
    p.expect(cb.witness == std::optional<Subspace>{span(f5, 4, {{1, -1, 0, 0}, {0, 0, 1, 1}})}, "witness span{e1-e2,e3+e4}");

    std::mt19937_64 seeds(13);
    for (int i = 0; i < 100; ++i) {
        const auto s = seeds();
        const auto m = random_algebra(f5, 3 + i % 3, Profile::MaxSolvable, s);
        p.expect(max_solvable_supersolvable_equivalence(m).agree(), "equivalence fails, seed " + std::to_string(s));
    }

    std::size_t evaluated = 0;
    auto cross = [&](const EvolutionAlgebra& x, const std::string& label) {
        try {
            if (!is_solvable(x) || !has_max_solvability_index(x) || !find_block_form(x)) return;
        } catch (const Error&) {
            return;
        }
        const auto r = modularity_criterion_max_solvable(x);
        ++evaluated;
        p.expect(r.lattice_modular.has_value() && r.agrees(), "criterion disagrees on " + label);
    };
    for (const auto& e : corpus()) cross(e.algebra(f5), e.id);
    for (std::uint64_t s = 0; s < 40; ++s) {
        cross(random_supersolvable_max_solvable(f5, 3 + s % 3, s), "supersolvable sample " + std::to_string(s));
    }
    p.expect(evaluated >= 40, "too few algebras admit the normal form");
}

void lattice_engine(Probe& p) {
    auto consistent = [&](const Lattice& l, const std::string& label) {
        const bool pent = find_pentagon(l).has_value();
        const bool dia = find_diamond(l).has_value();
        p.expect(is_modular(l).holds == !pent, "Dedekind check on " + label);
        p.expect(is_distributive(l).holds == (!pent && !dia), "Birkhoff check on " + label);
    };
    for (const auto& e : corpus()) {
        if (e.field.is_finite()) {
            consistent(brute(e.algebra(e.field)), e.id);
            continue;
        }
        const auto a = e.algebra(q);
        if (structural_enumeration_applies(a)) consistent(build_lattice(a, enumerate_structural(a)), e.id + " over Q");
        for (const auto f : {f3, f5, f7}) {
            consistent(brute(e.algebra(f)), e.id + " over GF(" + std::to_string(f.characteristic()) + ")");
        }
    }

    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; ++i) {
        const FieldSpec f = i % 4 == 0 ? q : FieldSpec::prime(i % 4 == 1 ? 3 : (i % 4 == 2 ? 5 : 101));
        const std::size_t n = 2 + rng() % 5;
        auto random_space = [&] {
            std::vector<Vector> vs;
            const std::size_t k = rng() % (n + 1);
            for (std::size_t t = 0; t < k; ++t) {
                Vector v(f, n);
                for (std::size_t c = 0; c < n; ++c) v[c] = Scalar(f, static_cast<long>(rng() % 7) - 3);
                vs.push_back(v);
            }
            return Subspace::span(f, n, vs);
        };
        const auto u = random_space();
        const auto v = random_space();
        const auto s = subspace_sum(u, v);
        const auto m = subspace_intersect(u, v);
        const bool ok = s.dim() + m.dim() == u.dim() + v.dim() && contains(s, u) && contains(s, v) && contains(u, m) &&
                        contains(v, m);
        p.expect(ok, "Grassmann identity fails on pair " + std::to_string(i));
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "max-solvable example: series, tables, 7-node non-distributive lattice", 1.0, example_one},
        {2, "rhombus example: structural and GF(5) tables, 5-node lattice, supersolvable", 1.0, example_two},
        {3, "six-dimensional nilpotent example over GF(3): quasi-ideal failure, non-modular", 30.0, example_three},
        {4, "equal-squares twin run over GF(5) and GF(3)", 5.0, example_four},
        {5, "wide annihilator over GF(3): modular, not distributive", 5.0, example_five},
        {6, "nilpotent distributivity equivalences on 200 samples", 60.0, nilpotent_theorem},
        {7, "max-solvable one-dimensional subalgebra count on 100 samples", 60.0, max_solvable_count},
        {8, "supersolvability of family samples and counterexamples", 30.0, supersolvable_suite},
        {9, "modularity of max-solvable algebras", 120.0, modularity_suite},
        {10, "lattice engine self-consistency and Grassmann identities", 30.0, lattice_engine},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Probe probe;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(probe);
        } catch (const std::exception& e) {
            probe.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.limit_seconds) {
            std::ostringstream os;
            os << "runtime " << secs << " s exceeds " << c.limit_seconds << " s";
            probe.failures.push_back(os.str());
        }
        const bool ok = probe.failures.empty();
        failed += !ok;
        std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
        for (std::size_t i = 0; i < probe.failures.size() && i < 10; ++i) {
            std::printf("    %s\n", probe.failures[i].c_str());
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
