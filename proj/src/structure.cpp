#include "evolab/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "evolab/errors.hpp"

namespace evolab {

namespace {

std::size_t square_rank(const EvolutionAlgebra& a) { return a.structure().rank(); }

bool codim_one(const EvolutionAlgebra& a) { return a.dim() > 0 && square_rank(a) + 1 == a.dim(); }

/// Visits one representative (leading coordinate 1) of every line of GF(p)^n
/// until `visit` returns true.
bool for_each_line(const FieldSpec& f, std::size_t n, const std::function<bool(const Vector&)>& visit) {
    const auto values = all_scalars(f);
    for (std::size_t lead = 0; lead < n; ++lead) {
        Vector v(f, n);
        v[lead] = Scalar::one(f);
        std::vector<std::size_t> digit(n - lead - 1, 0);
        while (true) {
            for (std::size_t t = 0; t < digit.size(); ++t) v[lead + 1 + t] = values[digit[t]];
            if (visit(v)) return true;
            std::size_t t = 0;
            while (t < digit.size() && ++digit[t] == values.size()) digit[t++] = 0;
            if (t == digit.size()) break;
        }
    }
    return false;
}

bool spans_by_principal_powers(const EvolutionAlgebra& a, const Vector& u) {
    std::vector<Vector> powers{u};
    for (std::size_t k = 2; k <= a.dim(); ++k) powers.push_back(product(a, powers.back(), u));
    return Subspace::span(a.spec(), a.dim(), powers).is_whole();
}

std::optional<Lattice> brute_lattice(const EvolutionAlgebra& a, std::uint64_t cap) {
    if (!a.spec().is_finite()) return std::nullopt;
    return build_lattice(a, enumerate_brute_force(a, cap));
}

}  // namespace

bool has_max_solvability_index(const EvolutionAlgebra& a) {
    if (!is_solvable(a)) throw NotSolvable("maximum index of solvability needs a solvable algebra");
    return codim_one(a);
}

MaxSolvableNormalForm max_solvable_normal_form(const EvolutionAlgebra& a) {
    a.spec().require_char_ne_2("the max-solvable normal form");
    auto c = square_dependency(a);
    if (!c) throw StructuralPreconditionFailed("normal form needs codim E^2 = 1");
    auto supp = c->support();
    const std::size_t last = supp.back();
    supp.pop_back();
    const FieldSpec& f = a.spec();
    BasisChange change;
    for (std::size_t i : supp) {
        auto root = (*c)[i].sqrt();
        if (!root) {
            throw NormalFormScalingUnavailable("dependency coefficient " + (*c)[i].to_string() + " of e" +
                                               std::to_string(i + 1) + "^2 is not a square in " + f.to_string());
        }
        change.perm.push_back(i);
        change.scales.push_back(*root);
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i == last || !(*c)[i].is_zero()) continue;
        change.perm.push_back(i);
        change.scales.push_back(Scalar::one(f));
    }
    change.perm.push_back(last);
    change.scales.push_back(Scalar::one(f));
    if (!is_solvable(a)) throw NotSolvable("normal form needs a solvable algebra");
    const std::size_t m = supp.size();
    return {change, m, change_basis(a, change)};
}

std::vector<Subspace> onedim_ideals(const EvolutionAlgebra& a) {
    const FieldSpec& f = a.spec();
    const std::size_t n = a.dim();
    std::vector<Subspace> out;
    for (std::size_t j = 0; j < n; ++j) {
        Vector row = a.basis_square(j);
        Subspace line = row.is_zero() ? Subspace::coordinate(f, n, {j}) : Subspace::span(f, n, {row});
        if (is_ideal(a, line)) out.push_back(std::move(line));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SupersolvableResult is_supersolvable(const EvolutionAlgebra& a) {
    if (a.dim() == 0) return {true, {}};
    const auto ideals = onedim_ideals(a);
    if (ideals.empty()) return {false, {}};
    const auto q = quotient_by_onedim_ideal(a, ideals.front());
    auto rest = is_supersolvable(q.algebra);
    SupersolvableResult out{rest.holds, {ideals.front()}};
    for (const auto& w : rest.flag) out.flag.push_back(q.preimage(w));
    return out;
}

namespace {

std::optional<std::vector<std::size_t>> basic_family_ideal(const EvolutionAlgebra& a) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const Vector w = a.basis_square(j);
        if (w.is_zero() || !square(a, w).is_zero()) continue;
        const Subspace line = Subspace::span(a.spec(), a.dim(), {w});
        const auto supp = w.support();
        bool ok = true;
        bool nonzero_square = false;
        for (std::size_t i : supp) {
            ok = ok && member(line, a.basis_square(i));
            nonzero_square = nonzero_square || !a.basis_square(i).is_zero();
        }
        if (ok && nonzero_square) return supp;
    }
    return std::nullopt;
}

}  // namespace

SupersolvableTheoremReport check_supersolvable_theorem(const EvolutionAlgebra& a) {
    if (!is_solvable(a)) throw NotSolvable("the supersolvability criterion assumes a solvable algebra");
    SupersolvableTheoremReport r{is_supersolvable(a).holds, true, true, {}, {}};
    EvolutionAlgebra cur = a;
    while (cur.dim() > 0) {
        TheoremLevel level{cur.dim(), is_degenerate(cur), basic_family_ideal(cur), false, true};
        const auto ideals = onedim_ideals(cur);
        level.has_onedim_ideal = !ideals.empty();
        const bool criterion = level.degenerate || level.basic_support.has_value();
        level.consistent = criterion == level.has_onedim_ideal;
        r.consistent = r.consistent && level.consistent;
        r.criterion = r.criterion && criterion;
        if (!criterion) {
            const Subspace e2 = subspace_product(cur, cur.whole(), cur.whole());
            if (!is_basic_ideal(cur, e2) && subspace_product(cur, e2, e2).dim() == 1) {
                r.notes.push_back("dimension " + std::to_string(cur.dim()) + ": E^2 = " + e2.to_string() +
                                  " is a non-basic ideal with one-dimensional square, yet no "
                                  "one-dimensional ideal exists");
            }
        }
        r.levels.push_back(level);
        if (ideals.empty()) break;
        cur = quotient_by_onedim_ideal(cur, ideals.front()).algebra;
    }
    r.consistent = r.consistent && r.criterion == r.supersolvable;
    return r;
}

DistributivityBundle nilpotent_distributivity_bundle(const EvolutionAlgebra& a, std::uint64_t cap) {
    if (!is_nilpotent(a)) throw StructuralPreconditionFailed("the distributivity bundle needs a nilpotent algebra");
    auto order = strictly_upper_permutation(a);
    if (!order) throw StructuralPreconditionFailed("no basis permutation makes the structure matrix triangular");
    const FieldSpec& f = a.spec();
    const std::size_t n = a.dim();
    const auto& perm = *order;

    DistributivityBundle b{codim_one(a), false, false, false, std::nullopt, std::nullopt, perm, f.is_finite()};

    std::optional<std::size_t> last_zero;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a.structure()(perm[t], perm[t + 1]).is_zero()) last_zero = t;
    }
    if (last_zero) {
        const std::size_t k = *last_zero;
        std::vector<Vector> u{Vector::unit(f, n, perm[k])}, v, w{Vector::unit(f, n, perm[k]) + Vector::unit(f, n, perm[k + 1])};
        for (std::size_t t = k + 1; t < n; ++t) v.push_back(Vector::unit(f, n, perm[t]));
        for (std::size_t t = k + 2; t < n; ++t) {
            u.push_back(Vector::unit(f, n, perm[t]));
            w.push_back(Vector::unit(f, n, perm[t]));
        }
        std::array<Subspace, 3> triple{Subspace::span(f, n, u), Subspace::span(f, n, v), Subspace::span(f, n, w)};
        const bool closed = std::all_of(triple.begin(), triple.end(),
                                        [&](const Subspace& s) { return is_subalgebra_subspace(a, s); });
        if (closed) {
            const auto& [x, y, z] = triple;
            const Subspace lhs = join(a, x, subspace_intersect(y, z));
            const Subspace rhs = subspace_intersect(join(a, x, y), join(a, x, z));
            if (!(lhs == rhs)) b.witness = triple;
        }
    }

    if (auto lattice = brute_lattice(a, cap)) {
        b.chain = is_chain(*lattice) && lattice->size() == n + 1;
        b.distributive = is_distributive(*lattice).holds;
        for_each_line(f, n, [&](const Vector& u) {
            if (!spans_by_principal_powers(a, u)) return false;
            b.generator = u;
            return true;
        });
    } else {
        b.chain = b.distributive = !last_zero.has_value() && !b.witness.has_value();
        Vector u(f, n);
        for (std::size_t i = 0; i < n; ++i) u[i] = Scalar::one(f);
        if (spans_by_principal_powers(a, u)) b.generator = u;
    }
    b.principal_generator = b.generator.has_value();
    return b;
}

std::string to_string(SearchOutcome s) {
    switch (s) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::None: return "none";
        case SearchOutcome::Unknown: return "unknown";
    }
    return "?";
}

NilpotentModularityReport nilpotent_modularity_checks(const EvolutionAlgebra& a, std::uint64_t cap) {
    if (!is_nilpotent(a)) throw StructuralPreconditionFailed("modularity checks need a nilpotent algebra");
    a.spec().require_char_ne_2("absolute nilpotent search");
    const FieldSpec& f = a.spec();
    const std::size_t n = a.dim();
    const Subspace ann = annihilator(a);
    NilpotentModularityReport r{SearchOutcome::None, std::nullopt, std::nullopt, std::nullopt, true, std::nullopt, {}};

    if (f.is_finite()) {
        for_each_line(f, n, [&](const Vector& u) {
            if (member(ann, u) || !square(a, u).is_zero()) return false;
            r.witness = u;
            return true;
        });
        r.absolute_nilpotent = r.witness ? SearchOutcome::Found : SearchOutcome::None;
    } else {
        // u^2 = sum u_i^2 e_i^2 vanishes iff (u_i^2) is a dependency among the
        // squares; outside ann it must involve a nonzero square.
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < n; ++i) {
            if (!a.basis_square(i).is_zero()) live.push_back(i);
        }
        std::vector<Vector> rows;
        for (std::size_t i : live) rows.push_back(a.basis_square(i));
        const Matrix deps = live.empty() ? Matrix(f, 0, 0) : kernel(Matrix::from_rows(f, n, rows).transpose());
        for (std::size_t d = 0; d < deps.rows() && !r.witness; ++d) {
            const Vector c = deps.row(d);
            const auto supp = c.support();
            Vector u(f, n);
            bool ok = true;
            for (std::size_t t : supp) {
                auto root = (c[t] * c[supp.front()]).sqrt();
                if (!root) {
                    ok = false;
                    break;
                }
                u[live[t]] = *root;
            }
            if (ok) r.witness = u;
        }
        if (r.witness) {
            r.absolute_nilpotent = SearchOutcome::Found;
        } else {
            r.absolute_nilpotent = deps.rows() <= 1 ? SearchOutcome::None : SearchOutcome::Unknown;
        }
        r.notes.push_back("over Q the lattice is infinite in general; modularity is not evaluated");
    }

    if (auto lattice = brute_lattice(a, cap)) {
        r.modular = is_modular(*lattice).holds;
        r.distributive = is_distributive(*lattice).holds;
        r.no_modular_with_absolute_nilpotent = !(*r.modular && r.absolute_nilpotent == SearchOutcome::Found);
        if (ann.dim() == 1) {
            if (f.characteristic() % 4 == 1) {
                r.modular_matches_distributive = *r.modular == *r.distributive;
                r.notes.push_back(f.to_string() +
                                  " contains a square root of -1 and stands in for a quadratically closed field");
            } else {
                r.notes.push_back(f.to_string() + " is not a stand-in for a quadratically closed field; the "
                                                   "modular/distributive comparison is skipped");
            }
        }
    }
    return r;
}

BasicPatternResult derived_series_basic_pattern(const EvolutionAlgebra& a) {
    const auto series = derived_series(a);
    if (!series.index) throw NotSolvable("the derived series does not reach zero");
    const auto& t = series.terms;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        if (!is_basic_ideal(a, t[k]) && !is_basic_ideal(a, t[k + 1])) return {false, std::pair{k + 1, k + 2}};
    }
    return {true, std::nullopt};
}

namespace {

std::optional<BlockForm> parse_block_form(const EvolutionAlgebra& a, const std::vector<std::size_t>& perm) {
    const std::size_t n = a.dim();
    const FieldSpec& f = a.spec();
    auto at = [&](std::size_t t, std::size_t u) -> const Scalar& { return a.structure()(perm[t], perm[u]); };
    auto zero_right = [&](std::size_t t, std::size_t from) {
        for (std::size_t u = from; u < n; ++u) {
            if (!at(t, u).is_zero()) return false;
        }
        return true;
    };
    BasisChange change{perm, std::vector<Scalar>(n, Scalar::one(f))};
    std::vector<std::size_t> pairs;
    for (std::size_t t = 0; t < n;) {
        if (at(t, t).is_zero()) {
            if (!zero_right(t, t + 1)) return std::nullopt;
            t += 1;
            continue;
        }
        if (t + 1 >= n) return std::nullopt;
        const Scalar& pa = at(t, t);
        const Scalar& pb = at(t, t + 1);
        const Scalar& pc = at(t + 1, t);
        const Scalar& pd = at(t + 1, t + 1);
        if (!(pb * pd == -(pa * pa)) || !(pa * pc == -(pd * pd))) return std::nullopt;
        if (!zero_right(t, t + 2) || !zero_right(t + 1, t + 2)) return std::nullopt;
        change.scales[t] = pa.inv();
        change.scales[t + 1] = -pd.inv();
        pairs.push_back(t);
        t += 2;
    }
    return BlockForm{change, change_basis(a, change), pairs};
}

}  // namespace

std::optional<BlockForm> find_block_form(const EvolutionAlgebra& a) {
    const std::size_t n = a.dim();
    if (n > kMaxPermutationSearch) throw InvalidArgument("block-form search is limited to dimension 8");
    if (square_rank(a) + 1 != n) return std::nullopt;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (auto form = parse_block_form(a, perm)) return form;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

void require_max_solvable(const EvolutionAlgebra& a) {
    a.spec().require_char_ne_2("max-solvable analysis");
    if (!is_solvable(a) || !codim_one(a)) {
        throw StructuralPreconditionFailed("needs a solvable algebra with codim E^2 = 1");
    }
    if (a.dim() > kMaxPermutationSearch) {
        throw StructuralPreconditionFailed("block-form search is limited to dimension 8");
    }
}

}  // namespace

SupersolvableEquivalence max_solvable_supersolvable_equivalence(const EvolutionAlgebra& a) {
    require_max_solvable(a);
    SupersolvableEquivalence r{is_supersolvable(a).holds, false, derived_series_basic_pattern(a).holds, find_block_form(a)};
    r.block_form = r.form.has_value();
    return r;
}

ModularityCriterion modularity_criterion_max_solvable(const EvolutionAlgebra& a, bool cross_check,
                                                      std::uint64_t cap) {
    require_max_solvable(a);
    auto form = find_block_form(a);
    if (!form) throw StructuralPreconditionFailed("no block lower triangular form exists");
    const EvolutionAlgebra& b = form->algebra;
    const FieldSpec& f = b.spec();
    const std::size_t n = b.dim();
    ModularityCriterion r{derived_series_basic_pattern(a).holds, std::nullopt, false, *form, std::nullopt};

    auto off_diagonal_projection = [&](std::size_t row, std::size_t i) {
        return !(b.structure()(row, i) + b.structure()(row, i + 1)).is_zero();
    };
    const auto& pairs = form->pairs;
    for (std::size_t x = 0; x < pairs.size() && !r.witness; ++x) {
        for (std::size_t y = x + 1; y < pairs.size() && !r.witness; ++y) {
            const std::size_t i = pairs[x];
            const std::size_t j = pairs[y];
            if (!off_diagonal_projection(j, i) && !off_diagonal_projection(j + 1, i)) continue;
            std::vector<std::size_t> others;
            for (std::size_t t = 0; t < n; ++t) {
                if (t != i && t != i + 1 && t != j && t != j + 1) others.push_back(t);
            }
            for (int sign : {1, -1}) {
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()) && !r.witness; ++mask) {
                    std::vector<Vector> gens{Vector::unit(f, n, i) - Vector::unit(f, n, i + 1)};
                    Vector pair_vec = Vector::unit(f, n, j);
                    pair_vec[j + 1] = Scalar(f, static_cast<long>(sign));
                    gens.push_back(pair_vec);
                    for (std::size_t t = 0; t < others.size(); ++t) {
                        if ((mask >> t) & 1) gens.push_back(Vector::unit(f, n, others[t]));
                    }
                    const Subspace u = Subspace::span(f, n, gens);
                    if (is_subalgebra_subspace(b, u)) r.witness = form->change.to_old(u);
                }
                if (r.witness) break;
            }
        }
    }
    r.modular = r.derived_clause && !r.witness;
    if (cross_check && f.is_finite()) {
        try {
            r.lattice_modular = is_modular(build_lattice(a, enumerate_brute_force(a, cap))).holds;
        } catch (const EnumerationCapExceeded&) {
        }
    }
    return r;
}

StructureVerdict analyze(const EvolutionAlgebra& a) {
    a.spec().require_char_ne_2("structural analysis");
    StructureVerdict v{false, false, false, false, false, false, std::nullopt, std::nullopt,
                       lower_central_series(a), derived_series(a), {}, annihilator(a), {}, std::nullopt, std::nullopt, {}};
    v.nilpotent = v.lower.index.has_value();
    v.solvable = v.derived.index.has_value();
    v.nilpotency_index = v.lower.index;
    v.solvability_index = v.derived.index;
    v.degenerate = !v.annihilator.is_zero();
    v.max_solvability_index = v.solvable && codim_one(a);
    v.max_nilpotency_index = v.nilpotent && codim_one(a);
    for (const auto& t : v.derived.terms) v.derived_basic.push_back(is_basic_ideal(a, t));
    auto ss = is_supersolvable(a);
    v.supersolvable = ss.holds;
    if (ss.holds) v.supersolvable_flag = ss.flag;
    if (v.max_solvability_index) {
        try {
            v.normal_form = max_solvable_normal_form(a);
        } catch (const NormalFormScalingUnavailable& e) {
            v.notes.push_back(e.what());
        }
        if (a.dim() <= kMaxPermutationSearch) {
            v.block_form = find_block_form(a);
        } else {
            v.notes.push_back("block-form search skipped above dimension 8");
        }
    }
    return v;
}

}  // namespace evolab
