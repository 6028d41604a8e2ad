#include "evolab/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "evolab/errors.hpp"

namespace evolab {

namespace {

class Sampler {
public:
    Sampler(FieldSpec spec, std::uint64_t seed) : spec_(spec), rng_(seed) {
        if (!spec.is_finite()) throw InfiniteFieldError("random sampling needs a prime field");
    }

    Scalar any() {
        std::uniform_int_distribution<std::int64_t> d(0, spec_.characteristic() - 1);
        return Scalar(spec_, static_cast<long>(d(rng_)));
    }
    Scalar nonzero() {
        std::uniform_int_distribution<std::int64_t> d(1, spec_.characteristic() - 1);
        return Scalar(spec_, static_cast<long>(d(rng_)));
    }
    /// Zero with probability 1/2, otherwise uniform nonzero.
    Scalar sparse() { return coin() ? Scalar::zero(spec_) : nonzero(); }
    std::size_t index(std::size_t lo, std::size_t hi) {
        std::uniform_int_distribution<std::size_t> d(lo, hi);
        return d(rng_);
    }
    bool coin() { return index(0, 1) == 1; }
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[index(0, i - 1)]);
        return p;
    }
    const FieldSpec& spec() const { return spec_; }

private:
    FieldSpec spec_;
    std::mt19937_64 rng_;
};

bool strictly_lower(const Matrix& l) {
    for (std::size_t i = 0; i < l.rows(); ++i) {
        for (std::size_t j = i; j < l.cols(); ++j) {
            if (!l(i, j).is_zero()) return false;
        }
    }
    return true;
}

using ModMatrix = std::vector<std::vector<std::int64_t>>;

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2;
    for (a %= p; e > 0; e >>= 1, a = a * a % p) {
        if (e & 1) r = r * a % p;
    }
    return r;
}

/// Reduces `rows` in place to a row echelon basis of their span.
void echelon_mod_p(ModMatrix& rows, std::int64_t p) {
    if (rows.empty()) return;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::int64_t inv = inv_mod(rows[r][c], p);
        for (auto& x : rows[r]) x = x * inv % p;
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const std::int64_t f = rows[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
        }
        ++r;
    }
    rows.resize(r);
}

bool leading_minor_invertible(const ModMatrix& m, std::int64_t p) {
    const std::size_t k = m.size() - 1;
    ModMatrix lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i].assign(m[i].begin(), m[i].begin() + static_cast<long>(k));
    echelon_mod_p(lead, p);
    return lead.size() == k;
}

/// Derived series with machine residues; stops as soon as a term fails to shrink.
bool solvable_mod_p(const ModMatrix& m, std::int64_t p) {
    const std::size_t n = m.size();
    ModMatrix cur(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) cur[i][i] = 1;
    while (!cur.empty()) {
        ModMatrix next;
        for (std::size_t a = 0; a < cur.size(); ++a) {
            for (std::size_t b = a; b < cur.size(); ++b) {
                std::vector<std::int64_t> v(n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::int64_t c = cur[a][i] * cur[b][i] % p;
                    if (c == 0) continue;
                    for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + c * m[i][j]) % p;
                }
                next.push_back(std::move(v));
            }
        }
        echelon_mod_p(next, p);
        if (next.size() == cur.size()) return false;
        cur = std::move(next);
    }
    return true;
}

}  // namespace

bool FamilyOneSpec::is_nilpotent_member() const {
    for (std::size_t i = 0; i < k && i < lambdas.size(); ++i) {
        if (!lambdas[i].is_zero()) return false;
    }
    return true;
}

void validate(const FamilyOneSpec& spec) {
    if (spec.n == 0 || spec.k < 1 || spec.k > spec.n) throw InvalidFamilySpec("need 1 <= k <= n");
    if (spec.lambdas.size() != spec.n) throw InvalidFamilySpec("need exactly n lambdas");
    const FieldSpec field = spec.lambdas.front().spec();
    Scalar sum = Scalar::zero(field);
    bool any_nonzero = false;
    for (std::size_t i = 0; i < spec.n; ++i) {
        if (!(spec.lambdas[i].spec() == field)) throw MixedFieldError("lambdas over different fields");
        if (i < spec.k) sum += spec.lambdas[i];
        any_nonzero = any_nonzero || !spec.lambdas[i].is_zero();
    }
    if (!sum.is_zero()) throw InvalidFamilySpec("lambda_1 + ... + lambda_k must vanish");
    if (!any_nonzero) throw InvalidFamilySpec("some lambda must be nonzero");
}

EvolutionAlgebra make_family_one(const FamilyOneSpec& spec) {
    validate(spec);
    const FieldSpec field = spec.lambdas.front().spec();
    field.require_char_ne_2("the family E_k(lambda)");
    Matrix m(field, spec.n, spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j < spec.k; ++j) m(i, j) = spec.lambdas[i];
    }
    return EvolutionAlgebra(std::move(m));
}

std::size_t FamilyTwoSpec::block_size() const {
    std::size_t m = 0;
    for (const auto& p : parts) m += p.n;
    return m;
}

void validate(const FamilyTwoSpec& spec) {
    if (spec.parts.empty()) throw InvalidFamilySpec("need at least one part");
    for (const auto& p : spec.parts) validate(p);
    const std::size_t m = spec.block_size();
    const std::size_t t = spec.l.rows();
    if (spec.l.cols() != t) throw InvalidFamilySpec("L must be square");
    if (spec.c.rows() != t || spec.c.cols() != m) throw InvalidFamilySpec("C must be (n-m) x m");
    if (!strictly_lower(spec.l)) throw InvalidFamilySpec("L must be strictly lower triangular");
}

EvolutionAlgebra make_family_two(const FamilyTwoSpec& spec) {
    validate(spec);
    const FieldSpec field = spec.parts.front().lambdas.front().spec();
    field.require_char_ne_2("the family F(E_1..E_r)");
    const std::size_t m = spec.block_size();
    const std::size_t n = spec.dim();
    Matrix out(field, n, n);
    std::size_t off = 0;
    for (const auto& p : spec.parts) {
        auto block = make_family_one(p);
        for (std::size_t i = 0; i < p.n; ++i) {
            for (std::size_t j = 0; j < p.n; ++j) out(off + i, off + j) = block.structure()(i, j);
        }
        off += p.n;
    }
    for (std::size_t i = 0; i < n - m; ++i) {
        for (std::size_t j = 0; j < m; ++j) out(m + i, j) = spec.c(i, j);
        for (std::size_t j = 0; j < n - m; ++j) out(m + i, m + j) = spec.l(i, j);
    }
    return EvolutionAlgebra(std::move(out));
}

AbsorbedFamily absorb_nilpotent_part(const FamilyTwoSpec& spec, std::size_t part) {
    validate(spec);
    if (part >= spec.parts.size()) throw InvalidArgument("part index out of range");
    if (!spec.parts[part].is_nilpotent_member()) throw InvalidArgument("part is not nilpotent");
    if (spec.parts.size() == 1) throw InvalidArgument("removing the only part leaves no block");
    const auto original = make_family_two(spec);
    const FieldSpec field = original.spec();

    std::vector<std::size_t> kept_block;  // basis of the remaining parts
    std::vector<std::size_t> moved;       // the nilpotent part, then the old tail
    std::size_t off = 0;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        for (std::size_t j = 0; j < spec.parts[i].n; ++j) (i == part ? moved : kept_block).push_back(off + j);
        off += spec.parts[i].n;
    }
    for (std::size_t j = off; j < spec.dim(); ++j) moved.push_back(j);

    AbsorbedFamily out{FamilyTwoSpec{{}, Matrix(field, moved.size(), kept_block.size()),
                                     Matrix(field, moved.size(), moved.size())},
                       {}};
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        if (i != part) out.spec.parts.push_back(spec.parts[i]);
    }
    const Matrix& a = original.structure();
    for (std::size_t r = 0; r < moved.size(); ++r) {
        for (std::size_t c = 0; c < kept_block.size(); ++c) out.spec.c(r, c) = a(moved[r], kept_block[c]);
        for (std::size_t c = 0; c < moved.size(); ++c) out.spec.l(r, c) = a(moved[r], moved[c]);
    }
    out.perm = kept_block;
    out.perm.insert(out.perm.end(), moved.begin(), moved.end());
    validate(out.spec);
    return out;
}

std::string to_string(Profile p) {
    switch (p) {
        case Profile::General: return "general";
        case Profile::StrictUpperTriangular: return "strict-upper";
        case Profile::StrictTriangularFullSuperdiag: return "strict-upper-full";
        case Profile::MaxSolvable: return "max-solvable";
        case Profile::FamilyOne: return "family-one";
        case Profile::FamilyTwo: return "family-two";
    }
    return "?";
}

std::optional<Profile> parse_profile(const std::string& name) {
    for (auto p : {Profile::General, Profile::StrictUpperTriangular, Profile::StrictTriangularFullSuperdiag,
                   Profile::MaxSolvable, Profile::FamilyOne, Profile::FamilyTwo}) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

FamilyOneSpec random_family_one_spec(FieldSpec spec, std::size_t n, std::uint64_t seed) {
    if (n < 2) throw UnsatisfiableProfile("E_k(lambda) needs n >= 2");
    Sampler s(spec, seed);
    for (int attempt = 0; attempt < kDefaultRetryBudget; ++attempt) {
        FamilyOneSpec f{n, s.index(1, n), {}};
        Scalar sum = Scalar::zero(spec);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar v = (i + 1 == f.k) ? -sum : s.any();
            if (i < f.k) sum += v;
            f.lambdas.push_back(v);
        }
        if (std::any_of(f.lambdas.begin(), f.lambdas.end(), [](const Scalar& x) { return !x.is_zero(); })) {
            return f;
        }
    }
    throw UnsatisfiableProfile("could not draw a valid E_k(lambda)");
}

FamilyTwoSpec random_family_two_spec(FieldSpec spec, std::size_t n, std::uint64_t seed) {
    if (n < 2) throw UnsatisfiableProfile("F(E_1..E_r) needs n >= 2");
    Sampler s(spec, seed);
    const std::size_t m = s.index(2, n);
    std::vector<std::size_t> dims;
    std::size_t left = m;
    while (left > 0) {
        std::size_t d = left <= 3 ? left : s.index(2, left - 2);
        dims.push_back(d);
        left -= d;
    }
    FamilyTwoSpec f{{}, Matrix(spec, n - m, m), Matrix(spec, n - m, n - m)};
    for (std::size_t d : dims) f.parts.push_back(random_family_one_spec(spec, d, seed * 7919 + f.parts.size() + 1));
    for (std::size_t i = 0; i < n - m; ++i) {
        for (std::size_t j = 0; j < m; ++j) f.c(i, j) = s.sparse();
        for (std::size_t j = 0; j < i; ++j) f.l(i, j) = s.any();
    }
    return f;
}

EvolutionAlgebra random_algebra(FieldSpec spec, std::size_t n, Profile profile, std::uint64_t seed, int retries) {
    Sampler s(spec, seed);
    switch (profile) {
        case Profile::General: {
            Matrix m(spec, n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) m(i, j) = s.any();
            }
            return EvolutionAlgebra(std::move(m));
        }
        case Profile::StrictUpperTriangular:
        case Profile::StrictTriangularFullSuperdiag: {
            const bool full = profile == Profile::StrictTriangularFullSuperdiag;
            Matrix m(spec, n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) m(i, j) = (full && j == i + 1) ? s.nonzero() : s.any();
            }
            return EvolutionAlgebra(std::move(m));
        }
        case Profile::MaxSolvable: {
            spec.require_char_ne_2("the max-solvable profile");
            if (n < 2) throw UnsatisfiableProfile("maximum solvability index needs n >= 2");
            const std::int64_t p = spec.characteristic();
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
            std::uniform_int_distribution<std::size_t> count_dist(1, n - 1);
            ModMatrix m(n, std::vector<std::int64_t>(n, 0));
            for (long draw = 0; draw < kSolvableFilterBudget; ++draw) {
                int minor_tries = 0;
                do {
                    if (++minor_tries > retries) {
                        throw UnsatisfiableProfile("no invertible leading minor after " + std::to_string(retries) +
                                                   " draws");
                    }
                    for (std::size_t i = 0; i + 1 < n; ++i) {
                        for (std::size_t j = 0; j < n; ++j) m[i][j] = entry(rng);
                    }
                } while (!leading_minor_invertible(m, p));
                const std::size_t count = count_dist(rng);
                for (std::size_t j = 0; j < n; ++j) {
                    std::int64_t v = 0;
                    for (std::size_t i = 0; i < count; ++i) v += m[i][j];
                    m[n - 1][j] = ((-v) % p + p) % p;
                }
                if (!solvable_mod_p(m, p)) continue;
                Matrix out(spec, n, n);
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) out(i, j) = Scalar(spec, static_cast<long>(m[i][j]));
                }
                return EvolutionAlgebra(std::move(out));
            }
            throw UnsatisfiableProfile("no solvable sample with maximum index after " +
                                       std::to_string(kSolvableFilterBudget) + " draws");
        }
        case Profile::FamilyOne:
            return make_family_one(random_family_one_spec(spec, n, seed));
        case Profile::FamilyTwo:
            return make_family_two(random_family_two_spec(spec, n, seed));
    }
    throw InvalidArgument("unknown profile");
}

EvolutionAlgebra random_supersolvable_max_solvable(FieldSpec spec, std::size_t n, std::uint64_t seed,
                                                   int retries) {
    spec.require_char_ne_2("supersolvable max-solvable sampling");
    if (n < 2) throw UnsatisfiableProfile("maximum solvability index needs n >= 2");
    Sampler s(spec, seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<std::size_t> block_start;
        std::vector<std::size_t> block_end(n);
        for (std::size_t i = 0; i < n;) {
            const bool pair = i + 1 < n && s.coin();
            block_start.push_back(i);
            const std::size_t end = i + (pair ? 2 : 1);
            for (std::size_t j = i; j < end; ++j) block_end[j] = end;
            i = end;
        }
        Matrix m(spec, n, n);
        for (std::size_t b : block_start) {
            if (block_end[b] == b + 2) {
                m(b, b) = m(b, b + 1) = Scalar::one(spec);
                m(b + 1, b) = m(b + 1, b + 1) = -Scalar::one(spec);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t first = block_end[i] == i + 1 ? i : (block_end[i] == i + 2 ? i : i - 1);
            for (std::size_t j = 0; j < first; ++j) m(i, j) = s.sparse();
        }
        EvolutionAlgebra a(std::move(m));
        if (a.structure().rank() != n - 1 || !is_solvable(a)) continue;
        BasisChange change{s.permutation(n), {}};
        for (std::size_t t = 0; t < n; ++t) change.scales.push_back(s.nonzero());
        return change_basis(a, change);
    }
    throw UnsatisfiableProfile("no supersolvable sample with maximum index after " + std::to_string(retries) +
                               " draws");
}

EvolutionAlgebra random_rhombus_chain(FieldSpec spec, std::size_t n, std::uint64_t seed, int retries) {
    spec.require_char_ne_2("rhombus-chain sampling");
    if (n < 2) throw UnsatisfiableProfile("the (1 1; -1 -1) block needs n >= 2");
    Sampler s(spec, seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        Matrix m(spec, n, n);
        m(0, 0) = m(0, 1) = Scalar::one(spec);
        m(1, 0) = m(1, 1) = -Scalar::one(spec);
        bool balanced = s.coin();
        for (std::size_t j = 2; j < n; ++j) {
            for (std::size_t c = 0; c < j; ++c) m(j, c) = (c + 1 == j && j >= 3) ? s.nonzero() : s.any();
            balanced = balanced && s.index(0, 3) != 0;
            if (balanced) m(j, 1) = -m(j, 0);
        }
        if (m.rank() + 1 == n) return EvolutionAlgebra(std::move(m));
    }
    throw UnsatisfiableProfile("no rank n-1 rhombus chain after " + std::to_string(retries) + " draws");
}

}  // namespace evolab
