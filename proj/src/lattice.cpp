#include "evolab/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "evolab/errors.hpp"

namespace evolab {

std::optional<std::size_t> Lattice::index_of(const Subspace& u) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), u);
    if (it == nodes_.end() || !(*it == u)) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

void Lattice::finish_covers() {
    const std::size_t n = size();
    cover_.assign(n * n, false);
    hasse_.clear();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c) {
                if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
            }
            if (direct) {
                cover_[a * n + b] = true;
                hasse_.emplace_back(a, b);
            }
        }
    }
}

Lattice build_lattice(const EvolutionAlgebra& a, const SubalgebraSet& set) {
    Lattice l;
    l.nodes_ = set.members;
    std::sort(l.nodes_.begin(), l.nodes_.end());
    const std::size_t n = l.size();
    if (n == 0 || !l.nodes_.front().is_zero() || !l.nodes_.back().is_whole()) {
        throw JoinEscapesSet("subalgebra set lacks the zero subspace or the whole algebra");
    }
    std::map<Subspace, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(l.nodes_[i], i);

    l.leq_.assign(n * n, false);
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    std::map<Subspace, std::size_t> join_memo;
    auto lookup = [&](const Subspace& u) -> std::optional<std::size_t> {
        auto it = index.find(u);
        if (it == index.end()) return std::nullopt;
        return it->second;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Subspace& u = l.nodes_[i];
            const Subspace& v = l.nodes_[j];
            const bool ij = contains(v, u);
            const bool ji = i == j || (u.dim() == v.dim() ? false : contains(u, v));
            l.leq_[i * n + j] = ij;
            l.leq_[j * n + i] = ji;
            std::size_t m, k;
            if (ij) {
                m = i;
                k = j;
            } else if (ji) {
                m = j;
                k = i;
            } else {
                auto mi = lookup(subspace_intersect(u, v));
                if (!mi) throw JoinEscapesSet("intersection " + subspace_intersect(u, v).to_string() + " missing");
                m = *mi;
                Subspace sum = subspace_sum(u, v);
                auto memo = join_memo.find(sum);
                if (memo != join_memo.end()) {
                    k = memo->second;
                } else {
                    auto direct = lookup(sum);
                    if (!direct) direct = lookup(generated_subalgebra(a, sum));
                    if (!direct) throw JoinEscapesSet("join of " + u.to_string() + " and " + v.to_string() + " missing");
                    k = *direct;
                    join_memo.emplace(std::move(sum), k);
                }
            }
            l.meet_[i * n + j] = l.meet_[j * n + i] = m;
            l.join_[i * n + j] = l.join_[j * n + i] = k;
        }
    }
    l.finish_covers();
    return l;
}

Lattice Lattice::from_order(const std::vector<std::vector<bool>>& leq) {
    Lattice l;
    const std::size_t n = leq.size();
    if (n == 0) throw InvalidArgument("empty order");
    l.nodes_.assign(n, Subspace::zero(FieldSpec::prime(2), 0));
    l.leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].size() != n) throw InvalidArgument("order matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (leq[i][j] && j < i) throw InvalidArgument("elements must be listed in a linear extension");
            l.leq_[i * n + j] = leq[i][j];
        }
    }
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::optional<std::size_t> lo, hi;
            for (std::size_t c = 0; c < n; ++c) {
                if (l.leq(c, i) && l.leq(c, j) && (!lo || l.leq(*lo, c))) lo = c;
                if (l.leq(i, c) && l.leq(j, c) && (!hi || l.leq(c, *hi))) hi = c;
            }
            if (!lo || !hi) throw InvalidArgument("order is not a lattice");
            for (std::size_t c = 0; c < n; ++c) {
                if (l.leq(c, i) && l.leq(c, j) && !l.leq(c, *lo)) throw InvalidArgument("order is not a lattice");
                if (l.leq(i, c) && l.leq(j, c) && !l.leq(*hi, c)) throw InvalidArgument("order is not a lattice");
            }
            l.meet_[i * n + j] = *lo;
            l.join_[i * n + j] = *hi;
        }
    }
    l.finish_covers();
    return l;
}

TripleVerdict is_distributive(const Lattice& l) {
    const std::size_t n = l.size();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w = 0; w < n; ++w) {
                if (l.join(u, l.meet(v, w)) != l.meet(l.join(u, v), l.join(u, w))) return {false, Triple{u, v, w}};
            }
        }
    }
    return {true, std::nullopt};
}

TripleVerdict is_modular(const Lattice& l) {
    const std::size_t n = l.size();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t w = 0; w < n; ++w) {
            if (!l.leq(u, w)) continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (l.join(u, l.meet(v, w)) != l.meet(l.join(u, v), w)) return {false, Triple{u, v, w}};
            }
        }
    }
    return {true, std::nullopt};
}

std::optional<std::array<std::size_t, 5>> find_pentagon(const Lattice& l) {
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
            if (a == c || !l.leq(a, c)) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (l.leq(b, c) || l.leq(a, b) || l.leq(c, b) || l.leq(b, a)) continue;
                if (l.join(a, b) == l.join(c, b) && l.meet(a, b) == l.meet(c, b)) {
                    return std::array<std::size_t, 5>{l.meet(a, b), a, c, b, l.join(a, b)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<std::size_t, 5>> find_diamond(const Lattice& l) {
    const std::size_t n = l.size();
    auto incomparable = [&](std::size_t x, std::size_t y) { return !l.leq(x, y) && !l.leq(y, x); };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (!incomparable(x, y)) continue;
            const std::size_t j = l.join(x, y);
            const std::size_t m = l.meet(x, y);
            for (std::size_t z = y + 1; z < n; ++z) {
                if (!incomparable(x, z) || !incomparable(y, z)) continue;
                if (l.join(x, z) == j && l.join(y, z) == j && l.meet(x, z) == m && l.meet(y, z) == m) {
                    return std::array<std::size_t, 5>{m, x, y, z, j};
                }
            }
        }
    }
    return std::nullopt;
}

PairVerdict is_upper_semimodular(const Lattice& l) {
    const std::size_t n = l.size();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (l.covers(v, l.meet(u, v)) && !l.covers(l.join(u, v), u)) return {false, std::pair{u, v}};
        }
    }
    return {true, std::nullopt};
}

PairVerdict is_lower_semimodular(const Lattice& l) {
    const std::size_t n = l.size();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (l.covers(l.join(u, v), v) && !l.covers(u, l.meet(u, v))) return {false, std::pair{u, v}};
        }
    }
    return {true, std::nullopt};
}

JVerdict is_j_algebra(const Lattice& l) {
    const std::size_t n = l.size();
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> up(n);
    for (auto [lo, hi] : l.hasse()) up[lo].push_back(hi);
    // Nodes are sorted by dimension, so covers always point to larger indices.
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> shortest(n, unset), longest(n, 0);
        shortest[s] = 0;
        for (std::size_t x = s; x < n; ++x) {
            if (shortest[x] == unset) continue;
            for (std::size_t y : up[x]) {
                shortest[y] = std::min(shortest[y], shortest[x] + 1);
                longest[y] = std::max(longest[y], longest[x] + 1);
            }
        }
        for (std::size_t t = s; t < n; ++t) {
            if (shortest[t] != unset && shortest[t] != longest[t]) {
                return {false, std::pair{s, t}, shortest[t], longest[t]};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_chain(const Lattice& l) {
    for (std::size_t a = 0; a < l.size(); ++a) {
        for (std::size_t b = a + 1; b < l.size(); ++b) {
            if (!l.leq(a, b) && !l.leq(b, a)) return false;
        }
    }
    return true;
}

std::string emit_hasse_dot(const Lattice& l, DotLabels labels, const std::vector<std::string>& basis_labels) {
    std::ostringstream out;
    out << "digraph subalgebras {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < l.size(); ++i) {
        std::string text;
        if (labels == DotLabels::Dims) {
            text = "dim=" + std::to_string(l.node(i).dim());
        } else {
            const auto rows = l.node(i).to_strings(basis_labels);
            for (std::size_t r = 0; r < rows.size(); ++r) text += (r ? ";" : "") + rows[r];
        }
        out << "  n" << i << " [label=\"" << text << "\"];\n";
    }
    for (auto [lo, hi] : l.hasse()) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace evolab
