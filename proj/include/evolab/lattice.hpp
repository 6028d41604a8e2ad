#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evolab/subalgebras.hpp"

namespace evolab {

/// The subalgebra lattice: nodes in the deterministic Subspace order (so
/// node 0 is the zero subspace and the last node the whole algebra), with
/// precomputed order, meet and join tables.
class Lattice {
public:
    std::size_t size() const { return nodes_.size(); }
    const std::vector<Subspace>& nodes() const { return nodes_; }
    const Subspace& node(std::size_t i) const { return nodes_[i]; }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return nodes_.size() - 1; }

    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
    /// b covers a.
    bool covers(std::size_t b, std::size_t a) const { return cover_[a * size() + b]; }
    /// Covering pairs (lower, upper), sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const { return hasse_; }
    std::optional<std::size_t> index_of(const Subspace& u) const;

    /// Abstract lattice from an order relation given as an adjacency matrix
    /// (used for synthetic tests). Elements must be listed in a linear
    /// extension of the order and form a lattice; InvalidArgument otherwise.
    static Lattice from_order(const std::vector<std::vector<bool>>& leq);

private:
    friend Lattice build_lattice(const EvolutionAlgebra& a, const SubalgebraSet& set);
    void finish_covers();

    std::vector<Subspace> nodes_;
    std::vector<bool> leq_;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
    std::vector<bool> cover_;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

/// JoinEscapesSet if the join of two members is not a member (the set was
/// incomplete).
Lattice build_lattice(const EvolutionAlgebra& a, const SubalgebraSet& set);

using Triple = std::array<std::size_t, 3>;

struct TripleVerdict {
    bool holds;
    std::optional<Triple> witness;  // (u, v, w)
};

/// u v (v w) = (u v v) (u v w) for all triples.
TripleVerdict is_distributive(const Lattice& l);
/// u v (v w) = (u v v) w for all u <= w.
TripleVerdict is_modular(const Lattice& l);

/// (bottom, a, c, b, top) with a < c, a v b = c v b and a ^ b = c ^ b.
std::optional<std::array<std::size_t, 5>> find_pentagon(const Lattice& l);
/// (bottom, x, y, z, top) with pairwise equal joins and meets.
std::optional<std::array<std::size_t, 5>> find_diamond(const Lattice& l);

struct PairVerdict {
    bool holds;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // (U, V)
};

/// Whenever U ^ V is maximal in V, U is maximal in U v V.
PairVerdict is_upper_semimodular(const Lattice& l);
/// Whenever V is maximal in U v V, U ^ V is maximal in U.
PairVerdict is_lower_semimodular(const Lattice& l);

struct JVerdict {
    bool holds;
    /// Interval (U, V) with maximal chains of two lengths.
    std::optional<std::pair<std::size_t, std::size_t>> interval;
    std::size_t shortest = 0;
    std::size_t longest = 0;
};
JVerdict is_j_algebra(const Lattice& l);

/// Whether the lattice is a chain.
bool is_chain(const Lattice& l);

enum class DotLabels { Dims, BasisStrings };
std::string emit_hasse_dot(const Lattice& l, DotLabels labels, const std::vector<std::string>& basis_labels = {});

}  // namespace evolab
