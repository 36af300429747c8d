#pragma once

#include <cliquesub/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliquesub {

struct PeelResult {
    std::vector<VertexSet> chain; // V_0 ⊃ V_1 ⊃ ..., chain.back() is the terminal set
    std::vector<Vertex> pivots;   // pivot i has at least rho |V_i| non-neighbours in V_i; V_{i+1} is that set
    std::uint64_t terminal_missing = 0;

    const VertexSet & terminal() const { return chain.back(); }
    std::size_t steps() const noexcept { return pivots.size(); }
};

/// Peels into non-neighbourhoods while some vertex has at least rho |V_i| non-neighbours in V_i,
/// choosing the vertex with the most (lowest label on ties). Starts from `start` (all of g by default).
/// Throws InputError unless 0 < rho < 1.
PeelResult peel_sequence(const Graph & g, double rho);
PeelResult peel_sequence(const Graph & g, double rho, const VertexSet & start);

/// Greedy shrink of a start set: repeatedly delete a vertex of maximum non-degree inside the current
/// set (highest label on ties). missing[k] is the number of nonadjacent pairs left at size k.
struct ShrinkSequence {
    VertexSet start;
    std::vector<Vertex> deleted;        // in deletion order
    std::vector<std::uint64_t> missing; // index k = 0..start.size()

    /// The set remaining once only k vertices are left.
    VertexSet at_size(std::size_t k) const;
};

/// Asserts that missing(k)/C(k,2) never increases along the sequence (InternalError otherwise).
ShrinkSequence shrink_sequence(const Graph & g, const VertexSet & start);

/// Largest s allowed for (n, rho, alpha): ceil(rho^(alpha-1) n).
std::size_t dense_subset_limit(std::size_t n, double rho, std::size_t alpha);

/// A set of exactly s vertices with at most rho s^2 nonadjacent pairs, taken from the peel terminal
/// set by greedy shrinking. Requires 1 <= s <= dense_subset_limit(n, rho, alpha) (InputError).
/// ContractError if peeling exposes an independent set larger than alpha; InternalError if the
/// output misses the bound.
VertexSet dense_subset(const Graph & g, double rho, std::size_t s, std::size_t alpha);

} // namespace cliquesub
