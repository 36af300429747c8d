#pragma once

#include <cliquesub/bitset.hpp>
#include <cliquesub/exact.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cliquesub {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex labels.
class VertexSet {
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
    /// Sorts and removes duplicates.
    explicit VertexSet(std::vector<Vertex> vs);
    static VertexSet from_bitset(const Bitset & bits);
    static VertexSet range(Vertex n);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const noexcept;
    Vertex operator[](std::size_t i) const noexcept { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<Vertex> & members() const noexcept { return members_; }

    /// Throws InputError if some member is >= n.
    void check_range(std::size_t n) const;
    Bitset to_bitset(std::size_t n) const;

    bool operator==(const VertexSet &) const = default;

  private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet & a, const VertexSet & b);
VertexSet set_difference(const VertexSet & a, const VertexSet & b);
bool disjoint(const VertexSet & a, const VertexSet & b);

/// Edge density |E| / C(n,2), held exactly as the fraction 2m / (n(n-1)).
class Density {
  public:
    Density(std::uint64_t edges, std::uint64_t vertices) : edges_(edges), vertices_(vertices) {}

    std::uint64_t edges() const noexcept { return edges_; }
    std::uint64_t vertices() const noexcept { return vertices_; }
    /// Exact value; 0 when n <= 1.
    Rational exact() const;
    double value() const noexcept;

  private:
    std::uint64_t edges_;
    std::uint64_t vertices_;
};

/// Immutable simple undirected graph, one adjacency bit row per vertex.
class Graph {
  public:
    Graph() = default;
    /// Deduplicates and symmetrises; throws InputError on loops or out-of-range endpoints.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
    static Graph from_rows(std::vector<Bitset> rows);
    static Graph complete(std::size_t n);
    static Graph empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }
    static Graph cycle(std::size_t n);
    static Graph petersen();

    std::size_t order() const noexcept { return rows_.size(); }
    std::uint64_t edge_count() const noexcept { return edges_; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
    const Bitset & neighbours(Vertex v) const noexcept { return rows_[v]; }
    std::size_t degree(Vertex v) const noexcept { return degrees_[v]; }
    std::size_t common_neighbours(Vertex u, Vertex v) const noexcept { return intersection_count(rows_[u], rows_[v]); }
    Density density() const noexcept { return Density(edges_, rows_.size()); }
    std::vector<Edge> edges() const;

    bool operator==(const Graph & o) const noexcept { return rows_ == o.rows_; }

  private:
    void finish();

    std::vector<Bitset> rows_;
    std::vector<std::size_t> degrees_;
    std::uint64_t edges_ = 0;
};

inline Density edge_density(const Graph & g) { return g.density(); }

Graph complement(const Graph & g);

/// Induced subgraph plus the map from new labels to old labels (new label i is old label `labels[i]`).
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> labels;

    VertexSet lift(const VertexSet & local) const;
};

InducedSubgraph induced(const Graph & g, const VertexSet & s);

/// Number of nonadjacent pairs inside s.
std::uint64_t missing_pairs(const Graph & g, const VertexSet & s);
bool is_independent(const Graph & g, const VertexSet & s);
bool is_clique(const Graph & g, const VertexSet & s);

/// Random graph G(n,p); bit-identical for equal (n, p, seed) on every platform.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// Lexicographic product g[h]: (a,x) ~ (b,y) iff a~b in g, or a=b and x~y in h. Vertex (a,x) is a*|h|+x.
Graph lexicographic_product(const Graph & g, const Graph & h);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph & a, const Graph & b);

} // namespace cliquesub
