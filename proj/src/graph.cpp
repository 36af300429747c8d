#include <cliquesub/errors.hpp>
#include <cliquesub/graph.hpp>
#include <cliquesub/random.hpp>

#include <algorithm>
#include <string>

namespace cliquesub {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_bitset(const Bitset & bits)
{
    VertexSet s;
    s.members_.reserve(bits.count());
    bits.for_each([&](std::size_t i) { s.members_.push_back(static_cast<Vertex>(i)); });
    return s;
}

VertexSet VertexSet::range(Vertex n)
{
    VertexSet s;
    s.members_.resize(n);
    for (Vertex i = 0; i < n; ++i)
        s.members_[i] = i;
    return s;
}

bool VertexSet::contains(Vertex v) const noexcept
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_range(std::size_t n) const
{
    if (! members_.empty() && members_.back() >= n)
        throw InputError("vertex " + std::to_string(members_.back()) + " out of range for graph on " + std::to_string(n) +
                         " vertices");
}

Bitset VertexSet::to_bitset(std::size_t n) const
{
    check_range(n);
    Bitset b(n);
    for (auto v : members_)
        b.set(v);
    return b;
}

VertexSet set_union(const VertexSet & a, const VertexSet & b)
{
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet & a, const VertexSet & b)
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool disjoint(const VertexSet & a, const VertexSet & b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

Rational Density::exact() const
{
    if (vertices_ <= 1)
        return Rational(0);
    return Rational(BigInt(2) * edges_, BigInt(vertices_) * (vertices_ - 1));
}

double Density::value() const noexcept
{
    if (vertices_ <= 1)
        return 0.0;
    return 2.0 * static_cast<double>(edges_) / (static_cast<double>(vertices_) * static_cast<double>(vertices_ - 1));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : rows_(n, Bitset(n))
{
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw InputError("loop at vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
    }
    finish();
}

Graph Graph::from_rows(std::vector<Bitset> rows)
{
    Graph g;
    std::size_t n = rows.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (rows[v].size() != n)
            throw InputError("adjacency row " + std::to_string(v) + " has the wrong width");
        if (rows[v].test(v))
            throw InputError("loop at vertex " + std::to_string(v));
    }
    for (std::size_t u = 0; u < n; ++u)
        rows[u].for_each([&](std::size_t v) {
            if (! rows[v].test(u))
                throw InputError("adjacency rows are not symmetric at (" + std::to_string(u) + "," + std::to_string(v) + ")");
        });
    g.rows_ = std::move(rows);
    g.finish();
    return g;
}

Graph Graph::complete(std::size_t n)
{
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t v = 0; v < n; ++v) {
        rows[v].set_all();
        rows[v].reset(v);
    }
    Graph g;
    g.rows_ = std::move(rows);
    g.finish();
    return g;
}

Graph Graph::cycle(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

Graph Graph::petersen()
{
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, e);
}

void Graph::finish()
{
    degrees_.resize(rows_.size());
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < rows_.size(); ++v) {
        degrees_[v] = rows_[v].count();
        total += degrees_[v];
    }
    edges_ = total / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < rows_.size(); ++u)
        for (std::size_t v = rows_[u].find_next(u + 1); v < rows_.size(); v = rows_[u].find_next(v + 1))
            out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return out;
}

Graph complement(const Graph & g)
{
    std::size_t n = g.order();
    std::vector<Bitset> rows(n);
    for (std::size_t v = 0; v < n; ++v) {
        rows[v] = g.neighbours(static_cast<Vertex>(v));
        rows[v].flip_all();
        rows[v].reset(v);
    }
    return Graph::from_rows(std::move(rows));
}

VertexSet InducedSubgraph::lift(const VertexSet & local) const
{
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (auto v : local) {
        if (v >= labels.size())
            throw InputError("local vertex " + std::to_string(v) + " outside induced subgraph");
        out.push_back(labels[v]);
    }
    return VertexSet(std::move(out));
}

InducedSubgraph induced(const Graph & g, const VertexSet & s)
{
    s.check_range(g.order());
    std::size_t k = s.size();
    std::vector<Bitset> rows(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i) {
        const auto & row = g.neighbours(s[i]);
        for (std::size_t j = i + 1; j < k; ++j)
            if (row.test(s[j])) {
                rows[i].set(j);
                rows[j].set(i);
            }
    }
    return InducedSubgraph{Graph::from_rows(std::move(rows)), s.members()};
}

std::uint64_t missing_pairs(const Graph & g, const VertexSet & s)
{
    s.check_range(g.order());
    Bitset mask = s.to_bitset(g.order());
    std::uint64_t present = 0;
    for (auto v : s)
        present += intersection_count(g.neighbours(v), mask);
    std::uint64_t k = s.size();
    return k * (k - (k ? 1 : 0)) / 2 - present / 2;
}

bool is_independent(const Graph & g, const VertexSet & s)
{
    s.check_range(g.order());
    Bitset mask = s.to_bitset(g.order());
    for (auto v : s)
        if (intersects(g.neighbours(v), mask))
            return false;
    return true;
}

bool is_clique(const Graph & g, const VertexSet & s) { return missing_pairs(g, s) == 0; }

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed)
{
    if (! (p >= 0.0 && p <= 1.0))
        throw InputError("edge probability must lie in [0,1], got " + std::to_string(p));
    Rng rng(seed);
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) {
                rows[u].set(v);
                rows[v].set(u);
            }
    return Graph::from_rows(std::move(rows));
}

Graph lexicographic_product(const Graph & g, const Graph & h)
{
    std::size_t k = h.order();
    std::vector<Edge> e;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t b = a; b < g.order(); ++b)
                for (std::size_t y = 0; y < k; ++y) {
                    std::size_t p = a * k + x, q = b * k + y;
                    if (q <= p)
                        continue;
                    bool adj = (a == b) ? h.adjacent(static_cast<Vertex>(x), static_cast<Vertex>(y))
                                        : g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b));
                    if (adj)
                        e.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(q));
                }
    return Graph(g.order() * k, e);
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    auto e = a.edges();
    auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges())
        e.emplace_back(u + shift, v + shift);
    return Graph(a.order() + b.order(), e);
}

} // namespace cliquesub
