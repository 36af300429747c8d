#pragma once

// Brute-force reference implementations. Nothing here calls the library's solvers, so a
// disagreement points at one side or the other instead of agreeing with itself.

#include <cliquesub/graph.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace ref {

using cliquesub::Edge;
using cliquesub::Graph;
using cliquesub::Vertex;
using cliquesub::VertexSet;

inline std::vector<std::uint32_t> masks(const Graph & g)
{
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

inline bool independent_mask(const std::vector<std::uint32_t> & adj, std::uint32_t s)
{
    for (std::uint32_t r = s; r; r &= r - 1)
        if (adj[static_cast<unsigned>(__builtin_ctz(r))] & s)
            return false;
    return true;
}

/// Largest independent set by scanning every subset. n <= 20.
inline std::size_t alpha(const Graph & g)
{
    auto adj = masks(g);
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
        if (static_cast<std::size_t>(__builtin_popcount(s)) > best && independent_mask(adj, s))
            best = static_cast<std::size_t>(__builtin_popcount(s));
    return best;
}

inline std::size_t omega(const Graph & g) { return alpha(cliquesub::complement(g)); }

/// Chromatic number by the subset recursion chi(S) = 1 + min over independent T ∋ min(S) of chi(S \ T).
inline std::size_t chi(const Graph & g)
{
    std::size_t n = g.order();
    auto adj = masks(g);
    std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint8_t> indep(full + 1);
    for (std::uint32_t s = 0; s <= full; ++s)
        indep[s] = independent_mask(adj, s);
    std::vector<std::uint8_t> best(full + 1, 0xff);
    best[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t low = s & (0u - s);
        std::uint32_t rest = s ^ low;
        for (std::uint32_t t = rest;; t = (t - 1) & rest) {
            std::uint32_t cls = t | low;
            if (indep[cls] && best[s ^ cls] + 1 < best[s])
                best[s] = static_cast<std::uint8_t>(best[s ^ cls] + 1);
            if (t == 0)
                break;
        }
    }
    return best[full];
}

/// Every interior (a, b, c) of a u-a-b-c-v path avoiding `forbidden`, u and v.
inline std::vector<std::array<Vertex, 3>> all_paths4(const Graph & g, Vertex u, Vertex v, const VertexSet & forbidden)
{
    std::vector<std::array<Vertex, 3>> out;
    auto ok = [&](Vertex x) { return x != u && x != v && ! forbidden.contains(x); };
    Vertex n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a) {
        if (! ok(a) || ! g.adjacent(u, a))
            continue;
        for (Vertex b = 0; b < n; ++b) {
            if (b == a || ! ok(b) || ! g.adjacent(a, b))
                continue;
            for (Vertex c = 0; c < n; ++c)
                if (c != a && c != b && ok(c) && g.adjacent(b, c) && g.adjacent(c, v))
                    out.push_back({a, b, c});
        }
    }
    return out;
}

/// Maximum number of pairwise disjoint interiors, by exhaustive set packing.
inline std::size_t max_disjoint_paths4(const Graph & g, Vertex u, Vertex v, const VertexSet & forbidden)
{
    auto paths = all_paths4(g, u, v, forbidden);
    std::size_t best = 0;
    std::vector<char> used(g.order(), 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t taken) {
        best = std::max(best, taken);
        if (taken + (paths.size() - i) <= best)
            return;
        for (std::size_t j = i; j < paths.size(); ++j) {
            auto [a, b, c] = paths[j];
            if (used[a] || used[b] || used[c])
                continue;
            used[a] = used[b] = used[c] = 1;
            go(j + 1, taken + 1);
            used[a] = used[b] = used[c] = 0;
        }
    };
    go(0, 0);
    return best;
}

/// sigma by brute force: some t-set whose nonadjacent pairs admit internally disjoint paths
/// avoiding the branch set. Adjacent pairs always take their edge. n <= 9.
inline std::size_t sigma(const Graph & g)
{
    std::size_t n = g.order();
    if (n == 0)
        return 0;
    auto adj = masks(g);
    std::size_t best = 1;
    for (std::uint32_t branch = 1; branch < (1u << n); ++branch) {
        std::size_t t = static_cast<std::size_t>(__builtin_popcount(branch));
        if (t <= best)
            continue;
        std::vector<Vertex> b;
        for (Vertex x = 0; x < n; ++x)
            if (branch >> x & 1)
                b.push_back(x);
        std::vector<Edge> pairs;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (! g.adjacent(b[i], b[j]))
                    pairs.push_back({b[i], b[j]});
        // Route pairs[k..] through vertices outside `blocked`.
        std::function<bool(std::size_t, std::uint32_t)> route = [&](std::size_t k, std::uint32_t blocked) -> bool {
            if (k == pairs.size())
                return true;
            auto [s, target] = pairs[k];
            std::function<bool(Vertex, std::uint32_t)> walk = [&](Vertex at, std::uint32_t inner) -> bool {
                if (adj[at] >> target & 1 && inner != 0 && route(k + 1, blocked | inner))
                    return true;
                for (std::uint32_t r = adj[at] & ~blocked & ~inner & ~branch; r; r &= r - 1) {
                    Vertex next = static_cast<Vertex>(__builtin_ctz(r));
                    if (walk(next, inner | (1u << next)))
                        return true;
                }
                return false;
            };
            return walk(s, 0);
        };
        if (route(0, 0))
            best = t;
    }
    return best;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64 & rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph(n, edges);
}

/// One representative per isomorphism class of graphs on four vertices, from an exhaustive
/// canonical-form sweep over all 64 labelled graphs.
inline std::vector<Graph> four_vertex_graphs()
{
    const std::array<Edge, 6> slots{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    std::vector<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        std::uint32_t canon = 64;
        std::array<Vertex, 4> perm{0, 1, 2, 3};
        do {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < 6; ++i) {
                if (! (mask >> i & 1))
                    continue;
                Vertex a = std::min(perm[slots[i].first], perm[slots[i].second]);
                Vertex b = std::max(perm[slots[i].first], perm[slots[i].second]);
                for (std::size_t j = 0; j < 6; ++j)
                    if (slots[j] == Edge{a, b})
                        image |= 1u << j;
            }
            canon = std::min(canon, image);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::find(seen.begin(), seen.end(), canon) != seen.end())
            continue;
        seen.push_back(canon);
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < 6; ++i)
            if (canon >> i & 1)
                edges.push_back(slots[i]);
        out.emplace_back(4, edges);
    }
    return out;
}

} // namespace ref
