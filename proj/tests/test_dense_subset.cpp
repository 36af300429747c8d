#include "support.hpp"

#include <cliquesub/dense_subset.hpp>
#include <cliquesub/errors.hpp>
#include <cliquesub/oracles.hpp>

#include <doctest.h>

#include <cmath>

using namespace cliquesub;

namespace {

    std::size_t non_degree(const Graph & g, Vertex v, const VertexSet & s)
    {
        std::size_t k = 0;
        for (auto x : s)
            if (x != v && ! g.adjacent(v, x))
                ++k;
        return k;
    }

} // namespace

TEST_CASE("peeling a complete graph does nothing")
{
    auto r = peel_sequence(Graph::complete(8), 0.5);
    CHECK(r.steps() == 0);
    CHECK(r.terminal() == VertexSet::range(8));
    CHECK(r.terminal_missing == 0);
}

TEST_CASE("peeling an empty graph walks down to a single vertex")
{
    auto r = peel_sequence(Graph::empty(6), 0.5);
    // At every step the pivot misses all other vertices, so its non-neighbourhood drops it.
    CHECK(r.terminal().size() == 1);
    CHECK(r.steps() == 5);
}

TEST_CASE("peel chains follow the rule")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 14;
        Graph g = ref::random_graph(n, 0.6, rng);
        double rho = trial % 2 ? 0.3 : 0.6;
        auto r = peel_sequence(g, rho);
        REQUIRE(r.chain.size() == r.steps() + 1);
        // The pivots form an independent set, so the walk is no longer than alpha.
        CHECK(is_independent(g, VertexSet(r.pivots)));
        CHECK(r.steps() <= ref::alpha(g));
        for (std::size_t i = 0; i < r.steps(); ++i) {
            const auto & cur = r.chain[i];
            Vertex p = r.pivots[i];
            CHECK(cur.contains(p));
            CHECK(static_cast<double>(non_degree(g, p, cur)) >= rho * static_cast<double>(cur.size()));
            for (auto v : cur)
                CHECK(non_degree(g, v, cur) <= non_degree(g, p, cur));
            std::vector<Vertex> next;
            for (auto v : cur)
                if (v != p && ! g.adjacent(p, v))
                    next.push_back(v);
            CHECK(r.chain[i + 1] == VertexSet(next));
        }
        const auto & t = r.terminal();
        for (auto v : t)
            CHECK(static_cast<double>(non_degree(g, v, t)) < rho * static_cast<double>(t.size()));
        CHECK(r.terminal_missing == missing_pairs(g, t));
    }
}

TEST_CASE("peel rejects rho outside (0, 1)")
{
    CHECK_THROWS_AS(peel_sequence(Graph::complete(3), 0.0), InputError);
    CHECK_THROWS_AS(peel_sequence(Graph::complete(3), 1.0), InputError);
    CHECK_THROWS_AS(peel_sequence(Graph::complete(3), std::nan("")), InputError);
}

TEST_CASE("shrink sequence is monotone in density")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = ref::random_graph(2 + rng() % 20, 0.5, rng);
        auto start = VertexSet::range(static_cast<Vertex>(g.order()));
        auto s = shrink_sequence(g, start);
        REQUIRE(s.missing.size() == start.size() + 1);
        CHECK(s.deleted.size() == start.size());
        for (std::size_t k = 0; k <= start.size(); ++k) {
            auto set = s.at_size(k);
            CHECK(set.size() == k);
            CHECK(missing_pairs(g, set) == s.missing[k]);
        }
        for (std::size_t k = 2; k < start.size(); ++k)
            // missing[k] / C(k,2) <= missing[k+1] / C(k+1,2)
            CHECK(s.missing[k] * (k + 1) * k <= s.missing[k + 1] * k * (k - 1));
    }
}

TEST_CASE("dense_subset_limit is computed exactly")
{
    CHECK(dense_subset_limit(100, 0.5, 1) == 100);
    CHECK(dense_subset_limit(100, 0.5, 2) == 50);
    CHECK(dense_subset_limit(100, 0.5, 3) == 25);
    CHECK(dense_subset_limit(100, 0.5, 4) == 13);
    // 0.3 as a double lies just below 3/10, so 0.3² · 100 is just below 9.
    CHECK(dense_subset_limit(100, 0.3, 3) == 9);
    CHECK(dense_subset_limit(7, 0.6, 30) == 1);
}

TEST_CASE("dense_subset meets its bound for every valid s")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + rng() % 12;
        Graph g = ref::random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
        std::size_t alpha = alpha_exact(g).value;
        for (double rho : {0.3, 0.6}) {
            std::size_t limit = dense_subset_limit(n, rho, alpha);
            for (std::size_t s = 1; s <= limit; ++s) {
                VertexSet out = dense_subset(g, rho, s, alpha);
                CHECK(out.size() == s);
                CHECK(static_cast<double>(missing_pairs(g, out)) <= rho * static_cast<double>(s * s));
            }
        }
    }
}

TEST_CASE("dense_subset argument checks")
{
    Graph g = Graph::cycle(6);
    CHECK_THROWS_AS(dense_subset(g, 0.5, 0, 3), InputError);
    CHECK_THROWS_AS(dense_subset(g, 0.5, dense_subset_limit(6, 0.5, 3) + 1, 3), InputError);
    // Declaring alpha = 1 for an edgeless graph is caught by the peel.
    CHECK_THROWS_AS(dense_subset(Graph::empty(10), 0.5, 1, 1), ContractError);
}
