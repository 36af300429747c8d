#include "support.hpp"

#include <cliquesub/errors.hpp>
#include <cliquesub/es_filter.hpp>
#include <cliquesub/oracles.hpp>

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace cliquesub;

namespace {

    struct Instance {
        Graph g;
        VertexSet i_set;
        VertexSet v1;
        Rational d;
    };

    /// I = {0..k-1} independent; every other vertex gets at most floor(d k) neighbours in I,
    /// and the vertices outside I are joined at random.
    Instance make_instance(std::size_t k, std::size_t rest, Rational d, std::mt19937_64 & rng)
    {
        std::size_t cap = static_cast<std::size_t>(floor_of(d * k));
        std::vector<Edge> edges;
        for (Vertex v = static_cast<Vertex>(k); v < k + rest; ++v) {
            std::vector<Vertex> ii(k);
            std::iota(ii.begin(), ii.end(), Vertex{0});
            std::shuffle(ii.begin(), ii.end(), rng);
            std::size_t take = cap ? rng() % (cap + 1) : 0;
            for (std::size_t j = 0; j < take; ++j)
                edges.push_back({ii[j], v});
            for (Vertex w = v + 1; w < k + rest; ++w)
                if (rng() % 2)
                    edges.push_back({v, w});
        }
        Instance out{Graph(k + rest, edges), VertexSet::range(static_cast<Vertex>(k)), {}, d};
        std::vector<Vertex> v1;
        for (Vertex v = static_cast<Vertex>(k); v < k + rest; ++v)
            v1.push_back(v);
        out.v1 = VertexSet(std::move(v1));
        return out;
    }

    double binom(std::size_t n, std::size_t k)
    {
        double r = 1;
        for (std::size_t i = 0; i < k; ++i)
            r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
        return r;
    }

} // namespace

TEST_CASE("bucketing on a hand instance")
{
    // I = {0, 1, 2, 3}; d = 1/2 so each key has two elements.
    Graph g(8, {{0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 7}});
    auto r = es_filter(g, VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7}, Rational(1, 2));
    CHECK(r.cap == 2);
    // Padded keys: 4 -> {0,1}, 5 -> {0,1}, 6 -> {0,1}, 7 -> {2,3}.
    CHECK(r.u == VertexSet{4, 5, 6});
    CHECK(r.key == std::vector<Vertex>{0, 1});
    CHECK(r.buckets == 2);
}

TEST_CASE("filtered sets share a key and beat both bounds")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t k = 2 + rng() % 6;
        std::size_t rest = 2 + rng() % 6;
        Rational d(1 + static_cast<long>(rng() % 4), 4 + static_cast<long>(rng() % 4));
        auto inst = make_instance(k, rest, d, rng);
        auto r = es_filter(inst.g, inst.i_set, inst.v1, inst.d);
        CHECK(r.cap == static_cast<std::size_t>(floor_of(d * k)));
        CHECK(r.key.size() == r.cap);
        VertexSet key(r.key);
        for (auto v : r.u) {
            CHECK(inst.v1.contains(v));
            for (auto i : inst.i_set)
                if (inst.g.adjacent(v, i))
                    CHECK(key.contains(i));
        }
        CHECK(static_cast<double>(r.u.size()) * binom(k, r.cap) >= static_cast<double>(rest));
        double dd = to_double(d);
        CHECK(static_cast<double>(r.u.size()) >= std::pow(std::exp(1.0) / dd, -dd * static_cast<double>(k)) * rest * (1 - 1e-12));

        // Every independent set of G[U] together with I \ key stays independent, so alpha(G[U]) <= alpha - (|I| - cap).
        auto hu = induced(inst.g, r.u);
        CHECK(ref::alpha(hu.graph) + (k - r.cap) <= ref::alpha(inst.g));
    }
}

TEST_CASE("argument checks")
{
    Graph g(5, {{0, 2}, {0, 3}, {1, 2}});
    CHECK_THROWS_AS(es_filter(g, VertexSet{0, 1}, VertexSet{2, 3}, Rational(0)), InputError);
    CHECK_THROWS_AS(es_filter(g, VertexSet{0, 1}, VertexSet{2, 3}, Rational(3, 2)), InputError);
    CHECK_THROWS_AS(es_filter(g, VertexSet{0, 2}, VertexSet{3}, Rational(1, 2)), InputError);
    CHECK_THROWS_AS(es_filter(g, VertexSet{0, 1}, VertexSet{1, 3}, Rational(1, 2)), InputError);
    // Vertex 2 has two neighbours in I but the cap is one.
    CHECK_THROWS_AS(es_filter(g, VertexSet{0, 1}, VertexSet{2, 3}, Rational(1, 2)), InputError);
    CHECK_NOTHROW(es_filter(g, VertexSet{0, 1}, VertexSet{2, 3}, Rational(1)));
}
