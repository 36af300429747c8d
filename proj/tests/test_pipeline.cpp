#include "support.hpp"

#include <cliquesub/errors.hpp>
#include <cliquesub/pipeline.hpp>
#include <cliquesub/subdivision.hpp>

#include <doctest.h>

#include <cmath>

using namespace cliquesub;

namespace {

    const TranscriptEntry * find_step(const BoundReport & r, std::string_view step)
    {
        for (const auto & e : r.transcript)
            if (e.step == step)
                return &e;
        return nullptr;
    }

    /// K_{n-alpha+1} plus alpha-1 isolated vertices: independence number exactly alpha.
    Graph clique_plus_isolated(std::size_t n, std::size_t alpha)
    {
        return disjoint_union(Graph::complete(n - alpha + 1), Graph::empty(alpha - 1));
    }

    /// Cliques of sizes 16, 16, 16, 16, 17 on 81 vertices, then cross edges in label order up to m.
    Graph five_cliques(std::uint64_t m)
    {
        std::vector<Vertex> block(81);
        for (Vertex v = 0; v < 81; ++v)
            block[v] = std::min<Vertex>(v / 16, 4);
        std::vector<Edge> edges, cross;
        for (Vertex u = 0; u < 81; ++u)
            for (Vertex v = u + 1; v < 81; ++v)
                (block[u] == block[v] ? edges : cross).push_back({u, v});
        REQUIRE(edges.size() == 616);
        REQUIRE(m >= 616);
        edges.insert(edges.end(), cross.begin(), cross.begin() + static_cast<std::ptrdiff_t>(m - 616));
        return Graph(81, edges);
    }

    Rational big_n() { return pow10(114); }

} // namespace

TEST_CASE("dense hypotheses at symbolic magnitudes")
{
    auto params = PipelineParams::paper();
    BigInt n = boost::multiprecision::numerator(big_n());
    Rational d = params.c;
    // 2 log(10^114) = 524.98..., so alpha = 524 is the largest admissible value.
    CHECK(dense_hypotheses(n, d, 524, params).ok);
    auto a = dense_hypotheses(n, d, 525, params);
    CHECK_FALSE(a.ok);
    CHECK(a.failed == "α ≤ 2 log n");
    auto b = dense_hypotheses(n - 1, d, 10, params);
    CHECK(b.failed == "n ≥ 10^14 c^-5");
    auto c = dense_hypotheses(n, d - Rational(1, BigInt(10) * n), 10, params);
    CHECK(c.failed == "d ≥ c");
    CHECK(dense_hypotheses(n, Rational(1), 1, params).ok);
}

TEST_CASE("sparse hypotheses at symbolic magnitudes")
{
    BigInt n = boost::multiprecision::numerator(big_n());
    Rational d = pow10(-20);
    CHECK(sparse_hypotheses(n, d, 10).ok);
    CHECK(sparse_hypotheses(n, d + Rational(1, n), 10).failed == "d ≤ 10^-20");
    CHECK(sparse_hypotheses(BigInt(1'000'000), d, 500'000).ok);
    CHECK(sparse_hypotheses(BigInt(1'000'000), d, 500'001).failed == "α ≤ n/2");

    // Largest alpha with d alpha log(1/d) <= log(n)/100, from long double arithmetic.
    long double L = 114.0L * std::log(10.0L), D = 1e-20L;
    auto alpha_max = static_cast<unsigned long long>(std::floor(L / (100.0L * D * std::log(1.0L / D))));
    CHECK(sparse_hypotheses(n, d, BigInt(alpha_max) - 1000).ok);
    CHECK(sparse_hypotheses(n, d, BigInt(alpha_max) + 1000).failed == "d α log(1/d) ≤ (log n)/100");
}

TEST_CASE("paper mode refuses every desk-scale graph")
{
    auto params = PipelineParams::paper();
    Graph g = Graph::complete(1600);
    try {
        sigma_lower_dense(g, 1, params);
        FAIL("expected a refusal");
    }
    catch (const PreconditionError & e) {
        CHECK(e.hypothesis() == "n ≥ 10^14 c^-5");
    }
    try {
        sigma_lower_sparse(gen_gnp(50, 0.5, 1), params);
        FAIL("expected a refusal");
    }
    catch (const PreconditionError & e) {
        CHECK(e.hypothesis() == "d ≤ 10^-20");
    }
    // The main dispatch answers trivially below 10^14 c^-5.
    auto r = sigma_lower_auto(gen_gnp(50, 0.5, 1), params);
    CHECK(r.provenance == Provenance::trivial);
    CHECK(r.claimed_sigma_lower == 1);
    CHECK_FALSE(r.certificate);
}

TEST_CASE("practical dense refuses below d²n = 1600")
{
    auto params = PipelineParams::practical();
    try {
        sigma_lower_dense(Graph::complete(1599), 1, params);
        FAIL("expected a refusal");
    }
    catch (const PreconditionError & e) {
        CHECK(e.hypothesis() == "d²n ≥ 1600");
    }
    auto r = sigma_lower_dense(Graph::complete(1600), 1, params);
    CHECK(r.claimed_sigma_lower == 1600);
    CHECK(r.provenance == Provenance::certified_constructive);
    REQUIRE(r.certificate);
    CHECK(verify_subdivision(Graph::complete(1600), *r.certificate).ok);
    CHECK_THROWS_AS(sigma_lower_dense(gen_gnp(1700, 0.99, 2), 1, params), ContractError);
}

TEST_CASE("practical dense on a large dense graph")
{
    Graph g = gen_gnp(2000, 0.95, 21);
    auto params = PipelineParams::practical();
    auto alpha = alpha_exact(g);
    REQUIRE(alpha.tag == Certainty::exact);
    auto r = sigma_lower_dense(g, alpha.value, params);
    REQUIRE(r.certificate);
    CHECK(verify_subdivision(g, *r.certificate, PathShape::length_four).ok);
    CHECK(r.claimed_sigma_lower == r.certificate->order());
    CHECK(r.claimed_sigma_lower >= 100);
    const auto * drc = find_step(r, "drc");
    REQUIRE(drc);
    CHECK(drc->detail["guaranteed"] == true);
    const auto * build = find_step(r, "build");
    REQUIRE(build);
    CHECK(build->detail["s"] == r.claimed_sigma_lower);
}

TEST_CASE("sparse base case at alpha = n/16")
{
    auto params = PipelineParams::practical();
    for (std::size_t alpha : {3, 4, 5}) {
        Graph g = clique_plus_isolated(64, alpha);
        auto r = sigma_lower_sparse(g, params);
        const auto * a = find_step(r, "alpha");
        REQUIRE(a);
        CHECK(a->detail["value"] == alpha);
        const auto * base = find_step(r, "base");
        if (alpha * 16 > 64) {
            REQUIRE(base);
            CHECK(base->detail["reason"] == "α > n/16");
            CHECK_FALSE(find_step(r, "split"));
        }
        else {
            CHECK_FALSE(base);
            CHECK(find_step(r, "split"));
            REQUIRE(r.certificate);
            CHECK(verify_subdivision(g, *r.certificate).ok);
        }
    }
}

TEST_CASE("sparse base case at d = n^(-1/4)")
{
    auto params = PipelineParams::practical();
    Graph at = five_cliques(1080); // d = 1/3 = 81^(-1/4)
    Graph below = five_cliques(1079);
    CHECK(at.density().exact() == Rational(1, 3));

    auto r_below = sigma_lower_sparse(below, params);
    const auto * t = find_step(r_below, "trivial");
    REQUIRE(t);
    CHECK(t->detail["reason"] == "d < n^-1/4");
    CHECK(r_below.claimed_sigma_lower == 1);

    auto r_at = sigma_lower_sparse(at, params);
    CHECK_FALSE(find_step(r_at, "trivial"));
    CHECK(find_step(r_at, "split"));
    if (r_at.certificate)
        CHECK(verify_subdivision(at, *r_at.certificate).ok);
}

TEST_CASE("practical sparse on a random graph")
{
    Graph g = gen_gnp(200, 0.7, 5);
    auto r = sigma_lower_sparse(g, PipelineParams::practical());
    CHECK(find_step(r, "case"));
    CHECK_FALSE(r.partial);
    if (r.certificate) {
        CHECK(verify_subdivision(g, *r.certificate, PathShape::length_four).ok);
        CHECK(r.provenance == Provenance::certified_constructive);
    }
}

TEST_CASE("cited density bound")
{
    auto small = sigma_lower_density_cited(Graph::complete(1000));
    CHECK(small.provenance == Provenance::trivial);
    CHECK(small.claimed_sigma_lower == 1);
    // m = 2 098 176 and 256 n = 524 544: floor(sqrt(4)) = 2.
    auto r = sigma_lower_density_cited(Graph::complete(2049));
    CHECK(r.provenance == Provenance::cited_density_bound);
    CHECK(r.claimed_sigma_lower == 2);
    CHECK_FALSE(r.certificate);
    CHECK(sigma_lower_density_cited(Graph::empty(0)).claimed_sigma_lower == 0);
}

TEST_CASE("practical auto keeps certified results whenever they are at least as large")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = ref::random_graph(60 + rng() % 100, 0.4 + 0.1 * trial, rng);
        auto r = sigma_lower_auto(g, PipelineParams::practical());
        CHECK(find_step(r, "dispatch"));
        if (r.provenance == Provenance::certified_constructive) {
            REQUIRE(r.certificate);
            CHECK(verify_subdivision(g, *r.certificate).ok);
            CHECK(r.claimed_sigma_lower == r.certificate->order());
        }
        auto doc = report_to_json(r);
        CHECK(doc["claimed_sigma_lower"] == r.claimed_sigma_lower);
        CHECK(doc["provenance"] == std::string(to_string(r.provenance)));
        CHECK(doc["transcript"].is_array());
    }
}

TEST_CASE("f_bound_dispatch regression")
{
    auto params = PipelineParams::paper();
    auto f = f_bound_dispatch(Real(1e6), Real(10), params);
    CHECK(f.regime == Regime::part_one);
    CHECK(f.value == doctest::Approx(1.438449888287663e-111).epsilon(1e-12));
    CHECK_FALSE(f.part_two);

    // Part two: c2 sqrt(n / (a log a)) with a = alpha / log n.
    double n = 1e6, alpha = 28, a = alpha / std::log(n);
    auto g = f_bound_dispatch(Real(n), Real(alpha), params);
    CHECK(g.regime == Regime::part_two);
    CHECK(g.value == doctest::Approx(1e-114 * std::sqrt(n / (a * std::log(a)))).epsilon(1e-12));
    REQUIRE(g.part_one);
    CHECK(*g.part_one == doctest::Approx(1e-114 * std::pow(n, alpha / (2 * alpha - 1))).epsilon(1e-12));

    CHECK(f_bound_dispatch(Real(1), Real(1), params).regime == Regime::trivial);
    CHECK_THROWS_AS(f_bound_dispatch(Real(10), Real(11), params), DomainError);
    CHECK_THROWS_AS(f_bound_dispatch(Real(10), Real(0), params), DomainError);
}

TEST_CASE("induction step: constants and the trivial branch at n = e^100")
{
    auto params = PipelineParams::paper();
    Real n = boost::multiprecision::exp(Real(100));
    auto t = check_theorem1_step(n, Real(1000), params);
    CHECK(t.branch == "trivially true");
    CHECK(t.ok);
    std::size_t constants = 0;
    for (const auto & c : t.checks)
        if (c.name.rfind("C >= ", 0) == 0) {
            ++constants;
            CHECK(c.holds);
            CHECK(c.required);
        }
    CHECK(constants == 3);
    // Below C every inequality is recorded but only the constants are binding.
    for (const auto & c : t.checks)
        if (c.name.rfind("C >= ", 0) != 0)
            CHECK_FALSE(c.required);
}

TEST_CASE("induction step: the full chain at n = e^300")
{
    auto params = PipelineParams::paper();
    Real n = boost::multiprecision::exp(Real(300));
    for (const char * k : {"1e121", "1e125", "1e130"}) {
        auto t = check_theorem1_step(n, Real(k), params);
        CHECK(t.branch == "checked");
        for (const auto & c : t.checks)
            CHECK_MESSAGE(c.holds, c.name);
        CHECK(t.ok);
        CHECK(t.checks.size() > 10);
    }
}

TEST_CASE("induction step flags a constant that is too small")
{
    auto params = PipelineParams::paper();
    params.C_main = pow10(100);
    auto t = check_theorem1_step(boost::multiprecision::exp(Real(300)), Real("1e110"), params);
    CHECK_FALSE(t.ok);
    CHECK_THROWS_AS(check_theorem1_step(Real(1), Real(5), params), DomainError);
}
