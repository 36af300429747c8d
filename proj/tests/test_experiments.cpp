#include "support.hpp"

#include <cliquesub/errors.hpp>
#include <cliquesub/experiments.hpp>

#include <doctest.h>

#include <sstream>

using namespace cliquesub;

namespace {

    SweepOptions small_sweep(std::vector<std::size_t> ns, double p, std::size_t seeds)
    {
        SweepOptions o;
        o.ns = std::move(ns);
        o.p = p;
        o.seeds_per_n = seeds;
        o.threads = 2;
        return o;
    }

    const std::string header = "n,p,seed,chi_upper,chi_lower,chi_lower_tag,sigma_lower,sigma_upper_t,ratio_lower,"
                               "ratio_point,reference,alpha,alpha_tag,omega,omega_tag,sigma_source";

} // namespace

TEST_CASE("a complete graph sweep")
{
    auto records = run_ratio_sweep(small_sweep({50}, 1.0, 1));
    REQUIRE(records.size() == 1);
    const auto & r = records[0];
    CHECK(r.chi_lower == 50);
    CHECK(r.chi_upper == 50);
    CHECK(r.sigma_lower == 50);
    CHECK(r.ratio_point == 1.0);
    CHECK_FALSE(r.sigma_upper_t);
    CHECK_FALSE(r.ratio_lower);

    std::ostringstream csv;
    emit_report(records, ReportFormat::csv, csv);
    std::string text = csv.str();
    CHECK(text.substr(0, text.find('\n')) == header);
    CHECK(text.find("\n50,1,1,50,50,exact,50,,,1,") != std::string::npos);
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("records respect their invariants and sort by (n, seed)")
{
    auto records = run_ratio_sweep(small_sweep({30, 10, 20}, 0.8646647167633873, 3));
    REQUIRE(records.size() == 9);
    for (std::size_t i = 1; i < records.size(); ++i)
        CHECK(std::pair(records[i - 1].n, records[i - 1].seed) < std::pair(records[i].n, records[i].seed));
    for (const auto & r : records) {
        CHECK(r.chi_lower <= r.chi_upper);
        if (r.sigma_upper_t)
            CHECK(r.sigma_lower < *r.sigma_upper_t);
        CHECK(r.reference == doctest::Approx(std::sqrt(double(r.n)) / std::log(double(r.n))));
        if (r.n <= 12) {
            Graph g = gen_gnp(r.n, r.p, r.seed);
            CHECK(r.sigma_lower == ref::sigma(g));
            CHECK(r.alpha == ref::alpha(g));
        }
    }
}

TEST_CASE("small cells are checked against enumeration")
{
    SweepOptions o = small_sweep({9}, 0.6, 8);
    for (const auto & r : run_ratio_sweep(o)) {
        Graph g = gen_gnp(9, 0.6, r.seed);
        CHECK(r.sigma_lower == ref::sigma(g));
        if (r.sigma_source == "clique")
            CHECK(r.sigma_lower == r.omega);
        else
            CHECK((r.sigma_source == "exact" || r.sigma_source == "pipeline"));
        CHECK(r.omega == ref::omega(g));
        CHECK(r.chi_lower == (9 + ref::alpha(g) - 1) / ref::alpha(g));
        CHECK(r.chi_upper >= ref::chi(g));
        if (r.sigma_upper_t)
            CHECK(*r.sigma_upper_t > ref::sigma(g));
    }
}

TEST_CASE("sweeps are deterministic regardless of threads")
{
    auto a = small_sweep({40, 25}, 0.7, 3);
    auto b = a;
    b.threads = 1;
    std::ostringstream x, y;
    emit_report(run_ratio_sweep(a), ReportFormat::csv, x);
    emit_report(run_ratio_sweep(b), ReportFormat::csv, y);
    CHECK(x.str() == y.str());
}

TEST_CASE("exhausted budgets degrade tags without aborting")
{
    auto o = small_sweep({120}, 0.5, 1);
    o.alpha_budget = 3;
    o.omega_budget = 3;
    auto records = run_ratio_sweep(o);
    REQUIRE(records.size() == 1);
    CHECK(records[0].alpha_tag == Certainty::heuristic);
    CHECK(records[0].chi_lower_tag == Certainty::heuristic);
    CHECK(records[0].omega_tag == Certainty::heuristic);
    CHECK_FALSE(records[0].sigma_upper_t);
    CHECK_FALSE(records[0].ratio_lower);
}

TEST_CASE("empty emissions")
{
    std::ostringstream csv, js;
    emit_report({}, ReportFormat::csv, csv);
    emit_report({}, ReportFormat::json, js);
    CHECK(csv.str() == header + "\n");
    CHECK(js.str() == "[]\n");
}

TEST_CASE("JSON round-trip is field-for-field")
{
    auto records = run_ratio_sweep(small_sweep({12, 18}, 0.8646647167633873, 2));
    std::ostringstream js;
    emit_report(records, ReportFormat::json, js);
    auto back = parse_report_json(nlohmann::json::parse(js.str()));
    CHECK(back == records);
    CHECK_THROWS_AS(parse_report_json(nlohmann::json::parse("{}")), ParseError);
    CHECK_THROWS_AS(parse_report_json(nlohmann::json::parse(R"([{"n": 3}])")), ParseError);
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS(run_ratio_sweep(small_sweep({}, 0.5, 1)), InputError);
    CHECK_THROWS_AS(run_ratio_sweep(small_sweep({10}, 1.5, 1)), InputError);
}
