#include <cliquesub/cli.hpp>
#include <cliquesub/graph_io.hpp>
#include <cliquesub/subdivision.hpp>

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cliquesub;
namespace fs = std::filesystem;

namespace {

    struct Run {
        int status;
        std::string out;
        std::string err;
    };

    Run run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int status = cli_main(args, out, err);
        return {status, out.str(), err.str()};
    }

    fs::path scratch(const std::string & name)
    {
        fs::path dir = fs::temp_directory_path() / "cliquesub_cli_test";
        fs::create_directories(dir);
        return dir / name;
    }

    void write_text(const fs::path & p, const std::string & text)
    {
        std::ofstream f(p, std::ios::binary);
        f << text;
    }

} // namespace

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).status == 2);
    auto r = run({"stats", "--bogus"});
    CHECK(r.status == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"sweep", "--n", "10", "--format", "xml"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("gen, stats and pipeline")
{
    auto g6 = scratch("petersen.g6");
    write_text(g6, format_graph6(Graph::petersen()) + "\n");
    auto s = run({"stats", "--graph", g6.string()});
    REQUIRE(s.status == 0);
    auto doc = nlohmann::json::parse(s.out);
    CHECK(doc["n"] == 10);
    CHECK(doc["alpha"]["value"] == 4);
    CHECK(doc["omega"]["value"] == 2);

    auto out = scratch("gnp.txt");
    CHECK(run({"gen", "--n", "40", "--p", "0.5", "--seed", "3", "--out", out.string()}).status == 0);
    CHECK(read_graph_file(out) == gen_gnp(40, 0.5, 3));

    auto rep = run({"pipeline", "--graph", out.string(), "--method", "auto"});
    REQUIRE(rep.status == 0);
    CHECK(nlohmann::json::parse(rep.out).contains("provenance"));

    auto refused = run({"pipeline", "--graph", out.string(), "--method", "dense"});
    CHECK(refused.status == 2);
    CHECK(refused.err.find("d²n ≥ 1600") != std::string::npos);
    CHECK(run({"pipeline", "--graph", out.string(), "--mode", "paper", "--method", "sparse"}).status == 2);
    CHECK(run({"stats", "--graph", scratch("missing.g6").string()}).status == 2);
}

TEST_CASE("verify accepts builder output and rejects tampering")
{
    Graph g = gen_gnp(60, 0.7, 2);
    auto graph = scratch("g60.g6");
    write_text(graph, format_graph6(g));
    VertexSet s{0, 1, 2, 3, 4, 5, 6, 7};
    auto built = build_subdivision(g, s, set_difference(VertexSet::range(60), s));
    REQUIRE(built.ok());
    REQUIRE(built.certificate->paths.size() >= 2);

    auto good = scratch("good.json");
    write_text(good, certificate_to_json(*built.certificate).dump());
    auto ok = run({"verify", "--graph", graph.string(), "--cert", good.string()});
    CHECK(ok.status == 0);
    CHECK(ok.out == "OK: subdivision of K_8\n");

    auto tampered = *built.certificate;
    tampered.paths.pop_back();
    auto bad = scratch("bad.json");
    write_text(bad, certificate_to_json(tampered).dump());
    auto fail = run({"verify", "--graph", graph.string(), "--cert", bad.string()});
    CHECK(fail.status == 1);
    CHECK(fail.out.rfind("FAIL: missing path", 0) == 0);

    write_text(bad, "{not json");
    CHECK(run({"verify", "--graph", graph.string(), "--cert", bad.string()}).status == 2);
}

TEST_CASE("sweep output is byte-identical across runs")
{
    std::vector<std::string> args{"sweep", "--n", "12,30", "--seeds", "2", "--p", "0.8"};
    auto a = run(args), b = run(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("n,p,seed,chi_upper", 0) == 0);
    auto js = run({"sweep", "--n", "12", "--format", "json"});
    CHECK(nlohmann::json::parse(js.out).size() == 1);
    CHECK(run({"sweep", "--n", "12,x"}).status == 2);
}

TEST_CASE("bounds calculator")
{
    auto r = run({"bounds", "--n", "1e6", "--alpha", "10"});
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["regime"] == "part-one");
    CHECK(doc["value"].get<double>() == doctest::Approx(1.438449888287663e-111).epsilon(1e-12));

    auto k = run({"bounds", "--n", "e^300", "--k", "1e121"});
    REQUIRE(k.status == 0);
    CHECK(nlohmann::json::parse(k.out)["induction"]["branch"] == "checked");
    CHECK(run({"bounds", "--n", "1e6"}).status == 2);
    CHECK(run({"bounds", "--n", "lots", "--alpha", "3"}).status == 2);
}

#ifdef CLIQUESUB_CLI
TEST_CASE("the installed binary maps exit codes")
{
    std::string bin = CLIQUESUB_CLI;
    auto quiet = " >" + scratch("stdout.txt").string() + " 2>&1";
    CHECK(WEXITSTATUS(std::system((bin + " bounds --n 1e6 --alpha 10" + quiet).c_str())) == 0);
    CHECK(WEXITSTATUS(std::system((bin + " --nope" + quiet).c_str())) == 2);
}
#endif
