#include <cliquesub/cli.hpp>
#include <cliquesub/errors.hpp>
#include <cliquesub/experiments.hpp>
#include <cliquesub/graph_io.hpp>
#include <cliquesub/pipeline.hpp>
#include <cliquesub/subdivision.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cliquesub {

namespace {

    using json = nlohmann::ordered_json;

    /// Accepts plain decimals ("1e6", "250") and powers written "b^x" with b a number or "e".
    Real parse_magnitude(const std::string & text)
    {
        try {
            auto caret = text.find('^');
            if (caret == std::string::npos)
                return Real(text);
            std::string base = text.substr(0, caret);
            Real x(text.substr(caret + 1));
            if (base == "e")
                return boost::multiprecision::exp(x);
            return boost::multiprecision::pow(Real(base), x);
        }
        catch (const std::runtime_error &) {
            throw InputError("not a number: \"" + text + "\"");
        }
    }

    std::string show(const Real & x)
    {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    }

    json set_result(const SetSearchResult & r)
    {
        return {{"value", r.value}, {"tag", to_string(r.tag)}, {"upper_bound", r.upper_bound}, {"nodes", r.nodes}, {"witness", r.witness}};
    }

    /// Writes to `path`, or to `out` when the path is empty or "-".
    template <typename F>
    void emit_to(const std::string & path, std::ostream & out, F && write)
    {
        if (path.empty() || path == "-") {
            write(out);
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (! file)
            throw InputError("cannot open " + path + " for writing");
        write(file);
    }

    json read_json_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot open " + path);
        try {
            return json::parse(in);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(path + ": " + e.what(), 1, e.byte);
        }
    }

    std::vector<std::size_t> parse_list(const std::string & text)
    {
        std::vector<std::size_t> out;
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ',');) {
            std::size_t used = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(item, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != item.size())
                throw InputError("--n expects a comma-separated list of sizes, got \"" + text + "\"");
            out.push_back(static_cast<std::size_t>(v));
        }
        if (out.empty())
            throw InputError("--n is empty");
        return out;
    }

} // namespace

int cli_main(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Clique subdivisions in graphs with small independence number", "cliquesub"};
    app.require_subcommand(1);

    // gen
    std::size_t gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto * gen = app.add_subcommand("gen", "Write a G(n, p) sample");
    gen->add_option("--n", gen_n, "Number of vertices")->required();
    gen->add_option("--p", gen_p, "Edge probability")->required();
    gen->add_option("--seed", gen_seed, "64-bit seed");
    gen->add_option("--out", gen_out, "Output path (.g6 for graph6, else edge list; default stdout)");

    // stats
    std::string graph_path;
    std::uint64_t budget = default_budget_nodes;
    auto * stats = app.add_subcommand("stats", "Oracle bounds for a graph file");
    stats->add_option("--graph", graph_path, "Graph file")->required();
    stats->add_option("--budget-nodes", budget, "Search node budget per oracle");

    // pipeline
    std::string mode = "practical";
    std::string method = "auto";
    std::uint64_t pipe_seed = 1;
    std::string pipe_out;
    std::optional<std::size_t> pipe_alpha;
    auto * pipeline = app.add_subcommand("pipeline", "Run a lower-bound pipeline and emit its report");
    pipeline->add_option("--graph", graph_path, "Graph file")->required();
    pipeline->add_option("--mode", mode, "paper or practical")->check(CLI::IsMember({"paper", "practical"}));
    pipeline->add_option("--method", method, "dense, sparse, auto or cited")
        ->check(CLI::IsMember({"dense", "sparse", "auto", "cited"}));
    pipeline->add_option("--seed", pipe_seed, "Partition seed");
    pipeline->add_option("--budget-nodes", budget, "Independence-number search budget");
    pipeline->add_option("--alpha", pipe_alpha, "Use this independence number for the dense method");
    pipeline->add_option("--out", pipe_out, "Report path (default stdout)");

    // verify
    std::string cert_path;
    bool four = false;
    auto * verify = app.add_subcommand("verify", "Check a subdivision certificate against a graph");
    verify->add_option("--graph", graph_path, "Graph file")->required();
    verify->add_option("--cert", cert_path, "Certificate JSON, either bare or inside a pipeline report")->required();
    verify->add_flag("--length-four", four, "Require every path to have exactly three interior vertices");

    // sweep
    std::string sweep_ns;
    double sweep_p = 0.8646647167633873;
    std::size_t seeds = 1;
    std::uint64_t sweep_seed = 1;
    std::string format = "csv";
    std::string sweep_out;
    unsigned threads = 0;
    std::size_t exact_limit = 12;
    auto * sweep = app.add_subcommand("sweep", "Ratio sweep over G(n, p)");
    sweep->add_option("--n", sweep_ns, "Comma-separated sizes")->required();
    sweep->add_option("--p", sweep_p, "Edge probability (default 1 - e^-2)");
    sweep->add_option("--seeds", seeds, "Seeds per size");
    sweep->add_option("--seed", sweep_seed, "First seed");
    sweep->add_option("--budget-nodes", budget, "Budget for the clique and independence searches");
    sweep->add_option("--mode", mode, "paper or practical")->check(CLI::IsMember({"paper", "practical"}));
    sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sweep_out, "Output path (default stdout)");
    sweep->add_option("--threads", threads, "Worker threads (0: all cores)");
    sweep->add_option("--exact-limit", exact_limit, "Run the exact subdivision search up to this n");

    // bounds
    std::string bound_n;
    std::string bound_alpha;
    std::string bound_k;
    auto * bounds = app.add_subcommand("bounds", "Evaluate the f(n, alpha) bound and replay the ratio induction step");
    bounds->add_option("--n", bound_n, "n, e.g. 1e6 or e^300")->required();
    bounds->add_option("--alpha", bound_alpha, "Independence number bound");
    bounds->add_option("--k", bound_k, "Replay the induction step at this k");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*gen) {
            Graph g = gen_gnp(gen_n, gen_p, gen_seed);
            if (gen_out.empty() || gen_out == "-")
                write_graph(out, g, GraphFormat::edge_list);
            else
                write_graph_file(gen_out, g, format_for_path(gen_out));
            return 0;
        }

        if (*stats) {
            Graph g = read_graph_file(graph_path);
            GraphStats s = compute_stats(g, budget);
            json doc;
            doc["n"] = s.n;
            doc["m"] = s.m;
            doc["density"] = s.density;
            doc["alpha"] = s.alpha ? set_result(*s.alpha) : json(nullptr);
            doc["omega"] = s.omega ? set_result(*s.omega) : json(nullptr);
            doc["chi_lower"] = s.chi_lower;
            doc["chi_lower_tag"] = to_string(s.chi_lower_tag);
            doc["chi_upper"] = s.chi_upper;
            doc["chi_upper_tag"] = to_string(s.chi_upper_tag);
            if (s.omega && s.omega->tag == Certainty::exact) {
                auto cert = sigma_upper_cert(g, s.omega->value, s.omega->tag);
                doc["sigma_upper_t"] = cert ? json(cert->t) : json(nullptr);
            }
            out << doc.dump(2) << '\n';
            return 0;
        }

        if (*pipeline) {
            Graph g = read_graph_file(graph_path);
            PipelineParams params = mode == "paper" ? PipelineParams::paper() : PipelineParams::practical();
            params.seed = pipe_seed;
            params.alpha_budget = budget;
            BoundReport report;
            if (method == "auto")
                report = sigma_lower_auto(g, params);
            else if (method == "sparse")
                report = sigma_lower_sparse(g, params);
            else if (method == "cited")
                report = sigma_lower_density_cited(g);
            else {
                std::size_t alpha = 0;
                Certainty tag = Certainty::exact;
                if (pipe_alpha)
                    alpha = *pipe_alpha;
                else {
                    auto a = alpha_exact(g, budget);
                    alpha = a.tag == Certainty::exact ? a.value : a.upper_bound;
                    tag = a.tag;
                }
                report = sigma_lower_dense(g, alpha, params, tag);
            }
            if (report.certificate) {
                auto check = verify_subdivision(g, *report.certificate);
                if (! check)
                    throw InternalError("pipeline emitted an invalid certificate: " + check.clause);
            }
            emit_to(pipe_out, out, [&](std::ostream & os) { os << report_to_json(report).dump(2) << '\n'; });
            return 0;
        }

        if (*verify) {
            Graph g = read_graph_file(graph_path);
            json doc = read_json_file(cert_path);
            if (doc.is_object() && doc.contains("certificate") && ! doc.contains("branch")) {
                if (doc["certificate"].is_null()) {
                    err << "FAIL: report carries no certificate\n";
                    return 1;
                }
                doc = doc["certificate"];
            }
            SubdivisionCertificate cert = certificate_from_json(nlohmann::json::parse(doc.dump()));
            auto report = verify_subdivision(g, cert, four ? PathShape::length_four : PathShape::any);
            if (! report) {
                out << "FAIL: " << report.clause;
                if (! report.detail.empty())
                    out << ": " << report.detail;
                out << '\n';
                return 1;
            }
            out << "OK: subdivision of K_" << cert.order() << '\n';
            return 0;
        }

        if (*sweep) {
            SweepOptions options;
            options.ns = parse_list(sweep_ns);
            options.p = sweep_p;
            options.seeds_per_n = seeds;
            options.first_seed = sweep_seed;
            options.alpha_budget = budget;
            options.omega_budget = budget;
            options.threads = threads;
            options.exact_sigma_limit = exact_limit;
            options.params = mode == "paper" ? PipelineParams::paper() : PipelineParams::practical();
            auto records = run_ratio_sweep(options);
            auto fmt = format == "json" ? ReportFormat::json : ReportFormat::csv;
            emit_to(sweep_out, out, [&](std::ostream & os) { emit_report(records, fmt, os); });
            return 0;
        }

        if (*bounds) {
            if (bound_alpha.empty() && bound_k.empty())
                throw InputError("bounds needs --alpha, --k or both");
            PipelineParams params = PipelineParams::paper();
            Real n = parse_magnitude(bound_n);
            json doc;
            doc["n"] = show(n);
            if (! bound_alpha.empty()) {
                Real alpha = parse_magnitude(bound_alpha);
                FBound f = f_bound_dispatch(n, alpha, params);
                doc["alpha"] = show(alpha);
                doc["regime"] = to_string(f.regime);
                doc["value"] = f.value;
                doc["part_one"] = f.part_one ? json(*f.part_one) : json(nullptr);
                doc["part_two"] = f.part_two ? json(*f.part_two) : json(nullptr);
                doc["a"] = f.a;
            }
            if (! bound_k.empty()) {
                auto t = check_theorem1_step(n, parse_magnitude(bound_k), params);
                json step;
                step["branch"] = t.branch;
                step["ok"] = t.ok;
                auto checks = json::array();
                for (const auto & c : t.checks)
                    checks.push_back({{"name", c.name}, {"lhs", show(c.lhs)}, {"rhs", show(c.rhs)}, {"holds", c.holds}, {"required", c.required}});
                step["checks"] = std::move(checks);
                doc["induction"] = std::move(step);
                if (! t.ok) {
                    out << doc.dump(2) << '\n';
                    return 1;
                }
            }
            out << doc.dump(2) << '\n';
            return 0;
        }
    }
    catch (const PreconditionError & e) {
        err << "refused: " << e.what() << '\n';
        return 2;
    }
    catch (const InputError & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const ContractError & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const PartitionError & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace cliquesub
