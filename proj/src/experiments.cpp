#include <cliquesub/errors.hpp>
#include <cliquesub/experiments.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace cliquesub {

ExperimentRecord run_cell(std::size_t n, double p, std::uint64_t seed, const SweepOptions & options)
{
    Graph g = gen_gnp(n, p, seed);
    ExperimentRecord r;
    r.n = n;
    r.p = p;
    r.seed = seed;
    r.reference = n >= 2 ? std::sqrt(static_cast<double>(n)) / std::log(static_cast<double>(n)) : 0.0;

    auto alpha = alpha_exact(g, options.alpha_budget);
    r.alpha = alpha.value;
    r.alpha_tag = alpha.tag;
    std::size_t alpha_cap = alpha.tag == Certainty::exact ? alpha.value : alpha.upper_bound;
    r.chi_lower = alpha_cap == 0 ? 0 : (n + alpha_cap - 1) / alpha_cap;
    r.chi_lower_tag = alpha.tag == Certainty::exact ? Certainty::exact : Certainty::heuristic;
    r.chi_upper = dsatur_upper(g).colours;

    auto omega = omega_exact(g, options.omega_budget);
    r.omega = omega.value;
    r.omega_tag = omega.tag;
    if (omega.tag == Certainty::exact)
        if (auto cert = sigma_upper_cert(g, omega.value, omega.tag))
            r.sigma_upper_t = cert->t;

    // A clique is its own subdivision, so the omega witness is a certified lower bound.
    r.sigma_lower = omega.value;
    r.sigma_source = n == 0 ? "trivial" : "clique";
    PipelineParams params = options.params;
    params.alpha_budget = options.alpha_budget;
    params.seed = seed;
    try {
        auto report = sigma_lower_auto(g, params);
        if (report.certificate && report.certificate->order() > r.sigma_lower) {
            r.sigma_lower = report.certificate->order();
            r.sigma_source = "pipeline";
        }
    }
    catch (const PreconditionError &) {
        // The dispatch only takes branches whose hypotheses hold; keep the clique bound.
    }
    if (n <= options.exact_sigma_limit) {
        auto exact = sigma_exact_value(g, options.sigma_budget);
        if (exact.sigma > r.sigma_lower) {
            r.sigma_lower = exact.sigma;
            r.sigma_source = "exact";
        }
    }
    if (r.sigma_upper_t && r.sigma_lower >= *r.sigma_upper_t)
        throw InternalError("certified sigma lower bound meets the counting certificate");

    r.ratio_point = r.sigma_lower ? static_cast<double>(r.chi_upper) / static_cast<double>(r.sigma_lower) : 0.0;
    if (r.chi_lower_tag == Certainty::exact && r.sigma_upper_t)
        r.ratio_lower = static_cast<double>(r.chi_lower) / static_cast<double>(*r.sigma_upper_t);
    return r;
}

std::vector<ExperimentRecord> run_ratio_sweep(const SweepOptions & options)
{
    if (options.ns.empty())
        throw InputError("sweep needs at least one n");
    if (! (options.p >= 0.0 && options.p <= 1.0))
        throw InputError("p must lie in [0, 1]");
    std::vector<std::pair<std::size_t, std::uint64_t>> cells;
    for (auto n : options.ns)
        for (std::size_t j = 0; j < options.seeds_per_n; ++j)
            cells.emplace_back(n, options.first_seed + j);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    std::vector<ExperimentRecord> out(cells.size());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            try {
                out[i] = run_cell(cells[i].first, options.p, cells[i].second, options);
            }
            catch (...) {
                std::lock_guard lock(failure_lock);
                if (! failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

namespace {

    const char * const columns[] = {"n",           "p",           "seed",      "chi_upper", "chi_lower", "chi_lower_tag",
                                    "sigma_lower", "sigma_upper_t", "ratio_lower", "ratio_point", "reference", "alpha",
                                    "alpha_tag",   "omega",       "omega_tag", "sigma_source"};

    std::string shortest(double x)
    {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, res.ptr);
    }

    Certainty parse_certainty(const std::string & s)
    {
        for (auto c : {Certainty::exact, Certainty::heuristic, Certainty::exceeded})
            if (to_string(c) == s)
                return c;
        throw ParseError("unknown tag \"" + s + "\"", 1, 0);
    }

} // namespace

nlohmann::ordered_json record_to_json(const ExperimentRecord & r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["seed"] = r.seed;
    j["chi_upper"] = r.chi_upper;
    j["chi_lower"] = r.chi_lower;
    j["chi_lower_tag"] = to_string(r.chi_lower_tag);
    j["sigma_lower"] = r.sigma_lower;
    j["sigma_upper_t"] = r.sigma_upper_t ? nlohmann::ordered_json(*r.sigma_upper_t) : nlohmann::ordered_json(nullptr);
    j["ratio_lower"] = r.ratio_lower ? nlohmann::ordered_json(*r.ratio_lower) : nlohmann::ordered_json(nullptr);
    j["ratio_point"] = r.ratio_point;
    j["reference"] = r.reference;
    j["alpha"] = r.alpha;
    j["alpha_tag"] = to_string(r.alpha_tag);
    j["omega"] = r.omega;
    j["omega_tag"] = to_string(r.omega_tag);
    j["sigma_source"] = r.sigma_source;
    return j;
}

void emit_report(const std::vector<ExperimentRecord> & records, ReportFormat format, std::ostream & out)
{
    if (format == ReportFormat::json) {
        auto doc = nlohmann::ordered_json::array();
        for (const auto & r : records)
            doc.push_back(record_to_json(r));
        out << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < std::size(columns); ++i)
        out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto & r : records) {
        out << r.n << ',' << shortest(r.p) << ',' << r.seed << ',' << r.chi_upper << ',' << r.chi_lower << ','
            << to_string(r.chi_lower_tag) << ',' << r.sigma_lower << ',' << (r.sigma_upper_t ? std::to_string(*r.sigma_upper_t) : "")
            << ',' << (r.ratio_lower ? shortest(*r.ratio_lower) : "") << ',' << shortest(r.ratio_point) << ','
            << shortest(r.reference) << ',' << r.alpha << ',' << to_string(r.alpha_tag) << ',' << r.omega << ','
            << to_string(r.omega_tag) << ',' << r.sigma_source << '\n';
    }
}

std::vector<ExperimentRecord> parse_report_json(const nlohmann::json & doc)
{
    if (! doc.is_array())
        throw ParseError("report must be a JSON array", 1, 0);
    std::vector<ExperimentRecord> out;
    try {
        for (const auto & j : doc) {
            ExperimentRecord r;
            r.n = j.at("n").get<std::size_t>();
            r.p = j.at("p").get<double>();
            r.seed = j.at("seed").get<std::uint64_t>();
            r.chi_upper = j.at("chi_upper").get<std::size_t>();
            r.chi_lower = j.at("chi_lower").get<std::size_t>();
            r.chi_lower_tag = parse_certainty(j.at("chi_lower_tag").get<std::string>());
            r.sigma_lower = j.at("sigma_lower").get<std::size_t>();
            if (! j.at("sigma_upper_t").is_null())
                r.sigma_upper_t = j.at("sigma_upper_t").get<std::size_t>();
            if (! j.at("ratio_lower").is_null())
                r.ratio_lower = j.at("ratio_lower").get<double>();
            r.ratio_point = j.at("ratio_point").get<double>();
            r.reference = j.at("reference").get<double>();
            r.alpha = j.at("alpha").get<std::size_t>();
            r.alpha_tag = parse_certainty(j.at("alpha_tag").get<std::string>());
            r.omega = j.at("omega").get<std::size_t>();
            r.omega_tag = parse_certainty(j.at("omega_tag").get<std::string>());
            r.sigma_source = j.at("sigma_source").get<std::string>();
            out.push_back(std::move(r));
        }
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError(std::string("report: ") + e.what(), 1, 0);
    }
    return out;
}

} // namespace cliquesub
