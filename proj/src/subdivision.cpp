#include <cliquesub/errors.hpp>
#include <cliquesub/paths4.hpp>
#include <cliquesub/subdivision.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <string>

namespace cliquesub {


BuildResult build_subdivision(const Graph & g, const VertexSet & s_set, const VertexSet & pool)
{
    s_set.check_range(g.order());
    pool.check_range(g.order());
    if (! disjoint(s_set, pool))
        throw InputError("interior pool overlaps the branch set");

    Bitset avail = pool.to_bitset(g.order());
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < s_set.size(); ++i)
        for (std::size_t j = i + 1; j < s_set.size(); ++j)
            if (! g.adjacent(s_set[i], s_set[j]))
                pairs.emplace_back(s_set[i], s_set[j]);

    BuildResult out;
    SubdivisionCertificate cert{s_set, {}};
    for (auto [u, v] : pairs) {
        auto path = first_path4(g, u, v, avail);
        if (! path) {
            out.failure = BuildFailure{{u, v}, cert.paths.size(), pairs.size()};
            return out;
        }
        for (auto x : *path)
            avail.reset(x);
        cert.paths.push_back({u, v, {(*path)[0], (*path)[1], (*path)[2]}});
    }
    out.certificate = std::move(cert);
    return out;
}

namespace {

    VerifyReport fail(std::string clause, std::string detail) { return {false, std::move(clause), std::move(detail)}; }

    std::string pair_name(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

} // namespace

VerifyReport verify_subdivision(const Graph & g, const SubdivisionCertificate & cert, PathShape shape)
{
    std::size_t n = g.order();
    for (auto s : cert.branch)
        if (s >= n)
            return fail("branch vertex out of range", std::to_string(s));

    std::map<Edge, const RoutedPath *> routed;
    for (const auto & p : cert.paths) {
        Vertex u = std::min(p.u, p.v), v = std::max(p.u, p.v);
        if (u == v || ! cert.branch.contains(u) || ! cert.branch.contains(v))
            return fail("unexpected path", "endpoints " + pair_name(p.u, p.v) + " are not two distinct branch vertices");
        if (g.adjacent(u, v))
            return fail("unexpected path", "pair " + pair_name(u, v) + " is adjacent and uses its edge");
        if (! routed.emplace(Edge{u, v}, &p).second)
            return fail("unexpected path", "pair " + pair_name(u, v) + " has more than one path");
    }
    for (std::size_t i = 0; i < cert.branch.size(); ++i)
        for (std::size_t j = i + 1; j < cert.branch.size(); ++j) {
            Vertex u = cert.branch[i], v = cert.branch[j];
            if (! g.adjacent(u, v) && ! routed.count({u, v}))
                return fail("missing path", "nonadjacent pair " + pair_name(u, v) + " has no path");
        }

    std::vector<char> used(n, 0);
    for (const auto & p : cert.paths) {
        if (p.via.empty())
            return fail("empty interior", "pair " + pair_name(p.u, p.v));
        if (shape == PathShape::length_four && p.via.size() != 3)
            return fail("path length", "pair " + pair_name(p.u, p.v) + " has " + std::to_string(p.via.size() + 1) +
                                           " edges, expected 4");
        for (auto x : p.via) {
            if (x >= n)
                return fail("interior vertex out of range", std::to_string(x));
            if (cert.branch.contains(x))
                return fail("interior hits branch vertex", "vertex " + std::to_string(x) + " on path " + pair_name(p.u, p.v));
            if (used[x])
                return fail("interior overlap", "vertex " + std::to_string(x) + " reused on path " + pair_name(p.u, p.v));
            used[x] = 1;
        }
        Vertex prev = p.u;
        for (std::size_t k = 0; k <= p.via.size(); ++k) {
            Vertex next = k < p.via.size() ? p.via[k] : p.v;
            if (! g.adjacent(prev, next))
                return fail("non-edge on path", pair_name(prev, next) + " on path " + pair_name(p.u, p.v));
            prev = next;
        }
    }
    return {};
}

std::size_t sigma_lower_from_cert(const Graph & g, const SubdivisionCertificate & cert)
{
    auto report = verify_subdivision(g, cert);
    if (! report)
        throw ContractError("certificate does not verify: " + report.clause + " (" + report.detail + ")");
    return cert.order();
}

nlohmann::ordered_json certificate_to_json(const SubdivisionCertificate & cert)
{
    nlohmann::ordered_json doc;
    doc["order"] = cert.order();
    doc["branch"] = cert.branch.members();
    auto paths = nlohmann::ordered_json::array();
    for (const auto & p : cert.paths) {
        nlohmann::ordered_json entry;
        entry["pair"] = {p.u, p.v};
        entry["via"] = p.via;
        paths.push_back(std::move(entry));
    }
    doc["paths"] = std::move(paths);
    return doc;
}

SubdivisionCertificate certificate_from_json(const nlohmann::json & doc)
{
    auto bad = [](const std::string & what) { return ParseError("certificate: " + what, 1, 0); };
    if (! doc.is_object() || ! doc.contains("branch") || ! doc.contains("paths"))
        throw bad("expected an object with \"branch\" and \"paths\"");
    SubdivisionCertificate cert;
    try {
        auto branch = doc.at("branch").get<std::vector<Vertex>>();
        cert.branch = VertexSet(branch);
        if (cert.branch.size() != branch.size())
            throw bad("duplicate branch vertex");
        if (doc.contains("order") && doc.at("order").get<std::size_t>() != cert.branch.size())
            throw bad("\"order\" does not match the branch set size");
        for (const auto & entry : doc.at("paths")) {
            auto pair = entry.at("pair").get<std::vector<Vertex>>();
            if (pair.size() != 2)
                throw bad("\"pair\" must have two vertices");
            cert.paths.push_back({pair[0], pair[1], entry.at("via").get<std::vector<Vertex>>()});
        }
    }
    catch (const nlohmann::json::exception & e) {
        throw bad(e.what());
    }
    return cert;
}

} // namespace cliquesub
