#pragma once

#include <cliquesub/certificate.hpp>
#include <cliquesub/graph.hpp>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace cliquesub {

/// Names the first routing failure of build_subdivision.
struct BuildFailure {
    Edge pair;                 // first unroutable nonadjacent pair
    std::size_t paths_placed;  // paths routed before it
    std::size_t missing_pairs; // total nonadjacent branch pairs
};

struct BuildResult {
    std::optional<SubdivisionCertificate> certificate;
    std::optional<BuildFailure> failure;

    bool ok() const noexcept { return certificate.has_value(); }
};

/// Greedy router: nonadjacent pairs of s_set in lexicographic order, each gets the
/// lexicographically smallest length-4 path u-a-b-c-v with a, b, c in `pool` and unused.
/// Throws InputError if pool meets s_set or a vertex is out of range.
BuildResult build_subdivision(const Graph & g, const VertexSet & s_set, const VertexSet & pool);

enum class PathShape {
    any,         // any positive interior length
    length_four, // exactly three interior vertices, as the greedy router emits
};

struct VerifyReport {
    bool ok = true;
    std::string clause; // empty on success
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks every certificate clause against g. A pass proves sigma(g) >= cert.order().
VerifyReport verify_subdivision(const Graph & g, const SubdivisionCertificate & cert,
                                PathShape shape = PathShape::any);

/// cert.order(), after verification; throws ContractError if the certificate does not verify.
std::size_t sigma_lower_from_cert(const Graph & g, const SubdivisionCertificate & cert);

/// {"order": s, "branch": [...], "paths": [{"pair": [u,v], "via": [a,b,c]}, ...]}
nlohmann::ordered_json certificate_to_json(const SubdivisionCertificate & cert);
/// Throws ParseError on malformed documents.
SubdivisionCertificate certificate_from_json(const nlohmann::json & doc);

} // namespace cliquesub
