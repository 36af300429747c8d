#pragma once

#include <cliquesub/graph.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cliquesub {

/// A path joining two branch vertices; `via` lists its interior vertices in order from u to v.
struct RoutedPath {
    Vertex u;
    Vertex v;
    std::vector<Vertex> via;

    bool operator==(const RoutedPath &) const = default;
};

/// Witness that the host graph contains a subdivision of K_order: adjacent branch pairs use their
/// edge, every nonadjacent pair gets exactly one path with an interior private to it.
struct SubdivisionCertificate {
    VertexSet branch;
    std::vector<RoutedPath> paths;

    std::size_t order() const noexcept { return branch.size(); }
    bool operator==(const SubdivisionCertificate &) const = default;
};

} // namespace cliquesub
