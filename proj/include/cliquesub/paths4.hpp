#pragma once

#include <cliquesub/graph.hpp>

#include <array>
#include <optional>

namespace cliquesub {

/// Interior (a, b, c) of a length-4 path u-a-b-c-v with a, b, c distinct members of `avail`,
/// lexicographically smallest among all such paths. u and v must not be in `avail`.
std::optional<std::array<Vertex, 3>> first_path4(const Graph & g, Vertex u, Vertex v, const Bitset & avail);

} // namespace cliquesub
