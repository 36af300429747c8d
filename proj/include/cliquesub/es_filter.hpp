#pragma once

#include <cliquesub/exact.hpp>
#include <cliquesub/graph.hpp>

#include <cstddef>
#include <vector>

namespace cliquesub {

struct EsFilterResult {
    VertexSet u;
    std::vector<Vertex> key;  // the size-cap subset of I shared by every vertex of U
    std::size_t cap = 0;      // floor(d |I|)
    std::size_t buckets = 0;  // distinct keys seen
    double size_bound = 0.0;  // (e/d)^(-d |I|) |V1|
};

/// Buckets each v in v1 by its I-neighbourhood padded with the lowest absent I-vertices up to
/// floor(d |I|) elements and returns the largest bucket (lexicographically smallest key on ties).
/// Throws InputError if d is outside (0, 1], I is not independent, v1 meets I, or some vertex of
/// v1 has more than d |I| neighbours in I.
EsFilterResult es_filter(const Graph & g, const VertexSet & i_set, const VertexSet & v1, const Rational & d);

} // namespace cliquesub
