#include <cliquesub/errors.hpp>
#include <cliquesub/es_filter.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace cliquesub {

EsFilterResult es_filter(const Graph & g, const VertexSet & i_set, const VertexSet & v1, const Rational & d)
{
    if (d <= 0 || d > 1)
        throw InputError("es_filter needs 0 < d <= 1");
    i_set.check_range(g.order());
    v1.check_range(g.order());
    if (! is_independent(g, i_set))
        throw InputError("I is not an independent set");
    if (! disjoint(i_set, v1))
        throw InputError("V1 meets I");

    EsFilterResult out;
    out.cap = floor_of(d * i_set.size()).convert_to<std::size_t>();
    std::map<std::vector<Vertex>, std::vector<Vertex>> buckets;
    for (auto v : v1) {
        std::vector<Vertex> key;
        for (auto x : i_set)
            if (g.adjacent(v, x))
                key.push_back(x);
        if (key.size() > out.cap)
            throw InputError("vertex " + std::to_string(v) + " has " + std::to_string(key.size()) +
                             " neighbours in I, above the cap " + std::to_string(out.cap));
        for (auto x : i_set) {
            if (key.size() == out.cap)
                break;
            if (! g.adjacent(v, x))
                key.push_back(x);
        }
        std::sort(key.begin(), key.end());
        buckets[std::move(key)].push_back(v);
    }
    out.buckets = buckets.size();

    const std::vector<Vertex> * best = nullptr;
    for (const auto & [key, members] : buckets)
        if (! best || members.size() > buckets.at(*best).size()) {
            best = &key;
        }
    if (best) {
        out.key = *best;
        out.u = VertexSet(buckets.at(*best));
    }

    double dd = to_double(d);
    double alpha = static_cast<double>(i_set.size());
    out.size_bound = std::exp(-dd * alpha * std::log(std::exp(1.0) / dd)) * static_cast<double>(v1.size());
    // Pigeonhole over at most C(|I|, cap) <= (e/d)^(d|I|) keys.
    if (out.u.size() * out.buckets < v1.size())
        throw InternalError("largest bucket is below the pigeonhole bound");
    if (static_cast<double>(out.u.size()) < out.size_bound * (1 - 1e-12))
        throw InternalError("largest bucket is below (e/d)^(-d alpha) |V1|");
    return out;
}

} // namespace cliquesub
