#pragma once

#include <cliquesub/errors.hpp>
#include <cliquesub/exact.hpp>
#include <cliquesub/graph.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cliquesub {

enum class Mode { paper, practical };

struct Partition {
    VertexSet v1; // ceil(n/2) vertices
    VertexSet v2;
    std::uint64_t crossing = 0; // e(V1, V2)
    std::size_t attempts = 0;
};

/// e(V1,V2) >= (d/2) C(n,2), which is 2 e(V1,V2) >= m.
bool crossing_bound_holds(const Graph & g, const Partition & p);

class PartitionError : public Error {
  public:
    PartitionError(const std::string & what, Partition best) : Error(what), best_(std::move(best)) {}
    const Partition & best() const noexcept { return best_; }

  private:
    Partition best_;
};

/// Random balanced split meeting the crossing bound, redrawn up to max_attempts times.
/// Throws InputError if n < 2, PartitionError (carrying the best draw) when attempts run out.
Partition drc_partition(const Graph & g, std::uint64_t seed, std::size_t max_attempts = 64);

struct DrcCertificate {
    VertexSet v1;
    VertexSet v2;
    Vertex hub = 0;
    VertexSet x_set; // N(hub) ∩ V1
    std::uint64_t bad_pair_count = 0;
    VertexSet u_set;
    std::uint64_t good_threshold = 0; // floor(d^2 n / 800): bad pairs have at most this many common neighbours
    std::uint64_t path_bound = 0;     // ceil(1e-9 d^5 n) internally disjoint length-4 paths per pair of U
    std::int64_t score = 0;           // |X|^2 - 40 b
    std::size_t bad_vertices = 0;     // vertices of X discarded before choosing U
    bool guaranteed = false;          // d^2 n >= 1600, so the bounds above are proven, not just measured
    double u_fraction = 0.2;          // |U| = ceil(u_fraction |X|), capped by the survivors
};

/// The hypothesis d^2 n >= 1600, in exact integer arithmetic.
bool drc_hypothesis(const Graph & g);

/// Derandomised hub choice: scans every v0 in V2, keeps the maximiser of |X|^2 - 40b (lowest label
/// on ties), drops vertices of X that are bad-paired with at least |X|/4 others, and takes the first
/// ceil(|X|/5) survivors as U. Common neighbourhoods are counted inside V2, the bipartite restriction.
/// Paper mode throws PreconditionError unless d^2 n >= 1600. Practical mode may declare a larger
/// fraction of X for U; the per-pair path guarantee is then measured rather than proven.
DrcCertificate drc_select(const Graph & g, const Partition & part, Mode mode, const Rational & u_fraction = Rational(1, 5));

struct DrcCheck {
    bool ok = true;
    std::string clause;
};

/// Re-derives every certificate invariant from g: crossing bound, X, b, score bound, U size and
/// the bad-partner condition. The size and score bounds are required only when `guaranteed`.
DrcCheck check_drc_certificate(const Graph & g, const DrcCertificate & cert);

struct PathCountOptions {
    /// Stop as soon as this many disjoint paths are certain (lower bound reaches it).
    std::optional<std::size_t> stop_at;
    std::uint64_t budget_nodes = 2'000'000;
    /// Also bound the answer from above with a layered-network max flow.
    bool flow_bound = true;
};

struct PathPacking {
    std::size_t lower = 0;                  // size of `paths`
    std::size_t upper = 0;                  // proven maximum is at most this
    std::vector<std::array<Vertex, 3>> paths; // interiors (a, b, c) of u-a-b-c-v, pairwise disjoint

    bool exact() const noexcept { return lower == upper; }
};

/// Maximum number of internally vertex-disjoint u-v paths of length exactly 4 whose interiors avoid
/// `forbidden`, u and v. A greedy packing gives the lower bound; a flow on the layered network and
/// simple counting give the upper bound; branch and bound closes the gap within the budget.
PathPacking count_disjoint_paths4(const Graph & g, Vertex u, Vertex v, const VertexSet & forbidden,
                                  const PathCountOptions & options = {});

} // namespace cliquesub
