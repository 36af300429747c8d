#pragma once

#include <cliquesub/certificate.hpp>
#include <cliquesub/exact.hpp>
#include <cliquesub/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cliquesub {

/// Every oracle answer carries one of these. Only `exact` values may enter a certificate.
enum class Certainty { exact, heuristic, exceeded };
std::string_view to_string(Certainty c);

inline constexpr std::uint64_t default_budget_nodes = 20'000'000;

/// Maximum clique or independent set. When the node budget runs out the value is the best
/// found so far (a lower bound), `tag` is heuristic and `upper_bound` is the root colouring bound.
struct SetSearchResult {
    std::size_t value = 0;
    VertexSet witness;
    Certainty tag = Certainty::exact;
    std::size_t upper_bound = 0;
    std::uint64_t nodes = 0;
};

SetSearchResult omega_exact(const Graph & g, std::uint64_t budget_nodes = default_budget_nodes);
SetSearchResult alpha_exact(const Graph & g, std::uint64_t budget_nodes = default_budget_nodes);

struct Colouring {
    std::size_t colours = 0;
    std::vector<std::uint32_t> colour_of;
};

bool is_proper_colouring(const Graph & g, const std::vector<std::uint32_t> & colour_of);

/// Brélaz DSATUR: most saturated vertex first, ties by degree then label, smallest free colour.
Colouring dsatur_upper(const Graph & g);

struct ChromaticResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    Colouring colouring; // proper, uses `upper` colours
    Certainty tag = Certainty::exact;
    std::uint64_t nodes = 0;
};

struct ChromaticOptions {
    /// Seed the lower bound with ceil(n / alpha) as well as omega.
    bool use_independence_bound = true;
};

/// DSATUR branch and bound. Exact means lower == upper; otherwise the interval is reported.
ChromaticResult chi_exact(const Graph & g, std::uint64_t budget_nodes = default_budget_nodes,
                          const ChromaticOptions & options = {});

enum class Containment { present, absent, exceeded };
std::string_view to_string(Containment c);

struct SubdivisionSearch {
    Containment status = Containment::exceeded;
    std::optional<SubdivisionCertificate> certificate;
    std::uint64_t nodes = 0;
};

/// Decides whether g contains a subdivision of K_t by backtracking over branch sets (in order of
/// decreasing degree) and over induced-path packings for the nonadjacent branch pairs.
SubdivisionSearch sigma_exact_tiny(const Graph & g, std::size_t t, std::uint64_t budget_nodes = default_budget_nodes);

struct SigmaValue {
    std::size_t sigma = 0;
    Certainty tag = Certainty::exact; // exceeded: sigma is only a lower bound
    std::optional<SubdivisionCertificate> certificate;
    std::uint64_t nodes = 0;
};

/// Largest t for which sigma_exact_tiny answers present.
SigmaValue sigma_exact_value(const Graph & g, std::uint64_t budget_nodes = default_budget_nodes);

/// Counting certificate: every t-set of a graph with clique number omega spans at least
/// t(t-omega)/(2 omega) nonadjacent pairs, each of which needs its own interior vertex.
struct SigmaUpperCert {
    std::size_t t = 0;
    std::size_t omega_used = 0;
    std::uint64_t forced_internal = 0; // ceil(t(t-omega)/(2 omega))
    std::size_t n = 0;                 // t + forced_internal > n
};

/// Smallest certified t with sigma(g) < t, or nothing if no t <= n certifies.
/// Throws ContractError unless omega_tag is exact.
std::optional<SigmaUpperCert> sigma_upper_cert(const Graph & g, std::size_t omega, Certainty omega_tag);

struct TuranBound {
    Rational exact;      // (n/alpha - 1) / (n - 1)
    Rational simplified; // 1 / (2 alpha)
};

/// Minimum edge density of an n-vertex graph with independence number at most alpha.
/// Throws DomainError unless 1 <= alpha <= n/2.
TuranBound turan_density_bound(std::size_t n, std::size_t alpha);

struct GraphStats {
    std::size_t n = 0;
    std::uint64_t m = 0;
    double density = 0.0;
    std::optional<SetSearchResult> alpha;
    std::optional<SetSearchResult> omega;
    std::size_t chi_lower = 0;
    std::size_t chi_upper = 0;
    Certainty chi_lower_tag = Certainty::exact;
    Certainty chi_upper_tag = Certainty::heuristic;
};

/// Runs the budgeted oracles. chi_exact only when n <= exact_chi_limit.
GraphStats compute_stats(const Graph & g, std::uint64_t budget_nodes = default_budget_nodes,
                         std::size_t exact_chi_limit = 20);

} // namespace cliquesub
