#pragma once

#include <cliquesub/certificate.hpp>
#include <cliquesub/drc.hpp>
#include <cliquesub/exact.hpp>
#include <cliquesub/graph.hpp>
#include <cliquesub/oracles.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliquesub {

/// 10^e as an exact rational.
Rational pow10(int e);

struct PipelineParams {
    Mode mode = Mode::practical;
    Rational c = pow10(-20);
    Rational c1 = pow10(-114);
    Rational c2 = pow10(-114);
    Rational c_prime = pow10(-114);
    Rational C_main = pow10(120);

    // Practical-mode knobs; paper mode ignores the ones that would change the proof.
    std::uint64_t seed = 1;
    std::size_t partition_attempts = 64;
    std::uint64_t alpha_budget = default_budget_nodes;
    std::size_t depth_cap = 32;
    std::optional<double> rho_override;
    Rational u_fraction = Rational(1, 5); // share of X kept as U by the hub selection
    bool truncate_u = true;               // cut the filtered set to u = floor(e^(-15 d alpha log(1/d)) n)

    static PipelineParams paper();
    static PipelineParams practical();
};

enum class Provenance { certified_constructive, cited_density_bound, trivial };
std::string_view to_string(Provenance p);

struct TranscriptEntry {
    std::string step;
    nlohmann::ordered_json detail;
};

struct BoundReport {
    std::size_t claimed_sigma_lower = 0;
    std::optional<SubdivisionCertificate> certificate;
    Provenance provenance = Provenance::trivial;
    std::vector<TranscriptEntry> transcript;
    bool heuristic_inputs = false; // some independence number or set came from an exhausted budget
    bool partial = false;          // recursion stopped at the depth cap

    void note(std::string step, nlohmann::ordered_json detail = nlohmann::ordered_json::object());
};

nlohmann::ordered_json report_to_json(const BoundReport & r);

/// Result of checking a list of lemma hypotheses; `failed` names the first inequality that fails.
struct HypothesisCheck {
    bool ok = true;
    std::string failed;
    std::string detail;
};

/// Dense-case hypotheses: n >= 10^14 c^-5, d >= c, alpha <= 2 log n.
HypothesisCheck dense_hypotheses(const BigInt & n, const Rational & d, const BigInt & alpha, const PipelineParams & params);
/// Sparse-case hypotheses: d <= 10^-20, alpha <= n/2, d alpha log(1/d) <= (log n)/100.
HypothesisCheck sparse_hypotheses(const BigInt & n, const Rational & d, const BigInt & alpha);

/// Dense case: partition, hub selection, dense subset inside U, greedy routing through V \ U.
/// Paper mode returns the lemma's s and refuses (PreconditionError) outside its hypotheses;
/// practical mode needs d^2 n >= 1600 and reports the largest s that routes.
BoundReport sigma_lower_dense(const Graph & g, std::size_t alpha, const PipelineParams & params,
                              Certainty alpha_tag = Certainty::exact);

/// Non-constructive bound from the density theorem: t = floor(sqrt(m / (256 n))), no certificate.
BoundReport sigma_lower_density_cited(const Graph & g);

/// Sparse recursion. Paper mode refuses outside the sparse hypotheses.
BoundReport sigma_lower_sparse(const Graph & g, const PipelineParams & params);

/// Practical mode: dense when alpha <= 2 log n and d^2 n >= 1600, sparse otherwise, and the
/// cited bound whenever it is larger. Paper mode follows the main dispatch, which returns the
/// trivial bound for n <= 10^14 c^-5.
BoundReport sigma_lower_auto(const Graph & g, const PipelineParams & params);

enum class Regime { trivial, part_one, part_two };
std::string_view to_string(Regime r);

struct FBound {
    Regime regime = Regime::trivial;
    double value = 1.0;
    std::optional<double> part_one; // c1 n^(alpha/(2 alpha - 1))
    std::optional<double> part_two; // c2 sqrt(n / (a log a)), a = alpha / log n; only for a > 1
    double a = 0.0;
};

/// Lower bound on the minimum subdivision order over n-vertex graphs with independence number
/// at most alpha. Part one applies for alpha < 2 log n, part two otherwise. Requires 1 <= alpha <= n.
FBound f_bound_dispatch(const Real & n, const Real & alpha, const PipelineParams & params);

struct InequalityCheck {
    std::string name;
    Real lhs;
    Real rhs;
    bool holds = false;
    bool required = true; // false for checks replayed only for the record
};

struct InductionTranscript {
    std::string branch; // "trivially true" or "checked"
    std::vector<InequalityCheck> checks;
    bool ok = true;
};

/// Replays the deduction of the ratio bound for one (n, k): the constant identities, the small
/// independence number branch at sampled alpha, and the deletion branch. Requires n >= 2, k >= 1.
InductionTranscript check_theorem1_step(const Real & n, const Real & k, const PipelineParams & params);

} // namespace cliquesub
