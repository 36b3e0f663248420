#pragma once

#include "bjsp/exact.hpp"
#include "bjsp/instance.hpp"
#include "bjsp/milp.hpp"
#include "bjsp/rational.hpp"
#include "bjsp/schedule.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bjsp {

/// Per-job perturbation factors, each within [1/F, F].
struct Scenario {
    Rational bound;                 // F >= 1
    std::vector<Rational> factors;  // one per job
};

/// Perturbed instance: p~_j = max(1, ceil(f_j p_j)); m, g unchanged.
/// Throws when a factor leaves [1/F, F].
Instance perturb(const Instance& inst, const Scenario& scenario);

/// k scenarios with factors log-uniform on [1/F, F], deterministic per seed.
std::vector<Scenario> sample_scenarios(const Instance& inst, const Rational& F,
                                       int k, std::uint64_t seed);

/// V(S) + theta * 2^{C_j} summed, kept exact: the machine count plus the
/// descending completion profile stand in for the huge weight sum.
struct CharacteristicValue {
    int machines = 0;
    std::vector<int> profile;  // completions, descending
    Rational theta;

    BigInt weight_sum() const;       // W = sum 2^{C_j}
    Rational numeric_value() const;  // V + theta * W
};

/// Orders by (machines, profile); ties compared on the profile, which agrees
/// with v + theta*W for any theta < 1 / max W.
bool operator<(const CharacteristicValue& a, const CharacteristicValue& b);

CharacteristicValue characteristic_value(const Instance& inst, const Schedule& sched,
                                         const Rational& theta);

enum class Stage1Backend { Exact, Emit };

struct Stage1Result {
    std::optional<Schedule> schedule;   // Exact backend
    std::optional<std::string> lp_path; // Emit backend
};

/// Stage-1 solve: exact backend runs exact_lex; emit backend writes the
/// LexOpt LP file to `out_path`.
Stage1Result stage1(const Instance& inst, long long deadline, const Rational& theta,
                    Stage1Backend backend, const std::string& out_path = "",
                    int periods = 8);

/// Binding-start recovery: start times copied verbatim, machines reassigned
/// by the lowest-free-machine slot sweep against the perturbed durations.
Schedule stage2_recover(const Schedule& initial, const Instance& perturbed);

struct PriceOfRobustness {
    Rational price;
    bool deadline_infeasible = false;  // ratio taken against the unconstrained
                                       // minimum-makespan machine count
};

/// V(recovered) / V(S~*) with S~* the machine-minimal deadline-D schedule of
/// the perturbed instance.
PriceOfRobustness price_of_robustness(const Schedule& recovered, const Instance& perturbed,
                                      long long deadline);

/// k distinct feasible deadline-respecting schedules from seeded randomized
/// greedy construction (first draw is LPT); fewer when the space is exhausted.
std::vector<Schedule> solution_pool(const Instance& inst, long long deadline, int k,
                                    std::uint64_t seed);

struct MetricsRow {
    int schedule_id = 0;
    Rational f_norm;
    Rational v_norm;
    Rational price;          // mean price of robustness over the scenarios
    int deadline_violations = 0;  // scenarios where recovery misses D
};

struct MetricsOptions {
    bool compute_price = true;  // price needs an exact solve per scenario
};

/// F^N = F(S)/min-pool F; V^N = mean over scenarios of V(S~)/min-pool V(S~).
std::vector<MetricsRow> normalized_metrics(const Instance& inst,
                                           const std::vector<Schedule>& pool,
                                           const std::vector<Scenario>& scenarios,
                                           const Rational& theta, long long deadline,
                                           const MetricsOptions& opts = {});

/// Scenario JSON: {"F": "a/b", "factors": {"1": "a/b", ...}}.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

}  // namespace bjsp
