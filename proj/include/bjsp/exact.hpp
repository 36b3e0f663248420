#pragma once

#include "bjsp/instance.hpp"
#include "bjsp/rational.hpp"
#include "bjsp/schedule.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bjsp {

enum class SearchStatus { Optimal, Incumbent, Unknown };

struct SearchConfig {
    long long horizon = 0;          // 0: sum p + ceil(n/g)
    std::int64_t node_limit = 50'000'000;
    bool use_compact_dominance = true;  // honored only when g = 1
};

struct SearchResult {
    std::optional<Schedule> schedule;
    long long makespan = 0;
    SearchStatus status = SearchStatus::Unknown;
    std::int64_t nodes = 0;
};

/// Exhaustive enumeration of start vectors within the horizon; never returns
/// a non-optimal value as optimal (node limit -> Unknown).
SearchResult brute_force_opt(const Instance& inst, const SearchConfig& cfg = {});

/// Depth-first slot search with lower-bound pruning and, for g = 1, compact
/// dominance: a slack slot before the last start must admit a start.
/// Incumbent initialized from LPT.
SearchResult branch_and_bound_opt(const Instance& inst, const SearchConfig& cfg = {});

/// Descending-sorted completion vector; lexicographic comparison equals
/// big-integer comparison of sum 2^{C_j}.
struct LexObjective {
    int machines = 0;
    std::vector<int> profile;  // completions, descending

    BigInt weight_sum() const;  // sum 2^{C_j}
};

bool operator<(const LexObjective& a, const LexObjective& b);
bool operator==(const LexObjective& a, const LexObjective& b);

LexObjective lex_objective(const Schedule& sched);

/// Raised when no schedule meets deadline D; carries the minimum feasible
/// makespan.
struct DeadlineInfeasible : std::runtime_error {
    long long min_makespan;
    DeadlineInfeasible(long long mk, const std::string& msg)
        : std::runtime_error(msg), min_makespan(mk) {}
};

struct LexResult {
    Schedule schedule;
    LexObjective objective;
    SearchStatus status = SearchStatus::Optimal;
    std::int64_t nodes = 0;
};

/// Among schedules with every C_j <= D: minimum machine count first, then
/// lexicographically minimal descending completion profile.
LexResult exact_lex(const Instance& inst, long long deadline, const SearchConfig& cfg = {});

/// Minimum machine count over schedules meeting the deadline (the v part of
/// exact_lex, cheaper when the profile is not needed).
int min_machines(const Instance& inst, long long deadline, const SearchConfig& cfg = {});

/// Reductions and hard families --------------------------------------------

/// 3-Partition reduction: n = 3m jobs with p_j = n^2 a_j, g = 1.  Returns the
/// instance and the threshold n^2 B + n^2 separating YES from NO instances.
std::pair<Instance, long long> from_three_partition(const std::vector<long long>& a,
                                                    long long B);

/// LPT tightness family: m(m-1) jobs of length p plus m(p-m) unit jobs, g = 1.
Instance tight_instance_lpt(int m, int p);

/// LPT long-instance gap family: p_j = 2m - j for j <= m, p_{m+1} = m, g = 1.
Instance lpt_long_gap_instance(int m);

}  // namespace bjsp
