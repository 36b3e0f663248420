#pragma once

#include "bjsp/instance.hpp"
#include "bjsp/schedule.hpp"

#include <vector>

namespace bjsp {

enum class PeriodKind { Slack, Full };

/// Maximal interval [first, last] where |A_t| < m everywhere (slack) or
/// |A_t| = m everywhere (full).
struct Period {
    PeriodKind kind;
    int first;
    int last;
    long long idle;  // sum over the interval of (m - |A_t|); 0 on full periods

    int length() const { return last - first + 1; }
};

/// Alternating maximal slack/full periods partitioning [1, r].
struct PeriodDecomposition {
    std::vector<Period> periods;

    long long total_idle() const;
    /// Idle summed over slack periods excluding the final period.
    long long non_final_slack_idle() const;
};

PeriodDecomposition decompose_periods(const Instance& inst, const Schedule& sched);

}  // namespace bjsp
