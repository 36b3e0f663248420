#pragma once

#include "bjsp/instance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bjsp {

/// Start times (and optionally machine ids) for every job of an instance.
/// Slots are 1-based; a job started at slot s occupies s..s+p-1 and has
/// completion value C = s + p.  Machine ids are 1-based and may exceed the
/// instance's m under augmentation.
struct Schedule {
    std::vector<int> start;                        // start[j] >= 1
    std::vector<int> proc;                         // copy of the p_j the schedule was built for
    std::optional<std::vector<int>> machine;       // machine[j] >= 1 when present

    int n() const { return static_cast<int>(start.size()); }
    int completion(int job) const { return start[job] + proc[job]; }
    bool alive_at(int job, int slot) const {
        return start[job] <= slot && slot < start[job] + proc[job];
    }
    /// Last start slot r; 0 for the empty schedule.
    int last_start() const;
    /// Number of distinct machines in the assignment (requires machine).
    int machines_used() const;
};

/// max_j (s_j + p_j); 0 for the empty schedule.
int makespan(const Schedule& sched);

/// Alive counts |A_t| for t = 1..horizon (index 0 unused).
std::vector<int> alive_counts(const Schedule& sched, int horizon);
/// Beginning counts |B_t| likewise.
std::vector<int> begin_counts(const Schedule& sched, int horizon);

enum class ViolationKind { Capacity, JobStarts, MachineOverlap };

struct Violation {
    ViolationKind kind;
    int slot;
    int observed;  // |A_t|, |B_t|, or jobs sharing the machine-slot
    int limit;     // m, g, or 1
};

struct FeasibilityReport {
    std::vector<Violation> violations;
    bool feasible() const { return violations.empty(); }
};

/// Raised when a schedule does not structurally cover the instance's jobs
/// (distinct from infeasibility).
struct ScheduleMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Lists every violated (slot, constraint): |A_t| <= m, |B_t| <= g, and
/// machine overlap when assignments are present.
FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched);

/// Greedy interval assignment: jobs by increasing start (ties by index),
/// each takes the lowest-indexed machine free over its whole occupancy.
Schedule assign_machines(const Instance& inst, const std::vector<int>& starts);

/// True iff every t in [1, r] has |A_t| = m or |B_t| = g.
bool is_compact(const Instance& inst, const Schedule& sched);

/// Repeatedly shifts the earliest start after a slack slot left by one
/// (ties by smallest job index) until no slack slot precedes a start.
/// Feasibility is preserved and the makespan never increases.
Schedule compactify(const Instance& inst, Schedule sched);

}  // namespace bjsp
