#pragma once

#include "bjsp/bounds.hpp"
#include "bjsp/instance.hpp"
#include "bjsp/schedule.hpp"

#include <string>
#include <vector>

namespace bjsp {

enum class OrderPolicy { Lpt, Spt, Lspt, Custom };

/// A permutation of 0..n-1 tagged with the policy that produced it.
struct JobOrder {
    std::vector<int> jobs;
    OrderPolicy policy = OrderPolicy::Custom;
};

JobOrder lpt_order(const Instance& inst);
JobOrder spt_order(const Instance& inst);
/// Long jobs (p_j >= m) SPT-sorted, then short jobs LPT-sorted; ties by index.
JobOrder lspt_order(const Instance& inst);

/// Places each job of the order at the earliest slot t with |A_t| < m and
/// |B_t| < g.  Always feasible; compact when g = 1.
Schedule greedy_schedule(const Instance& inst, const JobOrder& order);

Schedule lpt(const Instance& inst);
Schedule lspt(const Instance& inst);

struct LsmConfig {
    int long_machines = 0;          // m^L; 0 means default ceil(5m/6)
    bool allow_augmentation = false;

    static LsmConfig defaults() { return {}; }
};

struct LsmResult {
    Schedule schedule;
    int long_machines;       // m^L actually used
    int machine_budget;      // m, or ceil(6m/5) when augmentation triggered
    bool augmented = false;
    bool ratio_certified = true;  // false when m < 7
};

/// Long-Short Mixing: reserves m^L machines for jobs with p_j >= m^L and
/// interleaves short-job starts, one start per slot.
LsmResult lsm(const Instance& inst, const LsmConfig& cfg = {});

/// (sum p / m) / p_max, exact.
Rational alpha(const Instance& inst);

/// makespan(S) / best applicable lower bound; upper-bounds the true ratio.
Rational ratio_certificate(const Instance& inst, const Schedule& sched);

}  // namespace bjsp
