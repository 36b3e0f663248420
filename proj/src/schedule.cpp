#include "bjsp/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bjsp {

int Schedule::last_start() const {
    int r = 0;
    for (int s : start) r = std::max(r, s);
    return r;
}

int Schedule::machines_used() const {
    if (!machine) throw std::logic_error("schedule has no machine assignment");
    std::set<int> ids(machine->begin(), machine->end());
    return static_cast<int>(ids.size());
}

int makespan(const Schedule& sched) {
    int t = 0;
    for (int j = 0; j < sched.n(); ++j) t = std::max(t, sched.completion(j));
    return t;
}

std::vector<int> alive_counts(const Schedule& sched, int horizon) {
    std::vector<int> a(horizon + 1, 0);
    for (int j = 0; j < sched.n(); ++j) {
        int lo = sched.start[j];
        int hi = std::min(horizon, sched.start[j] + sched.proc[j] - 1);
        for (int t = lo; t <= hi; ++t) ++a[t];
    }
    return a;
}

std::vector<int> begin_counts(const Schedule& sched, int horizon) {
    std::vector<int> b(horizon + 1, 0);
    for (int j = 0; j < sched.n(); ++j)
        if (sched.start[j] <= horizon) ++b[sched.start[j]];
    return b;
}

FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched) {
    if (sched.n() != inst.n())
        throw ScheduleMismatch("schedule covers " + std::to_string(sched.n()) +
                               " jobs, instance has " + std::to_string(inst.n()));
    for (int j = 0; j < sched.n(); ++j) {
        if (sched.start[j] < 1)
            throw ScheduleMismatch("job " + std::to_string(j + 1) + " has no valid start");
        if (sched.proc[j] != inst.p(j))
            throw ScheduleMismatch("job " + std::to_string(j + 1) +
                                   " processing time disagrees with the instance");
    }

    FeasibilityReport report;
    int horizon = makespan(sched);
    auto alive = alive_counts(sched, horizon);
    auto begin = begin_counts(sched, horizon);
    for (int t = 1; t <= horizon; ++t) {
        if (alive[t] > inst.m())
            report.violations.push_back({ViolationKind::Capacity, t, alive[t], inst.m()});
        if (begin[t] > inst.g())
            report.violations.push_back({ViolationKind::JobStarts, t, begin[t], inst.g()});
    }

    if (sched.machine) {
        // per machine, overlapping occupancies
        for (int t = 1; t <= horizon; ++t) {
            std::vector<int> users;
            for (int j = 0; j < sched.n(); ++j)
                if (sched.alive_at(j, t)) users.push_back((*sched.machine)[j]);
            std::sort(users.begin(), users.end());
            for (size_t i = 1; i < users.size(); ++i) {
                if (users[i] == users[i - 1]) {
                    report.violations.push_back({ViolationKind::MachineOverlap, t, 2, 1});
                    break;
                }
            }
        }
    }
    return report;
}

Schedule assign_machines(const Instance& inst, const std::vector<int>& starts) {
    Schedule sched;
    sched.start = starts;
    sched.proc = inst.p();
    int n = sched.n();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return starts[a] < starts[b]; });

    // busy_until[i]: first slot at which machine i is free again
    std::vector<int> busy_until;
    std::vector<int> assignment(n, 0);
    for (int j : order) {
        int i = 0;
        while (i < static_cast<int>(busy_until.size()) && busy_until[i] > starts[j]) ++i;
        if (i == static_cast<int>(busy_until.size())) busy_until.push_back(0);
        busy_until[i] = starts[j] + inst.p(j);
        assignment[j] = i + 1;
    }
    sched.machine = assignment;
    return sched;
}

bool is_compact(const Instance& inst, const Schedule& sched) {
    int r = sched.last_start();
    auto alive = alive_counts(sched, r);
    auto begin = begin_counts(sched, r);
    for (int t = 1; t <= r; ++t)
        if (alive[t] < inst.m() && begin[t] < inst.g()) return false;
    return true;
}

Schedule compactify(const Instance& inst, Schedule sched) {
    sched.machine.reset();  // assignments are recomputed by callers if needed
    for (;;) {
        int r = sched.last_start();
        auto alive = alive_counts(sched, r);
        auto begin = begin_counts(sched, r);
        int slack = 0;
        for (int t = 1; t < r; ++t) {
            if (alive[t] < inst.m() && begin[t] < inst.g()) { slack = t; break; }
        }
        if (slack == 0) return sched;

        // earliest start strictly after the slack slot; ties by job index
        int pick = -1;
        for (int j = 0; j < sched.n(); ++j) {
            if (sched.start[j] > slack &&
                (pick < 0 || sched.start[j] < sched.start[pick]))
                pick = j;
        }
        // a slack slot before r always precedes some start
        sched.start[pick] -= 1;
    }
}

}  // namespace bjsp
