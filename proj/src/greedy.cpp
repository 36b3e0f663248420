#include "bjsp/greedy.hpp"

#include <algorithm>
#include <numeric>

namespace bjsp {

namespace {

std::vector<int> sorted_indices(const Instance& inst, bool descending) {
    std::vector<int> idx(inst.n());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return descending ? inst.p(a) > inst.p(b) : inst.p(a) < inst.p(b);
    });
    return idx;
}

}  // namespace

JobOrder lpt_order(const Instance& inst) {
    return {sorted_indices(inst, true), OrderPolicy::Lpt};
}

JobOrder spt_order(const Instance& inst) {
    return {sorted_indices(inst, false), OrderPolicy::Spt};
}

JobOrder lspt_order(const Instance& inst) {
    JobOrder order;
    order.policy = OrderPolicy::Lspt;
    std::vector<int> longs = inst.long_jobs();
    std::vector<int> shorts = inst.short_jobs();
    std::stable_sort(longs.begin(), longs.end(),
                     [&](int a, int b) { return inst.p(a) < inst.p(b); });
    std::stable_sort(shorts.begin(), shorts.end(),
                     [&](int a, int b) { return inst.p(a) > inst.p(b); });
    order.jobs = std::move(longs);
    order.jobs.insert(order.jobs.end(), shorts.begin(), shorts.end());
    return order;
}

Schedule greedy_schedule(const Instance& inst, const JobOrder& order) {
    if (static_cast<int>(order.jobs.size()) != inst.n())
        throw std::invalid_argument("order must be a permutation of the jobs");
    Schedule sched;
    sched.proc = inst.p();
    sched.start.assign(inst.n(), 0);

    long long horizon = inst.default_horizon();
    std::vector<int> alive(horizon + 2, 0);
    std::vector<int> begin(horizon + 2, 0);
    for (int j : order.jobs) {
        int t = 1;
        while (alive[t] >= inst.m() || begin[t] >= inst.g()) ++t;
        sched.start[j] = t;
        ++begin[t];
        for (int u = t; u < t + inst.p(j); ++u) ++alive[u];
    }
    return sched;
}

Schedule lpt(const Instance& inst) { return greedy_schedule(inst, lpt_order(inst)); }

Schedule lspt(const Instance& inst) { return greedy_schedule(inst, lspt_order(inst)); }

LsmResult lsm(const Instance& inst, const LsmConfig& cfg) {
    LsmResult result;
    result.ratio_certified = inst.m() >= 7;
    result.machine_budget = inst.m();

    auto long_machines_for = [&](int m) {
        return cfg.long_machines > 0 ? cfg.long_machines : (5 * m + 5) / 6;
    };
    int budget = inst.m();
    int ml = long_machines_for(budget);

    if (cfg.allow_augmentation) {
        // conservative degeneracy trigger: count jobs longer than half the
        // best lower-bound certificate
        Rational lb = best_lower_bound(inst);
        int very_long = 0;
        for (int j = 0; j < inst.n(); ++j)
            if (Rational(2 * inst.p(j)) > lb) ++very_long;
        if (very_long > ml) {
            budget = (6 * inst.m() + 4) / 5;  // ceil(6m/5)
            ml = long_machines_for(budget);
            result.augmented = true;
        }
    }
    result.machine_budget = budget;
    result.long_machines = ml;

    std::vector<int> longs, shorts;
    for (int j = 0; j < inst.n(); ++j)
        (inst.p(j) >= ml ? longs : shorts).push_back(j);
    std::stable_sort(longs.begin(), longs.end(),
                     [&](int a, int b) { return inst.p(a) > inst.p(b); });
    std::stable_sort(shorts.begin(), shorts.end(),
                     [&](int a, int b) { return inst.p(a) > inst.p(b); });

    Schedule sched;
    sched.proc = inst.p();
    sched.start.assign(inst.n(), 0);
    // one start per slot, so the naive horizon needs n slack slots
    long long horizon = inst.total_work() + inst.n() + 1;
    std::vector<int> alive(horizon + 2, 0);
    std::vector<int> alive_long(horizon + 2, 0);

    size_t li = 0, si = 0;
    for (long long t = 1; t <= horizon && (li < longs.size() || si < shorts.size()); ++t) {
        if (alive[t] >= budget) continue;
        int j = -1;
        bool is_long = false;
        if (alive_long[t] < ml && li < longs.size()) {
            j = longs[li++];
            is_long = true;
        } else if (si < shorts.size()) {
            j = shorts[si++];
        }
        if (j < 0) continue;
        sched.start[j] = static_cast<int>(t);
        for (long long u = t; u < t + inst.p(j); ++u) {
            ++alive[u];
            if (is_long) ++alive_long[u];
        }
    }
    result.schedule = std::move(sched);
    return result;
}

Rational alpha(const Instance& inst) {
    if (inst.n() == 0) throw std::invalid_argument("alpha needs a non-empty instance");
    return Rational(BigInt(inst.total_work()), BigInt(inst.m()) * BigInt(inst.p_max()));
}

Rational ratio_certificate(const Instance& inst, const Schedule& sched) {
    Rational lb = best_lower_bound(inst);
    if (lb == 0) return Rational(1);
    return Rational(makespan(sched)) / lb;
}

}  // namespace bjsp
