#include "bjsp/periods.hpp"

namespace bjsp {

long long PeriodDecomposition::total_idle() const {
    long long sum = 0;
    for (const auto& p : periods) sum += p.idle;
    return sum;
}

long long PeriodDecomposition::non_final_slack_idle() const {
    long long sum = 0;
    for (size_t q = 0; q + 1 < periods.size(); ++q)
        if (periods[q].kind == PeriodKind::Slack) sum += periods[q].idle;
    return sum;
}

PeriodDecomposition decompose_periods(const Instance& inst, const Schedule& sched) {
    PeriodDecomposition decomp;
    int r = sched.last_start();
    if (r == 0) return decomp;
    auto alive = alive_counts(sched, r);

    auto kind_at = [&](int t) {
        return alive[t] == inst.m() ? PeriodKind::Full : PeriodKind::Slack;
    };
    int begin = 1;
    PeriodKind kind = kind_at(1);
    long long idle = inst.m() - alive[1];
    for (int t = 2; t <= r; ++t) {
        if (kind_at(t) != kind) {
            decomp.periods.push_back({kind, begin, t - 1, idle});
            begin = t;
            kind = kind_at(t);
            idle = 0;
        }
        idle += inst.m() - alive[t];
    }
    decomp.periods.push_back({kind, begin, r, idle});
    return decomp;
}

}  // namespace bjsp
