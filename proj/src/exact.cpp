#include "bjsp/exact.hpp"

#include "bjsp/bounds.hpp"
#include "bjsp/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bjsp {

namespace {

long long effective_horizon(const Instance& inst, const SearchConfig& cfg) {
    return cfg.horizon > 0 ? cfg.horizon : inst.default_horizon();
}

// Exhaustive job-by-job start enumeration.  Jobs are visited in
// non-increasing p order; equal-length jobs keep non-decreasing starts,
// which removes permutations of interchangeable jobs without losing any
// distinct schedule shape.
struct BruteSearcher {
    const Instance& inst;
    long long horizon;
    std::int64_t node_limit;
    std::int64_t nodes = 0;
    bool exhausted = true;
    long long best = -1;
    std::vector<int> order;
    std::vector<int> start;       // indexed by position in `order`
    std::vector<int> best_start;
    std::vector<int> alive, begun;

    BruteSearcher(const Instance& i, long long h, std::int64_t nl)
        : inst(i), horizon(h), node_limit(nl), start(i.n(), 0),
          alive(h + 2, 0), begun(h + 2, 0) {
        order.resize(inst.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return inst.p(a) > inst.p(b); });
    }

    void seed(long long incumbent_makespan, const std::vector<int>& incumbent_start) {
        best = incumbent_makespan;
        best_start = incumbent_start;
    }

    void dfs(int pos, long long cur_mk) {
        if (++nodes > node_limit) { exhausted = false; return; }
        if (best >= 0 && cur_mk >= best) return;
        if (pos == inst.n()) {
            best = cur_mk;
            best_start = start;
            return;
        }
        int j = order[pos];
        int p = inst.p(j);
        long long s_min = 1;
        if (pos > 0 && inst.p(order[pos - 1]) == p) s_min = start[pos - 1];
        for (long long s = s_min; s + p - 1 <= horizon; ++s) {
            long long c = s + p;
            if (best >= 0 && c >= best) break;
            if (begun[s] >= inst.g()) continue;
            bool fits = true;
            for (long long u = s; u < s + p; ++u)
                if (alive[u] >= inst.m()) { fits = false; break; }
            if (!fits) continue;
            ++begun[s];
            for (long long u = s; u < s + p; ++u) ++alive[u];
            start[pos] = static_cast<int>(s);
            dfs(pos + 1, std::max(cur_mk, c));
            --begun[s];
            for (long long u = s; u < s + p; ++u) --alive[u];
            if (!exhausted) return;
        }
    }

    std::vector<int> starts_by_job() const {
        std::vector<int> out(inst.n(), 0);
        for (int pos = 0; pos < inst.n(); ++pos) out[order[pos]] = best_start[pos];
        return out;
    }
};

// Slot-based depth-first search.  At each slot a (possibly empty) set of
// pending jobs is started; sets are deduplicated by processing time since
// equal jobs are interchangeable for the makespan.
struct SlotSearcher {
    const Instance& inst;
    long long horizon;
    std::int64_t node_limit;
    bool compact;  // g = 1 only: every slack slot before the end must start a job
    std::int64_t nodes = 0;
    bool exhausted = true;
    long long best = -1;
    std::vector<int> start, best_start;
    std::vector<int> alive;
    std::vector<int> order;  // pending iteration order, p non-increasing
    std::vector<char> placed;
    int remaining;
    long long pending_work;

    SlotSearcher(const Instance& i, long long h, std::int64_t nl, bool comp)
        : inst(i), horizon(h), node_limit(nl), compact(comp),
          start(i.n(), 0), alive(h + 2, 0), placed(i.n(), 0),
          remaining(i.n()), pending_work(i.total_work()) {
        order.resize(inst.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return inst.p(a) > inst.p(b); });
    }

    long long lower_bound(long long t, long long cur_mk) const {
        long long lb = cur_mk;
        lb = std::max(lb, t + (pending_work + inst.m() - 1) / inst.m());
        long long i = 0;
        for (int j : order) {
            if (placed[j]) continue;
            lb = std::max(lb, t + i / inst.g() + inst.p(j));
            ++i;
        }
        return lb;
    }

    void record(long long cur_mk) {
        if (best < 0 || cur_mk < best) {
            best = cur_mk;
            best_start = start;
        }
    }

    void dfs(long long t, long long cur_mk) {
        if (remaining == 0) { record(cur_mk); return; }
        if (t > horizon) return;
        if (++nodes > node_limit) { exhausted = false; return; }
        if (best >= 0 && lower_bound(t, cur_mk) >= best) return;
        branch(t, cur_mk, 0, 0);
    }

    bool may_stop(long long t, int started) const {
        if (remaining == 0) return true;
        if (compact) return started == 1 || alive[t] >= inst.m();
        // leaving an entirely idle slot before pending jobs is dominated by
        // shifting every later start one slot left
        return !(started == 0 && alive[t] == 0);
    }

    void branch(long long t, long long cur_mk, int from, int started) {
        if (may_stop(t, started)) dfs(t + 1, cur_mk);
        if (!exhausted) return;
        if (started >= inst.g()) return;
        int last_p = -1;
        for (int pos = from; pos < inst.n(); ++pos) {
            int j = order[pos];
            if (placed[j]) continue;
            int p = inst.p(j);
            if (p == last_p) continue;
            last_p = p;
            if (t + p - 1 > horizon) continue;
            long long c = t + p;
            if (best >= 0 && std::max(cur_mk, c) >= best) continue;
            bool fits = true;
            for (long long u = t; u < t + p; ++u)
                if (alive[u] >= inst.m()) { fits = false; break; }
            if (!fits) continue;

            placed[j] = 1;
            --remaining;
            pending_work -= p;
            start[j] = static_cast<int>(t);
            for (long long u = t; u < t + p; ++u) ++alive[u];
            branch(t, std::max(cur_mk, c), pos + 1, started + 1);
            for (long long u = t; u < t + p; ++u) --alive[u];
            placed[j] = 0;
            ++remaining;
            pending_work += p;
            if (!exhausted) return;
        }
    }
};

SearchResult finish(const Instance& inst, long long best, const std::vector<int>& starts,
                    bool exhausted, std::int64_t nodes) {
    SearchResult result;
    result.nodes = nodes;
    result.makespan = best;
    if (best >= 0) {
        Schedule sched;
        sched.start = starts;
        sched.proc = inst.p();
        result.schedule = std::move(sched);
        result.status = exhausted ? SearchStatus::Optimal : SearchStatus::Incumbent;
    } else {
        result.status = SearchStatus::Unknown;
    }
    return result;
}

// Deadline-constrained feasibility at machine capacity v; slot search with
// earliest-deadline and load pruning.
struct FeasSearcher {
    const Instance& inst;
    int v;
    long long deadline;
    std::int64_t node_limit;
    std::int64_t& nodes;
    std::vector<int> start;
    std::vector<int> alive;
    std::vector<int> order;  // p non-increasing = deadline non-decreasing
    std::vector<char> placed;
    int remaining;
    long long pending_work;
    bool found = false;
    std::vector<int> found_start;

    FeasSearcher(const Instance& i, int cap, long long D, std::int64_t nl, std::int64_t& nd)
        : inst(i), v(cap), deadline(D), node_limit(nl), nodes(nd),
          start(i.n(), 0), alive(D + 2, 0), placed(i.n(), 0),
          remaining(i.n()), pending_work(i.total_work()) {
        order.resize(inst.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return inst.p(a) > inst.p(b); });
    }

    bool prunable(long long t) const {
        long long i = 0;
        for (int j : order) {
            if (placed[j]) continue;
            // i-th earliest remaining start is >= t + i/g and must meet the
            // i-th loosest... i-th tightest deadline D - p_j (p non-increasing)
            if (t + i / inst.g() > deadline - inst.p(j)) return true;
            ++i;
        }
        long long free = 0;
        for (long long u = t; u < deadline; ++u) free += v - alive[u];
        return pending_work > free;
    }

    void dfs(long long t) {
        if (remaining == 0) {
            found = true;
            found_start = start;
            return;
        }
        if (t > deadline) return;
        if (++nodes > node_limit)
            throw std::runtime_error("machine-minimization search exceeded the node limit");
        if (prunable(t)) return;
        branch(t, 0, 0);
    }

    void branch(long long t, int from, int started) {
        bool may_stop = remaining == 0 || started > 0 || alive[t] > 0;
        if (may_stop) dfs(t + 1);
        if (found) return;
        if (started >= inst.g()) return;
        int last_p = -1;
        for (int pos = from; pos < inst.n(); ++pos) {
            int j = order[pos];
            if (placed[j]) continue;
            int p = inst.p(j);
            if (p == last_p) continue;
            last_p = p;
            if (t + p > deadline + 1) continue;
            bool fits = true;
            for (long long u = t; u < t + p; ++u)
                if (alive[u] >= v) { fits = false; break; }
            if (!fits) continue;

            placed[j] = 1;
            --remaining;
            pending_work -= p;
            start[j] = static_cast<int>(t);
            for (long long u = t; u < t + p; ++u) ++alive[u];
            branch(t, pos + 1, started + 1);
            for (long long u = t; u < t + p; ++u) --alive[u];
            placed[j] = 0;
            ++remaining;
            pending_work += p;
            if (found) return;
        }
    }
};

std::vector<int> merged_optimistic_profile(const std::vector<int>& fixed,
                                           const std::vector<int>& optimistic) {
    std::vector<int> out = fixed;
    out.insert(out.end(), optimistic.begin(), optimistic.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

// Lexicographically minimal descending completion profile at fixed capacity.
struct LexSearcher {
    const Instance& inst;
    int v;
    long long deadline;
    std::int64_t node_limit;
    std::int64_t& nodes;
    std::vector<int> start, best_start;
    std::vector<int> alive;
    std::vector<int> order;
    std::vector<char> placed;
    int remaining;
    std::vector<int> incumbent;  // profile, descending

    LexSearcher(const Instance& i, int cap, long long D, std::int64_t nl, std::int64_t& nd,
                std::vector<int> seed_profile, std::vector<int> seed_start)
        : inst(i), v(cap), deadline(D), node_limit(nl), nodes(nd),
          start(i.n(), 0), best_start(std::move(seed_start)),
          alive(D + 2, 0), placed(i.n(), 0), remaining(i.n()),
          incumbent(std::move(seed_profile)) {
        order.resize(inst.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return inst.p(a) > inst.p(b); });
    }

    // Every realizable completion of job j from slot t on is >= t + p_j, so
    // the merged descending profile bounds any realization elementwise and
    // hence lexicographically from below.
    bool prunable(long long t) const {
        std::vector<int> fixed, optimistic;
        for (int j = 0; j < inst.n(); ++j) {
            if (placed[j])
                fixed.push_back(start[j] + inst.p(j));
            else
                optimistic.push_back(static_cast<int>(t) + inst.p(j));
        }
        auto profile = merged_optimistic_profile(fixed, optimistic);
        return !(profile < incumbent);
    }

    void dfs(long long t) {
        if (remaining == 0) {
            std::vector<int> profile;
            for (int j = 0; j < inst.n(); ++j) profile.push_back(start[j] + inst.p(j));
            std::sort(profile.begin(), profile.end(), std::greater<int>());
            if (profile < incumbent) {
                incumbent = profile;
                best_start = start;
            }
            return;
        }
        if (t > deadline) return;
        if (++nodes > node_limit)
            throw std::runtime_error("profile search exceeded the node limit");
        if (prunable(t)) return;
        branch(t, 0, 0);
    }

    void branch(long long t, int from, int started) {
        bool may_stop = remaining == 0 || started > 0 || alive[t] > 0;
        if (may_stop) dfs(t + 1);
        if (started >= inst.g()) return;
        int last_p = -1;
        for (int pos = from; pos < inst.n(); ++pos) {
            int j = order[pos];
            if (placed[j]) continue;
            int p = inst.p(j);
            if (p == last_p) continue;
            last_p = p;
            if (t + p > deadline + 1) continue;
            bool fits = true;
            for (long long u = t; u < t + p; ++u)
                if (alive[u] >= v) { fits = false; break; }
            if (!fits) continue;

            placed[j] = 1;
            --remaining;
            start[j] = static_cast<int>(t);
            for (long long u = t; u < t + p; ++u) ++alive[u];
            branch(t, pos + 1, started + 1);
            for (long long u = t; u < t + p; ++u) --alive[u];
            placed[j] = 0;
            ++remaining;
        }
    }
};

int sweep_machine_count(const std::vector<int>& starts, const std::vector<int>& proc) {
    int horizon = 0;
    for (size_t j = 0; j < starts.size(); ++j)
        horizon = std::max(horizon, starts[j] + proc[j] - 1);
    std::vector<int> alive(horizon + 2, 0);
    int peak = 0;
    for (size_t j = 0; j < starts.size(); ++j)
        for (int u = starts[j]; u < starts[j] + proc[j]; ++u)
            peak = std::max(peak, ++alive[u]);
    return peak;
}

}  // namespace

SearchResult brute_force_opt(const Instance& inst, const SearchConfig& cfg) {
    if (inst.n() == 0) {
        SearchResult r;
        r.schedule = Schedule{{}, {}, std::nullopt};
        r.status = SearchStatus::Optimal;
        return r;
    }
    long long horizon = effective_horizon(inst, cfg);
    BruteSearcher search(inst, horizon, cfg.node_limit);

    Schedule inc = lpt(inst);
    std::vector<int> inc_by_pos(inst.n());
    for (int pos = 0; pos < inst.n(); ++pos) inc_by_pos[pos] = inc.start[search.order[pos]];
    search.seed(makespan(inc), inc_by_pos);

    search.dfs(0, 0);
    SearchResult result =
        finish(inst, search.best, search.starts_by_job(), search.exhausted, search.nodes);
    // a non-exhaustive enumeration proves nothing, even with an incumbent
    if (!search.exhausted) result.status = SearchStatus::Unknown;
    return result;
}

SearchResult branch_and_bound_opt(const Instance& inst, const SearchConfig& cfg) {
    if (inst.n() == 0) {
        SearchResult r;
        r.schedule = Schedule{{}, {}, std::nullopt};
        r.status = SearchStatus::Optimal;
        return r;
    }
    long long horizon = effective_horizon(inst, cfg);
    bool compact = cfg.use_compact_dominance && inst.g() == 1;
    SlotSearcher search(inst, horizon, cfg.node_limit, compact);

    Schedule inc = lpt(inst);
    search.best = makespan(inc);
    search.best_start = inc.start;

    search.dfs(1, 0);
    return finish(inst, search.best, search.best_start, search.exhausted, search.nodes);
}

BigInt LexObjective::weight_sum() const {
    BigInt sum = 0;
    for (int c : profile) sum += BigInt(1) << c;
    return sum;
}

bool operator<(const LexObjective& a, const LexObjective& b) {
    if (a.machines != b.machines) return a.machines < b.machines;
    return a.profile < b.profile;
}

bool operator==(const LexObjective& a, const LexObjective& b) {
    return a.machines == b.machines && a.profile == b.profile;
}

LexObjective lex_objective(const Schedule& sched) {
    LexObjective obj;
    obj.machines = sched.machine ? sched.machines_used()
                                 : sweep_machine_count(sched.start, sched.proc);
    for (int j = 0; j < sched.n(); ++j) obj.profile.push_back(sched.completion(j));
    std::sort(obj.profile.begin(), obj.profile.end(), std::greater<int>());
    return obj;
}

int min_machines(const Instance& inst, long long deadline, const SearchConfig& cfg) {
    if (inst.n() == 0) return 0;
    SearchResult opt = branch_and_bound_opt(inst, cfg);
    if (opt.status != SearchStatus::Optimal)
        throw std::runtime_error("makespan precheck exceeded the node limit");
    if (opt.makespan > deadline)
        throw DeadlineInfeasible(opt.makespan, "no schedule meets the deadline");

    std::int64_t nodes = 0;
    long long vmin = (deadline > 0) ? (inst.total_work() + deadline - 1) / deadline : 1;
    for (int v = std::max<long long>(1, vmin); v <= inst.m(); ++v) {
        FeasSearcher feas(inst, v, deadline, cfg.node_limit, nodes);
        feas.dfs(1);
        if (feas.found) return v;
    }
    throw std::logic_error("capacity m is always sufficient for a met deadline");
}

LexResult exact_lex(const Instance& inst, long long deadline, const SearchConfig& cfg) {
    LexResult result;
    if (inst.n() == 0) {
        result.schedule = Schedule{{}, {}, std::vector<int>{}};
        return result;
    }
    SearchResult opt = branch_and_bound_opt(inst, cfg);
    if (opt.status != SearchStatus::Optimal)
        throw std::runtime_error("makespan precheck exceeded the node limit");
    if (opt.makespan > deadline)
        throw DeadlineInfeasible(opt.makespan, "no schedule meets the deadline");

    std::int64_t nodes = opt.nodes;
    long long vmin = (deadline > 0) ? (inst.total_work() + deadline - 1) / deadline : 1;
    std::vector<int> seed_start;
    int v = 0;
    for (int cap = std::max<long long>(1, vmin); cap <= inst.m(); ++cap) {
        FeasSearcher feas(inst, cap, deadline, cfg.node_limit, nodes);
        feas.dfs(1);
        if (feas.found) {
            v = cap;
            seed_start = feas.found_start;
            break;
        }
    }
    if (v == 0) throw std::logic_error("capacity m must admit the optimal schedule");

    std::vector<int> seed_profile;
    for (int j = 0; j < inst.n(); ++j) seed_profile.push_back(seed_start[j] + inst.p(j));
    std::sort(seed_profile.begin(), seed_profile.end(), std::greater<int>());

    LexSearcher lex(inst, v, deadline, cfg.node_limit, nodes, seed_profile, seed_start);
    lex.dfs(1);

    Schedule sched = assign_machines(inst, lex.best_start);
    result.objective.machines = v;
    result.objective.profile = lex.incumbent;
    result.schedule = std::move(sched);
    result.status = SearchStatus::Optimal;
    result.nodes = nodes;
    return result;
}

std::pair<Instance, long long> from_three_partition(const std::vector<long long>& a,
                                                    long long B) {
    if (a.empty() || a.size() % 3 != 0)
        throw std::invalid_argument("need 3m items");
    long long n = static_cast<long long>(a.size());
    long long m = n / 3;
    long long sum = std::accumulate(a.begin(), a.end(), 0LL);
    if (sum != m * B)
        throw std::invalid_argument("item sum must equal mB");
    for (long long v : a)
        if (4 * v < B || 2 * v > B)
            throw std::invalid_argument("items must lie in [B/4, B/2]");
    if (n * n <= 3 * n)
        throw std::invalid_argument("need more than one triple");

    std::vector<int> p;
    p.reserve(a.size());
    for (long long v : a) p.push_back(static_cast<int>(n * n * v));
    return {Instance(static_cast<int>(m), 1, std::move(p)), n * n * B + n * n};
}

Instance tight_instance_lpt(int m, int p) {
    if (m < 2 || p <= m)
        throw std::invalid_argument("need p > m >= 2");
    std::vector<int> proc(static_cast<size_t>(m) * (m - 1), p);
    proc.insert(proc.end(), static_cast<size_t>(m) * (p - m), 1);
    return Instance(m, 1, std::move(proc));
}

Instance lpt_long_gap_instance(int m) {
    if (m < 2) throw std::invalid_argument("need m >= 2");
    std::vector<int> proc;
    for (int j = 1; j <= m; ++j) proc.push_back(2 * m - j);
    proc.push_back(m);
    return Instance(m, 1, std::move(proc));
}

}  // namespace bjsp
