#include "bjsp/harness.hpp"

#include "bjsp/bounds.hpp"
#include "bjsp/exact.hpp"
#include "bjsp/greedy.hpp"
#include "bjsp/robust.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace bjsp {

namespace {

std::uint64_t instance_seed(std::uint64_t base, int index) {
    return base + 7919ULL * static_cast<std::uint64_t>(index);
}

GeneratedInstance generate_indexed(const GeneratorConfig& base, int index) {
    GeneratorConfig cfg = base;
    cfg.seed = instance_seed(base.seed, index);
    GeneratedInstance gen = generate(cfg);
    gen.id = "inst-" + std::to_string(index);
    return gen;
}

long long study_deadline(const StudyConfig& cfg, const GeneratedInstance& gen) {
    // the baseline makespan is the only deadline every study row can meet
    return cfg.deadline > 0 ? cfg.deadline : makespan(gen.baseline);
}

std::string flagged_min_machines(const Instance& inst, long long deadline) {
    try {
        return std::to_string(min_machines(inst, deadline));
    } catch (const DeadlineInfeasible&) {
        return "infeasible";
    }
}

}  // namespace

GeneratedInstance generate(const GeneratorConfig& cfg) {
    if (cfg.slot_minutes < 1 || cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("generator configuration out of range");
    std::mt19937_64 rng(cfg.seed);

    int n = cfg.n_min + static_cast<int>(rng() % (cfg.n_max - cfg.n_min + 1));
    std::vector<int> p(n);
    for (int j = 0; j < n; ++j) {
        // duration mixture: mostly 30..120 minutes, occasional long tail
        int minutes = rng() % 10 < 8
                          ? 30 + static_cast<int>(rng() % 91)
                          : 121 + static_cast<int>(rng() % 240);
        minutes = std::min(minutes, cfg.horizon_minutes);
        p[j] = (minutes + cfg.slot_minutes - 1) / cfg.slot_minutes;
    }

    // desired morning-wave starts, floored to slot boundaries
    int wave_slots = std::max(1, cfg.wave_minutes / cfg.slot_minutes);
    std::vector<int> desired(n);
    for (int j = 0; j < n; ++j) desired[j] = 1 + static_cast<int>(rng() % wave_slots);

    int g;
    if (cfg.g_fixed > 0) {
        g = cfg.g_fixed;
    } else {
        std::vector<int> counts(wave_slots + 1, 0);
        for (int d : desired) ++counts[d];
        std::vector<int> nonzero;
        for (int c : counts)
            if (c > 0) nonzero.push_back(c);
        std::sort(nonzero.begin(), nonzero.end());
        int idx = static_cast<int>(
            std::ceil(cfg.g_percentile * static_cast<double>(nonzero.size())));
        idx = std::clamp(idx, 1, static_cast<int>(nonzero.size()));
        g = std::max(1, nonzero[idx - 1]);
    }

    // repair desired starts to the earliest slot with a free start budget
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return desired[a] < desired[b]; });
    long long horizon = std::accumulate(p.begin(), p.end(), 0LL) + n + wave_slots;
    std::vector<int> begun(horizon + 2, 0);
    std::vector<int> start(n, 0);
    for (int j : order) {
        int t = desired[j];
        while (begun[t] >= g) ++t;
        start[j] = t;
        ++begun[t];
    }

    Schedule baseline;
    baseline.start = start;
    baseline.proc = p;
    auto alive = alive_counts(baseline, makespan(baseline));
    int m = *std::max_element(alive.begin() + 1, alive.end());

    GeneratedInstance out{Instance(m, g, p), Schedule{}, "inst-" + std::to_string(cfg.seed)};
    out.baseline = assign_machines(out.instance, start);
    return out;
}

std::string run_machine_count_study(const StudyConfig& cfg) {
    std::ostringstream out;
    out << "instance_id,V_hist,V_opt\n";
    for (int i = 1; i <= cfg.instances; ++i) {
        GeneratedInstance gen = generate_indexed(cfg.generator, i);
        long long deadline = study_deadline(cfg, gen);
        int v_hist = gen.baseline.machines_used();
        out << gen.id << "," << v_hist << ","
            << flagged_min_machines(gen.instance, deadline) << "\n";
    }
    return out.str();
}

std::string run_halving_study(const StudyConfig& cfg) {
    std::ostringstream out;
    out << "instance_id,V_opt,V_opt_halved\n";
    for (int i = 1; i <= cfg.instances; ++i) {
        GeneratedInstance gen = generate_indexed(cfg.generator, i);
        long long deadline = study_deadline(cfg, gen);
        Scenario halving;
        halving.bound = Rational(2);
        halving.factors.assign(gen.instance.n(), Rational(BigInt(1), BigInt(2)));
        Instance halved = perturb(gen.instance, halving);
        out << gen.id << "," << flagged_min_machines(gen.instance, deadline) << ","
            << flagged_min_machines(halved, deadline) << "\n";
    }
    return out.str();
}

std::string run_g_sweep(const StudyConfig& cfg) {
    if (cfg.g_values.empty()) throw std::invalid_argument("g sweep needs g values");
    std::ostringstream out;
    out << "instance_id,g,V_opt\n";
    for (int i = 1; i <= cfg.instances; ++i) {
        GeneratedInstance gen = generate_indexed(cfg.generator, i);
        long long deadline = study_deadline(cfg, gen);
        for (int g : cfg.g_values) {
            Instance swept(gen.instance.m(), g, gen.instance.p());
            out << gen.id << "," << g << "," << flagged_min_machines(swept, deadline)
                << "\n";
        }
    }
    return out.str();
}

std::string run_robustness_scatter(const StudyConfig& cfg) {
    std::ostringstream out;
    out << "schedule_id,F_norm,V_norm,price,deadline_violations\n";
    for (int i = 1; i <= cfg.instances; ++i) {
        GeneratedInstance gen = generate_indexed(cfg.generator, i);
        long long deadline = study_deadline(cfg, gen);
        std::uint64_t seed = instance_seed(cfg.generator.seed, i);

        auto pool = solution_pool(gen.instance, deadline, cfg.pool_size,
                                  seed ^ 0x9e3779b97f4a7c15ULL);
        auto scenarios = sample_scenarios(gen.instance, cfg.perturbation_bound,
                                          cfg.scenario_count, seed + 1);
        // theta = 0 requests lexicographic emulation: small enough that the
        // machine count dominates every completion-weight total
        Rational theta = cfg.theta;
        if (theta == 0)
            theta = Rational(BigInt(1),
                             BigInt(gen.instance.n()) * (BigInt(1) << (deadline + 1)));
        MetricsOptions opts;
        opts.compute_price = cfg.compute_price;
        for (const auto& row :
             normalized_metrics(gen.instance, pool, scenarios, theta, deadline, opts)) {
            out << row.schedule_id << "," << rational_to_decimal(row.f_norm) << ","
                << rational_to_decimal(row.v_norm) << ","
                << rational_to_decimal(row.price) << "," << row.deadline_violations
                << "\n";
        }
    }
    return out.str();
}

std::string run_ratio_study(const RatioStudyConfig& cfg) {
    struct Entry {
        Rational ratio = Rational(0);
        std::string witness;
    };
    const std::vector<std::string> algos = {"lpt", "lspt", "lsm"};
    std::map<std::pair<std::string, std::string>, Entry> best;

    std::vector<int> p;
    auto describe = [&](const Instance& inst) {
        std::string s = "m=" + std::to_string(inst.m()) + ";g=" +
                        std::to_string(inst.g()) + ";p=[";
        for (int j = 0; j < inst.n(); ++j)
            s += (j ? " " : "") + std::to_string(inst.p(j));
        return s + "]";
    };
    auto visit = [&](const Instance& inst) {
        SearchResult opt = branch_and_bound_opt(inst);
        for (const auto& algo : algos) {
            Schedule sched = algo == "lpt"    ? lpt(inst)
                             : algo == "lspt" ? lspt(inst)
                                              : lsm(inst).schedule;
            Rational ratio = Rational(makespan(sched)) / Rational(opt.makespan);
            // ratio guarantees in the source material differ by g, so class
            // buckets carry the g value
            std::string cls = to_string(classify(inst)) + "-g=" + std::to_string(inst.g());
            Entry& entry = best[{algo, cls}];
            if (ratio > entry.ratio) entry = {ratio, describe(inst)};
        }
    };
    // non-increasing p vectors enumerate every multiset once
    std::function<void(int, int)> enumerate = [&](int remaining, int max_value) {
        if (!p.empty()) {
            for (int m = 1; m <= cfg.m_max; ++m)
                for (int g : cfg.g_values) visit(Instance(m, g, p));
        }
        if (remaining == 0) return;
        for (int v = max_value; v >= 1; --v) {
            p.push_back(v);
            enumerate(remaining - 1, v);
            p.pop_back();
        }
    };
    enumerate(cfg.n_max, cfg.p_max);

    std::ostringstream out;
    out << "algo,class,max_ratio,witness_instance\n";
    for (const auto& [key, entry] : best)
        out << key.first << "," << key.second << "," << rational_to_string(entry.ratio)
            << "," << entry.witness << "\n";
    return out.str();
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("need two equal-length samples");
    auto ranks = [](const std::vector<double>& v) {
        int n = static_cast<int>(v.size());
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return v[x] < v[y]; });
        std::vector<double> r(n);
        int i = 0;
        while (i < n) {
            int j = i;
            while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
            double avg = (i + j) / 2.0 + 1.0;  // average rank across the tie run
            for (int q = i; q <= j; ++q) r[order[q]] = avg;
            i = j + 1;
        }
        return r;
    };
    std::vector<double> ra = ranks(a), rb = ranks(b);
    int n = static_cast<int>(a.size());
    double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double cov = 0, va = 0, vb = 0;
    for (int i = 0; i < n; ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va == 0 || vb == 0) return 0.0;
    return cov / std::sqrt(va * vb);
}

}  // namespace bjsp
