#include "bjsp/robust.hpp"

#include "bjsp/greedy.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace bjsp {

namespace {

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    // positive operands only
    return (num + den - 1) / den;
}

// uniform in [0, 1) from the generator's raw 64-bit output; independent of
// any library distribution so streams are identical across platforms
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Rational rationalize(double value, long long denom) {
    long long num = std::llround(value * static_cast<double>(denom));
    return Rational(BigInt(num), BigInt(denom));
}

}  // namespace

Instance perturb(const Instance& inst, const Scenario& scenario) {
    if (static_cast<int>(scenario.factors.size()) != inst.n())
        throw std::invalid_argument("scenario must carry one factor per job");
    if (scenario.bound < 1) throw std::invalid_argument("perturbation bound must be >= 1");
    Rational lo = Rational(1) / scenario.bound;
    std::vector<int> p(inst.n());
    for (int j = 0; j < inst.n(); ++j) {
        const Rational& f = scenario.factors[j];
        if (f < lo || f > scenario.bound)
            throw std::invalid_argument("factor outside [1/F, F] for job " +
                                        std::to_string(j + 1));
        Rational scaled = f * inst.p(j);
        BigInt up = ceil_div(numerator(scaled), denominator(scaled));
        p[j] = std::max(1, static_cast<int>(up));
    }
    return Instance(inst.m(), inst.g(), std::move(p));
}

std::vector<Scenario> sample_scenarios(const Instance& inst, const Rational& F,
                                       int k, std::uint64_t seed) {
    if (F < 1) throw std::invalid_argument("perturbation bound must be >= 1");
    if (k < 0) throw std::invalid_argument("scenario count must be >= 0");
    std::mt19937_64 rng(seed);
    Rational lo = Rational(1) / F;
    double log_f = std::log(static_cast<double>(F));

    std::vector<Scenario> out;
    out.reserve(k);
    for (int s = 0; s < k; ++s) {
        Scenario sc;
        sc.bound = F;
        sc.factors.resize(inst.n());
        for (int j = 0; j < inst.n(); ++j) {
            if (F == 1) {
                sc.factors[j] = Rational(1);
                rng();  // keep the stream aligned with F > 1
                continue;
            }
            double u = 2.0 * unit_draw(rng) - 1.0;  // F^u, u uniform on [-1, 1]
            Rational f = rationalize(std::exp(u * log_f), 1'000'000);
            sc.factors[j] = std::clamp(f, lo, F);
        }
        out.push_back(std::move(sc));
    }
    return out;
}

BigInt CharacteristicValue::weight_sum() const {
    BigInt sum = 0;
    for (int c : profile) sum += BigInt(1) << c;
    return sum;
}

Rational CharacteristicValue::numeric_value() const {
    return Rational(machines) + theta * Rational(weight_sum());
}

bool operator<(const CharacteristicValue& a, const CharacteristicValue& b) {
    if (a.machines != b.machines) return a.machines < b.machines;
    return a.profile < b.profile;
}

CharacteristicValue characteristic_value(const Instance& inst, const Schedule& sched,
                                         const Rational& theta) {
    Schedule assigned = sched.machine ? sched : assign_machines(inst, sched.start);
    CharacteristicValue value;
    value.machines = assigned.machines_used();
    value.theta = theta;
    for (int j = 0; j < assigned.n(); ++j) value.profile.push_back(assigned.completion(j));
    std::sort(value.profile.begin(), value.profile.end(), std::greater<int>());
    return value;
}

Stage1Result stage1(const Instance& inst, long long deadline, const Rational& theta,
                    Stage1Backend backend, const std::string& out_path, int periods) {
    Stage1Result result;
    if (backend == Stage1Backend::Exact) {
        result.schedule = exact_lex(inst, deadline).schedule;
    } else {
        if (out_path.empty()) throw std::invalid_argument("emit backend needs a path");
        LexoptEmission emission = emit_lexopt_model(inst, deadline, theta, periods);
        write_lp_file(emission.model, out_path);
        result.lp_path = out_path;
    }
    return result;
}

Schedule stage2_recover(const Schedule& initial, const Instance& perturbed) {
    if (initial.n() != perturbed.n())
        throw std::invalid_argument("perturbed instance must keep the job set");
    return assign_machines(perturbed, initial.start);
}

PriceOfRobustness price_of_robustness(const Schedule& recovered, const Instance& perturbed,
                                      long long deadline) {
    PriceOfRobustness result;
    int used = recovered.machine ? recovered.machines_used()
                                 : assign_machines(perturbed, recovered.start).machines_used();
    int v_star;
    try {
        v_star = min_machines(perturbed, deadline);
    } catch (const DeadlineInfeasible& e) {
        result.deadline_infeasible = true;
        v_star = min_machines(perturbed, e.min_makespan);
    }
    result.price = Rational(used) / Rational(v_star);
    return result;
}

std::vector<Schedule> solution_pool(const Instance& inst, long long deadline, int k,
                                    std::uint64_t seed) {
    std::vector<Schedule> pool;
    if (k <= 0) return pool;
    std::set<std::vector<int>> seen;
    auto push = [&](Schedule sched) {
        if (makespan(sched) > deadline) return;
        if (!seen.insert(sched.start).second) return;
        pool.push_back(std::move(sched));
    };

    if (inst.n() == 0) {
        push(Schedule{{}, {}, std::nullopt});
        return pool;
    }
    push(lpt(inst));

    std::mt19937_64 rng(seed);
    long long horizon = std::min(deadline, inst.default_horizon());
    int attempts = 0;
    int attempt_cap = 200 + 60 * k;
    while (static_cast<int>(pool.size()) < k && attempts < attempt_cap) {
        ++attempts;
        // draws under a random machine budget spread the pool across machine
        // counts, mirroring the diversity a solver's solution pool provides;
        // capped draws stay feasible for the real instance
        int cap = 1 + static_cast<int>(rng() % inst.m());
        std::vector<int> order(inst.n());
        std::iota(order.begin(), order.end(), 0);
        for (int i = inst.n() - 1; i > 0; --i)
            std::swap(order[i], order[rng() % (i + 1)]);

        std::vector<int> alive(horizon + 2, 0), begun(horizon + 2, 0);
        Schedule sched;
        sched.proc = inst.p();
        sched.start.assign(inst.n(), 0);
        bool ok = true;
        for (int j : order) {
            std::vector<int> options;
            for (long long s = 1; s + inst.p(j) - 1 <= horizon && options.size() < 4; ++s) {
                if (begun[s] >= inst.g()) continue;
                bool fits = true;
                for (long long u = s; u < s + inst.p(j); ++u)
                    if (alive[u] >= cap) { fits = false; break; }
                if (fits) options.push_back(static_cast<int>(s));
            }
            if (options.empty()) { ok = false; break; }
            int pick = options[std::min<std::size_t>(rng() % 3, options.size() - 1)];
            sched.start[j] = pick;
            ++begun[pick];
            for (int u = pick; u < pick + inst.p(j); ++u) ++alive[u];
        }
        if (!ok) continue;
        push(compactify(Instance(cap, inst.g(), inst.p()), std::move(sched)));
    }
    return pool;
}

std::vector<MetricsRow> normalized_metrics(const Instance& inst,
                                           const std::vector<Schedule>& pool,
                                           const std::vector<Scenario>& scenarios,
                                           const Rational& theta, long long deadline,
                                           const MetricsOptions& opts) {
    if (pool.empty()) throw std::invalid_argument("pool must be non-empty");
    int n_sched = static_cast<int>(pool.size());
    int n_scen = static_cast<int>(scenarios.size());

    std::vector<Rational> f_value(n_sched);
    for (int i = 0; i < n_sched; ++i)
        f_value[i] = characteristic_value(inst, pool[i], theta).numeric_value();
    Rational f_min = *std::min_element(f_value.begin(), f_value.end());

    // recovered machine counts and deadline misses, per (schedule, scenario)
    std::vector<std::vector<int>> used(n_sched, std::vector<int>(n_scen, 0));
    std::vector<int> misses(n_sched, 0);
    std::vector<Rational> v_star(n_scen, Rational(1));
    for (int s = 0; s < n_scen; ++s) {
        Instance perturbed = perturb(inst, scenarios[s]);
        for (int i = 0; i < n_sched; ++i) {
            Schedule recovered = stage2_recover(pool[i], perturbed);
            used[i][s] = recovered.machines_used();
            if (makespan(recovered) > deadline) ++misses[i];
        }
        if (opts.compute_price) {
            try {
                v_star[s] = Rational(min_machines(perturbed, deadline));
            } catch (const DeadlineInfeasible& e) {
                v_star[s] = Rational(min_machines(perturbed, e.min_makespan));
            }
        }
    }

    std::vector<MetricsRow> rows(n_sched);
    for (int i = 0; i < n_sched; ++i) {
        MetricsRow& row = rows[i];
        row.schedule_id = i + 1;
        row.f_norm = f_min == 0 ? Rational(1) : f_value[i] / f_min;
        row.deadline_violations = misses[i];
        Rational v_sum(0), price_sum(0);
        for (int s = 0; s < n_scen; ++s) {
            int best = used[0][s];
            for (int q = 1; q < n_sched; ++q) best = std::min(best, used[q][s]);
            v_sum += Rational(used[i][s]) / Rational(best);
            if (opts.compute_price) price_sum += Rational(used[i][s]) / v_star[s];
        }
        row.v_norm = n_scen > 0 ? v_sum / n_scen : Rational(1);
        row.price = opts.compute_price && n_scen > 0 ? price_sum / n_scen : Rational(0);
    }
    return rows;
}

std::string scenario_to_json(const Scenario& scenario) {
    nlohmann::ordered_json doc;
    doc["F"] = rational_to_string(scenario.bound);
    nlohmann::ordered_json factors = nlohmann::ordered_json::object();
    for (size_t j = 0; j < scenario.factors.size(); ++j)
        factors[std::to_string(j + 1)] = rational_to_string(scenario.factors[j]);
    doc["factors"] = factors;
    return doc.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    Scenario sc;
    sc.bound = parse_rational(doc.at("F").get<std::string>());
    const auto& factors = doc.at("factors");
    sc.factors.resize(factors.size());
    for (auto it = factors.begin(); it != factors.end(); ++it) {
        int j = std::stoi(it.key());
        if (j < 1 || j > static_cast<int>(sc.factors.size()))
            throw std::invalid_argument("factor keys must be 1..n");
        sc.factors[j - 1] = parse_rational(it.value().get<std::string>());
    }
    return sc;
}

}  // namespace bjsp
