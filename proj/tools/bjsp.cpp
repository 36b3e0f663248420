#include "bjsp/bounds.hpp"
#include "bjsp/exact.hpp"
#include "bjsp/greedy.hpp"
#include "bjsp/harness.hpp"
#include "bjsp/json_io.hpp"
#include "bjsp/milp.hpp"
#include "bjsp/robust.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    const char* env = std::getenv("BJSP_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 0;
}

void deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        bjsp::save_text(out_path, text);
}

bjsp::Rational theta_or_default(const std::string& theta_text, int n, int periods) {
    if (!theta_text.empty()) return bjsp::parse_rational(theta_text);
    // small enough that the machine term dominates the weight tail
    return bjsp::Rational(bjsp::BigInt(1),
                          bjsp::BigInt(std::max(1, n)) * (bjsp::BigInt(1) << (periods + 1)));
}

int run(int argc, char** argv) {
    CLI::App app{"Bounded-job-start scheduling toolkit"};
    app.require_subcommand(1);

    std::string instance_path, out_path, theta_text, algo = "lpt", form = "bjsp";
    std::string baseline_out;
    std::uint64_t seed = default_seed();
    long long deadline = 0, horizon = 0;
    int periods = 8, scenarios = 10, pool_size = 20, instances = 10, g_override = 0;
    std::string f_text = "2";
    std::vector<int> g_values;

    auto* solve = app.add_subcommand("solve", "run a scheduling algorithm");
    solve->add_option("--algo", algo, "algorithm")
        ->check(CLI::IsMember({"lpt", "lspt", "lsm", "exact"}));
    solve->add_option("--instance", instance_path, "instance JSON")->required();
    solve->add_option("--out", out_path, "output path (default stdout)");

    auto* bound = app.add_subcommand("bound", "print lower bounds");
    bound->add_option("--instance", instance_path)->required();
    bound->add_option("--out", out_path);

    auto* emit = app.add_subcommand("emit-lp", "write a model in CPLEX-LP format");
    emit->add_option("--instance", instance_path)->required();
    emit->add_option("--out", out_path)->required();
    emit->add_option("--form", form)->check(CLI::IsMember({"bjsp", "lexopt"}));
    emit->add_option("--horizon", horizon, "slot count (bjsp form)");
    emit->add_option("--deadline", deadline, "deadline (lexopt form)");
    emit->add_option("--theta", theta_text, "weight multiplier, rational");
    emit->add_option("--periods", periods, "weight periods (lexopt form)");

    auto* robust = app.add_subcommand("robust-run", "two-stage robust pipeline");
    robust->add_option("--instance", instance_path)->required();
    robust->add_option("--deadline", deadline)->required();
    robust->add_option("--F", f_text, "perturbation bound, rational");
    robust->add_option("--seed", seed);
    robust->add_option("--scenarios", scenarios);
    robust->add_option("--theta", theta_text);
    robust->add_option("--out", out_path);

    auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
    gen->add_option("--seed", seed);
    gen->add_option("--g", g_override, "fixed start budget (default percentile policy)");
    gen->add_option("--out", out_path);
    gen->add_option("--baseline-out", baseline_out, "also write the baseline schedule");

    auto* bench = app.add_subcommand("bench", "run a study, write CSV");
    std::string study;
    bench->add_option("study", study, "study kind")
        ->required()
        ->check(CLI::IsMember({"machine-count", "halving", "g-sweep",
                               "robustness-scatter", "ratio-study"}));
    bench->add_option("--out", out_path);
    bench->add_option("--seed", seed);
    bench->add_option("--instances", instances);
    bench->add_option("--pool", pool_size);
    bench->add_option("--scenarios", scenarios);
    bench->add_option("--F", f_text);
    bench->add_option("--deadline", deadline);
    bench->add_option("--g", g_values, "g values (g-sweep)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (solve->parsed()) {
        bjsp::Instance inst = bjsp::load_instance(instance_path);
        bjsp::Schedule sched;
        if (algo == "lpt") {
            sched = bjsp::lpt(inst);
        } else if (algo == "lspt") {
            sched = bjsp::lspt(inst);
        } else if (algo == "lsm") {
            sched = bjsp::lsm(inst).schedule;
        } else {
            auto result = bjsp::branch_and_bound_opt(inst);
            if (result.status != bjsp::SearchStatus::Optimal || !result.schedule) {
                std::cerr << "search ended without a proven optimum\n";
                return kExitInfeasible;
            }
            sched = *result.schedule;
        }
        deliver(bjsp::schedule_to_json(bjsp::assign_machines(inst, sched.start)), out_path);
        return kExitOk;
    }

    if (bound->parsed()) {
        bjsp::Instance inst = bjsp::load_instance(instance_path);
        bjsp::Bounds bounds = bjsp::compute_bounds(inst);
        nlohmann::ordered_json doc;
        doc["basic"] = bounds.basic_lb;
        if (bounds.long_lb) doc["long"] = bjsp::rational_to_string(*bounds.long_lb);
        doc["class"] = bjsp::to_string(bounds.classification);
        deliver(doc.dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (emit->parsed()) {
        bjsp::Instance inst = bjsp::load_instance(instance_path);
        if (form == "bjsp") {
            long long tau = horizon > 0 ? horizon : inst.default_horizon();
            bjsp::write_lp_file(bjsp::emit_bjsp_model(inst, tau), out_path);
        } else {
            if (deadline <= 0) {
                std::cerr << "lexopt form needs --deadline\n";
                return kExitUsage;
            }
            auto emission = bjsp::emit_lexopt_model(
                inst, deadline, theta_or_default(theta_text, inst.n(), periods), periods);
            if (emission.deadline_warning)
                std::cerr << "warning: deadline below the minimum feasible makespan\n";
            bjsp::write_lp_file(emission.model, out_path);
        }
        return kExitOk;
    }

    if (robust->parsed()) {
        bjsp::Instance inst = bjsp::load_instance(instance_path);
        bjsp::Rational theta = theta_or_default(theta_text, inst.n(), periods);
        auto stage1_result =
            bjsp::stage1(inst, deadline, theta, bjsp::Stage1Backend::Exact);
        auto scenario_list =
            bjsp::sample_scenarios(inst, bjsp::parse_rational(f_text), scenarios, seed);
        std::string csv = "scenario_id,V_recovered,price,deadline_violation\n";
        for (int s = 0; s < static_cast<int>(scenario_list.size()); ++s) {
            bjsp::Instance perturbed = bjsp::perturb(inst, scenario_list[s]);
            bjsp::Schedule recovered =
                bjsp::stage2_recover(*stage1_result.schedule, perturbed);
            auto price = bjsp::price_of_robustness(recovered, perturbed, deadline);
            csv += std::to_string(s + 1) + "," +
                   std::to_string(recovered.machines_used()) + "," +
                   bjsp::rational_to_string(price.price) + "," +
                   (bjsp::makespan(recovered) > deadline ? "1" : "0") + "\n";
        }
        deliver(csv, out_path);
        return kExitOk;
    }

    if (gen->parsed()) {
        bjsp::GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.g_fixed = g_override;
        bjsp::GeneratedInstance generated = bjsp::generate(cfg);
        deliver(bjsp::instance_to_json(generated.instance), out_path);
        if (!baseline_out.empty())
            bjsp::save_text(baseline_out, bjsp::schedule_to_json(generated.baseline));
        return kExitOk;
    }

    // bench
    bjsp::StudyConfig cfg;
    cfg.generator.seed = seed;
    cfg.instances = instances;
    cfg.deadline = deadline;
    cfg.pool_size = pool_size;
    cfg.scenario_count = scenarios;
    cfg.perturbation_bound = bjsp::parse_rational(f_text);
    cfg.g_values = g_values;
    std::string csv;
    if (study == "machine-count")
        csv = bjsp::run_machine_count_study(cfg);
    else if (study == "halving")
        csv = bjsp::run_halving_study(cfg);
    else if (study == "g-sweep")
        csv = bjsp::run_g_sweep(cfg.g_values.empty()
                                    ? [&] { auto c = cfg; c.g_values = {1, 2, 3}; return c; }()
                                    : cfg);
    else if (study == "robustness-scatter")
        csv = bjsp::run_robustness_scatter(cfg);
    else
        csv = bjsp::run_ratio_study(bjsp::RatioStudyConfig{});
    deliver(csv, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bjsp::DeadlineInfeasible& e) {
        std::cerr << e.what() << " (minimum feasible makespan " << e.min_makespan << ")\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    }
}
