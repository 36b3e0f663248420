#pragma once

#include "bjsp/instance.hpp"
#include "bjsp/rational.hpp"
#include "bjsp/schedule.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bjsp {

/// Synthetic stand-in for delivery-office data: morning-wave starts, 30-min
/// minimum durations at delta = 15, heavy-tailed duration mixture.
struct GeneratorConfig {
    std::uint64_t seed = 0;
    int n_min = 6;
    int n_max = 10;
    int slot_minutes = 15;       // delta
    int horizon_minutes = 780;   // 13h window like the published offices
    int wave_minutes = 120;      // morning wave for baseline starts
    int g_fixed = 0;             // > 0: use as-is; 0: percentile policy
    double g_percentile = 0.95;  // of baseline per-slot start counts
};

struct GeneratedInstance {
    Instance instance;
    Schedule baseline;  // feasible "historical-like" dispatch
    std::string id;
};

GeneratedInstance generate(const GeneratorConfig& cfg);

struct StudyConfig {
    GeneratorConfig generator;
    int instances = 10;
    long long deadline = 0;      // 0: per-instance baseline makespan
    std::vector<int> g_values;   // g-sweep only
    int pool_size = 20;
    int scenario_count = 50;
    Rational perturbation_bound = Rational(2);
    Rational theta;              // 0: lexicographic-free machine minimization
    bool compute_price = false;
};

/// Each study returns CSV text (header + one row per record), deterministic
/// per (config, seed).
std::string run_machine_count_study(const StudyConfig& cfg);
std::string run_halving_study(const StudyConfig& cfg);
std::string run_g_sweep(const StudyConfig& cfg);
std::string run_robustness_scatter(const StudyConfig& cfg);

struct RatioStudyConfig {
    int n_max = 6;
    int p_max = 4;
    int m_max = 3;
    std::vector<int> g_values = {1, 2};
};

/// Exhaustive sweep of the enumeration box; per (algorithm, class) the
/// maximum observed T/OPT with a witness instance.
std::string run_ratio_study(const RatioStudyConfig& cfg);

/// Spearman rank correlation (average-rank ties), for the scatter criterion.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace bjsp
