#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bjsp/exact.hpp"
#include "bjsp/greedy.hpp"
#include "bjsp/robust.hpp"
#include "bjsp/schedule.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

using namespace bjsp;

namespace {

Scenario uniform_scenario(int n, const Rational& bound, const Rational& factor) {
    Scenario sc;
    sc.bound = bound;
    sc.factors.assign(n, factor);
    return sc;
}

}  // namespace

TEST_CASE("perturb rounds up and clamps to unit durations") {
    Instance inst(2, 1, {4, 6});
    CHECK(perturb(inst, uniform_scenario(2, Rational(2), Rational(1))).p() ==
          std::vector<int>{4, 6});
    CHECK(perturb(inst, uniform_scenario(2, Rational(2), Rational(1, 2))).p() ==
          std::vector<int>{2, 3});
    Instance one(1, 1, {3});
    CHECK(perturb(one, uniform_scenario(1, Rational(2), Rational(7, 5))).p() ==
          std::vector<int>{5});  // ceil(21/5)
    Instance unit(1, 1, {1});
    CHECK(perturb(unit, uniform_scenario(1, Rational(2), Rational(1, 2))).p() ==
          std::vector<int>{1});

    CHECK_THROWS_AS(perturb(inst, uniform_scenario(2, Rational(2), Rational(3))),
                    std::invalid_argument);
    CHECK_THROWS_AS(perturb(inst, uniform_scenario(2, Rational(2), Rational(1, 3))),
                    std::invalid_argument);
    CHECK_THROWS_AS(perturb(inst, uniform_scenario(1, Rational(2), Rational(1))),
                    std::invalid_argument);
    CHECK(perturb(inst, uniform_scenario(2, Rational(2), Rational(1))).m() == inst.m());
    CHECK(perturb(inst, uniform_scenario(2, Rational(2), Rational(1))).g() == inst.g());
}

TEST_CASE("sample_scenarios stays in range and is seed-deterministic") {
    Instance inst(2, 1, {3, 2, 4});
    {
        auto scenarios = sample_scenarios(inst, Rational(1), 5, 99);
        REQUIRE(scenarios.size() == 5);
        for (const auto& sc : scenarios)
            for (const auto& f : sc.factors) CHECK(f == Rational(1));
    }
    {
        auto a = sample_scenarios(inst, Rational(2), 40, 7);
        auto b = sample_scenarios(inst, Rational(2), 40, 7);
        auto c = sample_scenarios(inst, Rational(2), 40, 8);
        REQUIRE(a.size() == 40);
        bool all_equal = true, any_diff_seed = false;
        for (int s = 0; s < 40; ++s)
            for (int j = 0; j < 3; ++j) {
                if (a[s].factors[j] != b[s].factors[j]) all_equal = false;
                if (a[s].factors[j] != c[s].factors[j]) any_diff_seed = true;
                CHECK(a[s].factors[j] >= Rational(1, 2));
                CHECK(a[s].factors[j] <= Rational(2));
                CHECK(perturb(inst, a[s]).n() == 3);  // factors are acceptable
            }
        CHECK(all_equal);
        CHECK(any_diff_seed);
    }
    CHECK(sample_scenarios(inst, Rational(2), 0, 1).empty());
    CHECK_THROWS_AS(sample_scenarios(inst, Rational(1, 2), 1, 1), std::invalid_argument);
}

TEST_CASE("characteristic_value") {
    CharacteristicValue single{1, {6}, Rational(1)};
    CHECK(single.weight_sum() == BigInt(64));
    CHECK(single.numeric_value() == Rational(65));

    CharacteristicValue pair{1, {3, 2}, Rational(1)};
    CHECK(pair.weight_sum() == BigInt(12));
    CHECK(pair.numeric_value() == Rational(13));

    CHECK((CharacteristicValue{1, {3, 2}, Rational(1)} <
           CharacteristicValue{1, {4, 1}, Rational(1)}));
    CHECK((CharacteristicValue{1, {9}, Rational(1)} <
           CharacteristicValue{2, {2}, Rational(1)}));

    Instance inst(2, 2, {2, 1});
    Schedule sched;
    sched.start = {1, 1};
    sched.proc = inst.p();
    CharacteristicValue value = characteristic_value(inst, sched, Rational(1, 2));
    CHECK(value.machines == 2);
    CHECK(value.profile == std::vector<int>{3, 2});
    CHECK(value.numeric_value() == Rational(2) + Rational(12, 2));
}

TEST_CASE("small theta keeps the lexicographic and numeric orders aligned") {
    // distinct completions per profile so both orders compare the same bit sets
    std::mt19937_64 rng(53);
    Rational theta(BigInt(1), BigInt(1) << 24);  // < 1 / max weight below
    for (int it = 0; it < 100; ++it) {
        auto draw = [&] {
            std::vector<int> all(20);
            std::iota(all.begin(), all.end(), 1);
            std::shuffle(all.begin(), all.end(), rng);
            int n = 1 + static_cast<int>(rng() % 5);
            std::vector<int> profile(all.begin(), all.begin() + n);
            std::sort(profile.rbegin(), profile.rend());
            int machines = 1 + static_cast<int>(rng() % 3);
            return CharacteristicValue{machines, profile, theta};
        };
        CharacteristicValue a = draw(), b = draw();
        if (a < b) CHECK(a.numeric_value() < b.numeric_value());
        if (b < a) CHECK(b.numeric_value() < a.numeric_value());
    }
}

TEST_CASE("stage1 exact backend matches the lexicographic solver") {
    Instance inst(2, 1, {3, 3, 3});
    auto result = stage1(inst, 8, Rational(0), Stage1Backend::Exact);
    REQUIRE(result.schedule.has_value());
    LexResult direct = exact_lex(inst, 8);
    CHECK(result.schedule->start == direct.schedule.start);
    CHECK(!result.lp_path.has_value());
}

TEST_CASE("stage1 emit backend writes a stable model file") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "bjsp_stage1_test.lp";
    Instance inst(2, 1, {2, 1});
    auto result = stage1(inst, 5, Rational(1), Stage1Backend::Emit, path.string());
    REQUIRE(result.lp_path.has_value());
    std::ifstream in(path, std::ios::binary);
    std::string once((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(testutil::reparse_lp(once).has_sections);
    stage1(inst, 5, Rational(1), Stage1Backend::Emit, path.string());
    std::ifstream in2(path, std::ios::binary);
    std::string twice((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(once == twice);
    CHECK_THROWS_AS(stage1(inst, 5, Rational(1), Stage1Backend::Emit, ""),
                    std::invalid_argument);
    fs::remove(path);
}

TEST_CASE("stage2_recover keeps starts and reassigns machines") {
    Instance inst(2, 2, {2, 2});
    Schedule initial = assign_machines(inst, {1, 1});

    // identity perturbation preserves the machine count
    Schedule same = stage2_recover(initial, inst);
    CHECK(same.start == initial.start);
    CHECK(same.machines_used() == initial.machines_used());

    // m=1 hand trace: jobs at slots 1 and 4 need one machine until growth
    Instance narrow(1, 1, {3, 1});
    Schedule far = assign_machines(narrow, {1, 4});
    CHECK(far.machines_used() == 1);
    Instance grown(1, 1, {3, 1});
    Scenario grow = uniform_scenario(2, Rational(2), Rational(2));
    Schedule recovered = stage2_recover(far, perturb(narrow, grow));
    CHECK(recovered.start == far.start);
    CHECK(recovered.machines_used() == 2);  // first job now covers slot 4

    // shrinking durations never increases the recovered machine count
    std::mt19937_64 rng(59);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Instance rnd = testutil::random_instance(rng, 3, 2, n, 1, 6);
        Schedule sched = lpt(rnd);
        Scenario shrink = uniform_scenario(n, Rational(2), Rational(1, 2));
        CHECK(stage2_recover(sched, perturb(rnd, shrink)).machines_used() <=
              assign_machines(rnd, sched.start).machines_used());
    }

    CHECK_THROWS_AS(stage2_recover(initial, Instance(2, 2, {2})), std::invalid_argument);
}

TEST_CASE("price_of_robustness") {
    Instance inst(2, 1, {2, 2});
    Schedule sched = assign_machines(inst, lpt(inst).start);
    auto identity = price_of_robustness(sched, inst, makespan(sched));
    CHECK(identity.price == Rational(1));
    CHECK(!identity.deadline_infeasible);

    // sequential schedule kept under a loose deadline: pays double
    Instance pair(2, 1, {2, 2});
    Schedule seq = assign_machines(pair, {1, 2});
    CHECK(price_of_robustness(seq, pair, 5).price == Rational(2, 1));

    // impossible deadline falls back to the minimum-makespan machine count
    Instance tight(1, 1, {3, 3});
    Schedule s = lpt(tight);
    auto res = price_of_robustness(s, tight, 2);
    CHECK(res.deadline_infeasible);
    CHECK(res.price == Rational(1));
}

TEST_CASE("solution_pool draws distinct feasible deadline schedules") {
    Instance inst(3, 2, {3, 2, 2, 1});
    long long deadline = makespan(lpt(inst)) + 2;
    auto pool = solution_pool(inst, deadline, 8, 61);
    REQUIRE(!pool.empty());
    CHECK(pool[0].start == lpt(inst).start);
    std::set<std::vector<int>> starts;
    for (const auto& sched : pool) {
        CHECK(check_feasible(inst, sched).feasible());
        CHECK(makespan(sched) <= deadline);
        starts.insert(sched.start);
    }
    CHECK(starts.size() == pool.size());

    // tiny space: never more schedules than exist
    Instance small(2, 1, {1, 1});
    auto exhausted = solution_pool(small, 4, 50, 3);
    CHECK(exhausted.size() <= 6);
    for (const auto& sched : exhausted) CHECK(check_feasible(small, sched).feasible());

    // determinism per seed
    auto again = solution_pool(inst, deadline, 8, 61);
    REQUIRE(again.size() == pool.size());
    for (size_t i = 0; i < pool.size(); ++i) CHECK(again[i].start == pool[i].start);
}

TEST_CASE("normalized_metrics") {
    Instance inst(2, 1, {2, 2, 1});
    long long deadline = makespan(lpt(inst)) + 1;
    auto scenarios = sample_scenarios(inst, Rational(2), 6, 67);

    {
        // a singleton pool normalizes to all ones
        std::vector<Schedule> pool{lpt(inst)};
        auto rows = normalized_metrics(inst, pool, scenarios, Rational(1, 1024), deadline);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].schedule_id == 1);
        CHECK(rows[0].f_norm == Rational(1));
        CHECK(rows[0].v_norm == Rational(1));
        CHECK(rows[0].price >= Rational(1));
    }
    {
        auto pool = solution_pool(inst, deadline, 5, 71);
        auto rows = normalized_metrics(inst, pool, scenarios, Rational(1, 1024), deadline);
        REQUIRE(rows.size() == pool.size());
        bool f_hits_one = false;
        for (const auto& row : rows) {
            CHECK(row.f_norm >= Rational(1));
            CHECK(row.v_norm >= Rational(1));
            CHECK(row.deadline_violations <= static_cast<int>(scenarios.size()));
            if (row.f_norm == Rational(1)) f_hits_one = true;
        }
        CHECK(f_hits_one);

        MetricsOptions no_price;
        no_price.compute_price = false;
        auto cheap = normalized_metrics(inst, pool, scenarios, Rational(1, 1024),
                                        deadline, no_price);
        for (size_t i = 0; i < cheap.size(); ++i) {
            CHECK(cheap[i].price == Rational(0));
            CHECK(cheap[i].v_norm == rows[i].v_norm);
        }
    }
    CHECK_THROWS_AS(normalized_metrics(inst, {}, scenarios, Rational(0), deadline),
                    std::invalid_argument);
}

TEST_CASE("scenario JSON round-trip") {
    Scenario sc;
    sc.bound = Rational(2);
    sc.factors = {Rational(1), Rational(3, 2), Rational(1, 2)};
    std::string text = scenario_to_json(sc);
    Scenario back = scenario_from_json(text);
    CHECK(back.bound == sc.bound);
    REQUIRE(back.factors.size() == 3);
    for (int j = 0; j < 3; ++j) CHECK(back.factors[j] == sc.factors[j]);
    CHECK(scenario_to_json(back) == text);

    Instance inst(2, 1, {3, 2});
    for (const auto& drawn : sample_scenarios(inst, Rational(2), 5, 73)) {
        Scenario rt = scenario_from_json(scenario_to_json(drawn));
        CHECK(rt.bound == drawn.bound);
        for (size_t j = 0; j < drawn.factors.size(); ++j)
            CHECK(rt.factors[j] == drawn.factors[j]);
    }
}
