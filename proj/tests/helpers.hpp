#pragma once

// Shared oracles and generators for the test suites.  Everything here is
// deliberately independent of the library implementation: small exhaustive
// searches and closed recursions that the fast code paths are checked against.

#include "bjsp/instance.hpp"
#include "bjsp/schedule.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

// Calls fn on every non-increasing processing-time vector of size 1..n_max
// with values in 1..p_max (each multiset exactly once).
inline void for_each_multiset(int n_max, int p_max,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> p;
    std::function<void(int, int)> rec = [&](int remaining, int max_value) {
        if (!p.empty()) fn(p);
        if (remaining == 0) return;
        for (int v = max_value; v >= 1; --v) {
            p.push_back(v);
            rec(remaining - 1, v);
            p.pop_back();
        }
    };
    rec(n_max, p_max);
}

// Minimum number of machines that can execute the given start vector without
// overlap, by backtracking over all assignments.  Oracle for assign_machines.
inline int min_coloring(const std::vector<int>& start, const std::vector<int>& proc) {
    int n = static_cast<int>(start.size());
    if (n == 0) return 0;
    auto overlaps = [&](int a, int b) {
        return start[a] < start[b] + proc[b] && start[b] < start[a] + proc[a];
    };
    std::vector<int> color(n, 0);
    std::function<bool(int, int)> fits = [&](int j, int k) {
        if (j == n) return true;
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                if (color[i] == c && overlaps(i, j)) ok = false;
            if (!ok) continue;
            color[j] = c;
            if (fits(j + 1, k)) return true;
            color[j] = 0;
        }
        return false;
    };
    for (int k = 1;; ++k)
        if (fits(0, k)) return k;
}

// Exhaustive optimum of the slack-idle program: maximize sum lambda(lambda-1)/2
// over parts 1..m with total at most n.  Oracle for idle_upper_bound.
inline long long idle_program_opt(int n, int m) {
    std::vector<long long> f(n + 1, 0);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= std::min(m, k); ++l)
            f[k] = std::max(f[k], 1LL * l * (l - 1) / 2 + f[k - l]);
    return f[n];
}

// Whether the 3m items can be split into m triples each summing to B.
inline bool three_partition_exists(std::vector<long long> a, long long B) {
    int n = static_cast<int>(a.size());
    std::sort(a.rbegin(), a.rend());
    std::vector<bool> used(n, false);
    std::function<bool(int)> solve = [&](int placed) {
        if (placed == n) return true;
        int first = 0;
        while (used[first]) ++first;
        used[first] = true;
        for (int second = first + 1; second < n; ++second) {
            if (used[second] || a[first] + a[second] >= B) continue;
            used[second] = true;
            for (int third = second + 1; third < n; ++third) {
                if (used[third] || a[first] + a[second] + a[third] != B) continue;
                used[third] = true;
                if (solve(placed + 3)) return true;
                used[third] = false;
            }
            used[second] = false;
        }
        used[first] = false;
        return false;
    };
    return solve(0);
}

// Feasible comparison schedule of makespan exactly m*p for the LPT tightness
// family: m-1 chains of m back-to-back long jobs, consecutive chain members
// sharing their boundary slot on different machines; unit jobs fill the
// remaining start slots left to right.
inline bjsp::Schedule lane_schedule(const bjsp::Instance& inst, int m, int p) {
    std::set<int> long_starts;
    std::vector<int> start;
    for (int lane = 1; lane <= m - 1; ++lane)
        for (int r = 0; r < m; ++r) {
            start.push_back(lane + (p - 1) * r);
            long_starts.insert(lane + (p - 1) * r);
        }
    int units = m * (p - m);
    for (int t = 1; units > 0; ++t)
        if (!long_starts.count(t)) {
            start.push_back(t);
            --units;
        }
    return bjsp::assign_machines(inst, start);
}

// Random instance with all processing times in [lo, hi].
inline bjsp::Instance random_instance(std::mt19937_64& rng, int m, int g, int n,
                                      int lo, int hi) {
    std::vector<int> p(n);
    for (int& v : p) v = lo + static_cast<int>(rng() % (hi - lo + 1));
    return bjsp::Instance(m, g, p);
}

// Counts of variables and constraint rows recovered from CPLEX-LP text by an
// independent line-oriented reader.
struct LpCounts {
    int binaries = 0;
    int rows = 0;
    std::map<std::string, int> rows_by_family;  // prefix before first '_'
    bool has_sections = false;
};

inline LpCounts reparse_lp(const std::string& text) {
    LpCounts counts;
    bool saw_min = false, saw_st = false, saw_bounds = false, saw_bin = false, saw_end = false;
    std::string section;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol - pos);
        pos = (eol == std::string::npos) ? text.size() : eol + 1;
        if (line == "Minimize") { saw_min = true; section = "obj"; continue; }
        if (line == "Subject To") { saw_st = true; section = "st"; continue; }
        if (line == "Bounds") { saw_bounds = true; section = "bounds"; continue; }
        if (line == "Binaries") { saw_bin = true; section = "bin"; continue; }
        if (line == "End") { saw_end = true; section = "end"; continue; }
        if (line.empty()) continue;
        if (section == "st" && line.find(':') != std::string::npos) {
            ++counts.rows;
            std::string name = line.substr(1, line.find(':') - 1);
            counts.rows_by_family[name.substr(0, name.find('_'))]++;
        }
        if (section == "bin") ++counts.binaries;
    }
    counts.has_sections = saw_min && saw_st && saw_bounds && saw_bin && saw_end;
    return counts;
}

}  // namespace testutil
