#include "bjsp/bounds.hpp"

#include <algorithm>

namespace bjsp {

long long lower_bound_basic(const Instance& inst) {
    if (inst.n() == 0) return 0;
    long long load = (inst.total_work() + inst.m() - 1) / inst.m();

    std::vector<int> p = inst.p();
    std::sort(p.begin(), p.end(), std::greater<int>());
    long long start_term = 0;
    for (int j = 0; j < static_cast<int>(p.size()); ++j) {
        long long rank = j + 1;
        start_term = std::max(start_term, (rank + inst.g() - 1) / inst.g() + p[j]);
    }
    return std::max(load, start_term);
}

bool long_bound_applies(const Instance& inst) {
    return static_cast<int>(inst.long_jobs().size()) >= inst.m();
}

Rational lower_bound_long(const Instance& inst) {
    if (!long_bound_applies(inst))
        throw std::domain_error("long bound needs at least m jobs with p_j >= m");
    long long m = inst.m();
    return Rational(BigInt(m * (m - 1) / 2 + inst.total_work()), BigInt(m));
}

Bounds compute_bounds(const Instance& inst) {
    Bounds b;
    b.basic_lb = lower_bound_basic(inst);
    if (long_bound_applies(inst)) b.long_lb = lower_bound_long(inst);
    b.classification = classify(inst);
    return b;
}

Rational best_lower_bound(const Instance& inst) {
    Rational best(lower_bound_basic(inst));
    if (long_bound_applies(inst)) best = std::max(best, lower_bound_long(inst));
    return best;
}

Rational idle_upper_bound(long long n, long long m) {
    if (n < 0 || m < 1) throw std::invalid_argument("need n >= 0, m >= 1");
    long long full = n / m;
    long long rho = n % m;
    Rational value(BigInt(full) * BigInt(m * (m - 1)) + BigInt(rho * (rho - 1)), BigInt(2));
    Rational cap(BigInt(n * m), BigInt(2));
    return std::min(value, cap);
}

}  // namespace bjsp
