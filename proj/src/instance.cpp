#include "bjsp/instance.hpp"

#include <algorithm>
#include <numeric>

namespace bjsp {

Instance::Instance(int machines, int starts_per_slot, std::vector<int> proc_times)
    : m_(machines), g_(starts_per_slot), p_(std::move(proc_times)) {}

long long Instance::total_work() const {
    return std::accumulate(p_.begin(), p_.end(), 0LL);
}

int Instance::p_max() const {
    return p_.empty() ? 0 : *std::max_element(p_.begin(), p_.end());
}

int Instance::p_min() const {
    return p_.empty() ? 0 : *std::min_element(p_.begin(), p_.end());
}

std::vector<int> Instance::long_jobs(int threshold) const {
    if (threshold < 0) threshold = m_;
    std::vector<int> out;
    for (int j = 0; j < n(); ++j)
        if (p_[j] >= threshold) out.push_back(j);
    return out;
}

std::vector<int> Instance::short_jobs(int threshold) const {
    if (threshold < 0) threshold = m_;
    std::vector<int> out;
    for (int j = 0; j < n(); ++j)
        if (p_[j] < threshold) out.push_back(j);
    return out;
}

long long Instance::default_horizon() const {
    if (p_.empty()) return 0;
    return total_work() + (static_cast<long long>(n()) + g_ - 1) / g_;
}

Instance validate_instance(int m, int g, const std::vector<int>& p) {
    if (m < 1) throw InvalidInstance("m must be >= 1");
    if (g < 1) throw InvalidInstance("g must be >= 1");
    for (size_t j = 0; j < p.size(); ++j) {
        if (p[j] < 1)
            throw InvalidInstance("p[" + std::to_string(j + 1) + "] must be >= 1");
    }
    return Instance(m, g, p);
}

InstanceClass classify(const Instance& inst) {
    bool any_long = false, any_short = false;
    for (int j = 0; j < inst.n(); ++j)
        (inst.p(j) >= inst.m() ? any_long : any_short) = true;
    if (!any_long) return InstanceClass::Short;  // includes the empty instance
    if (!any_short) return InstanceClass::Long;
    return InstanceClass::Mixed;
}

std::string to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::Long: return "long";
        case InstanceClass::Short: return "short";
        case InstanceClass::Mixed: return "mixed";
    }
    return "?";
}

}  // namespace bjsp
