#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bjsp {

/// Raised when instance data violates a structural invariant.  The message
/// names the offending field.
struct InvalidInstance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class InstanceClass { Long, Short, Mixed };

/// A BJSP instance: m identical machines, at most g job starts per slot,
/// integer processing times (1-based job indices externally, 0-based here).
class Instance {
public:
    Instance(int machines, int starts_per_slot, std::vector<int> proc_times);

    int m() const { return m_; }
    int g() const { return g_; }
    int n() const { return static_cast<int>(p_.size()); }
    const std::vector<int>& p() const { return p_; }
    int p(int job) const { return p_[job]; }

    long long total_work() const;
    int p_max() const;
    int p_min() const;

    /// Jobs with p_j >= threshold (default: m).
    std::vector<int> long_jobs(int threshold = -1) const;
    std::vector<int> short_jobs(int threshold = -1) const;

    /// Horizon sufficient for any greedy completion: sum p_j + ceil(n/g).
    long long default_horizon() const;

private:
    int m_;
    int g_;
    std::vector<int> p_;
};

/// Validates raw fields and constructs an Instance; throws InvalidInstance
/// with a field-level diagnostic otherwise.
Instance validate_instance(int m, int g, const std::vector<int>& p);

/// long iff all p_j >= m, short iff all p_j < m, else mixed.
/// The empty instance is classified short.
InstanceClass classify(const Instance& inst);

std::string to_string(InstanceClass c);

}  // namespace bjsp
