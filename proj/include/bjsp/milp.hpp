#pragma once

#include "bjsp/instance.hpp"
#include "bjsp/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bjsp {

enum class RowSense { Le, Ge, Eq };

struct ModelRow {
    std::string name;
    std::vector<std::pair<std::string, Rational>> terms;
    RowSense sense;
    Rational rhs;
};

/// Time-indexed model over binaries x_{j,s} (s in F_j) plus a continuous
/// objective variable (T for makespan, v for machine count).
struct TimeIndexedModel {
    std::string objective_name;                                // "T" or "v"
    std::vector<std::pair<std::string, Rational>> objective;   // linear terms
    std::vector<std::string> binaries;                         // x variables, emission order
    std::vector<ModelRow> rows;
    long long horizon = 0;

    int n_jobs = 0;
    std::vector<int> proc;  // to interpret x_j_s
};

std::string var_name(int job, int slot);  // x_<job>_<slot>, 1-based job

/// Formulation with objective min T; rows mk_j_s (T >= (s+p_j) x_{j,s}),
/// cap_t, asg_j, bjsp_s.  Throws when the horizon cannot admit any feasible
/// schedule (some F_j empty, or horizon below the basic lower bound).
TimeIndexedModel emit_bjsp_model(const Instance& inst, long long horizon);

/// LexOpt formulation: min v + theta * sum x_{j,s} w(s+p_j) with w = 2^q for
/// completion in period q of `periods` equal periods over [1, D]; deadline
/// encoded by pruning F_j.  A deadline below the minimum feasible makespan is
/// emitted anyway (warning set), unless some F_j becomes empty.
struct LexoptEmission {
    TimeIndexedModel model;
    bool deadline_warning = false;
};
LexoptEmission emit_lexopt_model(const Instance& inst, long long deadline,
                                 const Rational& theta, int periods);

/// Deterministic CPLEX-LP text (Minimize / Subject To / Bounds / Binaries).
std::string lp_text(const TimeIndexedModel& model);
void write_lp_file(const TimeIndexedModel& model, const std::string& path);

/// Fractional values x_{j,s} with exact rationals.
struct FractionalSolution {
    std::map<std::pair<int, int>, Rational> x;  // (job, slot) -> value
    long long horizon = 0;
    Rational objective;          // row-consistent value: max (s+p_j) x_{j,s}
    Rational start_objective;    // largest start instead of largest completion
};

/// The harmonic integrality-gap construction: m machines, m unit jobs, g = m,
/// x_{j,s} = 1/(s H_tau).
std::pair<Instance, FractionalSolution> gap_instance(int m, long long horizon = 0);

struct FractionalViolation {
    std::string row;
    Rational residual;  // amount by which the row is violated, exact
};

struct FractionalReport {
    std::vector<FractionalViolation> violations;
    Rational objective;
    Rational gap;  // integral optimum / fractional objective (0 if not supplied)
    bool feasible() const { return violations.empty(); }
};

/// Exact-rational check of the relaxed constraints (capacity, assignment,
/// BJSP, 0 <= x <= 1); gap reported against the supplied integral optimum.
FractionalReport verify_fractional(const Instance& inst, const FractionalSolution& frac,
                                   long long integral_optimum = 0);

/// H_k as an exact rational.
Rational harmonic(long long k);

}  // namespace bjsp
