#pragma once

#include "bjsp/instance.hpp"
#include "bjsp/rational.hpp"

#include <optional>

namespace bjsp {

struct Bounds {
    long long basic_lb = 0;
    std::optional<Rational> long_lb;  // only when |J^L| >= m
    InstanceClass classification = InstanceClass::Short;
};

/// max{ceil(sum p / m), max_j {ceil(j/g) + p_j}} with p sorted non-increasing.
long long lower_bound_basic(const Instance& inst);

/// (1/m)(m(m-1)/2 + sum p_j); requires |{j : p_j >= m}| >= m.
/// Throws std::domain_error when the precondition fails.
Rational lower_bound_long(const Instance& inst);

bool long_bound_applies(const Instance& inst);

Bounds compute_bounds(const Instance& inst);

/// Best applicable lower bound as a rational (max of basic and, when it
/// applies, the long bound).
Rational best_lower_bound(const Instance& inst);

/// Closed-form optimum of the slack-idle program: maximize
/// sum lambda_q(lambda_q-1)/2 subject to lambda_q <= m, sum lambda_q <= n.
/// Equals floor(n/m)*m(m-1)/2 + rho(rho-1)/2 with rho = n mod m, and is
/// always <= nm/2.
Rational idle_upper_bound(long long n, long long m);

}  // namespace bjsp
