#include "bjsp/milp.hpp"

#include "bjsp/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bjsp {

namespace {

long long first_start_of(int /*job*/) { return 1; }

long long last_start_of(const Instance& inst, int job, long long horizon) {
    return horizon - inst.p(job) + 1;
}

long long rate_floor_makespan(const Instance& inst) {
    std::vector<int> p = inst.p();
    std::sort(p.begin(), p.end(), std::greater<int>());
    long long mk = 0;
    for (long long k = 1; k <= static_cast<long long>(p.size()); ++k)
        mk = std::max(mk, (k + inst.g() - 1) / inst.g() + p[k - 1]);
    return mk;
}

std::string term_text(const std::string& var, const Rational& coeff, bool first) {
    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    std::string sign = coeff < 0 ? "-" : "+";
    std::string out;
    if (first) {
        if (coeff < 0) out += "- ";
    } else {
        out += sign + " ";
    }
    if (mag != 1) out += rational_to_decimal(mag) + " ";
    out += var;
    return out;
}

}  // namespace

std::string var_name(int job, int slot) {
    return "x_" + std::to_string(job + 1) + "_" + std::to_string(slot);
}

TimeIndexedModel emit_bjsp_model(const Instance& inst, long long horizon) {
    if (inst.n() == 0) throw std::invalid_argument("empty instance has no model");
    for (int j = 0; j < inst.n(); ++j)
        if (last_start_of(inst, j, horizon) < 1)
            throw std::invalid_argument("horizon admits no start for job " +
                                        std::to_string(j + 1));
    if (horizon < lower_bound_basic(inst))
        throw std::invalid_argument("horizon is below the makespan lower bound");

    TimeIndexedModel model;
    model.objective_name = "T";
    model.objective.emplace_back("T", Rational(1));
    model.horizon = horizon;
    model.n_jobs = inst.n();
    model.proc = inst.p();

    for (int j = 0; j < inst.n(); ++j)
        for (long long s = first_start_of(j); s <= last_start_of(inst, j, horizon); ++s)
            model.binaries.push_back(var_name(j, static_cast<int>(s)));

    // makespan rows: T >= (s + p_j) x_{j,s}
    for (int j = 0; j < inst.n(); ++j)
        for (long long s = 1; s <= last_start_of(inst, j, horizon); ++s) {
            ModelRow row;
            row.name = "mk_" + std::to_string(j + 1) + "_" + std::to_string(s);
            row.terms.emplace_back("T", Rational(1));
            row.terms.emplace_back(var_name(j, static_cast<int>(s)),
                                   Rational(-(s + inst.p(j))));
            row.sense = RowSense::Ge;
            row.rhs = Rational(0);
            model.rows.push_back(std::move(row));
        }

    // capacity rows: jobs alive at t
    for (long long t = 1; t <= horizon; ++t) {
        ModelRow row;
        row.name = "cap_" + std::to_string(t);
        for (int j = 0; j < inst.n(); ++j) {
            long long lo = std::max<long long>(1, t - inst.p(j) + 1);
            long long hi = std::min<long long>(t, last_start_of(inst, j, horizon));
            for (long long s = lo; s <= hi; ++s)
                row.terms.emplace_back(var_name(j, static_cast<int>(s)), Rational(1));
        }
        row.sense = RowSense::Le;
        row.rhs = Rational(inst.m());
        if (!row.terms.empty()) model.rows.push_back(std::move(row));
    }

    // assignment rows
    for (int j = 0; j < inst.n(); ++j) {
        ModelRow row;
        row.name = "asg_" + std::to_string(j + 1);
        for (long long s = 1; s <= last_start_of(inst, j, horizon); ++s)
            row.terms.emplace_back(var_name(j, static_cast<int>(s)), Rational(1));
        row.sense = RowSense::Eq;
        row.rhs = Rational(1);
        model.rows.push_back(std::move(row));
    }

    // start-count rows
    for (long long s = 1; s <= horizon; ++s) {
        ModelRow row;
        row.name = "bjsp_" + std::to_string(s);
        for (int j = 0; j < inst.n(); ++j)
            if (s <= last_start_of(inst, j, horizon))
                row.terms.emplace_back(var_name(j, static_cast<int>(s)), Rational(1));
        row.sense = RowSense::Le;
        row.rhs = Rational(inst.g());
        if (!row.terms.empty()) model.rows.push_back(std::move(row));
    }
    return model;
}

LexoptEmission emit_lexopt_model(const Instance& inst, long long deadline,
                                 const Rational& theta, int periods) {
    if (inst.n() == 0) throw std::invalid_argument("empty instance has no model");
    if (periods < 1) throw std::invalid_argument("need at least one weight period");
    if (theta < 0) throw std::invalid_argument("theta must be non-negative");

    // completions are bounded by the deadline, so starts beyond D - p_j vanish
    auto last_start = [&](int j) { return deadline - inst.p(j); };
    for (int j = 0; j < inst.n(); ++j)
        if (last_start(j) < 1)
            throw std::invalid_argument("deadline admits no start for job " +
                                        std::to_string(j + 1));

    LexoptEmission emission;
    emission.deadline_warning = deadline < rate_floor_makespan(inst);

    TimeIndexedModel& model = emission.model;
    model.objective_name = "v";
    model.objective.emplace_back("v", Rational(1));
    model.horizon = deadline;
    model.n_jobs = inst.n();
    model.proc = inst.p();

    for (int j = 0; j < inst.n(); ++j)
        for (long long s = 1; s <= last_start(j); ++s) {
            model.binaries.push_back(var_name(j, static_cast<int>(s)));
            if (theta != 0) {
                long long completion = s + inst.p(j);
                // weight 2^q for a completion in the q-th of `periods`
                // equal periods over [1, D]
                long long q = (completion * periods + deadline - 1) / deadline;
                Rational w = Rational(BigInt(1) << q);
                model.objective.emplace_back(var_name(j, static_cast<int>(s)), theta * w);
            }
        }

    for (long long t = 1; t <= deadline; ++t) {
        ModelRow row;
        row.name = "cap_" + std::to_string(t);
        for (int j = 0; j < inst.n(); ++j) {
            long long lo = std::max<long long>(1, t - inst.p(j) + 1);
            long long hi = std::min<long long>(t, last_start(j));
            for (long long s = lo; s <= hi; ++s)
                row.terms.emplace_back(var_name(j, static_cast<int>(s)), Rational(1));
        }
        if (row.terms.empty()) continue;
        row.terms.emplace_back("v", Rational(-1));
        row.sense = RowSense::Le;
        row.rhs = Rational(0);
        model.rows.push_back(std::move(row));
    }

    for (int j = 0; j < inst.n(); ++j) {
        ModelRow row;
        row.name = "asg_" + std::to_string(j + 1);
        for (long long s = 1; s <= last_start(j); ++s)
            row.terms.emplace_back(var_name(j, static_cast<int>(s)), Rational(1));
        row.sense = RowSense::Eq;
        row.rhs = Rational(1);
        model.rows.push_back(std::move(row));
    }

    for (long long s = 1; s <= deadline; ++s) {
        ModelRow row;
        row.name = "bjsp_" + std::to_string(s);
        for (int j = 0; j < inst.n(); ++j)
            if (s <= last_start(j))
                row.terms.emplace_back(var_name(j, static_cast<int>(s)), Rational(1));
        row.sense = RowSense::Le;
        row.rhs = Rational(inst.g());
        if (!row.terms.empty()) model.rows.push_back(std::move(row));
    }
    return emission;
}

std::string lp_text(const TimeIndexedModel& model) {
    std::ostringstream out;
    out << "Minimize\n obj: ";
    bool first = true;
    for (const auto& [var, coeff] : model.objective) {
        if (coeff == 0) continue;
        if (!first) out << " ";
        out << term_text(var, coeff, first);
        first = false;
    }
    out << "\nSubject To\n";
    for (const auto& row : model.rows) {
        out << " " << row.name << ": ";
        first = true;
        for (const auto& [var, coeff] : row.terms) {
            if (!first) out << " ";
            out << term_text(var, coeff, first);
            first = false;
        }
        switch (row.sense) {
            case RowSense::Le: out << " <= "; break;
            case RowSense::Ge: out << " >= "; break;
            case RowSense::Eq: out << " = "; break;
        }
        out << rational_to_decimal(row.rhs) << "\n";
    }
    out << "Bounds\n " << model.objective_name << " >= 0\n";
    out << "Binaries\n";
    for (const auto& var : model.binaries) out << " " << var << "\n";
    out << "End\n";
    return out.str();
}

void write_lp_file(const TimeIndexedModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << lp_text(model);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

Rational harmonic(long long k) {
    Rational sum(0);
    for (long long t = 1; t <= k; ++t) sum += Rational(BigInt(1), BigInt(t));
    return sum;
}

std::pair<Instance, FractionalSolution> gap_instance(int m, long long horizon) {
    if (m < 2) throw std::invalid_argument("need m >= 2");
    long long tau = horizon > 0 ? horizon : m;
    if (tau < m) throw std::invalid_argument("horizon must cover the job count");
    Instance inst(m, m, std::vector<int>(m, 1));

    FractionalSolution frac;
    frac.horizon = tau;
    Rational h = harmonic(tau);
    for (int j = 0; j < m; ++j)
        for (long long s = 1; s <= tau; ++s)
            frac.x[{j, static_cast<int>(s)}] = Rational(BigInt(1), BigInt(s)) / h;
    frac.objective = Rational(2) / h;       // (s + p_j) x_{j,s} peaks at s = 1
    frac.start_objective = Rational(1) / h;  // the max s x_{j,s} variant
    return {std::move(inst), std::move(frac)};
}

FractionalReport verify_fractional(const Instance& inst, const FractionalSolution& frac,
                                   long long integral_optimum) {
    FractionalReport report;
    auto value = [&](int j, long long s) {
        auto it = frac.x.find({j, static_cast<int>(s)});
        return it == frac.x.end() ? Rational(0) : it->second;
    };

    for (const auto& [key, v] : frac.x) {
        if (v < 0 || v > 1)
            report.violations.push_back(
                {"bound_" + std::to_string(key.first + 1) + "_" + std::to_string(key.second),
                 v < 0 ? Rational(-v) : Rational(v - 1)});
    }

    for (long long t = 1; t <= frac.horizon; ++t) {
        Rational cap(0), begun(0);
        for (int j = 0; j < inst.n(); ++j) {
            for (long long s = std::max<long long>(1, t - inst.p(j) + 1); s <= t; ++s)
                cap += value(j, s);
            begun += value(j, t);
        }
        if (cap > inst.m())
            report.violations.push_back({"cap_" + std::to_string(t), cap - inst.m()});
        if (begun > inst.g())
            report.violations.push_back({"bjsp_" + std::to_string(t), begun - inst.g()});
    }

    for (int j = 0; j < inst.n(); ++j) {
        Rational total(0);
        for (long long s = 1; s <= frac.horizon; ++s) total += value(j, s);
        if (total != 1) {
            Rational r = total - 1;
            report.violations.push_back({"asg_" + std::to_string(j + 1),
                                         r < 0 ? Rational(-r) : r});
        }
    }

    Rational obj(0);
    for (const auto& [key, v] : frac.x)
        obj = std::max(obj, Rational(key.second + inst.p(key.first)) * v);
    report.objective = obj;
    if (integral_optimum > 0 && obj != 0)
        report.gap = Rational(integral_optimum) / obj;
    return report;
}

}  // namespace bjsp
