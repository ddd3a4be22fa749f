#pragma once

#include <span>
#include <vector>

#include "dtriage/survival/cohort.hpp"

namespace dtriage::survival {

/// One step of the product-limit estimate, placed at a distinct breakup time.
struct SurvivalStep {
  double time_years{0.0};
  double survival{1.0};
  double ci_low{1.0};
  double ci_high{1.0};
  int at_risk{0};
  int events{0};

  bool operator==(const SurvivalStep&) const = default;
};

/// Right-continuous step function S(t): S = 1 before the first step, then the
/// value of the latest step at or before t. ci_low <= survival <= ci_high on
/// every step once bands are attached.
struct SurvivalCurve {
  std::vector<SurvivalStep> steps;  // times strictly increasing
  int n_subjects{0};

  bool operator==(const SurvivalCurve&) const = default;
};

/// Product-limit (Kaplan-Meier) estimate over one record per subject:
///
///   S(t) = prod over breakup times t_i <= t of (1 - d_i / n_i)
///
/// with d_i breakups at t_i and n_i subjects at risk. At tied times breakups
/// are processed before censorings, so a subject censored at t_i still counts
/// in n_i. Bands start collapsed to the estimate; attach them with
/// greenwood_ci. Throws Error("EmptyInput") for an empty cohort and
/// Error("DuplicateSubject") when a subject appears twice.
SurvivalCurve kaplan_meier(std::span<const EventRecord> records);

/// Plain: linear intervals S +- z_{1-alpha/2} sqrt(Var), clamped to [0, 1].
/// LogLog: the exponential log-log transform, S^exp(+-z sigma) with
/// sigma^2 = Var / (S ln S)^2, which keeps bands inside (0, 1) without
/// clamping. Plain is the default; LogLog sits behind the --ci-method switch.
enum class CiMethod { Plain, LogLog };

/// Greenwood variance bands at level 1 - alpha:
///
///   Var[S(t)] = S(t)^2 * sum over t_i <= t of d_i / (n_i (n_i - d_i))
///
/// rendered per `method`. Once a step exhausts its risk set (d_i = n_i) the
/// variance is formally infinite; that step and everything after it report
/// [0, S].
SurvivalCurve greenwood_ci(const SurvivalCurve& curve, double alpha,
                           CiMethod method = CiMethod::Plain);

double survival_at(const SurvivalCurve& curve, double age_years);

/// P(t) = 1 - S(t); ages past the last step keep the final value.
double breakup_probability(const SurvivalCurve& curve, double age_years);

}  // namespace dtriage::survival
