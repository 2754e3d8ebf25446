#include "bosonstar/serialization.hpp"

#include <algorithm>
#include <limits>

namespace bosonstar {

using nlohmann::json;

void to_json(json& j, const EnergyBreakdown& e) {
  j = json{{"T", e.T}, {"M", e.M}, {"D", e.D}, {"I", e.I ? json(*e.I) : json(nullptr)}};
}

void to_json(json& j, const IterationRecord& r) {
  j = json{{"iteration", r.iteration}, {"residual", r.residual}, {"stabilization", r.stabilization}};
}

void to_json(json& j, const GroundStateReport& r) {
  j = json{{"n", r.Q.grid().size()},
           {"r_max", r.Q.grid().r_max()},
           {"m", r.m},
           {"mu", r.mu},
           {"N_star", r.N_star},
           {"energy", r.energy},
           {"residual", r.residual},
           {"iterations", r.iterations},
           {"Q0", r.Q0},
           {"max_clamp", r.max_clamp},
           {"trace", r.trace}};
}

void to_json(json& j, const RefineCheck& r) {
  j = json{{"N_star_coarse", r.N_star_coarse}, {"N_star_fine", r.N_star_fine}, {"drift", r.drift}};
}

void to_json(json& j, const ProbeReport& r) {
  j = json{{"collapsed", r.collapsed},
           {"outcome", to_string(r.outcome)},
           {"final_norm", r.final_norm},
           {"final_residual", r.final_residual ? json(*r.final_residual) : json(nullptr)},
           {"iterations", r.iterations}};
}

void to_json(json& j, const VirialReport& r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (double v : r.newton_lhs.values()) worst = std::max(worst, v);
  j = json{{"lhs", r.lhs},
           {"rhs", r.rhs},
           {"vrv_integral", r.vrv_integral},
           {"mass", r.mass},
           {"max_pointwise", worst}};
}

void to_json(json& j, const FitWindow& w) { j = json::array({w.lo, w.hi}); }

void to_json(json& j, const DecayFitReport& r) {
  j = json{{"c4_est", r.c4_est},       {"c4_theory", r.c4_theory}, {"c5_est", r.c5_est},
           {"c5_theory", r.c5_theory}, {"window", r.window},       {"rel_err_4", r.rel_err_4},
           {"rel_err_5", r.rel_err_5}, {"model", to_string(r.model)}};
}

void to_json(json& j, const FourierFitReport& r) {
  j = json{{"sigma_est", r.sigma_est},
           {"r_squared", r.r_squared},
           {"window_requested", r.requested},
           {"window_used", r.used},
           {"points", r.points},
           {"slope_low_half", r.slope_low_half},
           {"slope_high_half", r.slope_high_half},
           {"classification", to_string(r.classification)}};
}

void to_json(json& j, const AbelReport& r) {
  j = json{{"lhs", static_cast<double>(r.lhs)},
           {"rhs", static_cast<double>(r.rhs)},
           {"abs_err", static_cast<double>(r.abs_err)},
           {"rel_err", static_cast<double>(r.rel_err)}};
}

void to_json(json& j, const AnalyticityCertificate& c) {
  j = json{{"a", c.a},
           {"b", c.b},
           {"c", c.c},
           {"sigma", c.sigma},
           {"alpha", c.alpha},
           {"lambda", c.lambda},
           {"norms", {{"W_1", c.norm_W1}, {"xiW_1", c.norm_xiW1}, {"f_1", c.norm_f1}, {"f_inf", c.norm_finf}}},
           {"pole", c.pole},
           {"premise_slack", c.premise_slack},
           {"checked_n", c.checked_n},
           {"warnings", c.warnings}};
}

void to_json(json& j, const MomentRow& r) {
  j = json{{"n", r.n}, {"measured", r.measured}, {"bound", r.bound}, {"ratio", r.ratio}};
}

void to_json(json& j, const KernelDecayReport& r) {
  j = json{{"l1_norm", r.l1_norm},
           {"fourier_sup", r.fourier_sup},
           {"l1_norm_finite", r.l1_norm_finite},
           {"fourier_bounded", r.fourier_bounded}};
}

void to_json(json& j, const ConservedQuantities& q) {
  j = json{{"mass", q.mass}, {"kinetic", q.kinetic}, {"potential", q.potential}, {"total", q.total}};
}

void to_json(json& j, const TimeSample& s) {
  j = json{{"t", s.t}, {"mass", s.q.mass}, {"kinetic", s.q.kinetic},
           {"potential", s.q.potential}, {"total", s.q.total}};
}

}  // namespace bosonstar
