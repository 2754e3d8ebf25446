#pragma once

#include <nlohmann/json.hpp>

#include "bosonstar/analysis.hpp"
#include "bosonstar/dynamics.hpp"
#include "bosonstar/energetics.hpp"
#include "bosonstar/linearization.hpp"
#include "bosonstar/solver.hpp"

// JSON encodings of the report types. Doubles are written in shortest
// round-trip form; absent optionals become null.
// Radial profiles are not embedded; they travel as CSV.

namespace bosonstar {

void to_json(nlohmann::json& j, const EnergyBreakdown& e);
void to_json(nlohmann::json& j, const IterationRecord& r);
void to_json(nlohmann::json& j, const GroundStateReport& r);
void to_json(nlohmann::json& j, const RefineCheck& r);
void to_json(nlohmann::json& j, const ProbeReport& r);
void to_json(nlohmann::json& j, const VirialReport& r);
void to_json(nlohmann::json& j, const FitWindow& w);
void to_json(nlohmann::json& j, const DecayFitReport& r);
void to_json(nlohmann::json& j, const FourierFitReport& r);
void to_json(nlohmann::json& j, const AbelReport& r);
void to_json(nlohmann::json& j, const AnalyticityCertificate& c);
void to_json(nlohmann::json& j, const MomentRow& r);
void to_json(nlohmann::json& j, const KernelDecayReport& r);
void to_json(nlohmann::json& j, const ConservedQuantities& q);
void to_json(nlohmann::json& j, const TimeSample& s);

}  // namespace bosonstar
