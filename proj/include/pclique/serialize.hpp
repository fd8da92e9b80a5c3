#pragma once

#include <json.hpp>

#include "pclique/certificate.hpp"
#include "pclique/enumeration.hpp"
#include "pclique/hardness.hpp"
#include "pclique/oracle.hpp"
#include "pclique/recovery.hpp"
#include "pclique/theta.hpp"

namespace pclique::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kThetaSchema = "pclique.theta/1";
inline constexpr const char* kRecoverySchema = "pclique.recovery/1";
inline constexpr const char* kCertificateSchema = "pclique.certificate/1";
inline constexpr const char* kReductionSchema = "pclique.reduction/1";
inline constexpr const char* kPlantHSchema = "pclique.plant-h/1";
inline constexpr const char* kAlgrandSchema = "pclique.algrand/1";
inline constexpr const char* kPlannerSchema = "pclique.planner/1";

// Sorted member list.
Json to_json(const VertexSet& s);

// Reports carry a "schema" field; nested parts do not.
Json to_json(const ThetaSolution& sol);
Json to_json(const RecoveryReport& rep);
Json to_json(const EnumReport& rep);
Json to_json(const SparseReport& rep);
Json to_json(const CertificateReport& rep, const VarBoundResult& varbound);
Json to_json(const ReductionOutput& out);
Json to_json(const PlantedHInstance& inst);
Json to_json(const AlgrandResult& res);
Json to_json(const PlannerOutput& out);
Json to_json(const GroundTruth& gt);

}  // namespace pclique::io
