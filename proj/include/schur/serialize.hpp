#pragma once

// JSON mappings for the public types. Field names follow the struct members;
// colorings are {"interval": {...}, "bits": "0110"}.

#include <json.hpp>

#include "schur/asymptotics.hpp"
#include "schur/counter.hpp"
#include "schur/oracle.hpp"
#include "schur/types.hpp"

namespace schur {

void to_json(nlohmann::json& j, const Interval& v);
void from_json(const nlohmann::json& j, Interval& v);

void to_json(nlohmann::json& j, const Coloring& v);
void from_json(const nlohmann::json& j, Coloring& v);

void to_json(nlohmann::json& j, const SolutionBreakdown& v);
void from_json(const nlohmann::json& j, SolutionBreakdown& v);

void to_json(nlohmann::json& j, const ReductionParams& v);
void from_json(const nlohmann::json& j, ReductionParams& v);

void to_json(nlohmann::json& j, const Minimizer& v);
void from_json(const nlohmann::json& j, Minimizer& v);

void to_json(nlohmann::json& j, const MultiplicityCertificate& v);
void from_json(const nlohmann::json& j, MultiplicityCertificate& v);

void to_json(nlohmann::json& j, const SolutionTriple& v);
void to_json(nlohmann::json& j, const OracleResult& v);
void to_json(nlohmann::json& j, const ValidationRecord& v);
void to_json(nlohmann::json& j, const RatioRecord& v);

}  // namespace schur
