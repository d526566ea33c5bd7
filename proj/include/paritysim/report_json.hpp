#pragma once

#include <json.hpp>

#include "paritysim/analyzer.hpp"
#include "paritysim/cluster.hpp"
#include "paritysim/fock.hpp"

namespace psim {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json amplitudes_json(const StateVector& s);          // [[re, im], ...]
StateVector state_from_json(const Json& amplitudes); // validates normalization

Json pauli_list_json(const std::vector<std::pair<Pauli, int>>& paulis);

Json to_json(const cluster::PreparationRecord& rec);
Json to_json(const cluster::CorrectionTable& table);
Json to_json(const analyzer::ClassificationReport& report);
Json to_json(const analyzer::GroupTables& tables);
Json to_json(const analyzer::DecompositionReport& report);
Json to_json(const fermion::PovmReport& report);

}  // namespace psim
