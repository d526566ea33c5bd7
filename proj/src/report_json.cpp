#include "paritysim/report_json.hpp"

#include <cmath>
#include <stdexcept>

namespace psim {

namespace {

Json outcomes_json(const OutcomeList& outcomes) {
    Json obj = Json::object();
    for (const auto& [label, value] : outcomes) {
        obj[label] = value;
    }
    return obj;
}

}  // namespace

Json amplitudes_json(const StateVector& s) {
    Json arr = Json::array();
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        arr.push_back(Json::array({s.amp(i).real(), s.amp(i).imag()}));
    }
    return arr;
}

StateVector state_from_json(const Json& amplitudes) {
    if (!amplitudes.is_array() || amplitudes.empty()) {
        throw std::invalid_argument("amplitude list must be a non-empty array");
    }
    std::size_t dim = amplitudes.size();
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if ((std::size_t{1} << n) != dim) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    std::vector<Amplitude> amps;
    amps.reserve(dim);
    for (const auto& entry : amplitudes) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw std::invalid_argument("each amplitude must be a [re, im] pair");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

Json pauli_list_json(const std::vector<std::pair<Pauli, int>>& paulis) {
    Json arr = Json::array();
    for (const auto& [p, qubit] : paulis) {
        arr.push_back(Json::array({std::string(1, pauli_char(p)), qubit}));
    }
    return arr;
}

Json to_json(const cluster::PreparationRecord& rec) {
    Json j;
    j["n"] = rec.n;
    j["outcomes"] = rec.outcomes;
    j["corrections"] = pauli_list_json(rec.corrections);
    j["probability"] = rec.probability;
    j["stabilizer_expectations"] = rec.stabilizer_expectations;
    j["pass"] = rec.pass;
    j["state"] = amplitudes_json(rec.final_state);
    return j;
}

Json to_json(const cluster::CorrectionTable& table) {
    Json rules = Json::array();
    for (const auto& rule : table.rules) {
        Json r;
        r["pattern"] = rule.pattern;
        r["correction"] = pauli_list_json(rule.paulis);
        rules.push_back(std::move(r));
    }
    Json j;
    j["n"] = table.n;
    j["rules"] = std::move(rules);
    j["verified"] = table.verified;
    return j;
}

Json to_json(const analyzer::ClassificationReport& report) {
    Json branches = Json::array();
    for (const auto& branch : report.branches) {
        Json b;
        b["outcomes"] = outcomes_json(branch.outcomes);
        b["probability"] = branch.probability;
        b["label"] = analyzer::to_string(branch.label);
        branches.push_back(std::move(b));
    }
    Json j;
    j["family"] = analyzer::family_name(report.family);
    j["input"] = report.input_name;
    j["branches"] = std::move(branches);
    j["deterministic"] = report.deterministic;
    j["destroyed_qubits"] = report.destroyed_qubits;
    return j;
}

Json to_json(const analyzer::GroupTables& tables) {
    Json quad_sets = Json::object();
    for (const auto& [pattern, members] : tables.quad_sets) {
        Json names = Json::array();
        for (int cls : members) {
            names.push_back(analyzer::class_name(analyzer::Family::Quad, cls));
        }
        quad_sets[pattern] = std::move(names);
    }
    Json quad_classes = Json::object();
    for (const auto& [pattern, cls] : tables.quad_classes) {
        quad_classes[pattern] = analyzer::class_name(analyzer::Family::Quad, cls);
    }
    Json ghz3_groups = Json::object();
    for (const auto& [pattern, cls] : tables.ghz3_groups) {
        ghz3_groups[pattern] = analyzer::class_name(analyzer::Family::GHZ3, cls);
    }
    Json j;
    j["quad_sets_by_pair_parity"] = std::move(quad_sets);
    j["quad_classes_by_p1p2p3"] = std::move(quad_classes);
    j["ghz3_groups_by_p1p2"] = std::move(ghz3_groups);
    j["verified"] = tables.verified;
    return j;
}

Json to_json(const analyzer::DecompositionReport& report) {
    Json j;
    j["ghz3_expansion_scale"] = report.ghz3_expansion_scale;
    j["ghz3_max_deviation"] = report.ghz3_max_deviation;
    j["quad_max_deviation"] = report.quad_max_deviation;
    j["quad_sign_flips"] = report.quad_sign_flips;
    j["gram_max_deviation"] = report.gram_max_deviation;
    j["pass"] = report.pass;
    return j;
}

Json to_json(const fermion::PovmReport& report) {
    Json j;
    j["samples"] = report.samples;
    j["max_prob_dev"] = report.max_prob_dev;
    j["max_state_dev"] = report.max_state_dev;
    j["phase_sweep_pass"] = report.phase_sweep_pass;
    return j;
}

}  // namespace psim
