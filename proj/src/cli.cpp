#include "paritysim/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "paritysim/report_json.hpp"
#include "paritysim/selftest.hpp"

namespace psim::cli {

namespace {

std::optional<RunMode> parse_mode(const RunConfig& cfg, std::size_t detector_count,
                                  std::ostream& err, bool allow_forced) {
    if (cfg.mode == "enumerate") {
        return RunMode{EnumerateMode{}};
    }
    if (cfg.mode == "sample") {
        if (!cfg.seed.has_value()) {
            err << "error: --seed is required with --mode sample\n";
            return std::nullopt;
        }
        return RunMode{SampleMode{*cfg.seed}};
    }
    if (cfg.mode == "forced") {
        if (!allow_forced) {
            err << "error: forced mode is not available for this command\n";
            return std::nullopt;
        }
        if (cfg.forced_pattern.size() != detector_count) {
            err << "error: forced pattern must have " << detector_count << " bits\n";
            return std::nullopt;
        }
        return RunMode{ForcedMode{cfg.forced_pattern}};
    }
    err << "error: unknown mode '" << cfg.mode << "'\n";
    return std::nullopt;
}

int write_report(const RunConfig& cfg, const Json& report, const std::string& text,
                 std::ostream& out, std::ostream& err) {
    std::string payload =
        cfg.format == OutputFormat::Json ? report.dump(2) + "\n" : text;
    if (cfg.out_path.empty()) {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << cfg.out_path << " for writing\n";
        return kExitUsage;
    }
    file << payload;
    return kExitOk;
}

Json with_schema(const Json& body) {
    Json j;
    j["schema"] = kReportSchemaVersion;
    for (const auto& [key, value] : body.items()) {
        j[key] = value;
    }
    return j;
}

std::string describe_corrections(const std::vector<std::pair<Pauli, int>>& paulis) {
    if (paulis.empty()) {
        return "I";
    }
    std::string s;
    for (const auto& [p, q] : paulis) {
        s += pauli_char(p);
        s += std::to_string(q);
    }
    return s;
}

}  // namespace

Tolerances Tolerances::from_env() {
    Tolerances tol;
    if (const char* v = std::getenv("PARITYSIM_VERIFY_TOL")) {
        tol.verify = std::strtod(v, nullptr);
    }
    return tol;
}

int cmd_prepare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n_qubits < 2 || cfg.n_qubits > kMaxQubits) {
        err << "error: --n must be in [2, " << kMaxQubits << "]\n";
        return kExitUsage;
    }
    auto mode = parse_mode(cfg, static_cast<std::size_t>(cfg.n_qubits) - 1, err, true);
    if (!mode) {
        return kExitUsage;
    }

    std::vector<cluster::PreparationRecord> records;
    try {
        records = cluster::prepare_cluster(cluster::GraphSpec::chain(cfg.n_qubits), *mode,
                                           cfg.tol.verify);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    bool all_ok = true;
    Json branches = Json::array();
    std::ostringstream text;
    for (const auto& rec : records) {
        all_ok = all_ok && rec.pass;
        branches.push_back(to_json(rec));
        text << "pattern=" << rec.outcomes << "  p=" << rec.probability
             << "  corrections=" << describe_corrections(rec.corrections)
             << "  stabilizers=" << (rec.pass ? "pass" : "FAIL") << "\n";
    }
    Json report;
    report["schema"] = kReportSchemaVersion;
    report["command"] = "prepare";
    report["n"] = cfg.n_qubits;
    report["mode"] = cfg.mode;
    if (cfg.seed) {
        report["seed"] = *cfg.seed;
    }
    report["branches"] = std::move(branches);
    report["all_pass"] = all_ok;

    int rc = write_report(cfg, report, text.str(), out, err);
    if (rc != kExitOk) {
        return rc;
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    analyzer::Family family;
    try {
        family = analyzer::parse_family(cfg.family);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::optional<analyzer::EntangledLabel> named;
    StateVector input = StateVector::plus_product(1);
    try {
        if (cfg.input.find(':') != std::string::npos) {
            named = analyzer::parse_label(cfg.input);
            if (named->family != family) {
                err << "error: state label does not belong to family " << cfg.family << "\n";
                return kExitUsage;
            }
            input = analyzer::basis_state(*named);
        } else {
            input = state_from_json(Json::parse(cfg.input));
        }
        if (input.n_qubits() != analyzer::family_qubits(family)) {
            err << "error: input state has " << input.n_qubits() << " qubits, family needs "
                << analyzer::family_qubits(family) << "\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        err << "error: bad input state: " << e.what() << "\n";
        return kExitUsage;
    }

    auto mode = parse_mode(cfg, 0, err, false);
    if (!mode) {
        return kExitUsage;
    }

    auto tree = family == analyzer::Family::Bell   ? analyzer::bell_analyzer()
                : family == analyzer::Family::GHZ3 ? analyzer::ghz3_analyzer()
                                                   : analyzer::quad_analyzer();
    auto report = analyzer::classify(tree, input, *mode, named);

    Json j = with_schema(to_json(report));
    if (cfg.seed && cfg.mode == "sample") {
        j["seed"] = *cfg.seed;
    }
    std::ostringstream text;
    for (const auto& branch : report.branches) {
        text << "label=" << analyzer::to_string(branch.label) << "  p=" << branch.probability
             << "\n";
    }
    int rc = write_report(cfg, j, text.str(), out, err);
    if (rc != kExitOk) {
        return rc;
    }
    return (named && !report.deterministic) ? kExitVerifyFailed : kExitOk;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    bool ok = true;

    Json corrections;
    corrections["schema"] = kReportSchemaVersion;
    Json per_n = Json::object();
    for (int n = 2; n <= cluster::kMaxCorrectionTableQubits; ++n) {
        auto table = cluster::derive_correction_table(n);
        ok = ok && table.verified;
        per_n[std::to_string(n)] = to_json(table);
    }
    corrections["tables"] = std::move(per_n);

    auto groups = analyzer::derive_group_tables();
    ok = ok && groups.verified;
    Json grouping = with_schema(to_json(groups));

    for (const auto& [name, doc] :
         {std::pair<std::string, const Json*>{"table1_derived.json", &corrections},
          std::pair<std::string, const Json*>{"table2_derived.json", &grouping}}) {
        std::string path = cfg.out_dir + "/" + name;
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << path << " for writing\n";
            return kExitUsage;
        }
        file << doc->dump(2) << "\n";
        out << "wrote " << path << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_fermion_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.samples < 1) {
        err << "error: --samples must be at least 1\n";
        return kExitUsage;
    }
    std::uint64_t seed = cfg.seed.value_or(1);
    fermion::PovmReport report;
    if (cfg.corrupt_scattering) {
        auto bad = fermion::corrupt_pbs(0.3);
        report = fermion::verify_parity_povm(cfg.samples, seed, cfg.tol.verify, &bad);
    } else {
        report = fermion::verify_parity_povm(cfg.samples, seed, cfg.tol.verify);
    }

    bool ok = report.max_prob_dev <= cfg.tol.verify && report.max_state_dev <= cfg.tol.verify &&
              report.phase_sweep_pass;
    Json j = with_schema(to_json(report));
    j["pass"] = ok;
    std::ostringstream text;
    text << "samples=" << report.samples << "  prob_dev=" << report.max_prob_dev
         << "  state_dev=" << report.max_state_dev
         << "  sweep=" << (report.phase_sweep_pass ? "pass" : "fail") << "\n";
    int rc = write_report(cfg, j, text.str(), out, err);
    if (rc != kExitOk) {
        return rc;
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto results = selftest::run_acceptance();
    Json criteria = Json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        Json c;
        c["index"] = r.index;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        criteria.push_back(std::move(c));
        text << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.index << "  " << r.name;
        if (!r.detail.empty()) {
            text << "  (" << r.detail << ")";
        }
        text << "\n";
    }
    bool ok = selftest::all_pass(results);
    text << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";

    Json report;
    report["schema"] = kReportSchemaVersion;
    report["command"] = "verify";
    report["criteria"] = std::move(criteria);
    report["all_pass"] = ok;

    int rc = write_report(cfg, report, text.str(), out, err);
    if (rc != kExitOk) {
        return rc;
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace psim::cli
