#include <CLI11.hpp>
#include <iostream>

#include "paritysim/cli.hpp"

int main(int argc, char** argv) {
    using psim::cli::RunConfig;

    CLI::App app{"Parity-check entanglement toolkit: chain cluster preparation, "
                 "entangled-basis analyzers, and the fermionic encoder check"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::string seed_str;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "write the report to this file instead of stdout");
        sub->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--tol", cfg.tol.verify, "verification tolerance");
    };

    auto* prepare = app.add_subcommand("prepare", "prepare a linear chain cluster state");
    prepare->add_option("--n", cfg.n_qubits, "number of qubits (>= 2)");
    prepare->add_option("--mode", cfg.mode, "enumerate, sample, or forced");
    prepare->add_option("--seed", seed_str, "RNG seed for sample mode");
    prepare
        ->add_option("--forced", cfg.forced_pattern,
                     "detector pattern, one '0'/'1' per detector; implies --mode forced")
        ->expected(1);
    add_common(prepare);

    auto* analyze = app.add_subcommand("analyze", "classify a state with an entanglement analyzer");
    analyze->add_option("--family", cfg.family, "bell, ghz3, or quad")->required();
    analyze
        ->add_option("--input", cfg.input,
                     "named state like bell:phi+ or a JSON list of [re,im] amplitude pairs")
        ->required();
    analyze->add_option("--mode", cfg.mode, "enumerate or sample");
    analyze->add_option("--seed", seed_str, "RNG seed for sample mode");
    add_common(analyze);

    auto* tables = app.add_subcommand("tables", "derive and write the correction/grouping tables");
    tables->add_option("--out-dir", cfg.out_dir, "directory for the table files");
    add_common(tables);

    auto* fermion = app.add_subcommand("fermion-check", "two-electron encoder validation");
    fermion->add_option("--samples", cfg.samples, "number of random input states");
    fermion->add_option("--seed", seed_str, "RNG seed for the random inputs");
    fermion->add_flag("--corrupt-scattering", cfg.corrupt_scattering,
                      "negative control: run against a detuned scattering matrix");
    add_common(fermion);

    auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    if (!seed_str.empty()) {
        try {
            if (seed_str.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("not a non-negative integer");
            }
            cfg.seed = std::stoull(seed_str);
        } catch (const std::exception&) {
            std::cerr << "error: --seed must be an unsigned integer\n";
            return psim::cli::kExitUsage;
        }
    }
    if (!cfg.forced_pattern.empty()) {
        cfg.mode = "forced";
    }
    cfg.format = (format == "text") ? psim::cli::OutputFormat::Text : psim::cli::OutputFormat::Json;

    try {
        if (prepare->parsed()) {
            return psim::cli::cmd_prepare(cfg, std::cout, std::cerr);
        }
        if (analyze->parsed()) {
            return psim::cli::cmd_analyze(cfg, std::cout, std::cerr);
        }
        if (tables->parsed()) {
            return psim::cli::cmd_tables(cfg, std::cout, std::cerr);
        }
        if (fermion->parsed()) {
            return psim::cli::cmd_fermion_check(cfg, std::cout, std::cerr);
        }
        return psim::cli::cmd_verify(cfg, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return psim::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return psim::cli::kExitVerifyFailed;
    }
}
