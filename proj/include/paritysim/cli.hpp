#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace psim::cli {

enum class OutputFormat { Json, Text };

struct Tolerances {
    double verify = 1e-10;  // stabilizer / POVM pass threshold

    // Reads PARITYSIM_VERIFY_TOL when set.
    static Tolerances from_env();
};

struct RunConfig {
    int n_qubits = 4;
    std::string mode = "enumerate";  // enumerate | sample | forced
    std::optional<std::uint64_t> seed;
    std::string forced_pattern;
    std::string family;  // analyze
    std::string input;   // analyze: named label or JSON amplitude list
    int samples = 1000;  // fermion-check
    bool corrupt_scattering = false;
    std::string out_path;       // empty -> stdout
    std::string out_dir = ".";  // tables
    OutputFormat format = OutputFormat::Json;
    Tolerances tol = Tolerances::from_env();
};

// Exit codes: 0 success, 1 verification failure, 2 usage/config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

int cmd_prepare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fermion_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace psim::cli
