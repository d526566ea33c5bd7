// Integration gate: runs every verification criterion at its pinned tolerance
// and prints one line per criterion. Exit status is nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "paritysim/selftest.hpp"

namespace {

// The embedded golden constants and the on-disk golden files must agree.
bool golden_files_match() {
    struct Entry {
        const char* file;
        const double* amps;
        std::size_t count;
    };
    const Entry entries[] = {
        {"eq2.json", psim::selftest::kChain2Amps, 4},
        {"eq3.json", psim::selftest::kChain4Amps, 16},
    };
    for (const auto& entry : entries) {
        std::ifstream in(std::string(PARITYSIM_GOLDEN_DIR) + "/" + entry.file);
        if (!in.good()) {
            std::printf("FAIL  golden file %s missing\n", entry.file);
            return false;
        }
        auto doc = nlohmann::json::parse(in);
        const auto& amps = doc.at("amplitudes");
        if (amps.size() != entry.count) {
            std::printf("FAIL  golden file %s has wrong length\n", entry.file);
            return false;
        }
        for (std::size_t i = 0; i < entry.count; ++i) {
            double re = amps[i][0].get<double>();
            double im = amps[i][1].get<double>();
            if (std::abs(re - entry.amps[i]) > 0.0 || im != 0.0) {
                std::printf("FAIL  golden file %s drifted at index %zu\n", entry.file, i);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    bool ok = golden_files_match();

    auto results = psim::selftest::run_acceptance();
    for (const auto& r : results) {
        std::printf("%s  %2d  %s%s%s%s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                    r.detail.empty() ? "" : "  (", r.detail.c_str(),
                    r.detail.empty() ? "" : ")");
        ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return ok ? 0 : 1;
}
