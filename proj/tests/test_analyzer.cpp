#include <doctest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "paritysim/analyzer.hpp"

using namespace psim;
using namespace psim::analyzer;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DecisionTree tree_for(Family f) {
    switch (f) {
    case Family::Bell: return bell_analyzer();
    case Family::GHZ3: return ghz3_analyzer();
    case Family::Quad: return quad_analyzer();
    }
    throw std::logic_error("bad family");
}

}  // namespace

TEST_SUITE("labels") {
    TEST_CASE("families enumerate 4 / 8 / 16 states") {
        CHECK(family_labels(Family::Bell).size() == 4);
        CHECK(family_labels(Family::GHZ3).size() == 8);
        CHECK(family_labels(Family::Quad).size() == 16);
    }

    TEST_CASE("round trip through the text form") {
        for (auto family : {Family::Bell, Family::GHZ3, Family::Quad}) {
            for (const auto& label : family_labels(family)) {
                CHECK(parse_label(to_string(label)) == label);
            }
        }
        CHECK(to_string({Family::Bell, 0, +1}) == "bell:phi+");
        CHECK(to_string({Family::GHZ3, 1, -1}) == "ghz3:g2-");
        CHECK(to_string({Family::Quad, 6, -1}) == "quad:vii-");
        CHECK_THROWS_AS(parse_label("bell:phi"), std::invalid_argument);
        CHECK_THROWS_AS(parse_label("quad:ix+"), std::invalid_argument);
        CHECK_THROWS_AS(parse_label("nope:phi+"), std::invalid_argument);
    }

    TEST_CASE("defining states") {
        auto phi_plus = basis_state({Family::Bell, 0, +1});
        CHECK(phi_plus.amp(0b00) == Amplitude{kInvSqrt2, 0.0});
        CHECK(phi_plus.amp(0b11) == Amplitude{kInvSqrt2, 0.0});

        auto g1_plus = basis_state({Family::GHZ3, 0, +1});
        CHECK(g1_plus.amp(0b000) == Amplitude{kInvSqrt2, 0.0});
        CHECK(g1_plus.amp(0b111) == Amplitude{kInvSqrt2, 0.0});

        auto viii_minus = basis_state({Family::Quad, 7, -1});
        CHECK(viii_minus.amp(0b1001) == Amplitude{kInvSqrt2, 0.0});
        CHECK(viii_minus.amp(0b0110) == Amplitude{-kInvSqrt2, 0.0});
    }

    TEST_CASE("each family is an orthonormal basis") {
        for (auto family : {Family::Bell, Family::GHZ3, Family::Quad}) {
            auto labels = family_labels(family);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                for (std::size_t j = 0; j < labels.size(); ++j) {
                    double expect = i == j ? 1.0 : 0.0;
                    CHECK(std::abs(overlap_magnitude(basis_state(labels[i]),
                                                     basis_state(labels[j])) -
                                   expect) <= 1e-12);
                }
            }
        }
    }
}

TEST_SUITE("bell_analyzer") {
    TEST_CASE("detector mapping and preserved inputs") {
        auto tree = bell_analyzer();
        struct Row {
            const char* name;
            int p1;
            int p2;
        };
        const Row rows[] = {
            {"bell:phi+", 1, 1}, {"bell:phi-", 1, 0}, {"bell:psi+", 0, 1}, {"bell:psi-", 0, 0}};
        for (const auto& row : rows) {
            auto label = parse_label(row.name);
            auto input = basis_state(label);
            auto report = classify(tree, input, EnumerateMode{}, label);
            REQUIRE(report.branches.size() == 1);
            CHECK(report.deterministic);
            CHECK(report.destroyed_qubits == 0);
            const auto& branch = report.branches.front();
            CHECK(outcome_value(branch.outcomes, "P1") == row.p1);
            CHECK(outcome_value(branch.outcomes, "P2") == row.p2);
            CHECK(branch.probability == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(overlap_magnitude(branch.final_state, input) >= 1.0 - 1e-12);
        }
    }

    TEST_CASE("random inputs collapse onto the measured Bell state") {
        auto tree = bell_analyzer();
        DeterministicRng rng(61);
        for (int trial = 0; trial < 20; ++trial) {
            auto input = random_state(2, rng);
            auto report = classify(tree, input, EnumerateMode{});
            for (const auto& branch : report.branches) {
                CHECK(overlap_magnitude(branch.final_state, basis_state(branch.label)) >=
                      1.0 - 1e-12);
            }
        }
    }
}

TEST_SUITE("ghz3_analyzer") {
    TEST_CASE("exhaustive classification of all eight states") {
        auto tree = ghz3_analyzer();
        for (const auto& label : family_labels(Family::GHZ3)) {
            auto report = classify(tree, basis_state(label), EnumerateMode{}, label);
            CHECK(report.deterministic);
            CHECK(report.destroyed_qubits == 1);
            double total = 0.0;
            for (const auto& branch : report.branches) {
                CHECK(branch.label == label);
                total += branch.probability;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("sign readout for the |000>/|111> pair follows the click/P3 rule") {
        auto tree = ghz3_analyzer();
        for (int sign : {+1, -1}) {
            auto report = classify(tree, basis_state({Family::GHZ3, 0, sign}), EnumerateMode{});
            REQUIRE(report.branches.size() == 2);
            for (const auto& branch : report.branches) {
                int click = outcome_value(branch.outcomes, "M");
                int p3 = outcome_value(branch.outcomes, "P3");
                CHECK((click == p3 ? +1 : -1) == sign);
            }
        }
    }

    TEST_CASE("|000> splits evenly between the two signs of its group") {
        auto tree = ghz3_analyzer();
        auto report = classify(tree, StateVector::basis_state(3, 0b000), EnumerateMode{});
        std::map<std::string, double> dist;
        for (const auto& branch : report.branches) {
            dist[to_string(branch.label)] += branch.probability;
        }
        CHECK(dist["ghz3:g1+"] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(dist["ghz3:g1-"] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK_FALSE(report.deterministic);
    }
}

TEST_SUITE("quad_analyzer") {
    TEST_CASE("exhaustive classification of all sixteen states") {
        auto tree = quad_analyzer();
        for (const auto& label : family_labels(Family::Quad)) {
            auto report = classify(tree, basis_state(label), EnumerateMode{}, label);
            CHECK(report.deterministic);
            CHECK(report.destroyed_qubits == 2);
            double total = 0.0;
            for (const auto& branch : report.branches) {
                CHECK(branch.label == label);
                total += branch.probability;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("detector signatures for the two all-even classes") {
        auto tree = quad_analyzer();
        auto check_pattern = [&](const char* name, int p1, int p2, int p3) {
            auto label = parse_label(name);
            auto report = classify(tree, basis_state(label), EnumerateMode{}, label);
            for (const auto& branch : report.branches) {
                CHECK(outcome_value(branch.outcomes, "P1") == p1);
                CHECK(outcome_value(branch.outcomes, "P2") == p2);
                CHECK(outcome_value(branch.outcomes, "P3") == p3);
            }
        };
        check_pattern("quad:i+", 1, 1, 1);
        check_pattern("quad:vi-", 1, 1, 0);
    }
}

TEST_SUITE("group_tables") {
    TEST_CASE("derived grouping matches the bitstring parity oracle") {
        auto tables = derive_group_tables();
        CHECK(tables.verified);

        // Independent oracle: parities straight off the defining bitstrings,
        // with the conditional flips applied to the bits themselves.
        auto bit = [](int bits, int qubit, int n) { return (bits >> (n - qubit)) & 1; };
        const int quad_reps[8] = {0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001};
        std::map<std::string, int> expected_classes;
        for (int cls = 0; cls < 8; ++cls) {
            int rep = quad_reps[cls];
            int p1 = 1 - (bit(rep, 1, 4) ^ bit(rep, 2, 4));
            if (p1 == 0) rep ^= 0b1000;
            int p2 = 1 - (bit(rep, 3, 4) ^ bit(rep, 4, 4));
            if (p2 == 0) rep ^= 0b0001;
            int p3 = 1 - (bit(rep, 2, 4) ^ bit(rep, 3, 4));
            std::string pattern = {static_cast<char>('0' + p1), static_cast<char>('0' + p2),
                                   static_cast<char>('0' + p3)};
            expected_classes[pattern] = cls;
        }
        REQUIRE(expected_classes.size() == 8);
        for (const auto& [pattern, cls] : tables.quad_classes) {
            CHECK(expected_classes.at(pattern) == cls);
        }

        // Pair-parity sets as published groupings.
        std::map<std::string, std::vector<int>> sets;
        for (const auto& [pattern, members] : tables.quad_sets) {
            sets[pattern] = members;
        }
        CHECK(sets.at("11") == std::vector<int>{0, 5});  // i, vi
        CHECK(sets.at("10") == std::vector<int>{1, 2});  // ii, iii
        CHECK(sets.at("01") == std::vector<int>{3, 4});  // iv, v
        CHECK(sets.at("00") == std::vector<int>{6, 7});  // vii, viii

        // GHZ3 groups: P2 even picks up {g1, g4}, odd {g2, g3}.
        std::map<std::string, int> ghz3;
        for (const auto& [pattern, cls] : tables.ghz3_groups) {
            ghz3[pattern] = cls;
        }
        CHECK(ghz3.at("11") == 0);
        CHECK(ghz3.at("10") == 1);
        CHECK(ghz3.at("00") == 2);
        CHECK(ghz3.at("01") == 3);
    }
}

TEST_SUITE("classify") {
    TEST_CASE("label distributions equal squared overlaps (projection oracle)") {
        DeterministicRng rng(71);
        for (auto family : {Family::Bell, Family::GHZ3, Family::Quad}) {
            auto tree = tree_for(family);
            for (int trial = 0; trial < 30; ++trial) {
                auto input = random_state(family_qubits(family), rng);
                auto report = classify(tree, input, EnumerateMode{});
                std::map<std::string, double> dist;
                double total = 0.0;
                for (const auto& branch : report.branches) {
                    dist[to_string(branch.label)] += branch.probability;
                    total += branch.probability;
                }
                CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
                for (const auto& label : family_labels(family)) {
                    double overlap = overlap_magnitude(basis_state(label), input);
                    CHECK(std::abs(dist[to_string(label)] - overlap * overlap) <= 1e-10);
                }
            }
        }
    }

    TEST_CASE("sample mode returns one deterministic branch") {
        auto tree = quad_analyzer();
        auto label = parse_label("quad:i+");
        auto a = classify(tree, basis_state(label), SampleMode{7}, label);
        auto b = classify(tree, basis_state(label), SampleMode{7}, label);
        REQUIRE(a.branches.size() == 1);
        CHECK(a.branches[0].label == label);
        CHECK(a.branches[0].outcomes == b.branches[0].outcomes);
    }

    TEST_CASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(classify(bell_analyzer(), StateVector::plus_product(3), EnumerateMode{}),
                        std::invalid_argument);
    }
}

TEST_SUITE("decompositions") {
    TEST_CASE("product expansions hold with the recorded constants") {
        auto report = verify_decompositions();
        CHECK(report.pass);
        CHECK(report.ghz3_expansion_scale == doctest::Approx(kInvSqrt2).epsilon(1e-12));
        CHECK(report.ghz3_max_deviation <= 1e-12);
        CHECK(report.quad_max_deviation <= 1e-12);
        CHECK(report.gram_max_deviation <= 1e-12);
        // Two of the printed minus-state forms carry an overall -1.
        CHECK(report.quad_sign_flips == std::vector<std::string>{"quad:iii-", "quad:vi-"});
    }
}
