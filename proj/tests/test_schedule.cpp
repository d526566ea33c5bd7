#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "paritysim/cluster.hpp"
#include "paritysim/schedule.hpp"

using namespace psim;

TEST_SUITE("schedule") {
    TEST_CASE("empty schedule returns the input unchanged") {
        auto s = StateVector::plus_product(2);
        auto branches = run_schedule(s, CircuitSchedule{2, {}}, EnumerateMode{});
        REQUIRE(branches.size() == 1);
        CHECK(branches[0].probability == 1.0);
        CHECK(branches[0].final_state == s);
        CHECK(branches[0].measured_qubits.empty());
    }

    TEST_CASE("single parity check on |++> splits evenly") {
        CircuitSchedule sched{2, {ParityCheckOp{1, 2, ParityBasis::Z, "P1"}}};
        auto branches = run_schedule(StateVector::plus_product(2), sched, EnumerateMode{});
        REQUIRE(branches.size() == 2);
        CHECK(branches[0].outcomes == OutcomeList{{"P1", 1}});
        CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(branches[1].outcomes == OutcomeList{{"P1", 0}});
        CHECK(branches[1].probability == doctest::Approx(0.5).epsilon(1e-12));
    }

    TEST_CASE("four-qubit chain pipeline has eight uniform branches") {
        auto sched = cluster::chain_schedule(4);
        auto branches = run_schedule(StateVector::plus_product(4), sched, EnumerateMode{});
        REQUIRE(branches.size() == 8);
        double total = 0.0;
        for (const auto& b : branches) {
            CHECK(b.probability == doctest::Approx(0.125).epsilon(1e-12));
            total += b.probability;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("branch probabilities always sum to one") {
        DeterministicRng rng(41);
        CircuitSchedule sched{3,
                              {
                                  ParityCheckOp{1, 2, ParityBasis::Z, "P1"},
                                  ConditionalPauliOp{{"P1", 0}, Pauli::X, 2},
                                  MeasureXOp{2, "M"},
                                  ParityCheckOp{1, 3, ParityBasis::X, "P2"},
                              }};
        for (int trial = 0; trial < 25; ++trial) {
            auto branches = run_schedule(random_state(3, rng), sched, EnumerateMode{});
            double total = 0.0;
            for (const auto& b : branches) {
                total += b.probability;
                CHECK(std::abs(b.final_state.norm() - 1.0) <= 1e-12);
                CHECK(b.measured_qubits == std::vector<int>{2});
                CHECK(b.final_state.n_qubits() == 2);
            }
            CHECK(std::abs(total - 1.0) <= 1e-12);
        }
    }

    TEST_CASE("enumeration order is deterministic and canonical") {
        auto sched = cluster::chain_schedule(4);
        auto first = run_schedule(StateVector::plus_product(4), sched, EnumerateMode{});
        auto second = run_schedule(StateVector::plus_product(4), sched, EnumerateMode{});
        CHECK(first == second);
        // Outcome 1 explored before 0: first branch all-even, last all-odd.
        CHECK(first.front().outcomes == OutcomeList{{"P1", 1}, {"P2", 1}, {"P3", 1}});
        CHECK(first.back().outcomes == OutcomeList{{"P1", 0}, {"P2", 0}, {"P3", 0}});
    }

    TEST_CASE("sampling is seeded and reproducible") {
        auto sched = cluster::chain_schedule(5);
        auto a = run_schedule(StateVector::plus_product(5), sched, SampleMode{99});
        auto b = run_schedule(StateVector::plus_product(5), sched, SampleMode{99});
        REQUIRE(a.size() == 1);
        CHECK(a == b);
        // A different seed eventually finds another branch.
        bool differs = false;
        for (std::uint64_t seed = 0; seed < 16 && !differs; ++seed) {
            differs = run_schedule(StateVector::plus_product(5), sched, SampleMode{seed})[0]
                          .outcomes != a[0].outcomes;
        }
        CHECK(differs);
    }

    TEST_CASE("sampled branches agree with an enumerated branch") {
        auto sched = cluster::chain_schedule(3);
        auto all = run_schedule(StateVector::plus_product(3), sched, EnumerateMode{});
        auto one = run_schedule(StateVector::plus_product(3), sched, SampleMode{7});
        REQUIRE(one.size() == 1);
        bool found = false;
        for (const auto& b : all) {
            found = found || b == one[0];
        }
        CHECK(found);
    }

    TEST_CASE("forced patterns select a single branch and validate length") {
        auto sched = cluster::chain_schedule(4);
        auto branch = run_schedule(StateVector::plus_product(4), sched, ForcedMode{"101"});
        REQUIRE(branch.size() == 1);
        CHECK(branch[0].outcomes == OutcomeList{{"P1", 1}, {"P2", 0}, {"P3", 1}});
        CHECK_THROWS_AS(run_schedule(StateVector::plus_product(4), sched, ForcedMode{"10"}),
                        std::invalid_argument);
        CHECK_THROWS_AS(run_schedule(StateVector::plus_product(4), sched, ForcedMode{"1x1"}),
                        std::invalid_argument);
    }

    TEST_CASE("malformed schedules are rejected") {
        CircuitSchedule dup{2,
                            {ParityCheckOp{1, 2, ParityBasis::Z, "P"},
                             ParityCheckOp{1, 2, ParityBasis::X, "P"}}};
        CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

        CircuitSchedule early{2, {ConditionalPauliOp{{"missing", 0}, Pauli::X, 1}}};
        CHECK_THROWS_AS(early.validate(), std::invalid_argument);

        CircuitSchedule range{2, {MeasureXOp{3, "M"}}};
        CHECK_THROWS_AS(range.validate(), std::invalid_argument);

        CircuitSchedule bad_pauli{2,
                                  {ParityCheckOp{1, 2, ParityBasis::Z, "P"},
                                   ConditionalPauliOp{{"P", 0}, Pauli::Y, 1}}};
        CHECK_THROWS_AS(bad_pauli.validate(), std::invalid_argument);
    }

    TEST_CASE("instructions referencing measured qubits fail at run time") {
        CircuitSchedule sched{2,
                              {MeasureXOp{1, "M"},
                               ParityCheckOp{1, 2, ParityBasis::Z, "P"}}};
        CHECK_THROWS_AS(run_schedule(StateVector::plus_product(2), sched, EnumerateMode{}),
                        std::logic_error);
    }

    TEST_CASE("original qubit indices stay valid after a removal") {
        // Measure qubit 1, then act on original qubit 3 (live position 2).
        CircuitSchedule sched{3,
                              {MeasureXOp{1, "M"},
                               ParityCheckOp{2, 3, ParityBasis::Z, "P"}}};
        auto branches =
            run_schedule(StateVector::basis_state(3, 0b011), sched, EnumerateMode{});
        for (const auto& b : branches) {
            // Qubits 2 and 3 both read 1: even parity.
            CHECK(outcome_value(b.outcomes, "P") == 1);
        }
    }
}
