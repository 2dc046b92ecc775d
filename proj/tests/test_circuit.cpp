#include "ctqw/circuit.hpp"
#include "ctqw/verification.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctqw;
using ctqw::test::max_dev;
using ctqw::test::thrown;

TEST_SUITE("circuit_compiler")
{
    TEST_CASE("CNOT compiles to the two-stage walk")
    {
        const Circuit c = Circuit(2).gate(GateKind::CNOT, { 1, 2 });
        const Compilation out = compile(c);
        CHECK(out.register_qubits == 2);
        CHECK(out.walk.stages().size() == 2);
        CHECK(max_dev(composite_propagator(out.walk).matrix(), kron_oracle(c)) == 0.0);
    }

    TEST_CASE("empty circuit")
    {
        const Compilation out = compile(Circuit(3));
        CHECK(out.walk.empty());
        CHECK(max_dev(composite_propagator(out.walk).matrix(), Eigen::MatrixXcd::Identity(8, 8)) == 0.0);
    }

    TEST_CASE("teleportation gate sequence matches the oracle")
    {
        Circuit c(3);
        c.gate(GateKind::H, { 2 }).gate(GateKind::CNOT, { 2, 3 }).gate(GateKind::CNOT, { 1, 2 }).gate(GateKind::H, { 1 });
        CHECK(max_dev(composite_propagator(compile(c).walk).matrix(), kron_oracle(c)) < 1e-10);
    }

    TEST_CASE("small registers are padded for H and Z")
    {
        const Circuit c = Circuit(1).gate(GateKind::H, { 1 }).gate(GateKind::Z, { 1 });
        const Compilation out = compile(c);
        CHECK(out.register_qubits == 3);
        CHECK(out.register_qubit(1) == 3);
        const Eigen::MatrixXcd u = composite_propagator(out.walk).matrix();
        CHECK(max_dev(u.topLeftCorner(2, 2), kron_oracle(c)) < 1e-10);
        CHECK(leakage(u, 2) < 1e-10);
        CHECK(register_qubits(Circuit(2).gate(GateKind::X, { 1 })) == 2);
    }

    TEST_CASE("T on one logical qubit")
    {
        const Circuit c = Circuit(1).gate(GateKind::H, { 1 }).gate(GateKind::T, { 1 }).gate(GateKind::H, { 1 });
        const Eigen::MatrixXcd u = composite_propagator(compile(c).walk).matrix();
        CHECK(max_dev(u.topLeftCorner(2, 2), kron_oracle(c)) < 1e-10);
        CHECK(thrown([] { compile(Circuit(2).gate(GateKind::T, { 2 })); }) == ErrorKind::UnsupportedGate);
    }

    TEST_CASE("circuit validation")
    {
        CHECK(thrown([] { Circuit(2).gate(GateKind::X, { 3 }); }) == ErrorKind::InvalidQubit);
        CHECK(thrown([] { Circuit(2).gate(GateKind::X, { 1 }).prepare_rotation(0.1); }) == ErrorKind::InvalidCircuit);
        CHECK(thrown([] { compile(Circuit(1).measure(1)); }) == ErrorKind::InvalidCircuit);
        CHECK(thrown([] { Circuit(1).measure(1, 2); }) == ErrorKind::InvalidCircuit);
    }

    TEST_CASE("measurement of a uniform superposition")
    {
        Eigen::VectorXcd v(2);
        v << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
        const StateVector s(v);
        CHECK(probability_of_one(s, 1) == doctest::Approx(0.5));
        const MeasurementResult r = measure_qubit(s, 1, 1);
        CHECK(r.record.probability == doctest::Approx(0.5));
        CHECK(std::abs(r.post_state[1]) == doctest::Approx(1.0));
        CHECK(r.post_state[0] == Complex(0.0, 0.0));
    }

    TEST_CASE("measurement of a basis state")
    {
        const StateVector e5 = StateVector::basis(8, 5);
        const MeasurementResult r = measure_qubit(e5, 3, 1);
        CHECK(r.record.probability == 1.0);
        CHECK(r.post_state.amplitudes() == e5.amplitudes());
        CHECK(thrown([&] { measure_qubit(e5, 3, 0); }) == ErrorKind::NullOutcome);
        std::mt19937_64 rng(3);
        CHECK(measure_qubit(e5, 2, rng).record.outcome == 0);
    }

    TEST_CASE("initialize steers a basis vertex to 0")
    {
        CHECK(initialize(0, 3).empty());
        const DynamicGraph w5 = initialize(5, 3);
        CHECK(w5.stages().size() == 4);
        const StateVector out = evolve(composite_propagator(w5), StateVector::basis(8, 5));
        CHECK(std::abs(out[0] - 1.0) < 1e-15);
        const StateVector out7 = evolve(composite_propagator(initialize(StateVector::basis(8, 7), 3)), StateVector::basis(8, 7));
        CHECK(std::abs(out7[0] - 1.0) < 1e-15);
    }

    TEST_CASE("run splits at measurements")
    {
        Circuit c(3);
        c.gate(GateKind::H, { 1 }).measure(1, 1).gate(GateKind::X, { 2 });
        const ExecutionReport r = run(c, 1);
        REQUIRE(r.measurements.size() == 1);
        CHECK(r.measurements[0].outcome == 1);
        CHECK(r.measurements[0].probability == doctest::Approx(0.5));
        CHECK(r.segments.size() == 2);
        CHECK(std::abs(r.final_state[6] - 1.0) < 1e-12);
        const Trajectory t = execution_trajectory(r, 4);
        for (std::size_t k = 1; k < t.sample_times.size(); ++k) {
            CHECK(t.sample_times[k] > t.sample_times[k - 1]);
        }
        CHECK(t.probabilities.back()[6] == doctest::Approx(1.0));
    }

    TEST_CASE("seeded runs repeat")
    {
        Circuit c(3);
        c.gate(GateKind::H, { 1 }).gate(GateKind::H, { 2 }).measure(1).measure(2);
        const ExecutionReport a = run(c, 42);
        const ExecutionReport b = run(c, 42);
        CHECK(a.measurements[0].outcome == b.measurements[0].outcome);
        CHECK(a.measurements[1].outcome == b.measurements[1].outcome);
        CHECK(a.final_state.amplitudes() == b.final_state.amplitudes());
    }

    TEST_CASE("teleportation pre-measurement state")
    {
        const StateVector zero = run_teleportation(0.0, 0, 0).pre_measurement;
        for (std::size_t v : { 0, 1, 6, 7 }) {
            CHECK(std::norm(zero[v]) == doctest::Approx(0.25));
        }
        const StateVector half = run_teleportation(0.5, 0, 0).pre_measurement;
        for (std::size_t v = 0; v < 8; ++v) {
            CHECK(std::norm(half[v]) == doctest::Approx(0.125));
        }
    }

    TEST_CASE("teleportation of |1>")
    {
        const TeleportationResult r = run_teleportation(1.0, 1, 1);
        CHECK(std::abs(r.received[0]) < 1e-12);
        CHECK(std::abs(r.received[1]) == doctest::Approx(1.0));
        CHECK(thrown([] { teleportation_circuit(1.5, 0, 0); }) == ErrorKind::InvalidCircuit);
    }

    TEST_CASE("raw-phase teleportation keeps the rotation's -i")
    {
        const double a = 0.3;
        const TeleportationResult r = run_teleportation(a, 0, 1, false);
        const auto input = teleportation_input(a, false);
        const Complex phase = r.received[0] / input[0];
        CHECK(std::abs(r.received[1] - phase * input[1]) < 1e-10);
    }

    TEST_CASE("adder")
    {
        const StateVector plus = run_adder(1, AdderInput::Plus).final_state;
        CHECK(std::norm(plus[6]) == doctest::Approx(0.5));
        CHECK(std::norm(plus[10]) == doctest::Approx(0.5));
        const StateVector zero = run_adder(0, AdderInput::Zero).final_state;
        CHECK(std::norm(zero[0]) == doctest::Approx(1.0));
        const StateVector two = run_adder(1, AdderInput::One).final_state;
        CHECK(std::norm(two[0b1010]) == doctest::Approx(1.0));
    }

    TEST_CASE("adder is undone by its inverse")
    {
        const Circuit adder = adder_circuit();
        Circuit round = adder;
        for (const auto& op : inverse(adder).ops()) {
            const auto& p = std::get<GatePlacement>(op);
            round.gate(p.kind, p.targets);
        }
        CHECK(max_dev(composite_propagator(compile(round).walk).matrix(), Eigen::MatrixXcd::Identity(16, 16)) < 1e-10);
    }
}
