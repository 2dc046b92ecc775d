#pragma once

#include "ctqw/dynamic_graph.hpp"
#include "ctqw/gates.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

namespace ctqw {

struct Measure {
    Qubit qubit;
    /// Outcome to condition on instead of sampling.
    std::optional<int> forced;

    bool operator==(const Measure&) const = default;
};

/// K2 walk on vertices (0,1) for angle_time, rotating |0> into
/// cos(t)|0> - i sin(t)|1> on the least significant logical qubit.
struct PrepareRotation {
    double angle_time;

    bool operator==(const PrepareRotation&) const = default;
};

using Operation = std::variant<GatePlacement, Measure, PrepareRotation>;

class Circuit {
public:
    /// Validates every placement against qubits; PrepareRotation may only
    /// appear before all other operations.
    Circuit(std::size_t qubits, std::vector<Operation> ops = {});

    std::size_t qubits() const noexcept { return qubits_; }
    const std::vector<Operation>& ops() const& noexcept { return ops_; }
    // by value on temporaries, so range-for over f().ops() is safe
    std::vector<Operation> ops() && { return std::move(ops_); }
    bool has_measurement() const;

    Circuit& gate(GateKind kind, std::vector<Qubit> targets);
    Circuit& measure(Qubit qubit, std::optional<int> forced = std::nullopt);
    Circuit& prepare_rotation(double angle_time);

    bool operator==(const Circuit&) const = default;

private:
    void check(const Operation& op) const;

    std::size_t qubits_;
    std::vector<Operation> ops_;
};

/// Register the circuit is compiled onto. Circuits on fewer than three
/// qubits that use H, Z, Y or T get ancilla qubits prepended as the most
/// significant bits, so logical states occupy the first 2^n labels.
std::size_t register_qubits(const Circuit& c);

struct Compilation {
    DynamicGraph walk;
    std::size_t logical_qubits;
    std::size_t register_qubits;

    std::size_t logical_vertices() const { return std::size_t { 1 } << logical_qubits; }
    /// Register qubit carrying logical qubit q.
    Qubit register_qubit(Qubit q) const { return q + (register_qubits - logical_qubits); }
};

/// Concatenates the library walk of every gate. Throws InvalidCircuit if the
/// circuit measures, UnsupportedGate for placements with no walk.
Compilation compile(const Circuit& c);

/// Gates reversed; only valid for circuits of self-inverse gates.
Circuit inverse(const Circuit& c);

struct MeasurementRecord {
    Qubit qubit;
    int outcome;
    double probability;
};

struct MeasurementResult {
    MeasurementRecord record;
    StateVector post_state;
};

/// Probability that qubit (of the register spanned by s) reads 1.
double probability_of_one(const StateVector& s, Qubit qubit);

/// Projects onto the forced outcome and renormalizes. Throws NullOutcome if
/// that outcome has probability below 1e-12.
MeasurementResult measure_qubit(const StateVector& s, Qubit qubit, int forced_outcome);
/// Samples the outcome with rng.
MeasurementResult measure_qubit(const StateVector& s, Qubit qubit, std::mt19937_64& rng);

/// X walks on every qubit whose bit is set in vertex, steering it to 0.
DynamicGraph initialize(std::size_t vertex, std::size_t qubits);
/// Same, for a state that a measurement left on a single basis vertex.
DynamicGraph initialize(const StateVector& s, std::size_t qubits);

struct Segment {
    DynamicGraph walk;
    double start_time;
};

struct ExecutionReport {
    std::size_t logical_qubits;
    std::size_t register_qubits;
    std::vector<MeasurementRecord> measurements;
    /// Walks executed between measurements, in order.
    std::vector<Segment> segments;
    StateVector final_state;
};

/// Runs the circuit from vertex 0, splitting at every measurement: the
/// walk up to the measurement is evolved, the state is projected, and the
/// rest is compiled afresh.
ExecutionReport run(const Circuit& c, std::uint64_t seed);

/// Trajectory over all segments of a report, starting from vertex 0, with
/// the measurement projection applied between segments.
Trajectory execution_trajectory(const ExecutionReport& report, std::size_t samples_per_stage);

// Teleportation ------------------------------------------------------------

/// The circuit's qubit k sits on register qubit 4 - k: the state to send
/// is prepared on vertices {0,1}, the two measured qubits are the two low
/// label bits and the received qubit is the most significant bit.
struct TeleportationWalks {
    DynamicGraph pre_measurement;
    DynamicGraph recovery;
};

/// b1 and b2 are the outcomes on the circuit's first and second qubit.
/// With phase_correct the -i left on |1> by the rotation is removed by two
/// confined T walks, so the sent state is sqrt(1-a)|0> + sqrt(a)|1>.
TeleportationWalks teleportation_circuit(double a, int b1, int b2, bool phase_correct = true);

struct TeleportationResult {
    StateVector pre_measurement;
    /// indexed by 2*b1 + b2
    std::array<double, 4> outcome_probabilities;
    MeasurementRecord first;
    MeasurementRecord second;
    StateVector post_measurement;
    StateVector final_state;
    /// Amplitudes of the received qubit (|0>, |1>) on the measured branch.
    std::array<Complex, 2> received;
    TeleportationWalks walks;
};

TeleportationResult run_teleportation(double a, int b1, int b2, bool phase_correct = true);

/// State the sender intends to transmit, including the raw rotation's
/// relative phase when phase_correct is false.
std::array<Complex, 2> teleportation_input(double a, bool phase_correct = true);

// One-bit adder -------------------------------------------------------------

/// Register order (b1, b0, a0, c0), b1 most significant.
inline constexpr Qubit kAdderB1 = 1;
inline constexpr Qubit kAdderB0 = 2;
inline constexpr Qubit kAdderA0 = 3;
inline constexpr Qubit kAdderC0 = 4;

/// Carry(c0, a0, b0, b1), CNOT(a0 -> b0), Sum(c0, a0, b0).
Circuit adder_circuit();

enum class AdderInput {
    Zero,
    One,
    Plus,
};

/// Gates preparing a0 and b0 from |0000>.
Circuit adder_preparation(int a0, AdderInput b0);

struct AdderResult {
    DynamicGraph walk;
    StateVector final_state;
};

/// Preparation followed by the adder, compiled into one walk and run from
/// vertex 0.
AdderResult run_adder(int a0, AdderInput b0);

} // namespace ctqw
