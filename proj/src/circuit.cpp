#include "ctqw/circuit.hpp"

#include "ctqw/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace ctqw {

namespace {

    constexpr double kNullOutcome = 1e-12;

    template <class... Ts>
    struct overloaded : Ts... {
        using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    bool needs_padding(GateKind kind)
    {
        switch (kind) {
        case GateKind::H:
        case GateKind::Z:
        case GateKind::YComposed:
        case GateKind::T:
        case GateKind::YDirect:
            return true;
        default:
            return false;
        }
    }

    std::size_t register_size(const StateVector& s)
    {
        const std::size_t dim = s.dimension();
        if (!std::has_single_bit(dim) || dim < 2) {
            throw Error(ErrorKind::DimensionMismatch, "state dimension " + std::to_string(dim) + " is not a qubit register");
        }
        return static_cast<std::size_t>(std::countr_zero(dim));
    }

    void check_bit(int b, const char* what)
    {
        if (b != 0 && b != 1) {
            throw Error(ErrorKind::InvalidCircuit, std::string(what) + " must be 0 or 1");
        }
    }

    // Walk for a measurement-free run of operations on a fixed register.
    DynamicGraph compile_ops(
        std::span<const Operation> ops, std::size_t logical, std::size_t reg)
    {
        const std::size_t pad_qubits = reg - logical;
        const std::size_t n = std::size_t { 1 } << reg;
        DynamicGraph walk(n);
        for (const auto& op : ops) {
            const DynamicGraph part = std::visit(
                overloaded {
                    [&](const GatePlacement& p) {
                        if (is_confined(p.kind)) {
                            if (logical != 1) {
                                throw Error(ErrorKind::UnsupportedGate,
                                    std::string(to_string(p.kind)) + " is only available on a single-qubit circuit");
                            }
                            return pad(build_gate({ p.kind, 1, { 1 } }), n);
                        }
                        GatePlacement mapped { p.kind, reg, p.targets };
                        for (auto& q : mapped.targets) {
                            q += pad_qubits;
                        }
                        return pad(build_gate(mapped), n);
                    },
                    [&](const Measure&) -> DynamicGraph {
                        throw Error(ErrorKind::InvalidCircuit, "measurements cannot be compiled into a walk");
                    },
                    [&](const PrepareRotation& r) {
                        if (r.angle_time == 0.0) {
                            return DynamicGraph(n);
                        }
                        return DynamicGraph(n, { { Graph::build(n, { { 0, 1 } }), Duration::raw(r.angle_time) } });
                    },
                },
                op);
            walk = concatenate(walk, part);
        }
        return walk;
    }

    MeasurementResult project(const StateVector& s, Qubit qubit, int outcome, double p_one)
    {
        const double p = outcome == 1 ? p_one : 1.0 - p_one;
        if (p < kNullOutcome) {
            throw Error(ErrorKind::NullOutcome,
                "outcome " + std::to_string(outcome) + " on qubit " + std::to_string(qubit) + " has probability "
                    + std::to_string(p));
        }
        const std::size_t reg = register_size(s);
        const std::size_t mask = qubit_mask(reg, qubit);
        Eigen::VectorXcd post = s.amplitudes();
        for (Eigen::Index j = 0; j < post.size(); ++j) {
            const int bit = (static_cast<std::size_t>(j) & mask) ? 1 : 0;
            if (bit != outcome) {
                post(j) = 0.0;
            }
        }
        post /= post.norm();
        return { { qubit, outcome, p }, StateVector(std::move(post)) };
    }

} // namespace

Circuit::Circuit(std::size_t qubits, std::vector<Operation> ops)
    : qubits_(qubits)
{
    if (qubits == 0) {
        throw Error(ErrorKind::InvalidQubit, "circuit needs at least one qubit");
    }
    for (auto& op : ops) {
        check(op);
        ops_.push_back(std::move(op));
    }
}

void Circuit::check(const Operation& op) const
{
    std::visit(overloaded {
                   [&](const GatePlacement& p) {
                       if (p.qubits != qubits_) {
                           throw Error(ErrorKind::InvalidQubit, "gate placed on a register of the wrong size");
                       }
                       p.validate();
                   },
                   [&](const Measure& m) {
                       if (m.qubit == 0 || m.qubit > qubits_) {
                           throw Error(ErrorKind::InvalidQubit, "measured qubit out of range");
                       }
                       if (m.forced) {
                           check_bit(*m.forced, "forced outcome");
                       }
                   },
                   [&](const PrepareRotation& r) {
                       const bool leading = std::all_of(ops_.begin(), ops_.end(),
                           [](const Operation& o) { return std::holds_alternative<PrepareRotation>(o); });
                       if (!leading) {
                           throw Error(ErrorKind::InvalidCircuit, "state preparation must lead the circuit");
                       }
                       if (!std::isfinite(r.angle_time) || r.angle_time < 0.0) {
                           throw Error(ErrorKind::InvalidDuration, "preparation time must be non-negative");
                       }
                   },
               },
        op);
}

bool Circuit::has_measurement() const
{
    return std::any_of(ops_.begin(), ops_.end(), [](const Operation& o) { return std::holds_alternative<Measure>(o); });
}

Circuit& Circuit::gate(GateKind kind, std::vector<Qubit> targets)
{
    Operation op = GatePlacement { kind, qubits_, std::move(targets) };
    check(op);
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::measure(Qubit qubit, std::optional<int> forced)
{
    Operation op = Measure { qubit, forced };
    check(op);
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::prepare_rotation(double angle_time)
{
    Operation op = PrepareRotation { angle_time };
    check(op);
    ops_.push_back(std::move(op));
    return *this;
}

std::size_t register_qubits(const Circuit& c)
{
    if (c.qubits() >= 3) {
        return c.qubits();
    }
    for (const auto& op : c.ops()) {
        if (const auto* p = std::get_if<GatePlacement>(&op); p && needs_padding(p->kind)) {
            return 3;
        }
    }
    return c.qubits();
}

Compilation compile(const Circuit& c)
{
    if (c.has_measurement()) {
        throw Error(ErrorKind::InvalidCircuit, "measurements cannot be compiled into a walk; use run()");
    }
    const std::size_t reg = register_qubits(c);
    return { compile_ops(c.ops(), c.qubits(), reg), c.qubits(), reg };
}

Circuit inverse(const Circuit& c)
{
    Circuit out(c.qubits());
    for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
        const auto* p = std::get_if<GatePlacement>(&*it);
        if (p == nullptr || p->kind == GateKind::T) {
            throw Error(ErrorKind::InvalidCircuit, "only circuits of self-inverse gates can be inverted");
        }
        out.gate(p->kind, p->targets);
    }
    return out;
}

double probability_of_one(const StateVector& s, Qubit qubit)
{
    const std::size_t reg = register_size(s);
    if (qubit == 0 || qubit > reg) {
        throw Error(ErrorKind::InvalidQubit, "measured qubit out of range");
    }
    const std::size_t mask = qubit_mask(reg, qubit);
    double p = 0.0;
    for (std::size_t j = 0; j < s.dimension(); ++j) {
        if (j & mask) {
            p += std::norm(s[j]);
        }
    }
    return p;
}

MeasurementResult measure_qubit(const StateVector& s, Qubit qubit, int forced_outcome)
{
    check_bit(forced_outcome, "forced outcome");
    return project(s, qubit, forced_outcome, probability_of_one(s, qubit));
}

MeasurementResult measure_qubit(const StateVector& s, Qubit qubit, std::mt19937_64& rng)
{
    const double p_one = probability_of_one(s, qubit);
    // 53 random bits, identical on every platform
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return project(s, qubit, u < p_one ? 1 : 0, p_one);
}

DynamicGraph initialize(std::size_t vertex, std::size_t qubits)
{
    const std::size_t n = std::size_t { 1 } << qubits;
    if (vertex >= n) {
        throw Error(ErrorKind::VertexOutOfRange, "vertex outside the register");
    }
    DynamicGraph walk(n);
    for (Qubit q = 1; q <= qubits; ++q) {
        if (vertex & qubit_mask(qubits, q)) {
            walk = concatenate(walk, gate_x(qubits, q));
        }
    }
    return walk;
}

DynamicGraph initialize(const StateVector& s, std::size_t qubits)
{
    if (s.dimension() != (std::size_t { 1 } << qubits)) {
        throw Error(ErrorKind::DimensionMismatch, "state does not span the register");
    }
    for (std::size_t j = 0; j < s.dimension(); ++j) {
        if (std::norm(s[j]) > 1.0 - kNormTolerance) {
            return initialize(j, qubits);
        }
    }
    throw Error(ErrorKind::InvalidCircuit, "state is not supported on a single basis vertex");
}

ExecutionReport run(const Circuit& c, std::uint64_t seed)
{
    const std::size_t logical = c.qubits();
    const std::size_t reg = register_qubits(c);
    const std::size_t pad_qubits = reg - logical;
    std::mt19937_64 rng(seed);

    StateVector state = StateVector::basis(std::size_t { 1 } << reg, 0);
    std::vector<Segment> segments;
    std::vector<MeasurementRecord> records;
    double clock = 0.0;
    std::vector<Operation> pending;

    auto flush = [&]() {
        DynamicGraph walk = compile_ops(pending, logical, reg);
        state = evolve(composite_propagator(walk), state);
        const double length = walk.total_duration().value();
        segments.push_back({ std::move(walk), clock });
        clock += length;
        pending.clear();
    };

    for (const auto& op : c.ops()) {
        const auto* m = std::get_if<Measure>(&op);
        if (m == nullptr) {
            pending.push_back(op);
            continue;
        }
        flush();
        const Qubit q = m->qubit + pad_qubits;
        MeasurementResult r = m->forced ? measure_qubit(state, q, *m->forced) : measure_qubit(state, q, rng);
        r.record.qubit = m->qubit;
        records.push_back(r.record);
        state = std::move(r.post_state);
    }
    flush();
    return { logical, reg, std::move(records), std::move(segments), std::move(state) };
}

Trajectory execution_trajectory(const ExecutionReport& report, std::size_t samples_per_stage)
{
    const std::size_t pad_qubits = report.register_qubits - report.logical_qubits;
    StateVector state = StateVector::basis(std::size_t { 1 } << report.register_qubits, 0);
    Trajectory out;
    out.stage_boundaries.push_back(0.0);
    for (std::size_t i = 0; i < report.segments.size(); ++i) {
        const auto& seg = report.segments[i];
        Trajectory part = evolve_dynamic(seg.walk, state, samples_per_stage);
        const bool last = i + 1 == report.segments.size();
        // the segment endpoint coincides with the next segment's first sample
        const std::size_t keep = last ? part.sample_times.size() : part.sample_times.size() - 1;
        for (std::size_t k = 0; k < keep; ++k) {
            out.sample_times.push_back(seg.start_time + part.sample_times[k]);
            out.probabilities.push_back(std::move(part.probabilities[k]));
        }
        for (std::size_t b = 1; b < part.stage_boundaries.size(); ++b) {
            out.stage_boundaries.push_back(seg.start_time + part.stage_boundaries[b]);
        }
        state = evolve(composite_propagator(seg.walk), state);
        if (i < report.measurements.size()) {
            const auto& m = report.measurements[i];
            state = measure_qubit(state, m.qubit + pad_qubits, m.outcome).post_state;
        }
    }
    return out;
}

// Teleportation ------------------------------------------------------------

namespace {

    constexpr std::size_t kTeleportQubits = 3;

    // circuit qubit k -> register qubit 4 - k
    constexpr Qubit on_register(Qubit circuit_qubit) { return 4 - circuit_qubit; }

    std::size_t branch_vertex(int received, int b1, int b2)
    {
        return static_cast<std::size_t>(4 * received + 2 * b2 + b1);
    }

} // namespace

std::array<Complex, 2> teleportation_input(double a, bool phase_correct)
{
    const double s = std::sqrt(a);
    return { Complex(std::sqrt(1.0 - a), 0.0), phase_correct ? Complex(s, 0.0) : Complex(0.0, -s) };
}

TeleportationWalks teleportation_circuit(double a, int b1, int b2, bool phase_correct)
{
    if (!(a >= 0.0 && a <= 1.0)) {
        throw Error(ErrorKind::InvalidCircuit, "teleportation amplitude parameter must lie in [0,1]");
    }
    check_bit(b1, "b1");
    check_bit(b2, "b2");

    const std::size_t n = std::size_t { 1 } << kTeleportQubits;
    DynamicGraph pre(n);
    const double rotation = std::asin(std::sqrt(a));
    if (rotation > 0.0) {
        pre.append({ Graph::build(n, { { 0, 1 } }), Duration::raw(rotation) });
    }
    if (phase_correct) {
        pre = concatenate(pre, gate_t());
        pre = concatenate(pre, gate_t());
    }
    pre = concatenate(pre, gate_h(kTeleportQubits, on_register(2)));
    pre = concatenate(pre, gate_cnot(kTeleportQubits, on_register(2), on_register(3)));
    pre = concatenate(pre, gate_cnot(kTeleportQubits, on_register(1), on_register(2)));
    pre = concatenate(pre, gate_h(kTeleportQubits, on_register(1)));

    DynamicGraph recovery(n);
    if (b2 == 1) {
        recovery = concatenate(recovery, gate_x(kTeleportQubits, on_register(3)));
    }
    if (b1 == 1) {
        recovery = concatenate(recovery, gate_z(kTeleportQubits, on_register(3)));
    }
    return { std::move(pre), std::move(recovery) };
}

TeleportationResult run_teleportation(double a, int b1, int b2, bool phase_correct)
{
    TeleportationWalks walks = teleportation_circuit(a, b1, b2, phase_correct);
    const std::size_t n = walks.pre_measurement.vertex_count();
    const StateVector pre = evolve(composite_propagator(walks.pre_measurement), StateVector::basis(n, 0));

    std::array<double, 4> probabilities {};
    for (int m1 = 0; m1 < 2; ++m1) {
        for (int m2 = 0; m2 < 2; ++m2) {
            probabilities[static_cast<std::size_t>(2 * m1 + m2)]
                = std::norm(pre[branch_vertex(0, m1, m2)]) + std::norm(pre[branch_vertex(1, m1, m2)]);
        }
    }

    MeasurementResult first = measure_qubit(pre, on_register(1), b1);
    first.record.qubit = 1;
    MeasurementResult second = measure_qubit(first.post_state, on_register(2), b2);
    second.record.qubit = 2;
    const StateVector final_state = evolve(composite_propagator(walks.recovery), second.post_state);
    const std::array<Complex, 2> received {
        final_state[branch_vertex(0, b1, b2)],
        final_state[branch_vertex(1, b1, b2)],
    };
    return {
        pre,
        probabilities,
        first.record,
        second.record,
        second.post_state,
        final_state,
        received,
        std::move(walks),
    };
}

// Adder ----------------------------------------------------------------------

Circuit adder_circuit()
{
    Circuit c(4);
    // carry
    c.gate(GateKind::CCNOT, { kAdderA0, kAdderB0, kAdderB1 });
    c.gate(GateKind::CNOT, { kAdderA0, kAdderB0 });
    c.gate(GateKind::CCNOT, { kAdderC0, kAdderB0, kAdderB1 });
    c.gate(GateKind::CNOT, { kAdderA0, kAdderB0 });
    // sum
    c.gate(GateKind::CNOT, { kAdderA0, kAdderB0 });
    c.gate(GateKind::CNOT, { kAdderC0, kAdderB0 });
    return c;
}

Circuit adder_preparation(int a0, AdderInput b0)
{
    check_bit(a0, "a0");
    Circuit c(4);
    if (a0 == 1) {
        c.gate(GateKind::X, { kAdderA0 });
    }
    if (b0 == AdderInput::One) {
        c.gate(GateKind::X, { kAdderB0 });
    } else if (b0 == AdderInput::Plus) {
        c.gate(GateKind::H, { kAdderB0 });
    }
    return c;
}

AdderResult run_adder(int a0, AdderInput b0)
{
    Circuit full = adder_preparation(a0, b0);
    const Circuit adder = adder_circuit();
    for (const auto& op : adder.ops()) {
        const auto& p = std::get<GatePlacement>(op);
        full.gate(p.kind, p.targets);
    }
    Compilation compiled = compile(full);
    const StateVector final_state = evolve(
        composite_propagator(compiled.walk), StateVector::basis(compiled.walk.vertex_count(), 0));
    return { std::move(compiled.walk), final_state };
}

} // namespace ctqw
