#pragma once

#include "ctqw/dynamic_graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctqw {

/// Qubits are numbered from 1; qubit 1 is the most significant bit of a
/// vertex label on an n-qubit register of 2^n vertices.
using Qubit = std::size_t;

/// Bit of vertex v that carries qubit q.
inline std::size_t qubit_mask(std::size_t qubits, Qubit q) { return std::size_t { 1 } << (qubits - q); }

enum class GateKind {
    X,
    YDirect,
    YComposed,
    Z,
    H,
    T,
    I,
    CNOT,
    CCNOT,
};

std::string_view to_string(GateKind kind) noexcept;
/// Accepts the names produced by to_string; "Y" means the composed form.
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;
std::size_t arity(GateKind kind) noexcept;

struct GatePlacement {
    GateKind kind;
    std::size_t qubits;
    std::vector<Qubit> targets;

    /// Throws InvalidQubit on out-of-range, repeated or wrongly sized targets.
    void validate() const;

    bool operator==(const GatePlacement&) const = default;
};

enum class IdentityVariant {
    Singletons2Pi,
    K2Pairs2Pi,
    C4Pi,
};

std::string_view to_string(IdentityVariant variant) noexcept;

/// K2 pairs across the target bit for 3pi/2, then singletons for pi/2.
DynamicGraph gate_x(std::size_t qubits, Qubit target);

/// Singletons on the target=1 class and C4 cycles on the target=0 class, for
/// pi. With fewer than three qubits the target=0 class is topped up with
/// ancilla vertices appended after 2^n, so the walk has more than 2^n
/// vertices (5 for a single qubit); the logical block is the first 2^n.
DynamicGraph gate_z(std::size_t qubits, Qubit target);

/// Z, then X, then singletons for 3pi/2; equals Y = iXZ exactly on the
/// logical block. Vertex count follows gate_z.
DynamicGraph gate_y_composed(std::size_t qubits, Qubit target);

/// Five vertices; logical pair {0,1}, ancilla {2,3,4} must start empty.
DynamicGraph gate_y_direct();

/// Five-stage Hadamard walk on the target qubit. Needs at least three
/// qubits: the two lowest-numbered other qubits act as partners and any
/// remaining qubits are spectators.
DynamicGraph gate_h(std::size_t qubits, Qubit target);

/// Eight vertices; logical pair {0,1}, ancilla {2..7} must start empty.
DynamicGraph gate_t();

DynamicGraph gate_cnot(std::size_t qubits, Qubit control, Qubit target);
DynamicGraph gate_ccnot(std::size_t qubits, Qubit control1, Qubit control2, Qubit target);
DynamicGraph gate_identity(std::size_t qubits, IdentityVariant variant);

/// Dispatches on placement.kind. T and YDirect are only defined for a
/// single logical qubit; other combinations throw UnsupportedGate.
DynamicGraph build_gate(const GatePlacement& placement);

/// Gates whose walk is only correct while the ancilla vertices are empty.
bool is_confined(GateKind kind) noexcept;

/// Four vertices as a C4 in the (a,b,c,d) pattern: a-b, a-c, b-d, c-d.
/// a and d (and b and c) are antipodal.
void add_c4(std::vector<std::pair<Vertex, Vertex>>& edges, Vertex a, Vertex b, Vertex c, Vertex d);

} // namespace ctqw
