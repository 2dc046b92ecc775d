#pragma once

#include "ctqw/circuit.hpp"
#include "ctqw/gates.hpp"

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace ctqw {

inline constexpr double kVerifyTolerance = 1e-10;

/// 2x2 circuit-model matrix of a single-qubit gate. Y_direct and Y share
/// the Pauli Y matrix.
Eigen::Matrix2cd single_qubit_matrix(GateKind kind);

/// Kronecker product of per-qubit factors, qubit 1 leftmost; qubits without
/// a factor get the identity.
Eigen::MatrixXcd embed(std::size_t qubits, const std::vector<std::pair<Qubit, Eigen::Matrix2cd>>& factors);

Eigen::MatrixXcd placement_matrix(const GatePlacement& p);

/// Right-to-left product of the placement matrices. Throws InvalidCircuit
/// for circuits that measure or prepare.
Eigen::MatrixXcd kron_oracle(const Circuit& c);

struct EquivalenceReport {
    double max_abs_deviation;
    bool equal_strict;
    bool equal_up_to_global_phase;
    /// v is compared with u after dividing by this phase; 1 when no phase
    /// could be pinned.
    Complex extracted_phase;
};

/// Phase pinned on v's largest-magnitude entry.
EquivalenceReport compare(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v, double tol = kVerifyTolerance);

double max_abs_deviation(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// Largest amplitude a unitary moves from the first block vertices into the
/// remaining ones.
double leakage(const Eigen::MatrixXcd& u, std::size_t block);

enum class GoldenGate {
    H,
    T,
};

struct GoldenMatrices {
    std::vector<Eigen::MatrixXcd> stages;
    Eigen::MatrixXcd product;
};

/// Hand-entered stage propagators and products of gate_h(3, 3) and gate_t(),
/// built from exact atoms rather than from the walk code.
GoldenMatrices golden_matrices(GoldenGate gate);

/// Second Hadamard stage with the entries of rows 6 and 7 misplaced
/// ((6,7) and (7,0) set instead of (6,0) and (7,7)). Not symmetric, so no
/// walk produces it; kept as a negative control.
Eigen::MatrixXcd asymmetric_h_stage2();

struct Check {
    std::string name;
    double deviation;
    bool passed;
};

struct VerificationReport {
    std::string gate;
    std::vector<Check> checks;

    bool passed() const;
};

/// Names accepted by verify_gate, in the order "all" runs them.
const std::vector<std::string>& verifiable_gates();

/// Per-gate checks at kVerifyTolerance. Accepts the names above and "all";
/// anything else throws UnsupportedGate.
std::vector<VerificationReport> verify(std::string_view gate);

} // namespace ctqw
