#pragma once

#include "ctqw/circuit.hpp"
#include "ctqw/verification.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ctqw {

using nlohmann::json;

/// Parses text, turning syntax errors into ErrorKind::Parse with the byte
/// offset in the message.
json parse_json(std::string_view text);
json read_json_file(const std::string& path);

// Every *_from_json throws ErrorKind::Parse on a schema violation and lets
// structural errors (bad vertex, duplicate edge, ...) through unchanged.

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const Duration& d);
Duration duration_from_json(const json& j);

json to_json(const DynamicGraph& dg);
DynamicGraph dynamic_graph_from_json(const json& j);

json to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json to_json(Complex z);
json to_json(const Eigen::MatrixXcd& m);

json to_json(const StateVector& s);
/// {"amplitudes": [...]} with entries either [re, im] or plain reals.
StateVector state_from_json(const json& j);

json to_json(const ExecutionReport& r);
json to_json(const std::vector<VerificationReport>& reports);
json to_json(const TeleportationResult& r);
json to_json(const AdderResult& r);

/// Header t,p0,...,p{N-1}; 15 significant digits; LF line endings.
std::string trajectory_csv(const Trajectory& t);
/// Sidecar listing stage boundaries and the graph of every stage.
json trajectory_stages(const Trajectory& t, const DynamicGraph& dg);

/// Component shapes of a stage graph, e.g. "C4x2 K1x4".
std::string describe(const Graph& g);

/// Every library gate on every placement up to four qubits with its stage
/// summary.
json gate_manifest();

/// Shortest decimal that reads back to the same double, without locale.
std::string format_number(double v, int significant);

} // namespace ctqw
