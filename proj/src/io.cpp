#include "ctqw/io.hpp"

#include "ctqw/error.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace ctqw {

namespace {

    [[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

    const json& field(const json& j, const char* key)
    {
        if (!j.is_object()) {
            schema_error(std::string("expected an object holding \"") + key + "\"");
        }
        const auto it = j.find(key);
        if (it == j.end()) {
            schema_error(std::string("missing field \"") + key + "\"");
        }
        return *it;
    }

    std::size_t as_index(const json& j, const char* what)
    {
        if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
            schema_error(std::string(what) + " must be a non-negative integer");
        }
        return j.get<std::size_t>();
    }

    double as_real(const json& j, const char* what)
    {
        if (!j.is_number()) {
            schema_error(std::string(what) + " must be a number");
        }
        return j.get<double>();
    }

    const json& as_array(const json& j, const char* what)
    {
        if (!j.is_array()) {
            schema_error(std::string(what) + " must be an array");
        }
        return j;
    }

    std::vector<std::pair<Vertex, Vertex>> edges_from_json(const json& j)
    {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : as_array(j, "edges")) {
            if (!e.is_array() || e.size() != 2) {
                schema_error("an edge must be a pair [u, v]");
            }
            edges.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
        }
        return edges;
    }

    json edges_to_json(const Graph& g)
    {
        json edges = json::array();
        for (const auto& e : g.edges()) {
            edges.push_back({ e.u, e.v });
        }
        return edges;
    }

    Complex complex_from_json(const json& j)
    {
        if (j.is_number()) {
            return { j.get<double>(), 0.0 };
        }
        if (j.is_array() && j.size() == 2) {
            return { as_real(j[0], "real part"), as_real(j[1], "imaginary part") };
        }
        schema_error("an amplitude must be a number or a pair [re, im]");
    }

    json amplitudes_to_json(const StateVector& s)
    {
        json out = json::array();
        for (std::size_t j = 0; j < s.dimension(); ++j) {
            out.push_back(to_json(s[j]));
        }
        return out;
    }

    json record_to_json(const MeasurementRecord& m)
    {
        return { { "qubit", m.qubit }, { "outcome", m.outcome }, { "probability", m.probability } };
    }

    json stages_to_json(const DynamicGraph& dg, double offset)
    {
        json stages = json::array();
        double start = offset;
        for (const auto& s : dg.stages()) {
            const double end = start + s.duration.value();
            stages.push_back({
                { "graph", describe(s.graph) },
                { "duration", to_json(s.duration) },
                { "start", start },
                { "end", end },
            });
            start = end;
        }
        return stages;
    }

} // namespace

std::string format_number(double v, int significant)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

json to_json(const Graph& g) { return { { "vertices", g.vertex_count() }, { "edges", edges_to_json(g) } }; }

Graph graph_from_json(const json& j)
{
    return Graph::build(as_index(field(j, "vertices"), "vertices"), edges_from_json(field(j, "edges")));
}

json to_json(const Duration& d)
{
    if (d.is_pi_fraction()) {
        return { { "pi_num", d.fraction().num }, { "pi_den", d.fraction().den } };
    }
    return { { "raw", d.value() } };
}

Duration duration_from_json(const json& j)
{
    if (j.is_object() && j.contains("raw")) {
        return Duration::raw(as_real(j["raw"], "raw duration"));
    }
    const json& num = field(j, "pi_num");
    const json& den = field(j, "pi_den");
    if (!num.is_number_integer() || !den.is_number_integer()) {
        schema_error("pi_num and pi_den must be integers");
    }
    return Duration::pi(num.get<std::int64_t>(), den.get<std::int64_t>());
}

json to_json(const DynamicGraph& dg)
{
    json stages = json::array();
    for (const auto& s : dg.stages()) {
        stages.push_back({ { "edges", edges_to_json(s.graph) }, { "duration", to_json(s.duration) } });
    }
    return { { "vertices", dg.vertex_count() }, { "stages", stages } };
}

DynamicGraph dynamic_graph_from_json(const json& j)
{
    const std::size_t n = as_index(field(j, "vertices"), "vertices");
    DynamicGraph dg(n);
    for (const auto& s : as_array(field(j, "stages"), "stages")) {
        dg.append({ Graph::build(n, edges_from_json(field(s, "edges"))), duration_from_json(field(s, "duration")) });
    }
    return dg;
}

json to_json(const Circuit& c)
{
    json ops = json::array();
    for (const auto& op : c.ops()) {
        if (const auto* p = std::get_if<GatePlacement>(&op)) {
            ops.push_back({ { "gate", std::string(to_string(p->kind)) }, { "targets", p->targets } });
        } else if (const auto* m = std::get_if<Measure>(&op)) {
            json o { { "measure", m->qubit } };
            if (m->forced) {
                o["force"] = *m->forced;
            }
            ops.push_back(o);
        } else {
            ops.push_back({ { "prepare_rotation", std::get<PrepareRotation>(op).angle_time } });
        }
    }
    return { { "qubits", c.qubits() }, { "ops", ops } };
}

Circuit circuit_from_json(const json& j)
{
    Circuit c(as_index(field(j, "qubits"), "qubits"));
    for (const auto& op : as_array(field(j, "ops"), "ops")) {
        if (!op.is_object()) {
            schema_error("an operation must be an object");
        }
        if (op.contains("gate")) {
            if (!op["gate"].is_string()) {
                schema_error("gate must be a name");
            }
            const auto name = op["gate"].get<std::string>();
            const auto kind = parse_gate_kind(name);
            if (!kind) {
                throw Error(ErrorKind::UnsupportedGate, "unknown gate '" + name + "'");
            }
            std::vector<Qubit> targets;
            for (const auto& t : as_array(field(op, "targets"), "targets")) {
                targets.push_back(as_index(t, "target"));
            }
            c.gate(*kind, std::move(targets));
        } else if (op.contains("measure")) {
            std::optional<int> forced;
            if (op.contains("force")) {
                forced = static_cast<int>(as_index(op["force"], "force"));
            }
            c.measure(as_index(op["measure"], "measure"), forced);
        } else if (op.contains("prepare_rotation")) {
            c.prepare_rotation(as_real(op["prepare_rotation"], "prepare_rotation"));
        } else {
            schema_error("an operation needs \"gate\", \"measure\" or \"prepare_rotation\"");
        }
    }
    return c;
}

json to_json(Complex z) { return { z.real(), z.imag() }; }

json to_json(const Eigen::MatrixXcd& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(to_json(m(i, k)));
        }
        rows.push_back(row);
    }
    return rows;
}

json to_json(const StateVector& s) { return { { "amplitudes", amplitudes_to_json(s) } }; }

StateVector state_from_json(const json& j)
{
    const json& amps = as_array(field(j, "amplitudes"), "amplitudes");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t k = 0; k < amps.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = complex_from_json(amps[k]);
    }
    if (v.size() == 0) {
        throw Error(ErrorKind::EmptyInput, "state has no amplitudes");
    }
    return StateVector(std::move(v));
}

json to_json(const ExecutionReport& r)
{
    json measurements = json::array();
    for (const auto& m : r.measurements) {
        measurements.push_back(record_to_json(m));
    }
    json segments = json::array();
    for (const auto& s : r.segments) {
        segments.push_back({ { "start_time", s.start_time }, { "stages", stages_to_json(s.walk, s.start_time) } });
    }
    return {
        { "logical_qubits", r.logical_qubits },
        { "register_qubits", r.register_qubits },
        { "measurements", measurements },
        { "segments", segments },
        { "final_amplitudes", amplitudes_to_json(r.final_state) },
    };
}

json to_json(const std::vector<VerificationReport>& reports)
{
    json gates = json::array();
    bool all = true;
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            checks.push_back({ { "name", c.name }, { "max_deviation", c.deviation }, { "passed", c.passed } });
        }
        gates.push_back({ { "gate", r.gate }, { "passed", r.passed() }, { "checks", checks } });
        all = all && r.passed();
    }
    return { { "tolerance", kVerifyTolerance }, { "passed", all }, { "gates", gates } };
}

json to_json(const TeleportationResult& r)
{
    json probs = json::object();
    for (int b1 = 0; b1 < 2; ++b1) {
        for (int b2 = 0; b2 < 2; ++b2) {
            probs[std::to_string(b1) + std::to_string(b2)] = r.outcome_probabilities[static_cast<std::size_t>(2 * b1 + b2)];
        }
    }
    return {
        { "pre_measurement", amplitudes_to_json(r.pre_measurement) },
        { "outcome_probabilities", probs },
        { "measurements", { record_to_json(r.first), record_to_json(r.second) } },
        { "final_amplitudes", amplitudes_to_json(r.final_state) },
        { "received", { to_json(r.received[0]), to_json(r.received[1]) } },
        { "stages", stages_to_json(concatenate(r.walks.pre_measurement, r.walks.recovery), 0.0) },
    };
}

json to_json(const AdderResult& r)
{
    return {
        { "vertices", r.walk.vertex_count() },
        { "stage_count", r.walk.stages().size() },
        { "total_time", r.walk.total_duration().value() },
        { "final_amplitudes", amplitudes_to_json(r.final_state) },
    };
}

std::string trajectory_csv(const Trajectory& t)
{
    std::string out = "t";
    const std::size_t n = t.probabilities.empty() ? 0 : t.probabilities.front().size();
    for (std::size_t j = 0; j < n; ++j) {
        out += ",p" + std::to_string(j);
    }
    out += '\n';
    for (std::size_t k = 0; k < t.sample_times.size(); ++k) {
        out += format_number(t.sample_times[k], 15);
        for (double p : t.probabilities[k]) {
            out += ',';
            out += format_number(p, 15);
        }
        out += '\n';
    }
    return out;
}

json trajectory_stages(const Trajectory& t, const DynamicGraph& dg)
{
    return {
        { "stage_boundaries", t.stage_boundaries },
        { "samples", t.sample_times.size() },
        { "stages", stages_to_json(dg, 0.0) },
    };
}

std::string describe(const Graph& g)
{
    std::map<std::string, std::size_t> shapes;
    for (const auto& comp : g.components()) {
        std::size_t edges = 0;
        std::size_t max_degree = 0;
        for (Vertex v : comp) {
            edges += g.degree(v);
            max_degree = std::max(max_degree, g.degree(v));
        }
        edges /= 2;
        const std::size_t k = comp.size();
        std::string name;
        if (k == 1) {
            name = "K1";
        } else if (k == 2) {
            name = "K2";
        } else if (k == 4 && edges == 4 && max_degree == 2) {
            name = "C4";
        } else if (edges == k - 1 && max_degree == k - 1) {
            name = "S" + std::to_string(k);
        } else {
            name = "G" + std::to_string(k);
        }
        ++shapes[name];
    }
    std::string out;
    for (const auto& [name, count] : shapes) {
        if (!out.empty()) {
            out += ' ';
        }
        out += name + "x" + std::to_string(count);
    }
    return out;
}

json gate_manifest()
{
    json entries = json::array();
    auto add = [&entries](GateKind kind, std::size_t n, const std::vector<Qubit>& targets, const DynamicGraph& walk) {
        json stages = json::array();
        for (const auto& s : walk.stages()) {
            stages.push_back({ { "graph", describe(s.graph) }, { "duration", s.duration.to_string() } });
        }
        entries.push_back({
            { "kind", std::string(to_string(kind)) },
            { "qubits", n },
            { "targets", targets },
            { "vertices", walk.vertex_count() },
            { "stages", stages },
        });
    };
    const GateKind kinds[] = { GateKind::X, GateKind::Z, GateKind::YComposed, GateKind::H, GateKind::CNOT,
        GateKind::CCNOT };
    for (auto kind : kinds) {
        for (std::size_t n = arity(kind); n <= 4; ++n) {
            if (kind == GateKind::H && n < 3) {
                continue;
            }
            std::vector<Qubit> targets(arity(kind));
            // every ordered tuple of distinct qubits
            auto recurse = [&](auto&& self, std::size_t depth) -> void {
                if (depth == targets.size()) {
                    add(kind, n, targets, build_gate({ kind, n, targets }));
                    return;
                }
                for (Qubit q = 1; q <= n; ++q) {
                    if (std::find(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(depth), q)
                        == targets.begin() + static_cast<std::ptrdiff_t>(depth)) {
                        targets[depth] = q;
                        self(self, depth + 1);
                    }
                }
            };
            recurse(recurse, 0);
        }
    }
    add(GateKind::T, 1, { 1 }, gate_t());
    add(GateKind::YDirect, 1, { 1 }, gate_y_direct());
    return { { "gates", entries } };
}

} // namespace ctqw
