#include "ctqw/io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ctqw;
using ctqw::test::thrown;

TEST_SUITE("serialization")
{
    TEST_CASE("graph json")
    {
        const Graph g = Graph::build(3, { { 2, 0 } });
        const json j = to_json(g);
        CHECK(j.dump() == R"({"edges":[[0,2]],"vertices":3})");
        CHECK(graph_from_json(j) == g);
        CHECK(thrown([] { graph_from_json(parse_json(R"({"vertices":2})")); }) == ErrorKind::Parse);
        CHECK(thrown([] { graph_from_json(parse_json(R"({"vertices":2,"edges":[[0,0]]})")); }) == ErrorKind::SelfLoop);
    }

    TEST_CASE("dynamic graphs round-trip exactly")
    {
        DynamicGraph dg = gate_h(3, 2);
        dg.append({ Graph::build(8, { { 0, 1 } }), Duration::raw(0.6154797086703873) });
        const DynamicGraph back = dynamic_graph_from_json(parse_json(to_json(dg).dump()));
        CHECK(back == dg);
        CHECK(back.stages().front().duration.is_pi_fraction());
        CHECK(back.stages().back().duration.value() == 0.6154797086703873);
    }

    TEST_CASE("duration schema")
    {
        CHECK(to_json(Duration::pi(3, 2)).dump() == R"({"pi_den":2,"pi_num":3})");
        CHECK(duration_from_json(parse_json(R"({"raw":0.25})")) == Duration::raw(0.25));
        CHECK(thrown([] { duration_from_json(parse_json(R"({"pi_num":1.5,"pi_den":2})")); }) == ErrorKind::Parse);
    }

    TEST_CASE("circuit json")
    {
        const json j = parse_json(
            R"({"qubits": 2, "ops": [{"prepare_rotation": 0.7853981633974483}, {"gate": "CNOT", "targets": [1,2]}, {"measure": 1, "force": 1}]})");
        const Circuit c = circuit_from_json(j);
        CHECK(c.ops().size() == 3);
        CHECK(circuit_from_json(to_json(c)) == c);
        CHECK(thrown([] { circuit_from_json(parse_json(R"({"qubits":1,"ops":[{"gate":"SWAP","targets":[1]}]})")); })
            == ErrorKind::UnsupportedGate);
        CHECK(thrown([] { circuit_from_json(parse_json(R"({"qubits":1,"ops":[{"foo":1}]})")); }) == ErrorKind::Parse);
    }

    TEST_CASE("malformed json reports a position")
    {
        try {
            parse_json("{\"a\": [1, 2,, 3]}");
            FAIL("no error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
            CHECK(std::string(e.what()).find("byte 13") != std::string::npos);
        }
    }

    TEST_CASE("state json accepts pairs and reals")
    {
        const StateVector s = state_from_json(parse_json(R"({"amplitudes": [[0.6, 0], 0.8]})"));
        CHECK(s[1] == Complex(0.8, 0.0));
        CHECK(state_from_json(to_json(s)).amplitudes() == s.amplitudes());
        CHECK(thrown([] { state_from_json(parse_json(R"({"amplitudes": [1, 1]})")); }) == ErrorKind::NotNormalized);
    }

    TEST_CASE("trajectory csv")
    {
        const DynamicGraph dg(2, { { Graph::build(2, { { 0, 1 } }), Duration::pi(1, 2) } });
        const Trajectory t = evolve_dynamic(dg, StateVector::basis(2, 0), 2);
        const std::string csv = trajectory_csv(t);
        CHECK(csv.rfind("t,p0,p1\n0,1,0\n", 0) == 0);
        CHECK(csv.find('\r') == std::string::npos);
        CHECK(csv.find("0.785398163397448,0.5,0.5\n") != std::string::npos);
        const json side = trajectory_stages(t, dg);
        CHECK(side["stage_boundaries"].size() == 2);
        CHECK(side["stages"][0]["graph"] == "K2x1");
    }

    TEST_CASE("describe")
    {
        CHECK(describe(gate_t().stages()[4].graph) == "K1x3 S5x1");
        CHECK(describe(gate_z(3, 3).stages()[0].graph) == "C4x1 K1x4");
    }

    TEST_CASE("manifest lists every placement")
    {
        const json m = gate_manifest();
        std::size_t cnot = 0;
        for (const auto& e : m["gates"]) {
            if (e["kind"] == "CNOT") {
                ++cnot;
            }
        }
        // ordered pairs on 2, 3 and 4 qubits
        CHECK(cnot == 2 + 6 + 12);
    }
}
