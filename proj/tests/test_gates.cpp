#include "ctqw/gates.hpp"
#include "ctqw/verification.hpp"

#include "support.hpp"

#include <doctest.h>

#include <numbers>

using namespace ctqw;
using ctqw::test::kI;
using ctqw::test::max_dev;
using ctqw::test::thrown;

namespace {

Eigen::MatrixXcd composite(const DynamicGraph& dg) { return composite_propagator(dg).matrix(); }

Eigen::MatrixXcd logical(const DynamicGraph& dg, Eigen::Index block) { return composite(dg).topLeftCorner(block, block); }

Eigen::MatrixXcd oracle(GateKind kind, std::size_t n, std::vector<Qubit> targets)
{
    return placement_matrix({ kind, n, std::move(targets) });
}

} // namespace

TEST_SUITE("gate_library")
{
    TEST_CASE("X")
    {
        CHECK(max_dev(composite(gate_x(1, 1)), test::x2()) == 0.0);
        CHECK(max_dev(composite(gate_x(2, 2)), oracle(GateKind::X, 2, { 2 })) == 0.0);
        CHECK(max_dev(composite(gate_x(2, 1)), oracle(GateKind::X, 2, { 1 })) == 0.0);
        const DynamicGraph x = gate_x(3, 2);
        REQUIRE(x.stages().size() == 2);
        CHECK(x.stages()[0].duration == Duration::pi(3, 2));
        CHECK(x.stages()[0].graph.edges().front() == Edge { 0, 2 });
        CHECK(thrown([] { gate_x(2, 3); }) == ErrorKind::InvalidQubit);
    }

    TEST_CASE("Z")
    {
        Eigen::VectorXcd d(8);
        d << 1, -1, 1, -1, 1, -1, 1, -1;
        CHECK(max_dev(composite(gate_z(3, 3)), d.asDiagonal().toDenseMatrix()) == 0.0);
        CHECK(max_dev(composite(gate_z(3, 1)), oracle(GateKind::Z, 3, { 1 })) == 0.0);
        const DynamicGraph z1 = gate_z(1, 1);
        CHECK(z1.vertex_count() == 5);
        CHECK(max_dev(logical(z1, 2), oracle(GateKind::Z, 1, { 1 })) == 0.0);
        CHECK(gate_z(2, 1).vertex_count() == 6);
    }

    TEST_CASE("Y composed")
    {
        CHECK(max_dev(composite(gate_y_composed(3, 3)), oracle(GateKind::YComposed, 3, { 3 })) == 0.0);
        CHECK(max_dev(composite(gate_y_composed(3, 1)), oracle(GateKind::YComposed, 3, { 1 })) == 0.0);
        const DynamicGraph y = gate_y_composed(3, 3);
        CHECK(max_dev(composite(concatenate(y, y)), Eigen::MatrixXcd::Identity(8, 8)) < 1e-15);
    }

    TEST_CASE("Y direct")
    {
        const Eigen::MatrixXcd u = composite(gate_y_direct());
        CHECK(max_dev(u.topLeftCorner(2, 2), oracle(GateKind::YDirect, 1, { 1 })) == 0.0);
        CHECK(u(1, 0) == kI);
        // a populated ancilla picks up a phase
        CHECK(u(2, 2) == -kI);
    }

    TEST_CASE("H")
    {
        const Eigen::MatrixXcd h = composite(gate_h(3, 3));
        const double r = 1.0 / std::numbers::sqrt2;
        for (Eigen::Index b = 0; b < 8; b += 2) {
            CHECK(std::abs(h(b, b) - r) < 1e-15);
            CHECK(std::abs(h(b, b + 1) - r) < 1e-15);
            CHECK(std::abs(h(b + 1, b) - r) < 1e-15);
            CHECK(std::abs(h(b + 1, b + 1) + r) < 1e-15);
        }
        CHECK(max_dev(composite(gate_h(3, 2)), oracle(GateKind::H, 3, { 2 })) < 1e-15);
        CHECK(max_dev(composite(gate_h(4, 1)), oracle(GateKind::H, 4, { 1 })) < 1e-15);
        const DynamicGraph hh = concatenate(gate_h(3, 3), gate_h(3, 3));
        CHECK(max_dev(composite(hh), Eigen::MatrixXcd::Identity(8, 8)) < 1e-15);
        CHECK(thrown([] { gate_h(2, 1); }) == ErrorKind::UnsupportedGate);
    }

    TEST_CASE("T")
    {
        const Eigen::MatrixXcd t = composite(gate_t());
        CHECK(std::abs(t(0, 0) - 1.0) < 1e-15);
        CHECK(std::abs(t(1, 1) - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
        CHECK(std::abs(t(7, 6) - std::polar(1.0, -std::numbers::pi / 4)) < 1e-15);
        DynamicGraph eight(8);
        for (int k = 0; k < 8; ++k) {
            eight = concatenate(eight, gate_t());
        }
        const Eigen::MatrixXcd t8 = composite(eight);
        CHECK(max_dev(t8.topLeftCorner(2, 2), Eigen::MatrixXcd::Identity(2, 2)) < 1e-14);
        CHECK(leakage(t8, 2) < 1e-14);
    }

    TEST_CASE("CNOT and CCNOT are the permutation matrices")
    {
        const Eigen::MatrixXcd c12 = composite(gate_cnot(2, 1, 2));
        CHECK(c12(3, 2) == Complex(1.0, 0.0));
        CHECK(c12(2, 3) == Complex(1.0, 0.0));
        CHECK(c12(0, 0) == Complex(1.0, 0.0));
        const Eigen::MatrixXcd c21 = composite(gate_cnot(2, 2, 1));
        CHECK(c21(3, 1) == Complex(1.0, 0.0));
        CHECK(max_dev(composite(gate_ccnot(3, 1, 2, 3)), oracle(GateKind::CCNOT, 3, { 1, 2, 3 })) == 0.0);
        const Eigen::MatrixXcd t = composite(gate_ccnot(3, 2, 3, 1));
        CHECK(t(7, 3) == Complex(1.0, 0.0));
        CHECK(t(3, 7) == Complex(1.0, 0.0));
        CHECK(thrown([] { gate_cnot(2, 1, 1); }) == ErrorKind::InvalidQubit);
        CHECK(thrown([] { gate_ccnot(3, 1, 2, 2); }) == ErrorKind::InvalidQubit);
    }

    TEST_CASE("identity variants")
    {
        CHECK(max_dev(composite(gate_identity(1, IdentityVariant::Singletons2Pi)), Eigen::MatrixXcd::Identity(2, 2))
            == 0.0);
        CHECK(max_dev(composite(gate_identity(2, IdentityVariant::C4Pi)), Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
        CHECK(max_dev(composite(gate_identity(2, IdentityVariant::K2Pairs2Pi)), Eigen::MatrixXcd::Identity(4, 4))
            == 0.0);
        CHECK(thrown([] { gate_identity(1, IdentityVariant::C4Pi); }) == ErrorKind::InvalidVariant);
    }

    TEST_CASE("X and Z anticommute")
    {
        const Eigen::MatrixXcd x = composite(gate_x(3, 2));
        const Eigen::MatrixXcd z = composite(gate_z(3, 2));
        CHECK(max_dev(x * z, -(z * x)) < 1e-10);
    }

    TEST_CASE("self-inverse gates")
    {
        for (const auto& g : { gate_x(3, 1), gate_z(3, 2), gate_h(3, 1), gate_cnot(3, 3, 1), gate_ccnot(3, 3, 1, 2) }) {
            CHECK(max_dev(composite(concatenate(g, g)), Eigen::MatrixXcd::Identity(8, 8)) < 1e-10);
        }
    }

    TEST_CASE("build_gate dispatch")
    {
        CHECK(build_gate({ GateKind::T, 1, { 1 } }) == gate_t());
        CHECK(thrown([] { build_gate({ GateKind::T, 2, { 1 } }); }) == ErrorKind::UnsupportedGate);
        CHECK(thrown([] { build_gate({ GateKind::CNOT, 2, { 1 } }); }) == ErrorKind::InvalidQubit);
        CHECK(parse_gate_kind("Y") == GateKind::YComposed);
        CHECK_FALSE(parse_gate_kind("SWAP").has_value());
    }
}
