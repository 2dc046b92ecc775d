#include "ctqw/dynamic_graph.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctqw;
using ctqw::test::max_dev;
using ctqw::test::thrown;

namespace {

const Graph kK2 = Graph::build(2, { { 0, 1 } });

StateVector swap_state()
{
    Eigen::VectorXcd c(2);
    c << std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0);
    return StateVector(c);
}

DynamicGraph swap_walk() { return DynamicGraph(2, { { Graph::singletons(2), Duration::pi(1, 2) }, { kK2, Duration::pi(3, 2) } }); }

} // namespace

TEST_SUITE("dynamic_graph")
{
    TEST_CASE("transition times are prefix sums")
    {
        const DynamicGraph dg = swap_walk();
        const auto t = dg.transition_times();
        REQUIRE(t.size() == 3);
        CHECK(t[0] == 0.0);
        CHECK(t[1] == doctest::Approx(std::numbers::pi / 2));
        CHECK(t[2] == doctest::Approx(2 * std::numbers::pi));
        CHECK(dg.total_duration() == Duration::pi(2));
    }

    TEST_CASE("X order gives exactly X")
    {
        const DynamicGraph x(2, { { kK2, Duration::pi(3, 2) }, { Graph::singletons(2), Duration::pi(1, 2) } });
        CHECK(max_dev(composite_propagator(x).matrix(), test::x2()) == 0.0);
        CHECK(max_dev(composite_propagator(concatenate(x, x)).matrix(), Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
    }

    TEST_CASE("stage 0 is the rightmost factor")
    {
        const Graph p3 = Graph::build(3, { { 0, 1 }, { 1, 2 } });
        const Graph k2k1 = Graph::build(3, { { 0, 2 } });
        const DynamicGraph dg(3, { { p3, Duration::raw(0.3) }, { k2k1, Duration::raw(0.9) } });
        const Eigen::MatrixXcd expected
            = propagate(k2k1, Duration::raw(0.9)).matrix() * propagate(p3, Duration::raw(0.3)).matrix();
        CHECK(max_dev(composite_propagator(dg).matrix(), expected) < 1e-15);
    }

    TEST_CASE("split stages compose")
    {
        const DynamicGraph dg(2, { { kK2, Duration::pi(1, 4) }, { kK2, Duration::pi(1, 4) } });
        CHECK(max_dev(composite_propagator(dg).matrix(), propagate_k2(Duration::pi(1, 2)).matrix()) < 1e-15);
        CHECK(max_dev(composite_propagator(DynamicGraph(2, { { kK2, Duration::pi(2) } })).matrix(),
                  Eigen::MatrixXcd::Identity(2, 2))
            == 0.0);
    }

    TEST_CASE("invalid stages")
    {
        CHECK(thrown([] { DynamicGraph(2, { { Graph::singletons(3), Duration::pi(1) } }); })
            == ErrorKind::DimensionMismatch);
        CHECK(thrown([] { DynamicGraph(2, { { kK2, Duration::zero() } }); }) == ErrorKind::InvalidDuration);
        const DynamicGraph a(2, { { kK2, Duration::pi(1) } });
        const DynamicGraph b(4, { { Graph::singletons(4), Duration::pi(1) } });
        CHECK(thrown([&] { concatenate(a, b); }) == ErrorKind::DimensionMismatch);
        CHECK(concatenate(DynamicGraph(4), b) == b);
        CHECK(concatenate(b, DynamicGraph(4)) == b);
    }

    TEST_CASE("pad and relabel")
    {
        const DynamicGraph a(2, { { kK2, Duration::pi(1, 2) } });
        const DynamicGraph p = pad(a, 4);
        CHECK(p.vertex_count() == 4);
        CHECK(p.stages()[0].graph == Graph::build(4, { { 0, 1 } }));
        const DynamicGraph r = relabel(p, { 3, 2, 1, 0 });
        CHECK(r.stages()[0].graph == Graph::build(4, { { 2, 3 } }));
        CHECK(thrown([&] { relabel(p, { 0, 0, 1, 2 }); }) == ErrorKind::VertexOutOfRange);
    }

    TEST_CASE("singletons hold, then K2 swaps the populations")
    {
        const Trajectory t = evolve_dynamic(swap_walk(), swap_state(), 6);
        REQUIRE(t.sample_times.size() == 13);
        for (std::size_t k = 0; k <= 6; ++k) {
            CHECK(std::abs(t.probabilities[k][0] - 1.0 / 3.0) < 1e-10);
            CHECK(std::abs(t.probabilities[k][1] - 2.0 / 3.0) < 1e-10);
        }
        // stage-relative pi/2 into the K2 stage is sample 6 + 2
        CHECK(std::abs(t.probabilities[8][0] - 2.0 / 3.0) < 1e-10);
        CHECK(std::abs(t.probabilities[8][1] - 1.0 / 3.0) < 1e-10);
        for (std::size_t k = 1; k < t.sample_times.size(); ++k) {
            CHECK(t.sample_times[k] > t.sample_times[k - 1]);
        }
        CHECK(t.sample_times.back() == doctest::Approx(2 * std::numbers::pi));
    }

    TEST_CASE("basis state under singletons stays put")
    {
        const DynamicGraph dg(3, { { Graph::singletons(3), Duration::raw(2.5) } });
        const Trajectory t = evolve_dynamic(dg, StateVector::basis(3, 0), 10);
        for (const auto& row : t.probabilities) {
            CHECK(row[0] == doctest::Approx(1.0).epsilon(1e-14));
        }
    }

    TEST_CASE("evolve_dynamic rejects bad input")
    {
        CHECK(thrown([] { evolve_dynamic(swap_walk(), StateVector::basis(3, 0), 4); }) == ErrorKind::DimensionMismatch);
        CHECK(thrown([] { evolve_dynamic(swap_walk(), swap_state(), 1); }).has_value());
    }

    TEST_CASE("state_at inside a stage")
    {
        const StateVector s = state_at(swap_walk(), swap_state(), Duration::pi(1));
        CHECK(std::norm(s[0]) == doctest::Approx(2.0 / 3.0));
        const StateVector end = state_at(swap_walk(), swap_state(), Duration::pi(2));
        const StateVector full = evolve(composite_propagator(swap_walk()), swap_state());
        CHECK((end.amplitudes() - full.amplitudes()).norm() < 1e-14);
        CHECK(thrown([] { state_at(swap_walk(), swap_state(), Duration::pi(3)); }) == ErrorKind::InvalidDuration);
    }
}
