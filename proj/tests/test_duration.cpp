#include "ctqw/duration.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctqw;
using ctqw::test::thrown;

TEST_SUITE("propagators")
{
    TEST_CASE("pi fractions are reduced")
    {
        const Duration d = Duration::pi(6, 4);
        CHECK(d.fraction() == Duration::PiFraction { 3, 2 });
        CHECK(d.to_string() == "3pi/2");
        CHECK(d.value() == doctest::Approx(1.5 * std::numbers::pi));
        CHECK(Duration::pi(2, 2).to_string() == "pi");
    }

    TEST_CASE("quarter-turn trig is exact")
    {
        const auto t = Duration::pi(1, 2).trig();
        CHECK(t.cos == 0.0);
        CHECK(t.sin == 1.0);
        const auto q = Duration::pi(3, 4).trig(2);
        CHECK(q.cos == 0.0);
        CHECK(q.sin == -1.0);
        const auto e = Duration::pi(1, 4).trig();
        CHECK(e.cos == e.sin);
        CHECK(e.cos == std::numbers::sqrt2 / 2);
    }

    TEST_CASE("invalid durations")
    {
        CHECK(thrown([] { Duration::pi(-1, 2); }) == ErrorKind::InvalidDuration);
        CHECK(thrown([] { Duration::raw(-0.5); }) == ErrorKind::InvalidDuration);
        CHECK(thrown([] { Duration::raw(std::nan("")); }) == ErrorKind::InvalidDuration);
        CHECK(thrown([] { Duration::pi(1, 2) - Duration::pi(1, 1); }) == ErrorKind::InvalidDuration);
    }

    TEST_CASE("arithmetic stays rational")
    {
        const Duration sum = Duration::pi(1, 4) + Duration::pi(1, 4);
        CHECK(sum == Duration::pi(1, 2));
        CHECK(Duration::pi(3, 2).scaled(1, 3) == Duration::pi(1, 2));
        CHECK(Duration::pi(1, 3) < Duration::pi(1, 2));
        CHECK_FALSE(Duration::pi(1, 2) < Duration::pi(1, 2));
        CHECK_FALSE(Duration::raw(std::numbers::pi / 2).is_pi_fraction());
        CHECK(Duration::zero().is_zero());
    }
}
