#include "ctqw/duration.hpp"

#include "ctqw/error.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace ctqw {

namespace {

    Duration::PiFraction reduce(std::int64_t num, std::int64_t den)
    {
        if (den == 0) {
            throw Error(ErrorKind::InvalidDuration, "duration denominator is zero");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) {
            den = 1;
        }
        return { num, den };
    }

    constexpr double inv_sqrt2 = 0.70710678118654752440;

    // cos/sin of k*pi/4 for k in [0, 8)
    Duration::Trig quarter_turn(std::int64_t k)
    {
        static constexpr Duration::Trig table[8] = {
            { 1.0, 0.0 },
            { inv_sqrt2, inv_sqrt2 },
            { 0.0, 1.0 },
            { -inv_sqrt2, inv_sqrt2 },
            { -1.0, 0.0 },
            { -inv_sqrt2, -inv_sqrt2 },
            { 0.0, -1.0 },
            { inv_sqrt2, -inv_sqrt2 },
        };
        return table[((k % 8) + 8) % 8];
    }

} // namespace

Duration Duration::pi(std::int64_t num, std::int64_t den)
{
    const auto f = reduce(num, den);
    if (f.num < 0) {
        throw Error(ErrorKind::InvalidDuration, "negative duration");
    }
    Duration d;
    d.fraction_ = f;
    return d;
}

Duration Duration::raw(double value)
{
    if (!std::isfinite(value) || value < 0.0) {
        throw Error(ErrorKind::InvalidDuration, "duration must be finite and non-negative");
    }
    Duration d;
    d.fraction_.reset();
    d.raw_ = value;
    return d;
}

double Duration::value() const noexcept
{
    if (fraction_) {
        return std::numbers::pi * static_cast<double>(fraction_->num) / static_cast<double>(fraction_->den);
    }
    return raw_;
}

Duration::Trig Duration::trig(std::int64_t multiplier) const
{
    if (fraction_) {
        const auto f = reduce(fraction_->num * multiplier, fraction_->den);
        if (4 % f.den == 0) {
            return quarter_turn(f.num * (4 / f.den));
        }
        // reduce modulo 2pi before evaluating so large multiples stay accurate
        const std::int64_t period = 2 * f.den;
        const std::int64_t folded = ((f.num % period) + period) % period;
        const double angle = std::numbers::pi * static_cast<double>(folded) / static_cast<double>(f.den);
        return { std::cos(angle), std::sin(angle) };
    }
    const double angle = raw_ * static_cast<double>(multiplier);
    return { std::cos(angle), std::sin(angle) };
}

Duration Duration::scaled(std::int64_t num, std::int64_t den) const
{
    if (num < 0 || den <= 0) {
        throw Error(ErrorKind::InvalidDuration, "duration scale must be non-negative");
    }
    if (fraction_) {
        return pi(fraction_->num * num, fraction_->den * den);
    }
    return raw(raw_ * static_cast<double>(num) / static_cast<double>(den));
}

Duration Duration::operator+(const Duration& other) const
{
    if (fraction_ && other.fraction_) {
        return pi(fraction_->num * other.fraction_->den + other.fraction_->num * fraction_->den,
            fraction_->den * other.fraction_->den);
    }
    return raw(value() + other.value());
}

Duration Duration::operator-(const Duration& other) const
{
    if (fraction_ && other.fraction_) {
        return pi(fraction_->num * other.fraction_->den - other.fraction_->num * fraction_->den,
            fraction_->den * other.fraction_->den);
    }
    double diff = value() - other.value();
    if (diff < 0.0 && diff > -1e-12) {
        diff = 0.0;
    }
    return raw(diff);
}

bool Duration::operator<(const Duration& other) const
{
    if (fraction_ && other.fraction_) {
        return fraction_->num * other.fraction_->den < other.fraction_->num * fraction_->den;
    }
    return value() < other.value();
}

bool Duration::operator==(const Duration& other) const
{
    if (fraction_.has_value() != other.fraction_.has_value()) {
        return false;
    }
    if (fraction_) {
        return *fraction_ == *other.fraction_;
    }
    return raw_ == other.raw_;
}

std::string Duration::to_string() const
{
    std::ostringstream os;
    if (fraction_) {
        if (fraction_->num == 0) {
            return "0";
        }
        if (fraction_->num != 1) {
            os << fraction_->num;
        }
        os << "pi";
        if (fraction_->den != 1) {
            os << "/" << fraction_->den;
        }
    } else {
        os.precision(17);
        os << raw_;
    }
    return os.str();
}

} // namespace ctqw
