#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ctqw {

/// Propagation time, with unit frequency. Stored either as an exact rational
/// multiple of pi (reduced, denominator > 0) or as a raw real value for
/// state-specific times such as arcsin(sqrt(a)). Never negative.
class Duration {
public:
    struct PiFraction {
        std::int64_t num;
        std::int64_t den;

        bool operator==(const PiFraction&) const = default;
    };

    Duration() = default;

    /// (num/den) * pi
    static Duration pi(std::int64_t num, std::int64_t den = 1);
    static Duration raw(double value);
    static Duration zero() { return Duration {}; }

    bool is_pi_fraction() const noexcept { return fraction_.has_value(); }
    /// Only meaningful when is_pi_fraction().
    PiFraction fraction() const { return *fraction_; }

    double value() const noexcept;
    bool is_zero() const noexcept { return value() == 0.0; }

    /// cos and sin of (multiplier * value). Exact (0, +-1, +-1/sqrt2) whenever
    /// the angle is a rational multiple of pi with denominator dividing 4.
    struct Trig {
        double cos;
        double sin;
    };
    Trig trig(std::int64_t multiplier = 1) const;

    /// this * (num/den); stays exact for rational durations.
    Duration scaled(std::int64_t num, std::int64_t den) const;

    Duration operator+(const Duration& other) const;
    /// Throws InvalidDuration if the result would be negative.
    Duration operator-(const Duration& other) const;
    /// Exact for two rational durations, by value otherwise.
    bool operator<(const Duration& other) const;

    /// Exact equality of representation (rational vs rational, raw vs raw).
    bool operator==(const Duration& other) const;

    std::string to_string() const;

private:
    std::optional<PiFraction> fraction_ { PiFraction { 0, 1 } };
    double raw_ { 0.0 };
};

} // namespace ctqw
