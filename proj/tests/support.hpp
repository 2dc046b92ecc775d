#pragma once

#include "ctqw/error.hpp"
#include "ctqw/propagators.hpp"

#include <Eigen/Dense>

#include <optional>

namespace ctqw::test {

inline double max_dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Kind of the ctqw::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<ErrorKind> thrown(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline Eigen::MatrixXcd x2()
{
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline constexpr Complex kI { 0.0, 1.0 };

} // namespace ctqw::test
