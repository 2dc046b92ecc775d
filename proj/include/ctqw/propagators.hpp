#pragma once

#include "ctqw/duration.hpp"
#include "ctqw/graph.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace ctqw {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPstTolerance = 1e-9;

/// max_ij |(U^dagger U - I)_ij|
double unitarity_defect(const Eigen::MatrixXcd& u);

/// Dense complex matrix certified unitary at construction
/// (||U^dagger U - I||_max <= 1e-10).
class Unitary {
public:
    explicit Unitary(Eigen::MatrixXcd entries);
    static Unitary identity(std::size_t dimension);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
    double defect() const { return unitarity_defect(entries_); }

    Unitary adjoint() const;

    /// (a * b) applies b first.
    friend Unitary operator*(const Unitary& a, const Unitary& b);

private:
    Eigen::MatrixXcd entries_;
};

/// Amplitudes over graph vertices. Unit norm is checked on construction;
/// states produced by evolve() are not renormalized.
class StateVector {
public:
    explicit StateVector(Eigen::VectorXcd amplitudes);
    static StateVector basis(std::size_t dimension, std::size_t vertex);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::size_t j) const { return amplitudes_(static_cast<Eigen::Index>(j)); }
    double norm() const { return amplitudes_.norm(); }
    Eigen::VectorXd probabilities() const { return amplitudes_.cwiseAbs2(); }

private:
    struct Unchecked { };
    StateVector(Eigen::VectorXcd amplitudes, Unchecked);

    friend StateVector evolve(const Unitary& u, const StateVector& s);

    Eigen::VectorXcd amplitudes_;
};

/// exp(-i H dt) through the eigendecomposition of the real symmetric H.
Unitary propagate_general(const Hamiltonian& h, const Duration& dt);

/// Singleton: the single phase exp(-i dt).
Unitary propagate_k1(const Duration& dt);
/// cos(dt) I - i sin(dt) X
Unitary propagate_k2(const Duration& dt);
/// 4-cycle with edges (0,1),(0,2),(1,3),(2,3):
/// I + (cos 2dt - 1) H^2/4 - i sin(2dt) H/2.
Unitary propagate_c4(const Duration& dt);
/// Star on five vertices with center 0:
/// (I - H^2/4) + cos(2dt) H^2/4 - i sin(2dt) H/2.
Unitary propagate_star5(const Duration& dt);

/// Propagator of a whole graph, built block by block over its connected
/// components. K1, K2, C4 and S5 components use the closed forms; anything
/// else falls back to propagate_general on the component.
Unitary propagate(const Graph& g, const Duration& dt);

/// U s, without renormalization.
StateVector evolve(const Unitary& u, const StateVector& s);

struct PstResult {
    bool transfers;
    /// <v| U(t) |u>
    Complex amplitude;
};

/// Perfect state transfer test: |<v|U_G(t)|u>| >= 1 - tol.
PstResult pst_check(const Graph& g, Vertex from, Vertex to, const Duration& t, double tol = kPstTolerance);

} // namespace ctqw
