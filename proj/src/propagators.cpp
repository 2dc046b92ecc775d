#include "ctqw/propagators.hpp"

#include "ctqw/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ctqw {

namespace {

    constexpr Complex kI { 0.0, 1.0 };

    Eigen::MatrixXd star5_adjacency()
    {
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(5, 5);
        for (int leaf = 1; leaf < 5; ++leaf) {
            h(0, leaf) = h(leaf, 0) = 1.0;
        }
        return h;
    }

    bool has_edge(const Graph& g, Vertex a, Vertex b)
    {
        const Edge key { std::min(a, b), std::max(a, b) };
        return std::binary_search(g.edges().begin(), g.edges().end(), key);
    }

    std::size_t component_edge_count(const Graph& g, const std::vector<Vertex>& comp)
    {
        std::size_t count = 0;
        for (const auto& e : g.edges()) {
            if (std::binary_search(comp.begin(), comp.end(), e.u)) {
                ++count;
            }
        }
        return count;
    }

    // Propagator of one connected component plus the order in which its
    // vertices map onto the rows of that propagator.
    struct Block {
        std::vector<Vertex> order;
        Eigen::MatrixXcd u;
    };

    Block component_block(const Graph& g, const std::vector<Vertex>& comp, const Duration& dt)
    {
        const std::size_t size = comp.size();
        const std::size_t edges = component_edge_count(g, comp);

        if (size == 1) {
            return { comp, propagate_k1(dt).matrix() };
        }
        if (size == 2) {
            return { comp, propagate_k2(dt).matrix() };
        }
        if (size == 4 && edges == 4) {
            const Vertex a = comp[0];
            const auto around = g.neighbors(a);
            if (around.size() == 2) {
                const Vertex b = around[0];
                const Vertex c = around[1];
                Vertex d = a;
                for (Vertex v : comp) {
                    if (v != a && v != b && v != c) {
                        d = v;
                    }
                }
                if (has_edge(g, b, d) && has_edge(g, c, d)) {
                    return { { a, b, c, d }, propagate_c4(dt).matrix() };
                }
            }
        }
        if (size == 5 && edges == 4) {
            for (Vertex center : comp) {
                if (g.degree(center) == 4) {
                    std::vector<Vertex> order { center };
                    for (Vertex v : comp) {
                        if (v != center) {
                            order.push_back(v);
                        }
                    }
                    return { order, propagate_star5(dt).matrix() };
                }
            }
        }

        // general component: restricted adjacency (no isolated vertices here)
        const auto n = static_cast<Eigen::Index>(size);
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                if (i != j && has_edge(g, comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)])) {
                    h(i, j) = 1.0;
                }
            }
        }
        return { comp, propagate_general(Hamiltonian(h), dt).matrix() };
    }

} // namespace

double unitarity_defect(const Eigen::MatrixXcd& u)
{
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const Eigen::MatrixXcd gram = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return gram.cwiseAbs().maxCoeff();
}

Unitary::Unitary(Eigen::MatrixXcd entries)
    : entries_(std::move(entries))
{
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "unitary must be a nonempty square matrix");
    }
    const double d = unitarity_defect(entries_);
    if (!(d <= kUnitarityTolerance)) {
        throw Error(ErrorKind::NotUnitary, "unitarity defect " + std::to_string(d) + " exceeds tolerance");
    }
}

Unitary Unitary::identity(std::size_t dimension)
{
    const auto n = static_cast<Eigen::Index>(dimension);
    return Unitary(Eigen::MatrixXcd::Identity(n, n));
}

Unitary Unitary::adjoint() const
{
    return Unitary(entries_.adjoint());
}

Unitary operator*(const Unitary& a, const Unitary& b)
{
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot multiply unitaries of different dimension");
    }
    return Unitary(a.entries_ * b.entries_);
}

StateVector::StateVector(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes))
{
    if (amplitudes_.size() == 0) {
        throw Error(ErrorKind::EmptyInput, "state vector is empty");
    }
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTolerance) {
        throw Error(ErrorKind::NotNormalized, "state vector is not unit norm");
    }
}

StateVector::StateVector(Eigen::VectorXcd amplitudes, Unchecked)
    : amplitudes_(std::move(amplitudes))
{
}

StateVector StateVector::basis(std::size_t dimension, std::size_t vertex)
{
    if (vertex >= dimension) {
        throw Error(ErrorKind::VertexOutOfRange, "basis vertex out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension));
    v(static_cast<Eigen::Index>(vertex)) = 1.0;
    return StateVector(std::move(v));
}

Unitary propagate_general(const Hamiltonian& h, const Duration& dt)
{
    const auto n = static_cast<Eigen::Index>(h.dimension());
    if (dt.is_zero()) {
        return Unitary::identity(h.dimension());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NumericFailure, "eigendecomposition did not converge");
    }
    const double t = dt.value();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double angle = solver.eigenvalues()(k) * t;
        phases(k) = Complex(std::cos(angle), -std::sin(angle));
    }
    const Eigen::MatrixXcd v = solver.eigenvectors().cast<Complex>();
    return Unitary(v * phases.asDiagonal() * v.adjoint());
}

Unitary propagate_k1(const Duration& dt)
{
    const auto [c, s] = dt.trig();
    Eigen::MatrixXcd u(1, 1);
    u(0, 0) = Complex(c, -s);
    return Unitary(std::move(u));
}

Unitary propagate_k2(const Duration& dt)
{
    const auto [c, s] = dt.trig();
    Eigen::MatrixXcd u(2, 2);
    u << Complex(c, 0.0), Complex(0.0, -s),
        Complex(0.0, -s), Complex(c, 0.0);
    return Unitary(std::move(u));
}

Unitary propagate_c4(const Duration& dt)
{
    const auto [c, s] = dt.trig(2);
    // H^2 = 2(I + J) with J the antipodal swap 0<->3, 1<->2
    const double diag = (1.0 + c) / 2.0;
    const double anti = (c - 1.0) / 2.0;
    const Complex hop(0.0, -s / 2.0);
    Eigen::MatrixXcd u(4, 4);
    u << diag, hop, hop, anti,
        hop, diag, anti, hop,
        hop, anti, diag, hop,
        anti, hop, hop, diag;
    return Unitary(std::move(u));
}

Unitary propagate_star5(const Duration& dt)
{
    const auto [c, s] = dt.trig(2);
    const Eigen::MatrixXd h = star5_adjacency();
    const Eigen::MatrixXd h2 = h * h;
    const Eigen::MatrixXcd u = (Eigen::MatrixXd::Identity(5, 5) + (c - 1.0) / 4.0 * h2).cast<Complex>()
        - kI * (s / 2.0) * h.cast<Complex>();
    return Unitary(u);
}

Unitary propagate(const Graph& g, const Duration& dt)
{
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& comp : g.components()) {
        const Block block = component_block(g, comp, dt);
        for (std::size_t i = 0; i < block.order.size(); ++i) {
            for (std::size_t j = 0; j < block.order.size(); ++j) {
                u(static_cast<Eigen::Index>(block.order[i]), static_cast<Eigen::Index>(block.order[j]))
                    = block.u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return Unitary(std::move(u));
}

StateVector evolve(const Unitary& u, const StateVector& s)
{
    if (u.dimension() != s.dimension()) {
        throw Error(ErrorKind::DimensionMismatch,
            "propagator dimension " + std::to_string(u.dimension()) + " does not match state dimension "
                + std::to_string(s.dimension()));
    }
    return StateVector(u.matrix() * s.amplitudes(), StateVector::Unchecked {});
}

PstResult pst_check(const Graph& g, Vertex from, Vertex to, const Duration& t, double tol)
{
    if (from >= g.vertex_count() || to >= g.vertex_count() || from == to) {
        throw Error(ErrorKind::VertexOutOfRange, "state transfer needs two distinct vertices of the graph");
    }
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::InvalidDuration, "tolerance must be positive");
    }
    const Unitary u = propagate(g, t);
    const Complex a = u(to, from);
    return { std::abs(a) >= 1.0 - tol, a };
}

} // namespace ctqw
