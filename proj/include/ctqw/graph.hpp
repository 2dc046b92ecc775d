#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ctqw {

using Vertex = std::size_t;

/// Undirected edge stored as (min, max).
struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

/// Real symmetric Hamiltonian (adjacency matrix with the isolated-vertex
/// self-loop convention). Energy scale and hbar are both 1.
class Hamiltonian {
public:
    explicit Hamiltonian(Eigen::MatrixXd entries);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXd& matrix() const noexcept { return entries_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

private:
    Eigen::MatrixXd entries_;
};

/// Simple undirected graph over vertices [0, N). Immutable once built.
///
/// Self-loops are never stored. An isolated vertex gets A[v][v] = 1 only
/// when the Hamiltonian is formed.
class Graph {
public:
    /// Validates and canonicalizes the edge list. Throws ctqw::Error with
    /// VertexOutOfRange, SelfLoop or DuplicateEdge.
    static Graph build(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
    static Graph build(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    /// N isolated vertices.
    static Graph singletons(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;

    Hamiltonian hamiltonian() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count_;
    std::vector<Edge> edges_;
};

/// Vertex sets are concatenated; part k's labels are shifted by the number
/// of vertices in parts 0..k-1.
Graph disjoint_union(std::span<const Graph> parts);

} // namespace ctqw
