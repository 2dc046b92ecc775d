#include "ctqw/graph.hpp"

#include "ctqw/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ctqw {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::VertexOutOfRange: return "vertex_out_of_range";
    case ErrorKind::SelfLoop: return "self_loop";
    case ErrorKind::DuplicateEdge: return "duplicate_edge";
    case ErrorKind::EmptyInput: return "empty_input";
    case ErrorKind::InvalidDuration: return "invalid_duration";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::NotUnitary: return "not_unitary";
    case ErrorKind::NotNormalized: return "not_normalized";
    case ErrorKind::NumericFailure: return "numeric_failure";
    case ErrorKind::InvalidQubit: return "invalid_qubit";
    case ErrorKind::UnsupportedGate: return "unsupported_gate";
    case ErrorKind::InvalidVariant: return "invalid_variant";
    case ErrorKind::NullOutcome: return "null_outcome";
    case ErrorKind::InvalidCircuit: return "invalid_circuit";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

Hamiltonian::Hamiltonian(Eigen::MatrixXd entries)
    : entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw Error(ErrorKind::DimensionMismatch, "hamiltonian must be a nonempty square matrix");
    }
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < entries_.cols(); ++j) {
            if (entries_(i, j) != entries_(j, i)) {
                throw Error(ErrorKind::DimensionMismatch, "hamiltonian is not symmetric");
            }
        }
    }
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count)
    , edges_(std::move(edges))
{
}

Graph Graph::build(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
{
    if (vertex_count == 0) {
        throw Error(ErrorKind::EmptyInput, "graph needs at least one vertex");
    }
    std::vector<Edge> canonical;
    canonical.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            throw Error(ErrorKind::VertexOutOfRange,
                "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside [0," + std::to_string(vertex_count) + ")");
        }
        if (a == b) {
            throw Error(ErrorKind::SelfLoop, "explicit self-loop on vertex " + std::to_string(a));
        }
        canonical.push_back(Edge { std::min(a, b), std::max(a, b) });
    }
    std::sort(canonical.begin(), canonical.end());
    auto dup = std::adjacent_find(canonical.begin(), canonical.end());
    if (dup != canonical.end()) {
        throw Error(ErrorKind::DuplicateEdge,
            "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    return Graph(vertex_count, std::move(canonical));
}

Graph Graph::build(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
{
    return build(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph Graph::singletons(std::size_t vertex_count)
{
    return build(vertex_count, std::span<const std::pair<Vertex, Vertex>> {});
}

std::size_t Graph::degree(Vertex v) const
{
    if (v >= vertex_count_) {
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(),
        [v](const Edge& e) { return e.u == v || e.v == v; }));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    if (v >= vertex_count_) {
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    std::vector<Vertex> out;
    for (const auto& e : edges_) {
        if (e.u == v) {
            out.push_back(e.v);
        } else if (e.v == v) {
            out.push_back(e.u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Vertex>> Graph::components() const
{
    // union-find with path halving
    std::vector<Vertex> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), Vertex { 0 });
    auto find = [&parent](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : edges_) {
        Vertex ru = find(e.u);
        Vertex rv = find(e.v);
        if (ru != rv) {
            parent[std::max(ru, rv)] = std::min(ru, rv);
        }
    }
    std::vector<std::vector<Vertex>> groups;
    std::vector<std::size_t> slot(vertex_count_, vertex_count_);
    for (Vertex v = 0; v < vertex_count_; ++v) {
        Vertex root = find(v);
        if (slot[root] == vertex_count_) {
            slot[root] = groups.size();
            groups.emplace_back();
        }
        groups[slot[root]].push_back(v);
    }
    return groups;
}

Hamiltonian Graph::hamiltonian() const
{
    const auto n = static_cast<Eigen::Index>(vertex_count_);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : edges_) {
        a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
        a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
    }
    for (Eigen::Index v = 0; v < n; ++v) {
        if (a.row(v).sum() == 0.0) {
            a(v, v) = 1.0;
        }
    }
    return Hamiltonian(std::move(a));
}

Graph disjoint_union(std::span<const Graph> parts)
{
    if (parts.empty()) {
        throw Error(ErrorKind::EmptyInput, "disjoint union of an empty list");
    }
    std::size_t offset = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& g : parts) {
        for (const auto& e : g.edges()) {
            edges.emplace_back(e.u + offset, e.v + offset);
        }
        offset += g.vertex_count();
    }
    return Graph::build(offset, edges);
}

} // namespace ctqw
