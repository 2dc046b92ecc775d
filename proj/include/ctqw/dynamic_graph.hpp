#pragma once

#include "ctqw/duration.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/propagators.hpp"

#include <cstddef>
#include <vector>

namespace ctqw {

struct Stage {
    Graph graph;
    Duration duration;

    bool operator==(const Stage&) const = default;
};

/// Ordered (graph, duration) stages over a fixed vertex set. Stage 0 runs
/// first; absolute transition times are prefix sums of the durations.
class DynamicGraph {
public:
    /// Zero-stage walk on vertex_count vertices.
    explicit DynamicGraph(std::size_t vertex_count);
    DynamicGraph(std::size_t vertex_count, std::vector<Stage> stages);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Stage>& stages() const noexcept { return stages_; }
    bool empty() const noexcept { return stages_.empty(); }

    /// t_0 = 0, t_1, ..., t_L as real times.
    std::vector<double> transition_times() const;
    Duration total_duration() const;

    void append(Stage stage);

    bool operator==(const DynamicGraph&) const = default;

private:
    std::size_t vertex_count_;
    std::vector<Stage> stages_;
};

/// Product of stage propagators, stage 0 as the rightmost factor.
Unitary composite_propagator(const DynamicGraph& dg);

/// Stages of a followed by stages of b. A zero-stage operand yields the other.
DynamicGraph concatenate(const DynamicGraph& a, const DynamicGraph& b);

/// Appends isolated vertices so the walk runs on vertex_count vertices.
DynamicGraph pad(const DynamicGraph& dg, std::size_t vertex_count);

/// Same walk with every stage graph's labels remapped through relabel
/// (a permutation of [0, N)).
DynamicGraph relabel(const DynamicGraph& dg, const std::vector<Vertex>& relabel);

struct Trajectory {
    std::vector<double> sample_times;
    /// One row per sample, N columns.
    std::vector<std::vector<double>> probabilities;
    std::vector<double> stage_boundaries;
};

/// Samples |c_j(t)|^2 on a per-stage uniform grid: each stage contributes
/// samples_per_stage points starting at its entry time, and the final
/// endpoint is appended once.
Trajectory evolve_dynamic(const DynamicGraph& dg, const StateVector& s0, std::size_t samples_per_stage);

/// State at absolute time t in [0, total]. At a transition time the state
/// is the endpoint of the stage on the left.
StateVector state_at(const DynamicGraph& dg, const StateVector& s0, const Duration& t);

} // namespace ctqw
