#include "ctqw/dynamic_graph.hpp"

#include "ctqw/error.hpp"

#include <string>

namespace ctqw {

namespace {

    void check_stage(std::size_t vertex_count, const Stage& stage)
    {
        if (stage.graph.vertex_count() != vertex_count) {
            throw Error(ErrorKind::DimensionMismatch,
                "stage graph has " + std::to_string(stage.graph.vertex_count()) + " vertices, expected "
                    + std::to_string(vertex_count));
        }
        if (!(stage.duration.value() > 0.0)) {
            throw Error(ErrorKind::InvalidDuration, "stage durations must be positive");
        }
    }

} // namespace

DynamicGraph::DynamicGraph(std::size_t vertex_count)
    : vertex_count_(vertex_count)
{
    if (vertex_count == 0) {
        throw Error(ErrorKind::EmptyInput, "dynamic graph needs at least one vertex");
    }
}

DynamicGraph::DynamicGraph(std::size_t vertex_count, std::vector<Stage> stages)
    : DynamicGraph(vertex_count)
{
    for (const auto& s : stages) {
        check_stage(vertex_count_, s);
    }
    stages_ = std::move(stages);
}

void DynamicGraph::append(Stage stage)
{
    check_stage(vertex_count_, stage);
    stages_.push_back(std::move(stage));
}

std::vector<double> DynamicGraph::transition_times() const
{
    std::vector<double> times { 0.0 };
    Duration elapsed;
    for (const auto& s : stages_) {
        elapsed = elapsed + s.duration;
        times.push_back(elapsed.value());
    }
    return times;
}

Duration DynamicGraph::total_duration() const
{
    Duration total;
    for (const auto& s : stages_) {
        total = total + s.duration;
    }
    return total;
}

Unitary composite_propagator(const DynamicGraph& dg)
{
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(
        static_cast<Eigen::Index>(dg.vertex_count()), static_cast<Eigen::Index>(dg.vertex_count()));
    for (const auto& s : dg.stages()) {
        u = propagate(s.graph, s.duration).matrix() * u;
    }
    return Unitary(std::move(u));
}

DynamicGraph concatenate(const DynamicGraph& a, const DynamicGraph& b)
{
    if (a.empty()) {
        return b;
    }
    if (b.empty()) {
        return a;
    }
    if (a.vertex_count() != b.vertex_count()) {
        throw Error(ErrorKind::DimensionMismatch,
            "cannot concatenate walks on " + std::to_string(a.vertex_count()) + " and "
                + std::to_string(b.vertex_count()) + " vertices");
    }
    std::vector<Stage> stages = a.stages();
    stages.insert(stages.end(), b.stages().begin(), b.stages().end());
    return DynamicGraph(a.vertex_count(), std::move(stages));
}

DynamicGraph pad(const DynamicGraph& dg, std::size_t vertex_count)
{
    if (vertex_count < dg.vertex_count()) {
        throw Error(ErrorKind::DimensionMismatch, "padding cannot remove vertices");
    }
    if (vertex_count == dg.vertex_count()) {
        return dg;
    }
    const Graph extra = Graph::singletons(vertex_count - dg.vertex_count());
    DynamicGraph out(vertex_count);
    for (const auto& s : dg.stages()) {
        const Graph parts[] = { s.graph, extra };
        out.append({ disjoint_union(parts), s.duration });
    }
    return out;
}

DynamicGraph relabel(const DynamicGraph& dg, const std::vector<Vertex>& map)
{
    const std::size_t n = dg.vertex_count();
    if (map.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "relabeling must cover every vertex");
    }
    std::vector<bool> seen(n, false);
    for (Vertex v : map) {
        if (v >= n || seen[v]) {
            throw Error(ErrorKind::VertexOutOfRange, "relabeling is not a permutation");
        }
        seen[v] = true;
    }
    DynamicGraph out(n);
    for (const auto& s : dg.stages()) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(s.graph.edges().size());
        for (const auto& e : s.graph.edges()) {
            edges.emplace_back(map[e.u], map[e.v]);
        }
        out.append({ Graph::build(n, edges), s.duration });
    }
    return out;
}

Trajectory evolve_dynamic(const DynamicGraph& dg, const StateVector& s0, std::size_t samples_per_stage)
{
    if (s0.dimension() != dg.vertex_count()) {
        throw Error(ErrorKind::DimensionMismatch,
            "initial state has dimension " + std::to_string(s0.dimension()) + ", walk has "
                + std::to_string(dg.vertex_count()) + " vertices");
    }
    if (samples_per_stage < 2) {
        throw Error(ErrorKind::InvalidDuration, "samples_per_stage must be at least 2");
    }

    Trajectory out;
    out.stage_boundaries = dg.transition_times();
    auto record = [&out](double t, const StateVector& s) {
        out.sample_times.push_back(t);
        const Eigen::VectorXd p = s.probabilities();
        out.probabilities.emplace_back(p.data(), p.data() + p.size());
    };

    StateVector entry = s0;
    Duration elapsed;
    const auto per_stage = static_cast<std::int64_t>(samples_per_stage);
    for (const auto& stage : dg.stages()) {
        for (std::int64_t k = 0; k < per_stage; ++k) {
            const Duration tau = stage.duration.scaled(k, per_stage);
            record((elapsed + tau).value(), evolve(propagate(stage.graph, tau), entry));
        }
        entry = evolve(propagate(stage.graph, stage.duration), entry);
        elapsed = elapsed + stage.duration;
    }
    record(elapsed.value(), entry);
    return out;
}

StateVector state_at(const DynamicGraph& dg, const StateVector& s0, const Duration& t)
{
    if (s0.dimension() != dg.vertex_count()) {
        throw Error(ErrorKind::DimensionMismatch, "initial state dimension does not match the walk");
    }
    if (dg.total_duration() < t) {
        throw Error(ErrorKind::InvalidDuration, "time lies beyond the end of the walk");
    }
    StateVector state = s0;
    Duration remaining = t;
    for (const auto& stage : dg.stages()) {
        if (remaining.is_zero()) {
            break;
        }
        if (!(stage.duration < remaining)) {
            return evolve(propagate(stage.graph, remaining), state);
        }
        state = evolve(propagate(stage.graph, stage.duration), state);
        remaining = remaining - stage.duration;
    }
    return state;
}

} // namespace ctqw
