#include "ctqw/gates.hpp"

#include "ctqw/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace ctqw {

namespace {

    using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

    constexpr std::size_t kMaxQubits = 12;

    void check_register(std::size_t qubits)
    {
        if (qubits == 0 || qubits > kMaxQubits) {
            throw Error(ErrorKind::InvalidQubit,
                "register size " + std::to_string(qubits) + " outside [1," + std::to_string(kMaxQubits) + "]");
        }
    }

    void check_qubit(std::size_t qubits, Qubit q)
    {
        if (q == 0 || q > qubits) {
            throw Error(ErrorKind::InvalidQubit,
                "qubit " + std::to_string(q) + " outside [1," + std::to_string(qubits) + "]");
        }
    }

    Stage stage(std::size_t vertices, const EdgeList& edges, Duration d)
    {
        return { Graph::build(vertices, edges), d };
    }

    Stage singletons(std::size_t vertices, Duration d)
    {
        return { Graph::singletons(vertices), d };
    }

    /// K2 edges v <-> v | target_mask for every v that has target bit 0 and
    /// all bits of control_mask set.
    EdgeList controlled_pairs(std::size_t vertices, std::size_t control_mask, std::size_t target_mask)
    {
        EdgeList edges;
        for (Vertex v = 0; v < vertices; ++v) {
            if ((v & target_mask) == 0 && (v & control_mask) == control_mask) {
                edges.emplace_back(v, v | target_mask);
            }
        }
        return edges;
    }

    /// Groups ascending vertices four at a time into C4 cycles.
    void add_c4_partition(EdgeList& edges, const std::vector<Vertex>& members)
    {
        for (std::size_t i = 0; i + 3 < members.size(); i += 4) {
            add_c4(edges, members[i], members[i + 1], members[i + 2], members[i + 3]);
        }
    }

} // namespace

void add_c4(EdgeList& edges, Vertex a, Vertex b, Vertex c, Vertex d)
{
    edges.emplace_back(a, b);
    edges.emplace_back(a, c);
    edges.emplace_back(b, d);
    edges.emplace_back(c, d);
}

std::string_view to_string(GateKind kind) noexcept
{
    switch (kind) {
    case GateKind::X: return "X";
    case GateKind::YDirect: return "Y_direct";
    case GateKind::YComposed: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::T: return "T";
    case GateKind::I: return "I";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCNOT: return "CCNOT";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept
{
    static constexpr std::array<std::pair<std::string_view, GateKind>, 11> names { {
        { "X", GateKind::X },
        { "Y", GateKind::YComposed },
        { "Y_composed", GateKind::YComposed },
        { "Y_direct", GateKind::YDirect },
        { "Z", GateKind::Z },
        { "H", GateKind::H },
        { "T", GateKind::T },
        { "I", GateKind::I },
        { "CNOT", GateKind::CNOT },
        { "CX", GateKind::CNOT },
        { "CCNOT", GateKind::CCNOT },
    } };
    for (const auto& [n, k] : names) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t arity(GateKind kind) noexcept
{
    switch (kind) {
    case GateKind::CNOT: return 2;
    case GateKind::CCNOT: return 3;
    default: return 1;
    }
}

bool is_confined(GateKind kind) noexcept
{
    return kind == GateKind::T || kind == GateKind::YDirect;
}

std::string_view to_string(IdentityVariant variant) noexcept
{
    switch (variant) {
    case IdentityVariant::Singletons2Pi: return "singletons_2pi";
    case IdentityVariant::K2Pairs2Pi: return "k2_pairs_2pi";
    case IdentityVariant::C4Pi: return "c4_pi";
    }
    return "?";
}

void GatePlacement::validate() const
{
    check_register(qubits);
    if (targets.size() != arity(kind)) {
        throw Error(ErrorKind::InvalidQubit,
            std::string(to_string(kind)) + " takes " + std::to_string(arity(kind)) + " qubit(s), got "
                + std::to_string(targets.size()));
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        check_qubit(qubits, targets[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw Error(ErrorKind::InvalidQubit, "repeated qubit " + std::to_string(targets[i]));
            }
        }
    }
}

DynamicGraph gate_x(std::size_t qubits, Qubit target)
{
    check_register(qubits);
    check_qubit(qubits, target);
    const std::size_t n = std::size_t { 1 } << qubits;
    return DynamicGraph(n, {
        stage(n, controlled_pairs(n, 0, qubit_mask(qubits, target)), Duration::pi(3, 2)),
        singletons(n, Duration::pi(1, 2)),
    });
}

DynamicGraph gate_z(std::size_t qubits, Qubit target)
{
    check_register(qubits);
    check_qubit(qubits, target);
    const std::size_t logical = std::size_t { 1 } << qubits;
    const std::size_t mask = qubit_mask(qubits, target);

    std::vector<Vertex> zero_class;
    for (Vertex v = 0; v < logical; ++v) {
        if ((v & mask) == 0) {
            zero_class.push_back(v);
        }
    }
    std::size_t vertices = logical;
    while (zero_class.size() < 4) {
        zero_class.push_back(vertices++);
    }

    EdgeList edges;
    add_c4_partition(edges, zero_class);
    return DynamicGraph(vertices, { stage(vertices, edges, Duration::pi(1)) });
}

DynamicGraph gate_y_composed(std::size_t qubits, Qubit target)
{
    const DynamicGraph z = gate_z(qubits, target);
    const std::size_t n = z.vertex_count();
    const DynamicGraph x = pad(gate_x(qubits, target), n);
    const DynamicGraph phase(n, { singletons(n, Duration::pi(3, 2)) });
    return concatenate(concatenate(z, x), phase);
}

DynamicGraph gate_y_direct()
{
    constexpr std::size_t n = 5;
    EdgeList c4;
    add_c4(c4, 0, 2, 3, 4);
    return DynamicGraph(n, {
        stage(n, { { 0, 1 } }, Duration::pi(1, 2)),
        stage(n, c4, Duration::pi(1)),
    });
}

DynamicGraph gate_h(std::size_t qubits, Qubit target)
{
    check_register(qubits);
    check_qubit(qubits, target);
    if (qubits < 3) {
        throw Error(ErrorKind::UnsupportedGate, "the Hadamard walk needs a register of at least three qubits");
    }
    std::vector<Qubit> partners;
    for (Qubit q = 1; q <= qubits && partners.size() < 2; ++q) {
        if (q != target) {
            partners.push_back(q);
        }
    }
    // template bit order: (partner0, partner1, target), partner0 most significant
    const std::array<std::size_t, 3> masks {
        qubit_mask(qubits, partners[0]),
        qubit_mask(qubits, partners[1]),
        qubit_mask(qubits, target),
    };
    const std::size_t used = masks[0] | masks[1] | masks[2];
    const std::size_t n = std::size_t { 1 } << qubits;

    auto place = [&masks](std::size_t local, std::size_t rest) {
        Vertex v = rest;
        for (std::size_t b = 0; b < 3; ++b) {
            if (local & (std::size_t { 4 } >> b)) {
                v |= masks[b];
            }
        }
        return v;
    };
    auto replicate = [&](const EdgeList& local_edges) {
        EdgeList edges;
        for (Vertex rest = 0; rest < n; ++rest) {
            if ((rest & used) != 0) {
                continue;
            }
            for (auto [a, b] : local_edges) {
                edges.emplace_back(place(a, rest), place(b, rest));
            }
        }
        return edges;
    };

    EdgeList cycle;
    add_c4(cycle, 0, 2, 4, 6);
    const EdgeList complement { { 0, 7 }, { 1, 6 }, { 2, 5 }, { 3, 4 } };
    const EdgeList flip { { 0, 1 }, { 2, 3 }, { 4, 5 }, { 6, 7 } };

    return DynamicGraph(n, {
        stage(n, replicate(cycle), Duration::pi(3, 2)),
        stage(n, replicate(complement), Duration::pi(1, 4)),
        stage(n, replicate(cycle), Duration::pi(1, 2)),
        stage(n, replicate(flip), Duration::pi(1, 2)),
        singletons(n, Duration::pi(3, 2)),
    });
}

DynamicGraph gate_t()
{
    constexpr std::size_t n = 8;
    EdgeList first_cycle;
    add_c4(first_cycle, 0, 3, 4, 5);
    EdgeList second_cycle;
    add_c4(second_cycle, 2, 6, 7, 5);
    const EdgeList star { { 0, 2 }, { 0, 3 }, { 0, 4 }, { 0, 5 } };

    return DynamicGraph(n, {
        stage(n, { { 0, 2 } }, Duration::pi(1, 4)),
        stage(n, first_cycle, Duration::pi(1, 2)),
        stage(n, { { 2, 4 }, { 3, 5 } }, Duration::pi(1, 4)),
        stage(n, second_cycle, Duration::pi(1, 2)),
        stage(n, star, Duration::pi(7, 4)),
        singletons(n, Duration::pi(1, 2)),
    });
}

DynamicGraph gate_cnot(std::size_t qubits, Qubit control, Qubit target)
{
    GatePlacement { GateKind::CNOT, qubits, { control, target } }.validate();
    const std::size_t n = std::size_t { 1 } << qubits;
    return DynamicGraph(n, {
        singletons(n, Duration::pi(3, 2)),
        stage(n, controlled_pairs(n, qubit_mask(qubits, control), qubit_mask(qubits, target)), Duration::pi(1, 2)),
    });
}

DynamicGraph gate_ccnot(std::size_t qubits, Qubit control1, Qubit control2, Qubit target)
{
    GatePlacement { GateKind::CCNOT, qubits, { control1, control2, target } }.validate();
    const std::size_t n = std::size_t { 1 } << qubits;
    const std::size_t controls = qubit_mask(qubits, control1) | qubit_mask(qubits, control2);
    return DynamicGraph(n, {
        singletons(n, Duration::pi(3, 2)),
        stage(n, controlled_pairs(n, controls, qubit_mask(qubits, target)), Duration::pi(1, 2)),
    });
}

DynamicGraph gate_identity(std::size_t qubits, IdentityVariant variant)
{
    check_register(qubits);
    const std::size_t n = std::size_t { 1 } << qubits;
    switch (variant) {
    case IdentityVariant::Singletons2Pi:
        return DynamicGraph(n, { singletons(n, Duration::pi(2)) });
    case IdentityVariant::K2Pairs2Pi: {
        EdgeList edges;
        for (Vertex v = 0; v < n; v += 2) {
            edges.emplace_back(v, v + 1);
        }
        return DynamicGraph(n, { stage(n, edges, Duration::pi(2)) });
    }
    case IdentityVariant::C4Pi: {
        if (n % 4 != 0) {
            throw Error(ErrorKind::InvalidVariant, "the C4 identity needs a vertex count divisible by four");
        }
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) {
            all[v] = v;
        }
        EdgeList edges;
        add_c4_partition(edges, all);
        return DynamicGraph(n, { stage(n, edges, Duration::pi(1)) });
    }
    }
    throw Error(ErrorKind::InvalidVariant, "unknown identity variant");
}

DynamicGraph build_gate(const GatePlacement& p)
{
    p.validate();
    const auto& t = p.targets;
    switch (p.kind) {
    case GateKind::X: return gate_x(p.qubits, t[0]);
    case GateKind::Z: return gate_z(p.qubits, t[0]);
    case GateKind::YComposed: return gate_y_composed(p.qubits, t[0]);
    case GateKind::H: return gate_h(p.qubits, t[0]);
    case GateKind::I: return gate_identity(p.qubits, IdentityVariant::Singletons2Pi);
    case GateKind::CNOT: return gate_cnot(p.qubits, t[0], t[1]);
    case GateKind::CCNOT: return gate_ccnot(p.qubits, t[0], t[1], t[2]);
    case GateKind::T:
    case GateKind::YDirect:
        if (p.qubits != 1) {
            throw Error(ErrorKind::UnsupportedGate,
                std::string(to_string(p.kind)) + " is only available as a confined single-qubit walk");
        }
        return p.kind == GateKind::T ? gate_t() : gate_y_direct();
    }
    throw Error(ErrorKind::UnsupportedGate, "unknown gate");
}

} // namespace ctqw
