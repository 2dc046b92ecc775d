#include "ctqw/verification.hpp"

#include "ctqw/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ctqw {

namespace {

    using Eigen::MatrixXcd;

    constexpr Complex kI { 0.0, 1.0 };
    const double kRoot = 1.0 / std::numbers::sqrt2;
    const Complex kEighthDown = std::polar(1.0, -std::numbers::pi / 4);
    const Complex kEighthUp = std::polar(1.0, std::numbers::pi / 4);

    Eigen::Matrix2cd projector(int bit)
    {
        Eigen::Matrix2cd p = Eigen::Matrix2cd::Zero();
        p(bit, bit) = 1.0;
        return p;
    }

    MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b)
    {
        MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.cols(); ++j) {
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
            }
        }
        return out;
    }

    // diag on every vertex, then the listed pairs swapped with value val
    MatrixXcd swap_matrix(std::size_t n, Complex diag, const std::vector<std::pair<int, int>>& pairs, Complex val)
    {
        const auto dim = static_cast<Eigen::Index>(n);
        MatrixXcd m = MatrixXcd::Identity(dim, dim) * diag;
        for (auto [a, b] : pairs) {
            m(a, a) = 0.0;
            m(b, b) = 0.0;
            m(a, b) = val;
            m(b, a) = val;
        }
        return m;
    }

    // cos/sin mixing of the listed pairs, diag elsewhere
    MatrixXcd mix_matrix(std::size_t n, Complex diag, const std::vector<std::pair<int, int>>& pairs)
    {
        const auto dim = static_cast<Eigen::Index>(n);
        MatrixXcd m = MatrixXcd::Identity(dim, dim) * diag;
        for (auto [a, b] : pairs) {
            m(a, a) = kRoot;
            m(b, b) = kRoot;
            m(a, b) = -kI * kRoot;
            m(b, a) = -kI * kRoot;
        }
        return m;
    }

    GoldenMatrices golden_h()
    {
        GoldenMatrices g;
        g.stages.push_back(swap_matrix(8, kI, { { 0, 6 }, { 2, 4 } }, -1.0));
        g.stages.push_back(mix_matrix(8, kRoot, { { 0, 7 }, { 1, 6 }, { 2, 5 }, { 3, 4 } }));
        g.stages.push_back(swap_matrix(8, -kI, { { 0, 6 }, { 2, 4 } }, -1.0));
        g.stages.push_back(swap_matrix(8, 0.0, { { 0, 1 }, { 2, 3 }, { 4, 5 }, { 6, 7 } }, -kI));
        g.stages.push_back(MatrixXcd::Identity(8, 8) * kI);
        Eigen::Matrix2cd h;
        h << kRoot, kRoot, kRoot, -kRoot;
        g.product = kron(MatrixXcd::Identity(4, 4), h);
        return g;
    }

    GoldenMatrices golden_t()
    {
        GoldenMatrices g;
        MatrixXcd t0 = MatrixXcd::Identity(8, 8) * kEighthDown;
        t0(0, 0) = kRoot;
        t0(2, 2) = kRoot;
        t0(0, 2) = -kI * kRoot;
        t0(2, 0) = -kI * kRoot;
        g.stages.push_back(t0);
        g.stages.push_back(swap_matrix(8, -kI, { { 0, 5 }, { 3, 4 } }, -1.0));
        g.stages.push_back(mix_matrix(8, kEighthDown, { { 2, 4 }, { 3, 5 } }));
        g.stages.push_back(swap_matrix(8, -kI, { { 2, 5 }, { 6, 7 } }, -1.0));

        MatrixXcd t4 = MatrixXcd::Zero(8, 8);
        t4(1, 1) = kEighthUp;
        t4(6, 6) = kEighthUp;
        t4(7, 7) = kEighthUp;
        const int star[] = { 0, 2, 3, 4, 5 };
        for (int a : star) {
            for (int b : star) {
                if (a == 0 && b == 0) {
                    continue;
                }
                if (a == 0 || b == 0) {
                    t4(a, b) = kI / 2.0;
                } else {
                    t4(a, b) = a == b ? 0.75 : -0.25;
                }
            }
        }
        g.stages.push_back(t4);
        g.stages.push_back(MatrixXcd::Identity(8, 8) * -kI);

        const Complex e = kEighthDown * kRoot;
        MatrixXcd p = MatrixXcd::Zero(8, 8);
        p(0, 0) = 1.0;
        p(1, 1) = kEighthUp;
        p.row(2).segment(2, 4) << -0.5, 0.0, -e, 0.5;
        p.row(3).segment(2, 4) << -0.5, 0.0, e, 0.5;
        p.row(4).segment(2, 4) << 0.5, e, 0.0, 0.5;
        p.row(5).segment(2, 4) << 0.5, -e, 0.0, 0.5;
        p(6, 7) = kEighthDown;
        p(7, 6) = kEighthDown;
        g.product = p;
        return g;
    }

    Check make_check(std::string name, double deviation)
    {
        return { std::move(name), deviation, deviation <= kVerifyTolerance };
    }

    std::string placement_name(const GatePlacement& p)
    {
        std::string s = std::string(to_string(p.kind)) + " n=" + std::to_string(p.qubits) + " targets=";
        for (std::size_t i = 0; i < p.targets.size(); ++i) {
            s += (i ? "," : "") + std::to_string(p.targets[i]);
        }
        return s;
    }

    // Composite of the walk against the oracle on the logical block, plus
    // the amplitude leaking out of it when the walk has ancilla vertices.
    double walk_deviation(const DynamicGraph& walk, const MatrixXcd& oracle)
    {
        const MatrixXcd u = composite_propagator(walk).matrix();
        const auto block = oracle.rows();
        const double dev = max_abs_deviation(u.topLeftCorner(block, block), oracle);
        return std::max(dev, leakage(u, static_cast<std::size_t>(block)));
    }

    std::vector<std::vector<Qubit>> placements(std::size_t qubits, std::size_t arity)
    {
        std::vector<std::vector<Qubit>> out;
        for (Qubit a = 1; a <= qubits; ++a) {
            if (arity == 1) {
                out.push_back({ a });
                continue;
            }
            for (Qubit b = 1; b <= qubits; ++b) {
                if (b == a) {
                    continue;
                }
                if (arity == 2) {
                    out.push_back({ a, b });
                    continue;
                }
                for (Qubit c = 1; c <= qubits; ++c) {
                    if (c != a && c != b) {
                        out.push_back({ a, b, c });
                    }
                }
            }
        }
        return out;
    }

    VerificationReport verify_kron(GateKind kind, std::size_t min_qubits)
    {
        VerificationReport r { std::string(to_string(kind)), {} };
        for (std::size_t n = min_qubits; n <= 4; ++n) {
            for (const auto& targets : placements(n, arity(kind))) {
                const GatePlacement p { kind, n, targets };
                r.checks.push_back(make_check(placement_name(p), walk_deviation(build_gate(p), placement_matrix(p))));
            }
        }
        return r;
    }

    VerificationReport verify_golden(GoldenGate gate)
    {
        const bool is_h = gate == GoldenGate::H;
        const DynamicGraph walk = is_h ? gate_h(3, 3) : gate_t();
        const GoldenMatrices golden = golden_matrices(gate);
        VerificationReport r { is_h ? "H" : "T", {} };
        for (std::size_t i = 0; i < walk.stages().size(); ++i) {
            const auto& s = walk.stages()[i];
            r.checks.push_back(make_check("stage " + std::to_string(i),
                max_abs_deviation(propagate(s.graph, s.duration).matrix(), golden.stages[i])));
        }
        r.checks.push_back(make_check("product", max_abs_deviation(composite_propagator(walk).matrix(), golden.product)));
        if (!is_h) {
            r.checks.push_back(make_check("restricted to {0,1}", walk_deviation(walk, single_qubit_matrix(GateKind::T))));
        }
        return r;
    }

    VerificationReport verify_y_direct()
    {
        VerificationReport r { "Y_direct", {} };
        r.checks.push_back(
            make_check("restricted to {0,1}", walk_deviation(gate_y_direct(), single_qubit_matrix(GateKind::YDirect))));
        return r;
    }

    VerificationReport verify_identity()
    {
        VerificationReport r { "I", {} };
        const IdentityVariant variants[] = {
            IdentityVariant::Singletons2Pi,
            IdentityVariant::K2Pairs2Pi,
            IdentityVariant::C4Pi,
        };
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto dim = static_cast<Eigen::Index>(std::size_t { 1 } << n);
            for (auto v : variants) {
                if (v == IdentityVariant::C4Pi && n < 2) {
                    continue;
                }
                r.checks.push_back(make_check("I n=" + std::to_string(n) + " " + std::string(to_string(v)),
                    walk_deviation(gate_identity(n, v), MatrixXcd::Identity(dim, dim))));
            }
        }
        return r;
    }

} // namespace

Eigen::Matrix2cd single_qubit_matrix(GateKind kind)
{
    Eigen::Matrix2cd m;
    switch (kind) {
    case GateKind::X:
        m << 0.0, 1.0, 1.0, 0.0;
        break;
    case GateKind::YDirect:
    case GateKind::YComposed:
        m << 0.0, -kI, kI, 0.0;
        break;
    case GateKind::Z:
        m << 1.0, 0.0, 0.0, -1.0;
        break;
    case GateKind::H:
        m << kRoot, kRoot, kRoot, -kRoot;
        break;
    case GateKind::T:
        m << 1.0, 0.0, 0.0, kEighthUp;
        break;
    case GateKind::I:
        m = Eigen::Matrix2cd::Identity();
        break;
    default:
        throw Error(ErrorKind::UnsupportedGate, std::string(to_string(kind)) + " is not a single-qubit gate");
    }
    return m;
}

Eigen::MatrixXcd embed(std::size_t qubits, const std::vector<std::pair<Qubit, Eigen::Matrix2cd>>& factors)
{
    MatrixXcd out = MatrixXcd::Identity(1, 1);
    for (Qubit q = 1; q <= qubits; ++q) {
        MatrixXcd f = MatrixXcd::Identity(2, 2);
        for (const auto& [target, m] : factors) {
            if (target == q) {
                f = m;
            }
        }
        out = kron(out, f);
    }
    return out;
}

Eigen::MatrixXcd placement_matrix(const GatePlacement& p)
{
    p.validate();
    const Eigen::Matrix2cd x = single_qubit_matrix(GateKind::X);
    const auto dim = static_cast<Eigen::Index>(std::size_t { 1 } << p.qubits);
    switch (p.kind) {
    case GateKind::CNOT:
        return embed(p.qubits, { { p.targets[0], projector(0) } })
            + embed(p.qubits, { { p.targets[0], projector(1) }, { p.targets[1], x } });
    case GateKind::CCNOT: {
        const MatrixXcd both = embed(p.qubits, { { p.targets[0], projector(1) }, { p.targets[1], projector(1) } });
        return MatrixXcd::Identity(dim, dim) - both
            + embed(p.qubits, { { p.targets[0], projector(1) }, { p.targets[1], projector(1) }, { p.targets[2], x } });
    }
    default:
        return embed(p.qubits, { { p.targets[0], single_qubit_matrix(p.kind) } });
    }
}

Eigen::MatrixXcd kron_oracle(const Circuit& c)
{
    const auto dim = static_cast<Eigen::Index>(std::size_t { 1 } << c.qubits());
    MatrixXcd u = MatrixXcd::Identity(dim, dim);
    for (const auto& op : c.ops()) {
        const auto* p = std::get_if<GatePlacement>(&op);
        if (p == nullptr) {
            throw Error(ErrorKind::InvalidCircuit, "the oracle only covers gate placements");
        }
        u = placement_matrix(*p) * u;
    }
    return u;
}

double max_abs_deviation(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v)
{
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "compared matrices differ in shape");
    }
    return u.size() == 0 ? 0.0 : (u - v).cwiseAbs().maxCoeff();
}

double leakage(const Eigen::MatrixXcd& u, std::size_t block)
{
    const auto b = static_cast<Eigen::Index>(block);
    if (b >= u.rows()) {
        return 0.0;
    }
    return u.bottomLeftCorner(u.rows() - b, b).cwiseAbs().maxCoeff();
}

EquivalenceReport compare(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v, double tol)
{
    const double dev = max_abs_deviation(u, v);
    EquivalenceReport r { dev, dev <= tol, dev <= tol, Complex(1.0, 0.0) };
    if (v.size() == 0) {
        return r;
    }
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    v.cwiseAbs().maxCoeff(&row, &col);
    const Complex ratio = v(row, col) / u(row, col);
    if (std::abs(u(row, col)) <= tol || !std::isfinite(std::abs(ratio))) {
        return r;
    }
    r.extracted_phase = ratio / std::abs(ratio);
    r.equal_up_to_global_phase = r.equal_strict || max_abs_deviation(u, v / r.extracted_phase) <= tol;
    return r;
}

GoldenMatrices golden_matrices(GoldenGate gate) { return gate == GoldenGate::H ? golden_h() : golden_t(); }

Eigen::MatrixXcd asymmetric_h_stage2()
{
    MatrixXcd m = golden_h().stages[2];
    m(6, 0) = 0.0;
    m(6, 7) = -1.0;
    m(7, 7) = 0.0;
    m(7, 0) = -kI;
    return m;
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& verifiable_gates()
{
    static const std::vector<std::string> names { "X", "Z", "Y", "Y_direct", "H", "H_placements", "T", "CNOT", "CCNOT",
        "I" };
    return names;
}

std::vector<VerificationReport> verify(std::string_view gate)
{
    if (gate == "all") {
        std::vector<VerificationReport> out;
        for (const auto& name : verifiable_gates()) {
            auto part = verify(name);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (gate == "H") {
        return { verify_golden(GoldenGate::H) };
    }
    if (gate == "H_placements") {
        auto r = verify_kron(GateKind::H, 3);
        r.gate = "H_placements";
        return { r };
    }
    if (gate == "T") {
        return { verify_golden(GoldenGate::T) };
    }
    if (gate == "Y_direct") {
        return { verify_y_direct() };
    }
    if (gate == "I") {
        return { verify_identity() };
    }
    const auto kind = parse_gate_kind(gate);
    if (kind && (*kind == GateKind::X || *kind == GateKind::Z || *kind == GateKind::YComposed
            || *kind == GateKind::CNOT || *kind == GateKind::CCNOT)) {
        return { verify_kron(*kind, arity(*kind)) };
    }
    throw Error(ErrorKind::UnsupportedGate, "no verification suite for '" + std::string(gate) + "'");
}

} // namespace ctqw
