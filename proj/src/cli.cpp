#include "ctqw/cli.hpp"

#include "ctqw/error.hpp"
#include "ctqw/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace ctqw::cli {

namespace {

    enum class LogLevel {
        Quiet,
        Info,
        Debug,
    };

    LogLevel log_level()
    {
        const char* env = std::getenv("CTQW_LOG_LEVEL");
        const std::string v = env ? env : "";
        if (v == "info") {
            return LogLevel::Info;
        }
        if (v == "debug") {
            return LogLevel::Debug;
        }
        return LogLevel::Quiet;
    }

    struct Context {
        std::ostream& out;
        std::ostream& err;
        LogLevel level = log_level();

        void info(const std::string& msg) const
        {
            if (level != LogLevel::Quiet) {
                err << "[info] " << msg << '\n';
            }
        }
        void debug(const std::string& msg) const
        {
            if (level == LogLevel::Debug) {
                err << "[debug] " << msg << '\n';
            }
        }
    };

    void write_text(const Context& ctx, const std::string& path, const std::string& text)
    {
        if (path.empty() || path == "-") {
            ctx.out << text;
            return;
        }
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw Error(ErrorKind::Parse, "cannot write " + path);
        }
        f << text;
        ctx.info("wrote " + path);
    }

    void write_json(const Context& ctx, const std::string& path, const json& j) { write_text(ctx, path, j.dump(2) + "\n"); }

    // Pre-measurement walk from vertex 0, then the recovery walk from the
    // projected state.
    Trajectory teleport_trajectory(const TeleportationResult& r, std::size_t samples)
    {
        const std::size_t n = r.walks.pre_measurement.vertex_count();
        Trajectory out = evolve_dynamic(r.walks.pre_measurement, StateVector::basis(n, 0), samples);
        const double offset = r.walks.pre_measurement.total_duration().value();
        const Trajectory rec = evolve_dynamic(r.walks.recovery, r.post_measurement, samples);
        if (!out.sample_times.empty()) {
            out.sample_times.pop_back();
            out.probabilities.pop_back();
        }
        for (std::size_t k = 0; k < rec.sample_times.size(); ++k) {
            out.sample_times.push_back(offset + rec.sample_times[k]);
            out.probabilities.push_back(rec.probabilities[k]);
        }
        for (std::size_t b = 1; b < rec.stage_boundaries.size(); ++b) {
            out.stage_boundaries.push_back(offset + rec.stage_boundaries[b]);
        }
        return out;
    }

    AdderInput parse_adder_input(const std::string& s)
    {
        if (s == "0" || s == "basis") {
            return AdderInput::Zero;
        }
        if (s == "1") {
            return AdderInput::One;
        }
        return AdderInput::Plus;
    }

    int exit_code_for(ErrorKind kind)
    {
        switch (kind) {
        case ErrorKind::UnsupportedGate:
            return kUnsupportedGate;
        case ErrorKind::DimensionMismatch:
            return kDimensionMismatch;
        default:
            return kParseError;
        }
    }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx { out, err };

    CLI::App app { "Continuous-time quantum walks on dynamic graphs", "ctqw" };
    app.require_subcommand(1);

    std::string out_path;
    std::size_t samples = 64;
    std::uint64_t seed = 0;
    auto add_out = [&](CLI::App* cmd, const std::string& what) {
        cmd->add_option("--out", out_path, what + " (stdout when omitted)");
    };
    auto add_samples = [&](CLI::App* cmd) {
        cmd->add_option("--samples-per-stage", samples, "trajectory samples per stage")
            ->check(CLI::Range(std::size_t { 2 }, std::size_t { 1 } << 20));
    };

    std::string circuit_path;
    auto* compile_cmd = app.add_subcommand("compile", "compile a measurement-free circuit into a dynamic graph");
    compile_cmd->add_option("circuit", circuit_path, "circuit JSON")->required();
    add_out(compile_cmd, "dynamic graph JSON");

    std::string csv_path;
    auto* simulate_cmd = app.add_subcommand("simulate", "run a circuit, sampling or forcing measurements");
    simulate_cmd->add_option("circuit", circuit_path, "circuit JSON")->required();
    simulate_cmd->add_option("--seed", seed, "measurement RNG seed");
    simulate_cmd->add_option("--csv", csv_path, "also write the probability trajectory");
    add_samples(simulate_cmd);
    add_out(simulate_cmd, "execution report JSON");

    std::string graph_path;
    std::string state_path;
    std::string stages_path;
    auto* trajectory_cmd = app.add_subcommand("trajectory", "sample vertex probabilities along a dynamic graph");
    trajectory_cmd->add_option("graph", graph_path, "dynamic graph JSON")->required();
    trajectory_cmd->add_option("state", state_path, "initial state JSON")->required();
    trajectory_cmd->add_option("--stages", stages_path, "stage sidecar JSON (default: <out>.stages.json)");
    add_samples(trajectory_cmd);
    add_out(trajectory_cmd, "trajectory CSV");

    std::string gate = "all";
    auto* verify_cmd = app.add_subcommand("verify", "check gate walks against circuit-model and golden matrices");
    verify_cmd->add_option("gate", gate, "all, or one of: " + [] {
        std::string names;
        for (const auto& n : verifiable_gates()) {
            names += (names.empty() ? "" : ", ") + n;
        }
        return names;
    }());
    add_out(verify_cmd, "verification report JSON");

    double a = 0.0;
    int b1 = 0;
    int b2 = 0;
    bool raw_phase = false;
    auto* teleport_cmd = app.add_subcommand("teleport", "teleport sqrt(1-a)|0> + sqrt(a)|1> on a forced branch");
    teleport_cmd->add_option("--a", a, "amplitude parameter")->required()->check(CLI::Range(0.0, 1.0));
    teleport_cmd->add_option("--b1", b1, "outcome on the first measured qubit")->check(CLI::IsMember({ 0, 1 }));
    teleport_cmd->add_option("--b2", b2, "outcome on the second measured qubit")->check(CLI::IsMember({ 0, 1 }));
    teleport_cmd->add_flag("--raw-phase", raw_phase, "keep the -i left by the preparation rotation");
    teleport_cmd->add_option("--csv", csv_path, "also write the probability trajectory");
    add_samples(teleport_cmd);
    add_out(teleport_cmd, "result JSON");

    int a0 = 1;
    std::string b0 = "plus";
    auto* adder_cmd = app.add_subcommand("adder", "run the one-bit adder");
    adder_cmd->add_option("--a0", a0, "addend bit")->check(CLI::IsMember({ 0, 1 }));
    adder_cmd->add_option("--b0", b0, "0, 1, basis (=0) or plus")->check(CLI::IsMember({ "0", "1", "basis", "plus" }));
    adder_cmd->add_option("--csv", csv_path, "also write the probability trajectory");
    add_samples(adder_cmd);
    add_out(adder_cmd, "result JSON");

    auto* manifest_cmd = app.add_subcommand("manifest", "list every library gate walk with its stages");
    add_out(manifest_cmd, "manifest JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (compile_cmd->parsed()) {
            const Compilation c = compile(circuit_from_json(read_json_file(circuit_path)));
            ctx.info("compiled onto " + std::to_string(c.register_qubits) + " register qubits, "
                + std::to_string(c.walk.stages().size()) + " stages");
            write_json(ctx, out_path, to_json(c.walk));
        } else if (simulate_cmd->parsed()) {
            const ExecutionReport r = run(circuit_from_json(read_json_file(circuit_path)), seed);
            if (!csv_path.empty()) {
                write_text(ctx, csv_path, trajectory_csv(execution_trajectory(r, samples)));
            }
            write_json(ctx, out_path, to_json(r));
        } else if (trajectory_cmd->parsed()) {
            const DynamicGraph dg = dynamic_graph_from_json(read_json_file(graph_path));
            const StateVector s0 = state_from_json(read_json_file(state_path));
            const Trajectory t = evolve_dynamic(dg, s0, samples);
            ctx.debug(std::to_string(t.sample_times.size()) + " samples");
            write_text(ctx, out_path, trajectory_csv(t));
            if (stages_path.empty() && !out_path.empty() && out_path != "-") {
                stages_path = out_path + ".stages.json";
            }
            if (!stages_path.empty()) {
                write_json(ctx, stages_path, trajectory_stages(t, dg));
            }
        } else if (verify_cmd->parsed()) {
            const auto reports = verify(gate);
            bool ok = true;
            for (const auto& r : reports) {
                for (const auto& c : r.checks) {
                    if (!c.passed) {
                        err << "FAIL " << r.gate << ": " << c.name << " deviation " << format_number(c.deviation, 3)
                            << '\n';
                        ok = false;
                    }
                }
            }
            write_json(ctx, out_path, to_json(reports));
            return ok ? kOk : kVerifyFailed;
        } else if (teleport_cmd->parsed()) {
            const TeleportationResult r = run_teleportation(a, b1, b2, !raw_phase);
            if (!csv_path.empty()) {
                write_text(ctx, csv_path, trajectory_csv(teleport_trajectory(r, samples)));
            }
            write_json(ctx, out_path, to_json(r));
        } else if (adder_cmd->parsed()) {
            const AdderResult r = run_adder(a0, parse_adder_input(b0));
            if (!csv_path.empty()) {
                const std::size_t n = r.walk.vertex_count();
                write_text(ctx, csv_path, trajectory_csv(evolve_dynamic(r.walk, StateVector::basis(n, 0), samples)));
            }
            write_json(ctx, out_path, to_json(r));
        } else if (manifest_cmd->parsed()) {
            write_json(ctx, out_path, gate_manifest());
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kOk;
}

} // namespace ctqw::cli
