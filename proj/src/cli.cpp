#include "collective/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collective/algorithms.hpp"
#include "collective/errors.hpp"
#include "collective/oracle.hpp"
#include "collective/relaxation.hpp"
#include "collective/spin_coherent.hpp"
#include "collective/symmetrized_basis.hpp"
#include "collective/trace_io.hpp"

namespace collective {

namespace {

struct TraceOutput {
    std::string out = "-";
    std::string format; // empty: csv for *.csv paths, json otherwise
    bool pjm = false;
    std::vector<double> gamma0_t;
};

struct RunConfig {
    int n = 0;
    TraceOutput trace;

    // dj
    std::string oracle;
    std::uint64_t initial = 0;

    // grover
    std::uint64_t target = 0;
    std::uint64_t start = 0;
    std::optional<int> iters;

    // qfunc / analyze
    std::string state_file;
    std::vector<double> coherent;
    std::optional<int> dicke_pair;
    int theta_nodes = 181;
    int phi_nodes = 361;
    std::string pgm;

    std::optional<unsigned long> seed; // reserved; nothing is stochastic
};

void add_trace_options(CLI::App *cmd, TraceOutput &opt) {
    cmd->add_option("--out", opt.out, "Output path ('-' for stdout)");
    cmd->add_option("--format", opt.format, "Trace format (default: from --out extension, else json)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--pjm", opt.pjm, "Include P(j,m) per step (JSON only)");
    cmd->add_option("--gamma0-t", opt.gamma0_t,
                    "Dephasing times Gamma_0 t at which to report the fidelity (JSON only)")
        ->check(CLI::NonNegativeNumber);
}

void check_qubits(int n) {
    if (n < 1 || n > kMaxBasisQubits)
        throw UsageError("--n must be in [1, " + std::to_string(kMaxBasisQubits) + "]");
}

void check_index(std::uint64_t x, int n, const char *flag) {
    if (x >> n)
        throw UsageError(std::string(flag) + " must be below 2^n = " +
                         std::to_string(std::uint64_t{1} << n));
}

// Runs `writer` against the selected file, or `fallback` for "-".
void emit(const std::string &path, std::ostream &fallback,
          const std::function<void(std::ostream &)> &writer, bool binary = false) {
    if (path.empty() || path == "-") {
        writer(fallback);
        return;
    }
    std::ofstream file(path, binary ? std::ios::binary : std::ios::out);
    if (!file)
        throw std::runtime_error("cannot open output file " + path);
    writer(file);
    if (!file)
        throw std::runtime_error("failed writing " + path);
}

void write_trace(TraceOutput opt, const std::vector<LabeledState> &states, int n,
                 std::ostream &out) {
    if (opt.format.empty())
        opt.format = std::filesystem::path(opt.out).extension() == ".csv" ? "csv" : "json";
    if (opt.format == "csv" && (opt.pjm || !opt.gamma0_t.empty()))
        throw UsageError("--pjm and --gamma0-t require --format json");
    const auto basis = build_symmetrized_basis(n);
    TraceOptions topt;
    topt.keep_pjm = opt.pjm;
    topt.fidelity_times = opt.gamma0_t;
    const auto trace = trace_metrics(states, basis, topt);
    emit(opt.out, out, [&](std::ostream &os) {
        if (opt.format == "csv")
            write_trace_csv(os, trace);
        else
            write_trace_json(os, trace);
    });
}

OracleSpec resolve_oracle(const std::string &spec, int n) {
    if (is_builtin_oracle(spec))
        return builtin_oracle(spec, n);
    if (!std::filesystem::is_regular_file(spec))
        throw UsageError("--oracle '" + spec +
                         "' is neither a builtin (parity, parity-low4, constant0, constant1) "
                         "nor a readable truth-table file");
    return load_oracle_file(spec, n);
}

void run_dj(const RunConfig &cfg, std::ostream &out) {
    check_qubits(cfg.n);
    check_index(cfg.initial, cfg.n, "--initial");
    const auto oracle = resolve_oracle(cfg.oracle, cfg.n);
    write_trace(cfg.trace, dj_run(oracle, cfg.initial), cfg.n, out);
}

void run_grover(const RunConfig &cfg, std::ostream &out) {
    check_qubits(cfg.n);
    check_index(cfg.target, cfg.n, "--target");
    check_index(cfg.start, cfg.n, "--start");
    GroverConfig g;
    g.num_qubits = cfg.n;
    g.target = cfg.target;
    g.start = cfg.start;
    g.iterations = cfg.iters.value_or(default_grover_iterations(cfg.n));
    if (g.iterations < 0)
        throw UsageError("--iters must be non-negative");
    write_trace(cfg.trace, grover_run(g), cfg.n, out);
}

void run_basis(const RunConfig &cfg, std::ostream &out) {
    check_qubits(cfg.n);
    const auto basis = build_symmetrized_basis(cfg.n);
    emit(cfg.trace.out, out, [&](std::ostream &os) { write_basis_csv(os, basis); });
}

StateVector qfunc_state(const RunConfig &cfg) {
    const int sources = static_cast<int>(!cfg.state_file.empty()) +
                        static_cast<int>(!cfg.coherent.empty()) +
                        static_cast<int>(cfg.dicke_pair.has_value());
    if (sources != 1)
        throw UsageError("qfunc needs exactly one of --state, --coherent, --dicke-pair");
    if (!cfg.state_file.empty())
        return read_state_file(cfg.state_file);
    check_qubits(cfg.n);
    if (!cfg.coherent.empty()) {
        const double theta = cfg.coherent[0];
        if (!(theta >= 0.0 && theta <= 3.141592653589793))
            throw UsageError("--coherent theta must lie in [0, pi]");
        return coherent_state(cfg.n, CoherentParams(theta, cfg.coherent[1]));
    }
    const int m = *cfg.dicke_pair;
    if (m < 0 || 2 * m > cfg.n || (cfg.n % 2 != 0))
        throw UsageError("--dicke-pair needs even --n and 0 <= m <= n/2");
    const auto up = dicke_state(cfg.n, HalfInt::from_int(m));
    if (m == 0)
        return up;
    const auto down = dicke_state(cfg.n, HalfInt::from_int(-m));
    cvector_t amps(up.size());
    for (std::uint64_t x = 0; x < up.size(); ++x)
        amps[x] = (up[x] + down[x]) / std::sqrt(2.0);
    return StateVector(std::move(amps));
}

void run_qfunc(const RunConfig &cfg, std::ostream &out) {
    if (cfg.theta_nodes < 2 || cfg.phi_nodes < 2)
        throw UsageError("--theta-nodes and --phi-nodes must be at least 2");
    const auto state = qfunc_state(cfg);
    const auto grid = q_function(state, MeshSpec{cfg.theta_nodes, cfg.phi_nodes});
    emit(cfg.trace.out, out, [&](std::ostream &os) { write_qgrid_csv(os, grid); });
    if (!cfg.pgm.empty())
        emit(cfg.pgm, out, [&](std::ostream &os) { write_qgrid_pgm(os, grid); }, true);
}

void run_analyze(const RunConfig &cfg, std::ostream &out) {
    auto state = read_state_file(cfg.state_file);
    if (state.num_qubits() > kMaxBasisQubits)
        throw UsageError("analyze supports at most " + std::to_string(kMaxBasisQubits) +
                         " qubits");
    std::vector<LabeledState> states;
    const int n = state.num_qubits();
    states.push_back({"input", std::move(state)});
    write_trace(cfg.trace, states, n, out);
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Collective T1/T2 decoherence analysis of Deutsch-Jozsa and Grover runs.\n"
                 "Full symmetrized-basis construction is limited to n <= 14.\n"
                 "Angles are in radians. Worker count follows OMP_NUM_THREADS.",
                 "collective"};
    app.require_subcommand(1);
    app.add_option("--seed", cfg.seed, "Reserved; no stochastic components");

    auto *dj = app.add_subcommand("dj", "Deutsch-Jozsa trace");
    dj->add_option("--n", cfg.n, "Qubits")->required();
    dj->add_option("--oracle", cfg.oracle, "Builtin name or truth-table file")->required();
    dj->add_option("--initial", cfg.initial, "Initial computational state");
    add_trace_options(dj, cfg.trace);

    auto *grover = app.add_subcommand("grover", "Grover search trace");
    grover->add_option("--n", cfg.n, "Qubits")->required();
    grover->add_option("--target", cfg.target, "Target state tau")->required();
    grover->add_option("--start", cfg.start, "Start state gamma (0 = standard)");
    grover->add_option("--iters", cfg.iters, "Iterations (default round(pi/4 sqrt(2^n)))");
    add_trace_options(grover, cfg.trace);

    auto *basis = app.add_subcommand("basis", "Dump Clebsch-Gordan table as CSV");
    basis->add_option("--n", cfg.n, "Qubits")->required();
    basis->add_option("--out", cfg.trace.out, "Output path ('-' for stdout)");

    auto *qfunc = app.add_subcommand("qfunc", "Sample Q(theta, phi) on a mesh");
    qfunc->add_option("--n", cfg.n, "Qubits (for --coherent / --dicke-pair)");
    qfunc->add_option("--state", cfg.state_file, "State file (\"re im\" per line)");
    qfunc->add_option("--coherent", cfg.coherent, "Coherent state THETA PHI")->expected(2);
    qfunc->add_option("--dicke-pair", cfg.dicke_pair, "(|n/2,m> + |n/2,-m>)/sqrt(2) for m");
    qfunc->add_option("--theta-nodes", cfg.theta_nodes, "Theta samples over [0, pi]");
    qfunc->add_option("--phi-nodes", cfg.phi_nodes, "Phi samples over [-pi, pi]");
    qfunc->add_option("--out", cfg.trace.out, "CSV output path ('-' for stdout)");
    qfunc->add_option("--pgm", cfg.pgm, "Also write a P5 graymap (Q = 1 black)");

    auto *analyze = app.add_subcommand("analyze", "T1/T2/P(j,m) report for a state file");
    analyze->add_option("--state", cfg.state_file, "State file (\"re im\" per line)")->required();
    add_trace_options(analyze, cfg.trace);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (dj->parsed())
            run_dj(cfg, out);
        else if (grover->parsed())
            run_grover(cfg, out);
        else if (basis->parsed())
            run_basis(cfg, out);
        else if (qfunc->parsed())
            run_qfunc(cfg, out);
        else
            run_analyze(cfg, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace collective
