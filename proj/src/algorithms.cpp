#include "collective/algorithms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "collective/errors.hpp"

namespace collective {

DnfDecomposition dnf_decompose(const OracleSpec &f) {
    DnfDecomposition out{f.num_qubits(), {}};
    const auto &table = f.truth_table();
    const std::uint64_t mask = table.size() - 1;
    out.minterms.reserve(f.ones());
    for (std::uint64_t x = 0; x < table.size(); ++x)
        if (table[x])
            out.minterms.push_back({x, ~x & mask});
    return out;
}

void apply_minterm_block(StateVector &s, const Minterm &term) {
    const int n = s.num_qubits();
    const std::uint64_t all_ones = s.size() - 1;
    if (term.x > all_ones || term.complemented > all_ones)
        throw DomainError("minterm does not fit in " + std::to_string(n) + " qubits");
    for (int q = 0; q < n; ++q)
        if ((term.complemented >> q) & 1U)
            s.apply_x(q);
    s.reflect_about(all_ones);
    for (int q = 0; q < n; ++q)
        if ((term.complemented >> q) & 1U)
            s.apply_x(q);
}

std::vector<LabeledState> dj_run(const OracleSpec &f, std::uint64_t initial) {
    const int n = f.num_qubits();
    if (initial >> n)
        throw DomainError("initial state " + std::to_string(initial) + " out of range for " +
                          std::to_string(n) + " qubits");
    const auto dnf = dnf_decompose(f);

    std::vector<LabeledState> out;
    out.reserve(dnf.minterms.size() + 3);
    StateVector s = prepare_basis_state(n, initial);
    out.push_back({"initial", s});
    s.apply_hadamard_all();
    out.push_back({"hadamard", s});
    for (const auto &term : dnf.minterms) {
        apply_minterm_block(s, term);
        out.push_back({"minterm x=" + std::to_string(term.x), s});
    }
    s.apply_hadamard_all();
    out.push_back({"hadamard", std::move(s)});
    return out;
}

int default_grover_iterations(int num_qubits) {
    return static_cast<int>(
        std::lround(std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, num_qubits))));
}

std::vector<LabeledState> grover_run(const GroverConfig &config) {
    const int n = config.num_qubits;
    if (n < 1 || n > kMaxQubits)
        throw DomainError("qubit count out of range: " + std::to_string(n));
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (config.target >= dim || config.start >= dim)
        throw DomainError("target and start must lie in [0, 2^n)");
    if (config.iterations < 0)
        throw DomainError("iteration count must be non-negative");

    std::vector<LabeledState> out;
    out.reserve(2 + 4 * static_cast<std::size_t>(config.iterations));
    StateVector s = prepare_basis_state(n, config.start);
    out.push_back({"initial", s});
    s.apply_hadamard_all();
    out.push_back({"hadamard", s});
    for (int l = 1; l <= config.iterations; ++l) {
        const std::string tag = "iter " + std::to_string(l) + " ";
        s.reflect_about(config.target);
        out.push_back({tag + "flip target", s});
        s.apply_hadamard_all();
        out.push_back({tag + "hadamard", s});
        // -(I - 2|g><g|) = 2|g><g| - I: negate everything except |g>.
        for (auto &a : s.amplitudes())
            a = -a;
        s.reflect_about(config.start);
        out.push_back({tag + "flip start", s});
        s.apply_hadamard_all();
        out.push_back({tag + "hadamard", s});
    }
    return out;
}

} // namespace collective
