#pragma once

#include <cstdint>
#include <vector>

#include "collective/oracle.hpp"
#include "collective/state_vector.hpp"

namespace collective {

/// One bracketed conjunction of the disjunctive normal form: true exactly at
/// `x`. `complemented` holds the bit positions that enter negated (x_i = 0).
struct Minterm {
    std::uint64_t x;
    std::uint64_t complemented;
};

struct DnfDecomposition {
    int num_qubits;
    std::vector<Minterm> minterms; // ascending x
};

DnfDecomposition dnf_decompose(const OracleSpec &f);

/// Phase block for one minterm: X on the complemented bits, an n-controlled
/// phase flip of |1...1>, X on the complemented bits again.
void apply_minterm_block(StateVector &s, const Minterm &term);

/// Deutsch-Jozsa on the control register: |initial>, H, one state per
/// minterm block, H. A balanced n = 8 oracle yields 131 states.
std::vector<LabeledState> dj_run(const OracleSpec &f, std::uint64_t initial);

struct GroverConfig {
    int num_qubits = 0;
    std::uint64_t target = 0;
    std::uint64_t start = 0;
    int iterations = 0;
};

/// round((pi/4) sqrt(2^n)).
int default_grover_iterations(int num_qubits);

/// Grover search with iterant -(I - 2|start><start|) H (I - 2|target><target|) H.
/// Emits |start>, H|start>, then per iteration the states after the target
/// flip, H, the start flip (carrying the global minus sign) and H:
/// 2 + 4 l states.
std::vector<LabeledState> grover_run(const GroverConfig &config);

} // namespace collective
