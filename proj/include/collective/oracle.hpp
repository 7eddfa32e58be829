#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "collective/state_vector.hpp"

namespace collective {

enum class OracleKind { constant, balanced, other };

const char *to_string(OracleKind kind);

/// Boolean function f : {0..2^n-1} -> {0,1} given by its truth table.
/// The kind is derived from the table.
class OracleSpec {
  public:
    /// Throws FormatError if the table does not have 2^n entries in {0,1}.
    OracleSpec(int num_qubits, std::vector<std::uint8_t> truth_table);

    /// Parses 2^n characters '0'/'1' (index order); whitespace is ignored.
    static OracleSpec from_text(int num_qubits, std::string_view text);

    int num_qubits() const { return num_qubits_; }
    const std::vector<std::uint8_t> &truth_table() const { return table_; }
    bool operator()(std::uint64_t x) const { return table_[x] != 0; }
    std::uint64_t ones() const { return ones_; }
    OracleKind kind() const;

  private:
    int num_qubits_;
    std::vector<std::uint8_t> table_;
    std::uint64_t ones_ = 0;
};

/// parity, parity-low4, constant0, constant1. Unknown names throw UsageError.
OracleSpec builtin_oracle(std::string_view name, int num_qubits);

bool is_builtin_oracle(std::string_view name);

OracleSpec load_oracle_file(const std::filesystem::path &path, int num_qubits);

/// amps[x] -> (-1)^{f(x)} amps[x]. Equivalent on the control register to an
/// f-controlled NOT onto a work qubit prepared in (|0> - |1>)/sqrt(2).
StateVector phase_oracle(StateVector s, const OracleSpec &f);

} // namespace collective
