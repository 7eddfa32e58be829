#include "collective/oracle.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <string>

#include "collective/errors.hpp"

namespace collective {

const char *to_string(OracleKind kind) {
    switch (kind) {
    case OracleKind::constant:
        return "constant";
    case OracleKind::balanced:
        return "balanced";
    case OracleKind::other:
        return "other";
    }
    return "other";
}

OracleSpec::OracleSpec(int num_qubits, std::vector<std::uint8_t> truth_table)
    : num_qubits_(num_qubits), table_(std::move(truth_table)) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw DomainError("oracle qubit count out of range: " + std::to_string(num_qubits));
    const std::uint64_t expected = std::uint64_t{1} << num_qubits;
    if (table_.size() != expected)
        throw FormatError("truth table has " + std::to_string(table_.size()) +
                          " entries, expected 2^" + std::to_string(num_qubits) + " = " +
                          std::to_string(expected));
    for (auto v : table_) {
        if (v > 1)
            throw FormatError("truth table entries must be 0 or 1");
        ones_ += v;
    }
}

OracleKind OracleSpec::kind() const {
    if (ones_ == 0 || ones_ == table_.size())
        return OracleKind::constant;
    if (2 * ones_ == table_.size())
        return OracleKind::balanced;
    return OracleKind::other;
}

OracleSpec OracleSpec::from_text(int num_qubits, std::string_view text) {
    std::vector<std::uint8_t> table;
    for (char c : text) {
        if (c == '0' || c == '1')
            table.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (c == ' ' || c == '\n' || c == '\r' || c == '\t')
            continue;
        else
            throw FormatError(std::string("unexpected character '") + c + "' in truth table");
    }
    return OracleSpec(num_qubits, std::move(table));
}

bool is_builtin_oracle(std::string_view name) {
    return name == "parity" || name == "parity-low4" || name == "constant0" ||
           name == "constant1";
}

OracleSpec builtin_oracle(std::string_view name, int num_qubits) {
    if (!is_builtin_oracle(name))
        throw UsageError("unknown oracle '" + std::string(name) +
                         "' (builtins: parity, parity-low4, constant0, constant1)");
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw DomainError("oracle qubit count out of range: " + std::to_string(num_qubits));
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    std::vector<std::uint8_t> table(dim, 0);
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (name == "parity")
            table[x] = std::popcount(x) & 1;
        else if (name == "parity-low4")
            table[x] = std::popcount(x & 0xFU) & 1;
        else if (name == "constant1")
            table[x] = 1;
    }
    return OracleSpec(num_qubits, std::move(table));
}

OracleSpec load_oracle_file(const std::filesystem::path &path, int num_qubits) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open oracle file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return OracleSpec::from_text(num_qubits, buf.str());
}

StateVector phase_oracle(StateVector s, const OracleSpec &f) {
    if (f.num_qubits() != s.num_qubits())
        throw FormatError("oracle is defined on " + std::to_string(f.num_qubits()) +
                          " qubits, state has " + std::to_string(s.num_qubits()));
    s.apply_phase_table(f.truth_table());
    return s;
}

} // namespace collective
