#include "collective/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "collective/errors.hpp"

namespace collective {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits)
        throw DomainError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                          "], got " + std::to_string(n));
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::uint64_t{1} << num_qubits, complex_t{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(cvector_t amplitudes) : num_qubits_(0), amps_(std::move(amplitudes)) {
    const auto len = amps_.size();
    if (len < 2 || !std::has_single_bit(len))
        throw FormatError("amplitude count must be a power of two >= 2, got " +
                          std::to_string(len));
    num_qubits_ = std::countr_zero(len);
    check_qubit_count(num_qubits_);
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &a : amps_)
        acc += std::norm(a);
    return std::sqrt(acc);
}

complex_t StateVector::inner(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_)
        throw DomainError("inner product of states with different qubit counts");
    complex_t acc{0.0, 0.0};
    for (std::uint64_t x = 0; x < amps_.size(); ++x)
        acc += std::conj(amps_[x]) * other.amps_[x];
    return acc;
}

void StateVector::apply_hadamard_all() {
    // Unscaled butterflies, then one 2^(-n/2) factor (exact for even n).
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t half = 1; half < dim; half <<= 1) {
        for (std::uint64_t base = 0; base < dim; base += 2 * half) {
            for (std::uint64_t k = base; k < base + half; ++k) {
                const complex_t a = amps_[k];
                const complex_t b = amps_[k + half];
                amps_[k] = a + b;
                amps_[k + half] = a - b;
            }
        }
    }
    double scale = std::ldexp(1.0, -(num_qubits_ / 2));
    if (num_qubits_ % 2)
        scale /= std::sqrt(2.0);
    for (auto &a : amps_)
        a *= scale;
}

void StateVector::apply_single_qubit(int qubit, const Matrix2 &u) {
    if (qubit < 0 || qubit >= num_qubits_)
        throw DomainError("qubit index " + std::to_string(qubit) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
        if (x & bit)
            continue;
        const complex_t a0 = amps_[x];
        const complex_t a1 = amps_[x | bit];
        amps_[x] = u[0] * a0 + u[1] * a1;
        amps_[x | bit] = u[2] * a0 + u[3] * a1;
    }
}

void StateVector::apply_same_single_qubit_all(const Matrix2 &u) {
    for (int q = 0; q < num_qubits_; ++q)
        apply_single_qubit(q, u);
}

void StateVector::apply_x(int qubit) {
    if (qubit < 0 || qubit >= num_qubits_)
        throw DomainError("qubit index " + std::to_string(qubit) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t x = 0; x < amps_.size(); ++x)
        if (!(x & bit))
            std::swap(amps_[x], amps_[x | bit]);
}

void StateVector::reflect_about(std::uint64_t x) {
    if (x >= amps_.size())
        throw DomainError("basis index " + std::to_string(x) + " out of range for " +
                          std::to_string(num_qubits_) + " qubits");
    amps_[x] = -amps_[x];
}

void StateVector::apply_phase_table(std::span<const std::uint8_t> table) {
    if (table.size() != amps_.size())
        throw FormatError("truth table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(amps_.size()));
    for (std::uint64_t x = 0; x < amps_.size(); ++x)
        if (table[x])
            amps_[x] = -amps_[x];
}

int up_count(std::uint64_t x) { return std::popcount(x); }

HalfInt m_value(std::uint64_t x, int num_qubits) {
    check_qubit_count(num_qubits);
    if (x >> num_qubits)
        throw DomainError("basis index " + std::to_string(x) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
    return HalfInt::from_twice(2 * std::popcount(x) - num_qubits);
}

StateVector prepare_basis_state(int num_qubits, std::uint64_t x) {
    StateVector s(num_qubits);
    if (x >= s.size())
        throw DomainError("basis index " + std::to_string(x) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
    s[0] = 0.0;
    s[x] = 1.0;
    return s;
}

StateVector hadamard_all(StateVector s) {
    s.apply_hadamard_all();
    return s;
}

StateVector reflect_about_basis_state(StateVector s, std::uint64_t g) {
    s.reflect_about(g);
    return s;
}

double overlap_probability(const StateVector &a, const StateVector &b) {
    return std::norm(a.inner(b));
}

} // namespace collective
