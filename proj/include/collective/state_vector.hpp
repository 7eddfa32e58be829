#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "collective/half_int.hpp"

namespace collective {

using complex_t = std::complex<double>;
using cvector_t = std::vector<complex_t>;

/// Row-major 2x2 single-qubit unitary acting on (|0>, |1>).
using Matrix2 = std::array<complex_t, 4>;

/// Largest register the dense simulator accepts (2^26 amplitudes, 1 GiB).
inline constexpr int kMaxQubits = 26;

/// Dense state of n spin-1/2 qubits over the computational basis.
///
/// Index x has binary digits x_{n-1}...x_0 and qubit i is digit x_i. A 0 bit
/// is spin down (m_i = -1/2) and a 1 bit is spin up, so |0...0> is the
/// collective ground state |j=n/2, m=-n/2>.
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(int num_qubits);

    /// Takes amplitudes as given; size must be a power of two >= 2. No
    /// normalization is applied.
    explicit StateVector(cvector_t amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t size() const { return amps_.size(); }

    std::span<const complex_t> amplitudes() const { return amps_; }
    std::span<complex_t> amplitudes() { return amps_; }
    complex_t operator[](std::uint64_t x) const { return amps_[x]; }
    complex_t &operator[](std::uint64_t x) { return amps_[x]; }

    double norm() const;
    double probability(std::uint64_t x) const { return std::norm(amps_[x]); }

    /// <this|other>
    complex_t inner(const StateVector &other) const;

    void apply_hadamard_all();
    void apply_single_qubit(int qubit, const Matrix2 &u);
    void apply_same_single_qubit_all(const Matrix2 &u);
    void apply_x(int qubit);
    /// Negates the amplitude of |x>, i.e. applies (I - 2|x><x|).
    void reflect_about(std::uint64_t x);
    /// amps[x] -> (-1)^{f(x)} amps[x]; table must have 2^n entries.
    void apply_phase_table(std::span<const std::uint8_t> table);

  private:
    int num_qubits_;
    cvector_t amps_;
};

/// One emitted step of an algorithm run.
struct LabeledState {
    std::string label;
    StateVector state;
};

/// m = (number of up spins) - n/2 for computational index x.
HalfInt m_value(std::uint64_t x, int num_qubits);

/// Number of up spins, i.e. popcount(x).
int up_count(std::uint64_t x);

StateVector prepare_basis_state(int num_qubits, std::uint64_t x);
StateVector hadamard_all(StateVector s);
StateVector reflect_about_basis_state(StateVector s, std::uint64_t g);

/// |<a|b>|^2 style helpers used throughout the tests and drivers.
double overlap_probability(const StateVector &a, const StateVector &b);

} // namespace collective
