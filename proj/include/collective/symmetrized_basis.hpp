#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "collective/half_int.hpp"

namespace collective {

/// Largest register for which the full symmetrized basis is built.
inline constexpr int kMaxBasisQubits = 14;

/// Degenerate eigenvectors of J^2 sharing one (j, m): the columns of
/// `vectors` are |j,m,alpha>, alpha = 1..d, in the local coordinates of the
/// owning m-sector.
struct JBlock {
    HalfInt j;
    Eigen::MatrixXd vectors;
};

/// All computational states with a fixed m, and the J^2 eigenbasis of that
/// sector split by j (descending).
struct MSector {
    HalfInt m;
    std::vector<std::uint64_t> states; // ascending x, popcount fixed
    std::vector<JBlock> blocks;
};

/// Complete orthonormal basis {|j,m,alpha>} for n qubits, built by
/// diagonalizing J^2 inside each m-sector.
class SymmetrizedBasis {
  public:
    /// Assembles a basis from precomputed sectors. Checks shapes and
    /// orthonormality (1e-10); used by build_symmetrized_basis and by callers
    /// that remix alpha vectors.
    SymmetrizedBasis(int num_qubits, std::vector<MSector> sectors);

    int num_qubits() const { return num_qubits_; }

    /// Sectors ordered by ascending m.
    const std::vector<MSector> &sectors() const { return sectors_; }
    const MSector &sector(HalfInt m) const;

    /// Columns |j,m,alpha> in sector-local coordinates; throws DomainError if
    /// (j, m) is not admissible.
    const Eigen::MatrixXd &vectors(HalfInt j, HalfInt m) const;

    /// Coefficients of |j,m,alpha> over all 2^n computational states
    /// (alpha is 1-based).
    std::vector<double> full_vector(HalfInt j, HalfInt m, int alpha) const;

    /// Admissible j values, descending: n/2, n/2-1, ..., 0 or 1/2.
    std::vector<HalfInt> j_values() const;

    /// Observed number of alpha vectors for j (taken from any m-sector).
    int degeneracy(HalfInt j) const;

  private:
    int num_qubits_;
    std::vector<MSector> sectors_;
};

/// d(j) = n!(2j+1) / ((n/2+j+1)!(n/2-j)!), exact integer arithmetic.
std::uint64_t degeneracy_formula(int num_qubits, HalfInt j);

/// J^2 restricted to the m-sector, rows/columns over MSector::states order.
Eigen::MatrixXd j_squared_matrix(int num_qubits, HalfInt m);

/// Computational states x (ascending) with m_value(x) = m.
std::vector<std::uint64_t> sector_states(int num_qubits, HalfInt m);

SymmetrizedBasis build_symmetrized_basis(int num_qubits);

enum class Ladder { up, down };

/// |<j,m+-1,alpha|J^+-|j,m,alpha>|^2: (j-m)(j+m+1) up, (j+m)(j-m+1) down.
double transition_factor(HalfInt j, HalfInt m, Ladder direction);

} // namespace collective
