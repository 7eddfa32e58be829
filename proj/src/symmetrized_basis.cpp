#include "collective/symmetrized_basis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "collective/errors.hpp"
#include "parallel.hpp"

namespace collective {

namespace {

constexpr double kClusterTolerance = 1e-6;
constexpr double kTieTolerance = 1e-12;

void check_basis_qubits(int n) {
    if (n < 1 || n > kMaxBasisQubits)
        throw DomainError("symmetrized basis supports 1 <= n <= " +
                          std::to_string(kMaxBasisQubits) + ", got " + std::to_string(n));
}

// Number of up spins for sector m, validating that m belongs to n qubits.
int up_spins_for(int n, HalfInt m) {
    const int twice_up = m.twice() + n;
    if (twice_up < 0 || twice_up > 2 * n || twice_up % 2 != 0)
        throw DomainError("m = " + m.str() + " is not a valid total projection for " +
                          std::to_string(n) + " qubits");
    return twice_up / 2;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i)
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(acc);
}

double j_times_j_plus_one(HalfInt j) { return j.value() * (j.value() + 1.0); }

// Replaces the columns of `vectors` by a canonical orthonormal basis of the
// same subspace: pivoted Gram-Schmidt over the projections of the
// computational unit vectors, pivot ties broken by smallest state index.
// The result no longer depends on how the eigensolver split the degenerate
// eigenspace.
Eigen::MatrixXd canonicalize_block(const Eigen::MatrixXd &vectors) {
    const Eigen::Index dim = vectors.rows();
    const Eigen::Index d = vectors.cols();

    // Row x of `vectors` is the projection of e_x expressed in block
    // coordinates.
    Eigen::MatrixXd residual = vectors.transpose(); // d x dim
    Eigen::MatrixXd frame(d, d);

    for (Eigen::Index k = 0; k < d; ++k) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index x = 0; x < dim; ++x) {
            const double nrm = residual.col(x).norm();
            if (nrm > best + kTieTolerance) {
                best = nrm;
                pivot = x;
            }
        }
        Eigen::VectorXd q = residual.col(pivot);
        // Second orthogonalization pass against earlier frame vectors.
        for (Eigen::Index p = 0; p < k; ++p)
            q -= frame.col(p).dot(q) * frame.col(p);
        q.normalize();
        frame.col(k) = q;
        const Eigen::RowVectorXd proj = q.transpose() * residual;
        residual -= q * proj;
    }
    return vectors * frame;
}

// Lexicographic "a > b" with a small tolerance per coefficient.
bool lex_greater(const Eigen::VectorXd &a, const Eigen::VectorXd &b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] > b[i] + kTieTolerance)
            return true;
        if (a[i] < b[i] - kTieTolerance)
            return false;
    }
    return false;
}

// Sign convention: first coefficient with magnitude above 1e-12 is positive.
// Columns then sorted by descending lexicographic order.
Eigen::MatrixXd order_block(Eigen::MatrixXd vectors) {
    std::vector<Eigen::VectorXd> cols;
    cols.reserve(vectors.cols());
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::VectorXd v = vectors.col(c);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) > kTieTolerance) {
                if (v[i] < 0)
                    v = -v;
                break;
            }
        }
        cols.push_back(std::move(v));
    }
    std::stable_sort(cols.begin(), cols.end(), lex_greater);
    for (Eigen::Index c = 0; c < vectors.cols(); ++c)
        vectors.col(c) = cols[c];
    return vectors;
}

MSector build_sector(int n, int up) {
    MSector sector;
    sector.m = HalfInt::from_twice(2 * up - n);
    sector.states = sector_states(n, sector.m);

    const Eigen::MatrixXd j2 = j_squared_matrix(n, sector.m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(j2);
    if (solver.info() != Eigen::Success)
        throw std::logic_error("J^2 eigensolver failed in sector m = " + sector.m.str());

    const Eigen::VectorXd &evals = solver.eigenvalues();
    const Eigen::MatrixXd &evecs = solver.eigenvectors();

    // Admissible j for this sector: |m| <= j <= n/2, same parity as n.
    std::vector<HalfInt> js;
    for (int twice_j = n; twice_j >= std::abs(sector.m.twice()); twice_j -= 2)
        js.push_back(HalfInt::from_twice(twice_j));

    std::vector<std::vector<Eigen::Index>> members(js.size());
    for (Eigen::Index e = 0; e < evals.size(); ++e) {
        bool matched = false;
        for (std::size_t t = 0; t < js.size(); ++t) {
            if (std::abs(evals[e] - j_times_j_plus_one(js[t])) < kClusterTolerance) {
                members[t].push_back(e);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::logic_error("J^2 eigenvalue " + std::to_string(evals[e]) +
                                   " matches no admissible j(j+1) in sector m = " +
                                   sector.m.str());
    }

    for (std::size_t t = 0; t < js.size(); ++t) {
        if (members[t].empty())
            continue;
        Eigen::MatrixXd block(evecs.rows(), static_cast<Eigen::Index>(members[t].size()));
        for (std::size_t c = 0; c < members[t].size(); ++c)
            block.col(static_cast<Eigen::Index>(c)) = evecs.col(members[t][c]);
        sector.blocks.push_back({js[t], order_block(canonicalize_block(block))});
    }
    return sector;
}

} // namespace

SymmetrizedBasis::SymmetrizedBasis(int num_qubits, std::vector<MSector> sectors)
    : num_qubits_(num_qubits), sectors_(std::move(sectors)) {
    check_basis_qubits(num_qubits);
    if (sectors_.size() != static_cast<std::size_t>(num_qubits) + 1)
        throw DomainError("expected " + std::to_string(num_qubits + 1) + " m-sectors");
    for (std::size_t k = 0; k < sectors_.size(); ++k) {
        const auto &sec = sectors_[k];
        if (sec.m.twice() != 2 * static_cast<int>(k) - num_qubits)
            throw DomainError("m-sectors must be ordered by ascending m");
        if (sec.states != sector_states(num_qubits, sec.m))
            throw DomainError("sector m = " + sec.m.str() + " has wrong support");
        Eigen::Index cols = 0;
        for (const auto &blk : sec.blocks) {
            if (blk.vectors.rows() != static_cast<Eigen::Index>(sec.states.size()))
                throw DomainError("block (j=" + blk.j.str() + ", m=" + sec.m.str() +
                                  ") has wrong row count");
            if (blk.j < sec.m.abs() || blk.j.twice() > num_qubits)
                throw DomainError("block j = " + blk.j.str() + " inadmissible for m = " +
                                  sec.m.str());
            for (Eigen::Index c = 0; c < blk.vectors.cols(); ++c)
                if (std::abs(blk.vectors.col(c).norm() - 1.0) > 1e-10)
                    throw DomainError("basis vector not normalized in block (j=" +
                                      blk.j.str() + ", m=" + sec.m.str() + ")");
            cols += blk.vectors.cols();
        }
        if (cols != static_cast<Eigen::Index>(sec.states.size()))
            throw DomainError("sector m = " + sec.m.str() + " is not complete");
    }
}

const MSector &SymmetrizedBasis::sector(HalfInt m) const {
    return sectors_[static_cast<std::size_t>(up_spins_for(num_qubits_, m))];
}

const Eigen::MatrixXd &SymmetrizedBasis::vectors(HalfInt j, HalfInt m) const {
    const auto &sec = sector(m);
    for (const auto &blk : sec.blocks)
        if (blk.j == j)
            return blk.vectors;
    throw DomainError("no symmetrized states with j = " + j.str() + ", m = " + m.str());
}

std::vector<double> SymmetrizedBasis::full_vector(HalfInt j, HalfInt m, int alpha) const {
    const auto &vecs = vectors(j, m);
    if (alpha < 1 || alpha > vecs.cols())
        throw DomainError("alpha = " + std::to_string(alpha) + " out of range for (j=" +
                          j.str() + ", m=" + m.str() + ")");
    const auto &states = sector(m).states;
    std::vector<double> out(std::uint64_t{1} << num_qubits_, 0.0);
    for (std::size_t r = 0; r < states.size(); ++r)
        out[states[r]] = vecs(static_cast<Eigen::Index>(r), alpha - 1);
    return out;
}

std::vector<HalfInt> SymmetrizedBasis::j_values() const {
    std::vector<HalfInt> js;
    for (int twice_j = num_qubits_; twice_j >= 0; twice_j -= 2)
        js.push_back(HalfInt::from_twice(twice_j));
    return js;
}

int SymmetrizedBasis::degeneracy(HalfInt j) const {
    // Sector m = -j always contains the j block when j is admissible.
    return static_cast<int>(vectors(j, -j).cols());
}

std::uint64_t degeneracy_formula(int num_qubits, HalfInt j) {
    if (num_qubits < 1 || num_qubits > 60)
        throw DomainError("degeneracy formula supports 1 <= n <= 60");
    const int twice_lower = num_qubits - j.twice(); // 2(n/2 - j)
    if (j.twice() < 0 || twice_lower < 0 || twice_lower % 2 != 0)
        throw DomainError("j = " + j.str() + " inadmissible for n = " +
                          std::to_string(num_qubits));
    // n! / ((n/2+j+1)! (n/2-j)!) = C(n, n/2-j) / (n/2+j+1)
    const int lower = twice_lower / 2;
    const int upper_plus_one = num_qubits - lower + 1;
    const unsigned __int128 numer =
        static_cast<unsigned __int128>(binomial(num_qubits, lower)) *
        static_cast<unsigned>(j.twice() + 1);
    return static_cast<std::uint64_t>(numer / static_cast<unsigned>(upper_plus_one));
}

std::vector<std::uint64_t> sector_states(int num_qubits, HalfInt m) {
    if (num_qubits < 1 || num_qubits > 30)
        throw DomainError("sector enumeration supports 1 <= n <= 30");
    const int up = up_spins_for(num_qubits, m);
    std::vector<std::uint64_t> out;
    out.reserve(binomial(num_qubits, up));
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    for (std::uint64_t x = 0; x < dim; ++x)
        if (std::popcount(x) == up)
            out.push_back(x);
    return out;
}

Eigen::MatrixXd j_squared_matrix(int num_qubits, HalfInt m) {
    check_basis_qubits(num_qubits);
    const int n = num_qubits;
    const int up = up_spins_for(n, m);
    const auto states = sector_states(n, m);
    const auto dim = static_cast<Eigen::Index>(states.size());

    // J^2 = n(4-n)/4 + sum_{i<k} P_ik, where P_ik swaps spins i and k.
    const auto pairs = [](int c) { return c * (c - 1) / 2; };
    const double diag = n * (4.0 - n) / 4.0 + pairs(up) + pairs(n - up);

    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        const std::uint64_t x = states[static_cast<std::size_t>(a)];
        out(a, a) = diag;
        for (int i = 0; i < n; ++i) {
            for (int k = i + 1; k < n; ++k) {
                if (((x >> i) & 1U) == ((x >> k) & 1U))
                    continue;
                const std::uint64_t y = x ^ ((std::uint64_t{1} << i) | (std::uint64_t{1} << k));
                const auto it = std::lower_bound(states.begin(), states.end(), y);
                out(a, static_cast<Eigen::Index>(it - states.begin())) += 1.0;
            }
        }
    }
    return out;
}

SymmetrizedBasis build_symmetrized_basis(int num_qubits) {
    check_basis_qubits(num_qubits);
    std::vector<MSector> sectors(static_cast<std::size_t>(num_qubits) + 1);
    detail::parallel_for(num_qubits + 1, [&](std::int64_t up) {
        sectors[static_cast<std::size_t>(up)] = build_sector(num_qubits, static_cast<int>(up));
    });
    return SymmetrizedBasis(num_qubits, std::move(sectors));
}

double transition_factor(HalfInt j, HalfInt m, Ladder direction) {
    if (j.twice() < 0 || m.abs() > j || (j.twice() - m.twice()) % 2 != 0)
        throw DomainError("transition factor requires |m| <= j with j - m integral (j = " +
                          j.str() + ", m = " + m.str() + ")");
    const double jv = j.value();
    const double mv = m.value();
    if (direction == Ladder::up)
        return (jv - mv) * (jv + mv + 1.0);
    return (jv + mv) * (jv - mv + 1.0);
}

} // namespace collective
