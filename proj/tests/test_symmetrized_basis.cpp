#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "collective/errors.hpp"
#include "collective/symmetrized_basis.hpp"
#include "oracles.hpp"

using namespace collective;

namespace {

HalfInt h2(int twice) { return HalfInt::from_twice(twice); }

Eigen::MatrixXd projector(const Eigen::MatrixXd &cols) { return cols * cols.transpose(); }

} // namespace

TEST_CASE("j_squared_matrix examples") {
    const auto two = j_squared_matrix(2, h2(0));
    REQUIRE(two.rows() == 2);
    CHECK(two(0, 0) == 1.0);
    CHECK(two(0, 1) == 1.0);
    CHECK(two(1, 0) == 1.0);
    CHECK(two(1, 1) == 1.0);

    for (int n = 1; n <= 8; ++n) {
        const auto top = j_squared_matrix(n, h2(n));
        REQUIRE(top.rows() == 1);
        CHECK(top(0, 0) == doctest::Approx(0.5 * n * (0.5 * n + 1.0)));
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j_squared_matrix(3, h2(1)));
    const auto ev = es.eigenvalues();
    CHECK(ev[0] == doctest::Approx(0.75));
    CHECK(ev[1] == doctest::Approx(0.75));
    CHECK(ev[2] == doctest::Approx(3.75));

    CHECK_THROWS_AS(j_squared_matrix(3, h2(0)), DomainError);
    CHECK_THROWS_AS(j_squared_matrix(3, h2(5)), DomainError);
}

TEST_CASE("j_squared_matrix matches ladder-operator J^2 on every sector") {
    for (int n = 1; n <= 6; ++n) {
        const auto dense = oracle::j_squared_dense(n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(dense);
        for (int twice_m = -n; twice_m <= n; twice_m += 2) {
            const auto states = sector_states(n, h2(twice_m));
            const auto mat = j_squared_matrix(n, h2(twice_m));
            CHECK(mat.isApprox(mat.transpose()));
            for (std::size_t a = 0; a < states.size(); ++a)
                for (std::size_t b = 0; b < states.size(); ++b)
                    CHECK(mat(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) ==
                          doctest::Approx(dense(static_cast<Eigen::Index>(states[a]),
                                                static_cast<Eigen::Index>(states[b]))));
            // Trace = sum over admissible j of j(j+1) * d(j).
            double expected = 0.0;
            for (int twice_j = std::abs(twice_m); twice_j <= n; twice_j += 2)
                expected += 0.25 * twice_j * (twice_j + 2) *
                            static_cast<double>(degeneracy_formula(n, h2(twice_j)));
            CHECK(mat.trace() == doctest::Approx(expected));
        }
    }
}

TEST_CASE("degeneracy formula") {
    CHECK(degeneracy_formula(8, h2(8)) == 1);
    CHECK(degeneracy_formula(8, h2(6)) == 7);
    CHECK(degeneracy_formula(8, h2(4)) == 20);
    CHECK(degeneracy_formula(8, h2(2)) == 28);
    CHECK(degeneracy_formula(8, h2(0)) == 14);
    for (int n = 1; n <= 20; ++n) {
        std::uint64_t total = 0;
        for (int twice_j = n; twice_j >= 0; twice_j -= 2)
            total += degeneracy_formula(n, h2(twice_j)) * static_cast<std::uint64_t>(twice_j + 1);
        CHECK(total == (std::uint64_t{1} << n));
    }
    CHECK_THROWS_AS(degeneracy_formula(8, h2(1)), DomainError);
    CHECK_THROWS_AS(degeneracy_formula(8, h2(10)), DomainError);
}

TEST_CASE("n = 2 gives triplet plus singlet") {
    const auto basis = build_symmetrized_basis(2);
    CHECK(basis.degeneracy(h2(2)) == 1);
    CHECK(basis.degeneracy(h2(0)) == 1);

    // Oracle: direct 4x4 diagonalization of the ladder-built J^2.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::j_squared_dense(2));
    CHECK(es.eigenvalues()[0] == doctest::Approx(0.0).epsilon(1e-12));
    const Eigen::VectorXd singlet_ref = es.eigenvectors().col(0);

    const auto singlet = basis.full_vector(h2(0), h2(0), 1);
    double dot = 0.0;
    for (int x = 0; x < 4; ++x)
        dot += singlet[static_cast<std::size_t>(x)] * singlet_ref[x];
    CHECK(std::abs(dot) == doctest::Approx(1.0));
    CHECK(singlet[1] == doctest::Approx(-singlet[2]));
    CHECK(singlet[0] == 0.0);
    CHECK(singlet[3] == 0.0);
}

TEST_CASE("n = 3 reproduces the tabulated Clebsch-Gordan subspaces") {
    const auto basis = build_symmetrized_basis(3);
    CHECK(basis.degeneracy(h2(3)) == 1);
    CHECK(basis.degeneracy(h2(1)) == 2);

    // Tabulated columns over (|+-->, |-+->, |--+>) = x = (4, 2, 1); the
    // sector stores ascending x = (1, 2, 4).
    const double r3 = 1.0 / std::sqrt(3.0);
    const double r6 = 1.0 / std::sqrt(6.0);
    const double r2 = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXd sub(3, 2);
    sub << 2 * r6, 0.0, // x = 1
        -r6, -r2,       // x = 2
        -r6, r2;        // x = 4
    Eigen::MatrixXd sym(3, 1);
    sym << r3, r3, r3;

    const auto &v_sub = basis.vectors(h2(1), h2(-1));
    const auto &v_sym = basis.vectors(h2(3), h2(-1));
    CHECK((projector(v_sub) - projector(sub)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((projector(v_sym) - projector(sym)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("basis is orthonormal, J^2-diagonal and ladder-consistent") {
    for (int n = 1; n <= 8; ++n) {
        const auto basis = build_symmetrized_basis(n);
        const std::uint64_t dim = std::uint64_t{1} << n;

        for (const auto &sec : basis.sectors()) {
            Eigen::Index total = 0;
            for (const auto &blk : sec.blocks) {
                CHECK(static_cast<std::uint64_t>(blk.vectors.cols()) ==
                      degeneracy_formula(n, blk.j));
                total += blk.vectors.cols();
            }
            CHECK(total == static_cast<Eigen::Index>(sec.states.size()));
        }

        for (const auto j : basis.j_values()) {
            for (int twice_m = -j.twice(); twice_m <= j.twice(); twice_m += 2) {
                const HalfInt m = h2(twice_m);
                const int d = basis.degeneracy(j);
                for (int alpha = 1; alpha <= d; ++alpha) {
                    const auto v = basis.full_vector(j, m, alpha);
                    // J^2 v = j(j+1) v
                    const auto jv = oracle::apply_j_squared(v, n);
                    double err = 0.0;
                    for (std::uint64_t x = 0; x < dim; ++x)
                        err = std::max(err, std::abs(jv[x] - j.value() * (j.value() + 1) * v[x]));
                    CHECK(err < 1e-10);

                    // J^- v has norm^2 (j+m)(j-m+1) and lies in span (j, m-1).
                    const auto lowered = oracle::lower(v, n);
                    double norm2 = 0.0;
                    for (double c : lowered)
                        norm2 += c * c;
                    CHECK(norm2 == doctest::Approx(transition_factor(j, m, Ladder::down)));
                    if (twice_m > -j.twice()) {
                        const HalfInt below = h2(twice_m - 2);
                        const auto &states = basis.sector(below).states;
                        Eigen::VectorXd local(static_cast<Eigen::Index>(states.size()));
                        for (std::size_t r = 0; r < states.size(); ++r)
                            local[static_cast<Eigen::Index>(r)] = lowered[states[r]];
                        const auto &target = basis.vectors(j, below);
                        const Eigen::VectorXd resid = local - target * (target.transpose() * local);
                        CHECK(resid.norm() < 1e-9);
                    }
                }
            }
        }
    }
}

TEST_CASE("basis construction is deterministic") {
    const auto a = build_symmetrized_basis(6);
    const auto b = build_symmetrized_basis(6);
    for (std::size_t s = 0; s < a.sectors().size(); ++s)
        for (std::size_t k = 0; k < a.sectors()[s].blocks.size(); ++k)
            CHECK(a.sectors()[s].blocks[k].vectors == b.sectors()[s].blocks[k].vectors);
}

TEST_CASE("symmetric block is the positive Dicke vector") {
    const auto basis = build_symmetrized_basis(5);
    for (int twice_m = -5; twice_m <= 5; twice_m += 2) {
        const auto &v = basis.vectors(h2(5), h2(twice_m));
        const double expected = 1.0 / std::sqrt(static_cast<double>(v.rows()));
        for (Eigen::Index r = 0; r < v.rows(); ++r)
            CHECK(v(r, 0) == doctest::Approx(expected));
    }
}

TEST_CASE("transition_factor") {
    CHECK(transition_factor(h2(8), h2(0), Ladder::down) == 20.0);
    CHECK(transition_factor(h2(8), h2(8), Ladder::up) == 0.0);
    for (int twice_j = 0; twice_j <= 12; ++twice_j)
        CHECK(transition_factor(h2(twice_j), h2(-twice_j), Ladder::down) == 0.0);
    CHECK(transition_factor(h2(3), h2(1), Ladder::up) == 3.0); // (j-m)(j+m+1) = 1*3
    CHECK_THROWS_AS(transition_factor(h2(2), h2(4), Ladder::down), DomainError);
    CHECK_THROWS_AS(transition_factor(h2(2), h2(1), Ladder::down), DomainError);
}

TEST_CASE("basis accessors reject invalid labels") {
    const auto basis = build_symmetrized_basis(4);
    CHECK_THROWS_AS(basis.vectors(h2(2), h2(4)), DomainError);
    CHECK_THROWS_AS(basis.full_vector(h2(0), h2(0), 3), DomainError);
    CHECK_THROWS_AS(build_symmetrized_basis(0), DomainError);
    CHECK_THROWS_AS(build_symmetrized_basis(kMaxBasisQubits + 1), DomainError);
    CHECK_THROWS_AS(SymmetrizedBasis(4, {}), DomainError);
}
