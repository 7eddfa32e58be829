#include "collective/spin_coherent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "collective/errors.hpp"
#include "parallel.hpp"

namespace collective {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTauSwitchTheta = 3.0;

// S_k = sum over x with k up spins of psi_x; coherent states only see these.
std::vector<complex_t> up_count_sums(const StateVector &s) {
    std::vector<complex_t> sums(static_cast<std::size_t>(s.num_qubits()) + 1, 0.0);
    const auto amps = s.amplitudes();
    for (std::uint64_t x = 0; x < amps.size(); ++x)
        sums[static_cast<std::size_t>(std::popcount(x))] += amps[x];
    return sums;
}

// <theta, phi|psi> from the up-count sums.
complex_t coherent_overlap(std::span<const complex_t> sums, double theta, double phi) {
    const int n = static_cast<int>(sums.size()) - 1;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    // conj(c^{n-k} (e^{-i phi} s)^k) = c^{n-k} s^k e^{i k phi}
    complex_t acc = 0.0;
    const complex_t step = std::polar(s, phi);
    complex_t up_part = 1.0;
    for (int k = 0; k <= n; ++k) {
        acc += std::pow(c, n - k) * up_part * sums[static_cast<std::size_t>(k)];
        up_part *= step;
    }
    return acc;
}

double binomial_real(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

} // namespace

CoherentParams::CoherentParams(double theta, double phi) : theta_(theta) {
    if (!(theta >= 0.0 && theta <= kPi) || !std::isfinite(phi))
        throw DomainError("coherent state needs theta in [0, pi] and finite phi");
    double folded = std::remainder(phi, 2.0 * kPi); // [-pi, pi]
    if (folded <= -kPi)
        folded += 2.0 * kPi;
    phi_ = folded;
}

complex_t CoherentParams::tau() const {
    if (theta_ >= kPi)
        throw DomainError("tau is undefined at theta = pi");
    return std::polar(std::tan(theta_ / 2.0), -phi_);
}

Matrix2 rotation_matrix(const CoherentParams &p) {
    const double c = std::cos(p.theta() / 2.0);
    const double s = std::sin(p.theta() / 2.0);
    return {complex_t{c, 0.0}, -std::polar(s, p.phi()), std::polar(s, -p.phi()),
            complex_t{c, 0.0}};
}

StateVector coherent_state(int num_qubits, const CoherentParams &p) {
    StateVector out(num_qubits);
    if (p.theta() > kTauSwitchTheta) {
        out.apply_same_single_qubit_all(rotation_matrix(p));
        return out;
    }
    const complex_t tau = p.tau();
    const double scale = std::pow(1.0 + std::norm(tau), -0.5 * num_qubits);
    std::vector<complex_t> by_up(static_cast<std::size_t>(num_qubits) + 1);
    complex_t power = scale;
    for (auto &v : by_up) {
        v = power;
        power *= tau;
    }
    auto amps = out.amplitudes();
    for (std::uint64_t x = 0; x < amps.size(); ++x)
        amps[x] = by_up[static_cast<std::size_t>(std::popcount(x))];
    return out;
}

StateVector dicke_state(int num_qubits, HalfInt m) {
    StateVector out(num_qubits);
    const int twice_up = m.twice() + num_qubits;
    if (twice_up < 0 || twice_up > 2 * num_qubits || twice_up % 2 != 0)
        throw DomainError("m = " + m.str() + " invalid for " + std::to_string(num_qubits) +
                          " qubits");
    const int up = twice_up / 2;
    const double amp = 1.0 / std::sqrt(binomial_real(num_qubits, up));
    auto amps = out.amplitudes();
    for (std::uint64_t x = 0; x < amps.size(); ++x)
        amps[x] = std::popcount(x) == up ? amp : 0.0;
    return out;
}

StateVector rotate_manifold_state(const SymmetrizedBasis &basis, HalfInt j, int alpha,
                                  const CoherentParams &p) {
    const auto coeffs = basis.full_vector(j, -j, alpha);
    cvector_t amps(coeffs.begin(), coeffs.end());
    StateVector out(std::move(amps));
    out.apply_same_single_qubit_all(rotation_matrix(p));
    return out;
}

double great_circle_angle(const CoherentParams &a, const CoherentParams &b) {
    const double cosine = std::cos(a.theta()) * std::cos(b.theta()) +
                          std::sin(a.theta()) * std::sin(b.theta()) * std::cos(a.phi() - b.phi());
    return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double overlap_sq(int num_qubits, const CoherentParams &a, const CoherentParams &b) {
    if (num_qubits < 1)
        throw DomainError("qubit count must be positive");
    // Per spin |<a|b>|^2 = (1 + n_a . n_b) / 2.
    const double cosine = std::cos(a.theta()) * std::cos(b.theta()) +
                          std::sin(a.theta()) * std::sin(b.theta()) * std::cos(a.phi() - b.phi());
    const double per_spin = std::clamp(0.5 * (1.0 + cosine), 0.0, 1.0);
    return std::pow(per_spin, num_qubits);
}

GaussLegendre gauss_legendre(int count) {
    if (count < 1)
        throw DomainError("Gauss-Legendre rule needs at least one node");
    GaussLegendre rule;
    rule.nodes.resize(static_cast<std::size_t>(count));
    rule.weights.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < (count + 1) / 2; ++i) {
        // Newton iteration on P_count from the Tricomi initial guess.
        double z = std::cos(kPi * (i + 0.75) / (count + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p_cur = 1.0;
            double p_prev = 0.0;
            for (int k = 1; k <= count; ++k) {
                const double p_older = p_prev;
                p_prev = p_cur;
                p_cur = ((2.0 * k - 1.0) * z * p_prev - (k - 1.0) * p_older) / k;
            }
            dp = count * (z * p_cur - p_prev) / (z * z - 1.0);
            const double dz = p_cur / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(count - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(count - 1 - i)] = w;
    }
    return rule;
}

CompletenessResult completeness_residual(int num_qubits, const QuadratureSpec &quad) {
    if (num_qubits < 1 || num_qubits > 1000)
        throw DomainError("qubit count out of range for completeness check");
    if (quad.theta_nodes < 1 || quad.phi_nodes < 1)
        throw DomainError("degenerate quadrature grid");

    const int n = num_qubits;
    const auto dim = static_cast<Eigen::Index>(n + 1);
    const auto rule = gauss_legendre(quad.theta_nodes);
    std::vector<double> sqrt_binom(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        sqrt_binom[static_cast<std::size_t>(k)] = std::sqrt(binomial_real(n, k));

    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXcd coeffs(dim);
    const double phi_weight = 2.0 * kPi / quad.phi_nodes;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = std::acos(rule.nodes[i]);
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        for (int l = 0; l < quad.phi_nodes; ++l) {
            const double phi = phi_weight * l;
            // Dicke-basis coefficients of |theta, phi>, index k = m + n/2.
            for (int k = 0; k <= n; ++k)
                coeffs[k] = sqrt_binom[static_cast<std::size_t>(k)] * std::pow(c, n - k) *
                            std::pow(s, k) * std::polar(1.0, -k * phi);
            sum.noalias() += (rule.weights[i] * phi_weight) * (coeffs * coeffs.adjoint());
        }
    }
    sum *= (n + 1) / (4.0 * kPi);
    const Eigen::MatrixXcd diff = sum - Eigen::MatrixXcd::Identity(dim, dim);
    return {diff.cwiseAbs().maxCoeff(), sum.trace().real()};
}

double q_value(const StateVector &s, const CoherentParams &p) {
    const auto sums = up_count_sums(s);
    return std::norm(coherent_overlap(sums, p.theta(), p.phi()));
}

QGrid q_function(const StateVector &s, const MeshSpec &mesh) {
    if (mesh.theta_nodes < 2 || mesh.phi_nodes < 2)
        throw DomainError("Q mesh needs at least 2 nodes per axis");
    QGrid grid;
    grid.theta_samples.resize(static_cast<std::size_t>(mesh.theta_nodes));
    grid.phi_samples.resize(static_cast<std::size_t>(mesh.phi_nodes));
    for (int i = 0; i < mesh.theta_nodes; ++i)
        grid.theta_samples[static_cast<std::size_t>(i)] = kPi * i / (mesh.theta_nodes - 1);
    for (int k = 0; k < mesh.phi_nodes; ++k)
        grid.phi_samples[static_cast<std::size_t>(k)] =
            -kPi + 2.0 * kPi * k / (mesh.phi_nodes - 1);
    grid.values.resize(grid.theta_samples.size() * grid.phi_samples.size());

    const auto sums = up_count_sums(s);
    const std::size_t cols = grid.phi_samples.size();
    detail::parallel_for(mesh.theta_nodes, [&](std::int64_t i) {
        const auto row = static_cast<std::size_t>(i);
        for (std::size_t k = 0; k < cols; ++k) {
            const double q =
                std::norm(coherent_overlap(sums, grid.theta_samples[row], grid.phi_samples[k]));
            grid.values[row * cols + k] = std::min(q, 1.0);
        }
    });
    return grid;
}

std::vector<double> q_ring(const StateVector &s, double theta, int count) {
    if (count < 3)
        throw DomainError("ring needs at least 3 samples");
    const auto sums = up_count_sums(s);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out[static_cast<std::size_t>(k)] =
            std::norm(coherent_overlap(sums, theta, -kPi + 2.0 * kPi * k / count));
    return out;
}

int count_periodic_maxima(std::span<const double> ring, double tolerance) {
    const std::size_t len = ring.size();
    if (len < 3)
        return 0;
    // Start at a run boundary so runs do not wrap.
    std::size_t start = len;
    for (std::size_t i = 0; i < len; ++i) {
        if (std::abs(ring[i] - ring[(i + len - 1) % len]) > tolerance) {
            start = i;
            break;
        }
    }
    if (start == len)
        return 0;

    std::vector<double> runs;
    for (std::size_t step = 0; step < len; ++step) {
        const std::size_t i = (start + step) % len;
        if (step == 0 || std::abs(ring[i] - ring[(i + len - 1) % len]) > tolerance)
            runs.push_back(ring[i]);
    }
    if (runs.size() < 2)
        return 0;
    int count = 0;
    const std::size_t r = runs.size();
    for (std::size_t i = 0; i < r; ++i)
        if (runs[i] > runs[(i + r - 1) % r] && runs[i] > runs[(i + 1) % r])
            ++count;
    return count;
}

} // namespace collective
