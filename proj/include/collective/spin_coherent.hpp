#pragma once

#include <complex>
#include <span>
#include <vector>

#include "collective/half_int.hpp"
#include "collective/state_vector.hpp"
#include "collective/symmetrized_basis.hpp"

namespace collective {

/// Point (theta, phi) on the Bloch sphere; theta in [0, pi], phi folded into
/// (-pi, pi].
class CoherentParams {
  public:
    CoherentParams(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    /// e^{-i phi} tan(theta/2); throws DomainError at theta = pi.
    complex_t tau() const;

  private:
    double theta_;
    double phi_;
};

/// Single-spin rotation taking |0> (spin down) to
/// cos(theta/2)|0> + e^{-i phi} sin(theta/2)|1>.
Matrix2 rotation_matrix(const CoherentParams &p);

/// |theta, phi> on n qubits: sum_m tau^{m+n/2}/(1+|tau|^2)^{n/2} sqrt(C(n, m+n/2)) |n/2, m>.
/// For theta > 3 the equivalent product of single-spin rotations is used.
StateVector coherent_state(int num_qubits, const CoherentParams &p);

/// Symmetric Dicke state |j = n/2, m>.
StateVector dicke_state(int num_qubits, HalfInt m);

/// Collective rotation of the subradiant state |j, -j, alpha>.
StateVector rotate_manifold_state(const SymmetrizedBasis &basis, HalfInt j, int alpha,
                                  const CoherentParams &p);

/// Angle between the two Bloch vectors.
double great_circle_angle(const CoherentParams &a, const CoherentParams &b);

/// |<a|b>|^2 = cos^{2n}(Phi / 2).
double overlap_sq(int num_qubits, const CoherentParams &a, const CoherentParams &b);

struct QuadratureSpec {
    int theta_nodes = 0; // Gauss-Legendre in cos(theta)
    int phi_nodes = 0;   // uniform in phi
};

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1].
GaussLegendre gauss_legendre(int count);

struct CompletenessResult {
    double residual; // max |(n+1)/(4 pi) sum w |tp><tp| - P_{j=n/2}|
    double trace;    // trace of (n+1)/(4 pi) sum w |tp><tp|
};

/// Discretized resolution of identity over the symmetric subspace, evaluated
/// in the Dicke basis with a product quadrature.
CompletenessResult completeness_residual(int num_qubits, const QuadratureSpec &quad);

/// Uniform inclusive mesh, theta in [0, pi] and phi in [-pi, pi].
struct MeshSpec {
    int theta_nodes = 181;
    int phi_nodes = 361;
};

/// Sampled Q(theta, phi) = |<theta, phi|psi>|^2, row-major over (theta, phi).
struct QGrid {
    std::vector<double> theta_samples;
    std::vector<double> phi_samples;
    std::vector<double> values;

    double at(std::size_t theta_index, std::size_t phi_index) const {
        return values[theta_index * phi_samples.size() + phi_index];
    }
};

double q_value(const StateVector &s, const CoherentParams &p);

QGrid q_function(const StateVector &s, const MeshSpec &mesh = {});

/// Q along the ring theta = const at `count` equally spaced azimuths
/// phi_k = -pi + 2 pi k / count.
std::vector<double> q_ring(const StateVector &s, double theta, int count);

/// Number of local maxima of a periodic sampled signal; a plateau of equal
/// samples counts once.
int count_periodic_maxima(std::span<const double> ring, double tolerance = 1e-12);

} // namespace collective
