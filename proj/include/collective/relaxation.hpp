#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collective/half_int.hpp"
#include "collective/state_vector.hpp"
#include "collective/symmetrized_basis.hpp"

namespace collective {

struct JmEntry {
    HalfInt j;
    HalfInt m;
    double p;
};

/// P(j,m) = sum_alpha |<j,m,alpha|psi>|^2 for every admissible (j, m),
/// ordered by descending j then ascending m.
class JmDistribution {
  public:
    JmDistribution(int num_qubits, std::vector<JmEntry> entries)
        : num_qubits_(num_qubits), entries_(std::move(entries)) {}

    int num_qubits() const { return num_qubits_; }
    const std::vector<JmEntry> &entries() const { return entries_; }

    /// Zero for admissible (j, m) pairs that are absent.
    double at(HalfInt j, HalfInt m) const;
    double total() const;

  private:
    int num_qubits_;
    std::vector<JmEntry> entries_;
};

/// Probability mass per total projection m; probs[k] belongs to m = k - n/2.
struct MMarginal {
    int num_qubits = 0;
    std::vector<double> probs;

    HalfInt m_of(std::size_t k) const {
        return HalfInt::from_twice(2 * static_cast<int>(k) - num_qubits);
    }
};

JmDistribution p_jm(const StateVector &s, const SymmetrizedBasis &basis);

MMarginal m_marginal(const StateVector &s);

/// gamma / gamma_0 = sum P(j,m) [j(j+1) - m(m-1)] (cold bath, downward only).
double t1_rate(const JmDistribution &d);

/// Gamma / Gamma_0 = sum_{m,m'} P_m P_m' |m - m'|.
double t2_rate(const MMarginal &marginal);
double t2_rate(const StateVector &s);

/// F = (sum_{m,m'} P_m P_m' exp(-gamma0_t |m - m'|))^{1/2}, gamma0_t = Gamma_0 t.
double dephasing_fidelity(const MMarginal &marginal, double gamma0_t);
double dephasing_fidelity(const StateVector &s, double gamma0_t);

struct FidelitySample {
    double gamma0_t;
    double fidelity;
};

struct TraceStep {
    std::size_t index = 0;
    std::string label;
    double t1 = 0.0;
    double t2 = 0.0;
    std::optional<JmDistribution> pjm;
    std::vector<FidelitySample> fidelity;
};

struct StepTrace {
    int num_qubits = 0;
    std::vector<TraceStep> steps;
};

struct TraceOptions {
    bool keep_pjm = false;
    std::vector<double> fidelity_times; // gamma0_t values
};

/// Per-step T1/T2 rates over an ordered list of states. Steps are evaluated
/// in parallel; output order follows the input.
StepTrace trace_metrics(std::span<const LabeledState> states, const SymmetrizedBasis &basis,
                        const TraceOptions &options = {});

} // namespace collective
