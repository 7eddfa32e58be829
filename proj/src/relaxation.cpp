#include "collective/relaxation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "collective/errors.hpp"
#include "parallel.hpp"

namespace collective {

double JmDistribution::at(HalfInt j, HalfInt m) const {
    for (const auto &e : entries_)
        if (e.j == j && e.m == m)
            return e.p;
    return 0.0;
}

double JmDistribution::total() const {
    double acc = 0.0;
    for (const auto &e : entries_)
        acc += e.p;
    return acc;
}

JmDistribution p_jm(const StateVector &s, const SymmetrizedBasis &basis) {
    if (s.num_qubits() != basis.num_qubits())
        throw DomainError("state has " + std::to_string(s.num_qubits()) +
                          " qubits, basis has " + std::to_string(basis.num_qubits()));

    std::vector<JmEntry> entries;
    for (const auto &sec : basis.sectors()) {
        const auto dim = static_cast<Eigen::Index>(sec.states.size());
        Eigen::VectorXd re(dim), im(dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
            const complex_t a = s[sec.states[static_cast<std::size_t>(r)]];
            re[r] = a.real();
            im[r] = a.imag();
        }
        for (const auto &blk : sec.blocks) {
            // Basis vectors are real, so real and imaginary parts project
            // independently.
            const Eigen::VectorXd cr = blk.vectors.transpose() * re;
            const Eigen::VectorXd ci = blk.vectors.transpose() * im;
            entries.push_back({blk.j, sec.m, cr.squaredNorm() + ci.squaredNorm()});
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const JmEntry &a, const JmEntry &b) {
        return a.j != b.j ? a.j > b.j : a.m < b.m;
    });
    return JmDistribution(s.num_qubits(), std::move(entries));
}

MMarginal m_marginal(const StateVector &s) {
    MMarginal out;
    out.num_qubits = s.num_qubits();
    out.probs.assign(static_cast<std::size_t>(s.num_qubits()) + 1, 0.0);
    const auto amps = s.amplitudes();
    for (std::uint64_t x = 0; x < amps.size(); ++x)
        out.probs[static_cast<std::size_t>(std::popcount(x))] += std::norm(amps[x]);
    return out;
}

double t1_rate(const JmDistribution &d) {
    double acc = 0.0;
    for (const auto &e : d.entries())
        acc += e.p * transition_factor(e.j, e.m, Ladder::down);
    return acc;
}

double t2_rate(const MMarginal &marginal) {
    const auto &p = marginal.probs;
    double acc = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            acc += p[a] * p[b] * std::abs(static_cast<double>(a) - static_cast<double>(b));
    return acc;
}

double t2_rate(const StateVector &s) { return t2_rate(m_marginal(s)); }

double dephasing_fidelity(const MMarginal &marginal, double gamma0_t) {
    if (!(gamma0_t >= 0.0))
        throw DomainError("dephasing time must be non-negative");
    if (gamma0_t == 0.0)
        return 1.0;
    const auto &p = marginal.probs;
    double acc = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            acc += p[a] * p[b] *
                   std::exp(-gamma0_t * std::abs(static_cast<double>(a) - static_cast<double>(b)));
    return std::min(1.0, std::sqrt(acc));
}

double dephasing_fidelity(const StateVector &s, double gamma0_t) {
    return dephasing_fidelity(m_marginal(s), gamma0_t);
}

StepTrace trace_metrics(std::span<const LabeledState> states, const SymmetrizedBasis &basis,
                        const TraceOptions &options) {
    if (states.empty())
        throw DomainError("trace_metrics needs at least one state");
    for (const auto &st : states)
        if (st.state.num_qubits() != basis.num_qubits())
            throw DomainError("all states must have " + std::to_string(basis.num_qubits()) +
                              " qubits");
    for (double t : options.fidelity_times)
        if (!(t >= 0.0))
            throw DomainError("dephasing time must be non-negative");

    StepTrace trace;
    trace.num_qubits = basis.num_qubits();
    trace.steps.resize(states.size());
    detail::parallel_for(static_cast<std::int64_t>(states.size()), [&](std::int64_t i) {
        const auto idx = static_cast<std::size_t>(i);
        auto &step = trace.steps[idx];
        step.index = idx;
        step.label = states[idx].label;
        auto dist = p_jm(states[idx].state, basis);
        step.t1 = t1_rate(dist);
        const auto marginal = m_marginal(states[idx].state);
        step.t2 = t2_rate(marginal);
        for (double t : options.fidelity_times)
            step.fidelity.push_back({t, dephasing_fidelity(marginal, t)});
        if (options.keep_pjm)
            step.pjm = std::move(dist);
    });
    return trace;
}

} // namespace collective
