#include "collective/trace_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "collective/errors.hpp"

namespace collective {

namespace {

// Half-integers in trace files are plain numbers; doubling recovers them
// exactly.
HalfInt half_int_from_json(const nlohmann::json &v) {
    const double twice = 2.0 * v.get<double>();
    if (twice != std::round(twice))
        throw FormatError("expected a half-integer, got " + v.dump());
    return HalfInt::from_twice(static_cast<int>(twice));
}

std::string json_string(const std::string &s) { return nlohmann::json(s).dump(); }

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trace_json(std::ostream &out, const StepTrace &trace) {
    out << "{\"n\":" << trace.num_qubits << ",\"steps\":[";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto &st = trace.steps[i];
        out << (i ? ",\n" : "\n") << "{\"index\":" << st.index
            << ",\"label\":" << json_string(st.label) << ",\"t1\":" << format_double(st.t1)
            << ",\"t2\":" << format_double(st.t2);
        if (st.pjm) {
            out << ",\"pjm\":[";
            const auto &entries = st.pjm->entries();
            for (std::size_t e = 0; e < entries.size(); ++e)
                out << (e ? "," : "") << "{\"j\":" << format_double(entries[e].j.value())
                    << ",\"m\":" << format_double(entries[e].m.value())
                    << ",\"p\":" << format_double(entries[e].p) << "}";
            out << "]";
        }
        if (!st.fidelity.empty()) {
            out << ",\"fidelity\":[";
            for (std::size_t f = 0; f < st.fidelity.size(); ++f)
                out << (f ? "," : "") << "{\"gamma0_t\":" << format_double(st.fidelity[f].gamma0_t)
                    << ",\"F\":" << format_double(st.fidelity[f].fidelity) << "}";
            out << "]";
        }
        out << "}";
    }
    out << "\n]}\n";
}

StepTrace read_trace_json(std::istream &in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("malformed trace JSON: ") + e.what());
    }
    try {
        StepTrace trace;
        trace.num_qubits = doc.at("n").get<int>();
        for (const auto &js : doc.at("steps")) {
            TraceStep st;
            st.index = js.at("index").get<std::size_t>();
            st.label = js.at("label").get<std::string>();
            st.t1 = js.at("t1").get<double>();
            st.t2 = js.at("t2").get<double>();
            if (js.contains("pjm")) {
                std::vector<JmEntry> entries;
                for (const auto &e : js.at("pjm"))
                    entries.push_back({half_int_from_json(e.at("j")), half_int_from_json(e.at("m")),
                                       e.at("p").get<double>()});
                st.pjm = JmDistribution(trace.num_qubits, std::move(entries));
            }
            if (js.contains("fidelity"))
                for (const auto &f : js.at("fidelity"))
                    st.fidelity.push_back({f.at("gamma0_t").get<double>(), f.at("F").get<double>()});
            if (st.index != trace.steps.size())
                throw FormatError("trace step indices must be contiguous from 0");
            trace.steps.push_back(std::move(st));
        }
        return trace;
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("invalid trace document: ") + e.what());
    }
}

void write_trace_csv(std::ostream &out, const StepTrace &trace) {
    out << "index,label,t1,t2\n";
    for (const auto &st : trace.steps) {
        std::string label = st.label;
        for (auto &c : label)
            if (c == ',' || c == '\n')
                c = ' ';
        out << st.index << ',' << label << ',' << format_double(st.t1) << ','
            << format_double(st.t2) << '\n';
    }
}

StateVector parse_state(std::istream &in) {
    cvector_t amps;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        double re = 0.0;
        double im = 0.0;
        std::string extra;
        if (!(fields >> re >> im) || (fields >> extra))
            throw FormatError("state line " + std::to_string(line_no) +
                              ": expected two numbers \"re im\"");
        amps.emplace_back(re, im);
    }
    if (amps.size() < 2 || !std::has_single_bit(amps.size()))
        throw FormatError("state file has " + std::to_string(amps.size()) +
                          " amplitudes; expected a power of two >= 2");
    StateVector s(std::move(amps));
    const double norm = s.norm();
    if (!(std::abs(norm - 1.0) <= 1e-6))
        throw FormatError("state norm " + format_double(norm) + " deviates from 1 by more than 1e-6");
    return s;
}

StateVector read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open state file " + path.string());
    return parse_state(in);
}

void write_state(std::ostream &out, const StateVector &s) {
    for (const auto &a : s.amplitudes())
        out << format_double(a.real()) << ' ' << format_double(a.imag()) << '\n';
}

void write_basis_csv(std::ostream &out, const SymmetrizedBasis &basis) {
    out << "j,m,alpha,x,coefficient\n";
    for (const auto &j : basis.j_values()) {
        for (const auto &sec : basis.sectors()) {
            for (const auto &blk : sec.blocks) {
                if (blk.j != j)
                    continue;
                for (Eigen::Index a = 0; a < blk.vectors.cols(); ++a)
                    for (std::size_t r = 0; r < sec.states.size(); ++r)
                        out << format_double(j.value()) << ',' << format_double(sec.m.value())
                            << ',' << (a + 1) << ',' << sec.states[r] << ','
                            << format_double(blk.vectors(static_cast<Eigen::Index>(r), a)) << '\n';
            }
        }
    }
}

void write_qgrid_csv(std::ostream &out, const QGrid &grid) {
    out << "theta,phi,q\n";
    for (std::size_t i = 0; i < grid.theta_samples.size(); ++i)
        for (std::size_t k = 0; k < grid.phi_samples.size(); ++k)
            out << format_double(grid.theta_samples[i]) << ',' << format_double(grid.phi_samples[k])
                << ',' << format_double(grid.at(i, k)) << '\n';
}

void write_qgrid_pgm(std::ostream &out, const QGrid &grid) {
    out << "P5\n" << grid.phi_samples.size() << ' ' << grid.theta_samples.size() << "\n255\n";
    for (double q : grid.values) {
        const double clamped = std::clamp(q, 0.0, 1.0);
        out.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * (1.0 - clamped)))));
    }
}

} // namespace collective
