#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "collective/relaxation.hpp"
#include "collective/spin_coherent.hpp"
#include "collective/state_vector.hpp"
#include "collective/symmetrized_basis.hpp"

namespace collective {

/// 17 significant digits ("%.17g"); parses back to the identical double.
std::string format_double(double v);

/// {"n":..,"steps":[{"index":..,"label":..,"t1":..,"t2":..,"pjm":[..]?,"fidelity":[..]?}]}
void write_trace_json(std::ostream &out, const StepTrace &trace);
StepTrace read_trace_json(std::istream &in);

/// index,label,t1,t2 (no P(j,m) or fidelity columns).
void write_trace_csv(std::ostream &out, const StepTrace &trace);

/// One "re im" line per amplitude; n = log2(line count). Norm must be within
/// 1e-6 of one. Throws FormatError.
StateVector parse_state(std::istream &in);
StateVector read_state_file(const std::filesystem::path &path);
void write_state(std::ostream &out, const StateVector &s);

/// j,m,alpha,x,coefficient for every coefficient of every sector vector.
void write_basis_csv(std::ostream &out, const SymmetrizedBasis &basis);

/// theta,phi,q rows in mesh order.
void write_qgrid_csv(std::ostream &out, const QGrid &grid);

/// Binary P5 graymap, rows = theta, columns = phi; Q = 1 black, Q = 0 white.
void write_qgrid_pgm(std::ostream &out, const QGrid &grid);

} // namespace collective
