#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spinorbit/thermal.hpp"

namespace spinorbit {

inline constexpr const char* kCurveHeader = "T_K,mean_energy_K,witness_K";

/// printf "%.6g", with negative zero printed as 0.
std::string format_sig6(double value);

/// Header line plus one row per point.
void write_curve_csv(std::ostream& out, const WitnessCurve& curve);

struct CurveRow {
  double temperature = 0.0;
  double mean_energy = 0.0;
  double witness = 0.0;
};

/// Parses the CSV written by write_curve_csv. Throws ParseError (position is
/// the 1-based line number) on a wrong header or malformed row, and
/// ValidationError if temperatures are not strictly increasing or the
/// witness decreases.
std::vector<CurveRow> read_curve_csv(std::istream& in);

/// Sign changes of the witness column, each located by linear interpolation.
std::vector<double> zero_crossings(const std::vector<CurveRow>& rows);

/// gnuplot script drawing every (label, csv path) curve on shared axes.
std::string gnuplot_script(const std::vector<std::pair<std::string, std::string>>& curves,
                           const std::string& title, const std::string& png_name);

}  // namespace spinorbit
