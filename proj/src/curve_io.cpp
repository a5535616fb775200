#include "spinorbit/curve_io.hpp"

#include <cstdio>
#include <sstream>

#include "spinorbit/errors.hpp"

namespace spinorbit {

std::string format_sig6(double value) {
  if (value == 0.0) value = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void write_curve_csv(std::ostream& out, const WitnessCurve& curve) {
  out << kCurveHeader << '\n';
  for (const auto& p : curve.points)
    out << format_sig6(p.temperature) << ',' << format_sig6(p.mean_energy) << ','
        << format_sig6(p.witness) << '\n';
}

std::vector<CurveRow> read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader)
    throw ParseError("expected header '" + std::string(kCurveHeader) + "'", 1);

  std::vector<CurveRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string cell;
    double values[3];
    int n = 0;
    while (std::getline(fields, cell, ',')) {
      if (n == 3) throw ParseError("too many fields", line_no);
      try {
        std::size_t used = 0;
        values[n] = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("malformed number '" + cell + "'", line_no);
      }
      ++n;
    }
    if (n != 3 || line.back() == ',') throw ParseError("expected 3 fields", line_no);
    rows.push_back({values[0], values[1], values[2]});
  }

  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].temperature > rows[i - 1].temperature))
      throw ValidationError("temperatures not strictly increasing at row " + std::to_string(i + 1));
    if (rows[i].witness < rows[i - 1].witness)
      throw ValidationError("witness decreases at row " + std::to_string(i + 1));
  }
  return rows;
}

std::vector<double> zero_crossings(const std::vector<CurveRow>& rows) {
  std::vector<double> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    if ((a.witness < 0.0) != (b.witness < 0.0)) {
      const double f = a.witness / (a.witness - b.witness);
      out.push_back(a.temperature + f * (b.temperature - a.temperature));
    }
  }
  return out;
}

std::string gnuplot_script(const std::vector<std::pair<std::string, std::string>>& curves,
                           const std::string& title, const std::string& png_name) {
  std::ostringstream s;
  s << "# gnuplot script; run it from the directory holding the CSV files\n"
    << "set datafile separator ','\n"
    << "set terminal pngcairo size 900,600\n"
    << "set output '" << png_name << "'\n"
    << "set title '" << title << "'\n"
    << "set xlabel 'T (K)'\n"
    << "set ylabel 'W_H (K)'\n"
    << "set key bottom right\n"
    << "set xzeroaxis lt -1\n"
    << "plot";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    s << (i == 0 ? " " : ", \\\n     ") << "'" << curves[i].second
      << "' using 1:3 skip 1 with lines lw 2 title '" << curves[i].first << "'";
  }
  s << '\n';
  return s.str();
}

}  // namespace spinorbit
