#include "spinorbit/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinorbit/curve_io.hpp"
#include "spinorbit/errors.hpp"
#include "spinorbit/ion_catalog.hpp"
#include "spinorbit/thermal.hpp"
#include "spinorbit/verify.hpp"

namespace spinorbit::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnusableIon : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string catalog_path;
  std::string format = "csv";
  std::string output;
  std::string ion;
  std::optional<std::string> convention;
  double tmin = 1.0;
  double tmax = 6000.0;
  int steps = 600;
  double tol = kDefaultRootTolerance;
  std::string output_dir = "figure1";
  std::uint64_t seed = 1;
  int samples = 10000;
  int two_s = 0;
  int two_l = 0;
  double zeta = 0.0;
};

Weighting weighting_or(const Options& o, Weighting fallback) {
  if (!o.convention) return fallback;
  return *o.convention == "level" ? Weighting::LevelUniform : Weighting::MultipletDegenerate;
}

std::vector<IonRecord> catalog_for(const Options& o) {
  if (o.catalog_path.empty()) return default_catalog();
  std::ifstream in(o.catalog_path);
  if (!in) throw UsageError("cannot open catalog '" + o.catalog_path + "'");
  auto records = load_catalog(in);
  if (records.empty()) return default_catalog();
  return records;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << text) || !file.flush())
    throw IoFailure("cannot write '" + o.output + "'");
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush())
    throw IoFailure("cannot write '" + path.string() + "'");
}

json half_int_json(HalfInt h) {
  if (h.is_integer()) return h.twice() / 2;
  return static_cast<double>(h.twice()) / 2.0;
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

double rounded(double x) { return std::stod(format_sig6(x)); }

std::string degenerate_message(const SpinOrbitSystem& sys) {
  if (sys.l.twice() == 0) return "witness degenerate (l = 0)";
  if (sys.s.twice() == 0) return "witness degenerate (s = 0)";
  return "witness degenerate (zeta = 0)";
}

void check_range(const Options& o) {
  if (!(o.tmin > 0.0) || !(o.tmax > o.tmin) || !std::isfinite(o.tmax))
    throw UsageError("temperature range requires 0 < --tmin < --tmax");
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
}

SpinOrbitSystem usable_system(const IonRecord& rec, Weighting w) {
  if (!rec.zeta) {
    if (rec.l.twice() == 0) throw UnusableIon(rec.symbol + ": witness degenerate (l = 0)");
    throw UnusableIon(rec.symbol + ": no spin-orbit coupling");
  }
  return rec.system(w);
}

const IonRecord& lookup(const std::vector<IonRecord>& catalog, const std::string& symbol) {
  try {
    return find_ion(catalog, symbol);
  } catch (const NotFoundError& e) {
    throw UnusableIon(e.what());
  }
}

// ---------------------------------------------------------------------------

int run_ions(const Options& o, std::ostream& out) {
  const auto catalog = catalog_for(o);
  std::ostringstream s;
  if (o.format == "json") {
    json ions = json::array();
    for (const auto& rec : catalog) {
      ions.push_back({{"symbol", rec.symbol},
                      {"n4f", rec.n4f},
                      {"deltaE_K", optional_json(rec.delta_e)},
                      {"zeta_K", optional_json(rec.zeta)},
                      {"te_paper_K", optional_json(rec.te_paper)},
                      {"s", half_int_json(rec.s)},
                      {"l", half_int_json(rec.l)},
                      {"j0", half_int_json(rec.j0)},
                      {"dimension", rec.s.multiplicity() * rec.l.multiplicity()}});
    }
    s << json{{"ions", ions}}.dump(2) << '\n';
  } else {
    s << "symbol,n4f,s,l,j0,deltaE_K,zeta_K,dimension\n";
    for (const auto& rec : catalog) {
      s << rec.symbol << ',' << rec.n4f << ',' << rec.s.str() << ',' << rec.l.str() << ','
        << rec.j0.str() << ',' << (rec.delta_e ? format_sig6(*rec.delta_e) : "") << ','
        << (rec.zeta ? format_sig6(*rec.zeta) : "") << ','
        << rec.s.multiplicity() * rec.l.multiplicity() << '\n';
    }
  }
  emit(o, out, s.str());
  return kSuccess;
}

std::string curve_text(const Options& o, const std::string& label, const WitnessCurve& curve) {
  std::ostringstream s;
  if (o.format == "json") {
    json points = json::array();
    for (const auto& p : curve.points)
      points.push_back({{"T_K", rounded(p.temperature)},
                        {"mean_energy_K", rounded(p.mean_energy)},
                        {"witness_K", rounded(p.witness)}});
    s << json{{"symbol", label},
              {"convention", to_string(curve.system.weighting)},
              {"points", points}}
             .dump(2)
      << '\n';
  } else {
    write_curve_csv(s, curve);
  }
  return s.str();
}

int run_witness_for(const Options& o, std::ostream& out, const std::string& label,
                    const SpinOrbitSystem& sys) {
  check_range(o);
  if (sys.interaction_free() || sys.zeta == 0.0)
    throw UnusableIon(label + ": " + degenerate_message(sys));
  emit(o, out, curve_text(o, label, witness_curve(sys, o.tmin, o.tmax, o.steps)));
  return kSuccess;
}

int run_witness(const Options& o, std::ostream& out) {
  const auto catalog = catalog_for(o);
  const IonRecord& rec = lookup(catalog, o.ion);
  return run_witness_for(o, out, rec.symbol,
                         usable_system(rec, weighting_or(o, Weighting::LevelUniform)));
}

struct TeRow {
  std::string symbol;
  Weighting weighting;
  EntanglementTemperature te;
};

TeRow te_row(const std::string& symbol, const SpinOrbitSystem& sys, double tol) {
  try {
    return {symbol, sys.weighting, entanglement_temperature(sys, tol)};
  } catch (const DomainError& e) {
    throw UnusableIon(symbol + ": " + e.what());
  }
}

std::string te_text(const Options& o, const std::vector<TeRow>& rows) {
  std::ostringstream s;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"symbol", r.symbol},
                     {"convention", to_string(r.weighting)},
                     {"T_E_K", r.te.kelvin ? json(rounded(*r.te.kelvin)) : json(nullptr)},
                     {"reason", r.te.reason ? json(to_string(*r.te.reason)) : json(nullptr)}});
    }
    s << arr.dump(2) << '\n';
  } else {
    s << "symbol,convention,T_E_K\n";
    for (const auto& r : rows) {
      s << r.symbol << ',' << to_string(r.weighting) << ',';
      if (r.te.kelvin)
        s << format_sig6(*r.te.kelvin);
      else
        s << "none (" << to_string(*r.te.reason) << ')';
      s << '\n';
    }
  }
  return s.str();
}

int run_te(const Options& o, std::ostream& out) {
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const auto catalog = catalog_for(o);
  const Weighting w = weighting_or(o, Weighting::LevelUniform);

  std::vector<const IonRecord*> selected;
  if (o.ion == "all" || o.ion == "ALL") {
    for (const auto& rec : catalog) selected.push_back(&rec);
  } else {
    selected.push_back(&lookup(catalog, o.ion));
  }

  std::vector<TeRow> rows;
  for (const auto* rec : selected) {
    if (!rec->zeta) {
      rows.push_back({rec->symbol, w, {std::nullopt, NoEntanglementReason::WitnessDegenerate}});
      continue;
    }
    rows.push_back(te_row(rec->symbol, rec->system(w), o.tol));
  }
  emit(o, out, te_text(o, rows));
  return kSuccess;
}

int run_figure1(const Options& o, std::ostream& out) {
  check_range(o);
  const auto catalog = catalog_for(o);
  const Weighting w = weighting_or(o, Weighting::LevelUniform);

  const fs::path dir(o.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw IoFailure("cannot create output directory '" + o.output_dir + "'");

  std::vector<std::pair<std::string, std::string>> curves;
  Options csv = o;
  csv.format = "csv";
  for (const auto& rec : catalog) {
    if (!rec.light() || !rec.zeta) continue;
    const std::string name = "witness_" + rec.symbol + ".csv";
    write_file(dir / name, curve_text(csv, rec.symbol, witness_curve(rec.system(w), o.tmin,
                                                                       o.tmax, o.steps)));
    curves.emplace_back(rec.symbol, name);
    out << (dir / name).string() << '\n';
  }
  const std::string title = std::string("Spin-orbit entanglement witness, light rare earths (") +
                            to_string(w) + " weighting)";
  write_file(dir / "figure1.gp", gnuplot_script(curves, title, "figure1.png"));
  out << (dir / "figure1.gp").string() << '\n';
  return kSuccess;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw UsageError("--samples must be positive");
  const auto catalog = catalog_for(o);
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.samples_per_ion = o.samples;
  const auto checks = run_verification(catalog, vo);

  bool all = true;
  for (const auto& c : checks) {
    char buf[128];
    std::snprintf(buf, sizeof buf, " residual=%.3e threshold=%.3e", c.residual, c.threshold);
    out << (c.passed ? "PASS " : "FAIL ") << c.name << buf << " (" << c.detail << ")\n";
    all = all && c.passed;
  }
  out << (all ? "all checks passed\n" : "verification FAILED\n");
  return all ? kSuccess : kVerificationFailed;
}

SpinOrbitSystem custom_system(const Options& o) {
  if (!std::isfinite(o.zeta)) throw UsageError("--zeta must be finite");
  return SpinOrbitSystem(HalfInt::from_twice(o.two_s), HalfInt::from_twice(o.two_l), o.zeta,
                         weighting_or(o, Weighting::MultipletDegenerate));
}

int run_custom_te(const Options& o, std::ostream& out) {
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const SpinOrbitSystem sys = custom_system(o);
  emit(o, out, te_text(o, {te_row("custom", sys, o.tol)}));
  return kSuccess;
}

// ---------------------------------------------------------------------------

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", o.output, "Output file (default: standard output)");
}

void add_convention(CLI::App* cmd, Options& o, const std::string& default_name) {
  cmd->add_option("--convention", o.convention,
                  "Boltzmann weighting: level (unit weight per multiplet) or multiplet "
                  "(2j+1 per multiplet); default " +
                      default_name)
      ->check(CLI::IsMember({"level", "multiplet"}));
}

void add_range(CLI::App* cmd, Options& o) {
  cmd->add_option("--tmin", o.tmin, "Lowest temperature (K)")->capture_default_str();
  cmd->add_option("--tmax", o.tmax, "Highest temperature (K)")->capture_default_str();
  cmd->add_option("--steps", o.steps, "Number of temperatures, endpoints included")
      ->capture_default_str();
}

void add_tol(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "Root bracket width (K)")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spin-orbit thermal entanglement witness for rare-earth ions"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--catalog", o.catalog_path, "Ion catalog file overriding the built-in table");

  auto* ions = app.add_subcommand("ions", "List the ion catalog");
  add_format(ions, o);

  auto* wit = app.add_subcommand("witness", "Witness versus temperature for one ion");
  wit->add_option("--ion", o.ion, "Ion symbol")->required();
  add_range(wit, o);
  add_convention(wit, o, "level");
  add_format(wit, o);

  auto* te = app.add_subcommand("te", "Entanglement temperatures");
  o.ion = "all";
  te->add_option("--ion", o.ion, "Ion symbol or 'all'")->capture_default_str();
  add_convention(te, o, "level");
  add_tol(te, o);
  add_format(te, o);

  auto* fig = app.add_subcommand("figure1", "Witness curves for the light ions plus a gnuplot script");
  fig->add_option("--output-dir", o.output_dir, "Directory for CSV files and script")
      ->capture_default_str();
  add_range(fig, o);
  add_convention(fig, o, "level");

  auto* ver = app.add_subcommand("verify", "Cross-check closed forms against the dense oracle");
  ver->add_option("--seed", o.seed, "Product-state sampler seed")->capture_default_str();
  ver->add_option("--samples", o.samples, "Product states per ion")->capture_default_str();

  auto* custom = app.add_subcommand("custom", "Arbitrary (s, l, zeta) system");
  custom->add_option("--two-s", o.two_s, "2s")->required()->check(CLI::NonNegativeNumber);
  custom->add_option("--two-l", o.two_l, "2l")->required()->check(CLI::NonNegativeNumber);
  custom->add_option("--zeta", o.zeta, "Spin-orbit coupling (K)")->required();
  add_convention(custom, o, "multiplet");
  add_range(custom, o);
  add_tol(custom, o);
  add_format(custom, o);
  custom->require_subcommand(1);
  auto* custom_te = custom->add_subcommand("te", "Entanglement temperature");
  auto* custom_wit = custom->add_subcommand("witness", "Witness curve");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*ions) return run_ions(o, out);
    if (*wit) return run_witness(o, out);
    if (*te) return run_te(o, out);
    if (*fig) return run_figure1(o, out);
    if (*ver) return run_verify(o, out);
    if (*custom_te) return run_custom_te(o, out);
    if (*custom_wit) return run_witness_for(o, out, "custom", custom_system(o));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (byte " << e.position() << ")\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: invalid catalog: " << e.what() << '\n';
    return kUsage;
  } catch (const UnusableIon& e) {
    err << "error: " << e.what() << '\n';
    return kUnusableIon;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace spinorbit::cli
