#include "spinorbit/ion_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iterator>
#include <set>

#include "json.hpp"
#include "spinorbit/errors.hpp"

namespace spinorbit {

namespace {

using nlohmann::json;

// Lanthanide spin-orbit data: first excitation gap ΔE, coupling zeta and the
// reference entanglement temperature, all in kelvin. zeta is stored as
// tabulated, not recomputed from ΔE.
constexpr std::string_view kDefaultCatalog = R"({
  "ions": [
    {"symbol": "Ce", "n4f": 1,  "deltaE_K": 3150,  "zeta_K": 900,   "te_paper_K": 1758},
    {"symbol": "Pr", "n4f": 2,  "deltaE_K": 3100,  "zeta_K": 620,   "te_paper_K": 1851},
    {"symbol": "Nd", "n4f": 3,  "deltaE_K": 2750,  "zeta_K": 500,   "te_paper_K": 1904},
    {"symbol": "Pm", "n4f": 4,  "deltaE_K": 2300,  "zeta_K": 460,   "te_paper_K": 2008},
    {"symbol": "Sm", "n4f": 5,  "deltaE_K": 1450,  "zeta_K": 414,   "te_paper_K": 1975},
    {"symbol": "Eu", "n4f": 6,  "deltaE_K": 500,   "zeta_K": 500,   "te_paper_K": 3295},
    {"symbol": "Gd", "n4f": 7,  "deltaE_K": 43200, "zeta_K": null,  "te_paper_K": null},
    {"symbol": "Tb", "n4f": 8,  "deltaE_K": 2900,  "zeta_K": -483,  "te_paper_K": null},
    {"symbol": "Dy", "n4f": 9,  "deltaE_K": 4750,  "zeta_K": -633,  "te_paper_K": null},
    {"symbol": "Ho", "n4f": 10, "deltaE_K": 7500,  "zeta_K": -937,  "te_paper_K": null},
    {"symbol": "Er", "n4f": 11, "deltaE_K": 9350,  "zeta_K": -1247, "te_paper_K": null},
    {"symbol": "Tm", "n4f": 12, "deltaE_K": 11950, "zeta_K": -1991, "te_paper_K": null},
    {"symbol": "Yb", "n4f": 13, "deltaE_K": 14800, "zeta_K": -4229, "te_paper_K": null}
  ]
}
)";

const std::set<std::string> kRequiredKeys{"symbol", "n4f", "deltaE_K", "zeta_K", "te_paper_K"};
// Derived quantities written by `ions --format json`; checked when present.
const std::set<std::string> kDerivedKeys{"s", "l", "j0", "dimension"};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int n4f_of_symbol(std::string_view symbol) {
  const auto& symbols = lanthanide_symbols();
  const std::string key = lower(symbol);
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (lower(symbols[i]) == key) return static_cast<int>(i) + 1;
  return 0;
}

std::string valid_symbol_list() {
  std::string out;
  for (const auto& s : lanthanide_symbols()) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::optional<double> optional_number(const json& value, const std::string& key,
                                      const std::string& where) {
  const json& v = value.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) throw ValidationError(where + ": '" + key + "' must be a number or null");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(where + ": '" + key + "' must be finite");
  return x;
}

// Accepts 1.5 or "3/2".
HalfInt half_int_from_json(const json& v, const std::string& key, const std::string& where) {
  if (v.is_number_integer()) return HalfInt::from_int(v.get<std::int64_t>());
  if (v.is_number()) {
    const double twice = 2.0 * v.get<double>();
    if (twice == std::round(twice)) return HalfInt::from_twice(static_cast<std::int64_t>(twice));
  } else if (v.is_string()) {
    const std::string text = v.get<std::string>();
    const auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const long long n = std::stoll(text, &used);
        if (used == text.size()) return HalfInt::from_int(n);
      } else if (text.substr(slash + 1) == "2") {
        const long long n = std::stoll(text.substr(0, slash), &used);
        if (used == slash) return HalfInt::from_twice(n);
      }
    } catch (const std::exception&) {
    }
  }
  throw ValidationError(where + ": '" + key + "' is not a half-integer");
}

IonRecord record_from_json(const json& value, std::size_t index) {
  std::string where = "ions[" + std::to_string(index) + "]";
  if (!value.is_object()) throw ValidationError(where + ": record must be an object");

  for (const auto& [key, _] : value.items())
    if (!kRequiredKeys.count(key) && !kDerivedKeys.count(key))
      throw ValidationError(where + ": unknown key '" + key + "'");
  for (const auto& key : kRequiredKeys)
    if (!value.contains(key)) throw ValidationError(where + ": missing key '" + key + "'");

  if (!value.at("symbol").is_string()) throw ValidationError(where + ": 'symbol' must be a string");
  const std::string raw_symbol = value.at("symbol").get<std::string>();
  where += " (" + raw_symbol + ")";
  if (!value.at("n4f").is_number_integer())
    throw ValidationError(where + ": 'n4f' must be an integer");
  const int n4f = value.at("n4f").get<int>();
  if (n4f < 1 || n4f > 13) throw ValidationError(where + ": n4f must lie in 1..13");

  const int expected = n4f_of_symbol(raw_symbol);
  if (expected == 0)
    throw ValidationError(where + ": unknown symbol; valid symbols are " + valid_symbol_list());
  if (expected != n4f)
    throw ValidationError(where + ": n4f = " + std::to_string(n4f) + " but " + raw_symbol +
                          " has " + std::to_string(expected) + " 4f electrons");

  IonRecord rec;
  rec.symbol = lanthanide_symbols()[static_cast<std::size_t>(n4f - 1)];
  rec.n4f = n4f;
  const HundTerm term = hund_rules(n4f);
  rec.s = term.s;
  rec.l = term.l;
  rec.j0 = term.j0;
  rec.delta_e = optional_number(value, "deltaE_K", where);
  rec.zeta = optional_number(value, "zeta_K", where);
  rec.te_paper = optional_number(value, "te_paper_K", where);

  if (rec.delta_e && *rec.delta_e <= 0.0)
    throw ValidationError(where + ": deltaE_K must be positive");
  if (rec.te_paper && *rec.te_paper <= 0.0)
    throw ValidationError(where + ": te_paper_K must be positive");
  if (n4f < 7 && !(rec.zeta && *rec.zeta > 0.0))
    throw ValidationError(where + ": zeta_K must be positive for a less than half-filled shell");
  if (n4f > 7 && !(rec.zeta && *rec.zeta < 0.0))
    throw ValidationError(where + ": zeta_K must be negative for a more than half-filled shell");
  if (n4f == 7 && rec.zeta)
    throw ValidationError(where + ": zeta_K must be null for a half-filled shell");

  const std::pair<const char*, HalfInt> derived[] = {{"s", rec.s}, {"l", rec.l}, {"j0", rec.j0}};
  for (const auto& [key, hund] : derived) {
    if (!value.contains(key)) continue;
    const HalfInt given = half_int_from_json(value.at(key), key, where);
    if (given != hund)
      throw ValidationError(where + ": " + key + " = " + given.str() +
                            " contradicts Hund's rules (" + hund.str() + ")");
  }
  if (value.contains("dimension")) {
    const json& d = value.at("dimension");
    const std::int64_t dim = rec.s.multiplicity() * rec.l.multiplicity();
    if (!d.is_number_integer() || d.get<std::int64_t>() != dim)
      throw ValidationError(where + ": dimension must equal (2s+1)(2l+1) = " + std::to_string(dim));
  }
  return rec;
}

}  // namespace

HundTerm hund_rules(int n4f) {
  if (n4f < 1 || n4f > 13)
    throw DomainError("4f occupancy must lie in 1..13, got " + std::to_string(n4f));
  const std::int64_t unpaired = std::min(n4f, 14 - n4f);
  const std::int64_t k = n4f <= 7 ? n4f : n4f - 7;
  const std::int64_t l = 3 * k - k * (k - 1) / 2;
  const HalfInt s_half = HalfInt::from_twice(unpaired);
  const HalfInt l_half = HalfInt::from_int(l);
  const HalfInt j0 = n4f < 7 ? abs(l_half - s_half) : l_half + s_half;
  return {s_half, l_half, j0};
}

double coupling_from_gap(double delta_e, HalfInt j0, bool light) {
  if (!(delta_e > 0.0) || !std::isfinite(delta_e))
    throw DomainError("excitation gap must be positive and finite");
  if (j0.twice() < 0) throw DomainError("j0 must be non-negative");
  const double j = static_cast<double>(j0.twice()) / 2.0;
  if (light) return delta_e / (j + 1.0);
  if (j0.twice() == 0) throw DomainError("no gap relation for a heavy ion with j0 = 0");
  return -delta_e / j;
}

SpinOrbitSystem IonRecord::system(Weighting w) const {
  if (!zeta) throw DomainError(symbol + " has no spin-orbit coupling (witness degenerate)");
  return SpinOrbitSystem(s, l, *zeta, w);
}

const std::vector<std::string>& lanthanide_symbols() {
  static const std::vector<std::string> symbols{"Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd",
                                                "Tb", "Dy", "Ho", "Er", "Tm", "Yb"};
  return symbols;
}

std::string_view default_catalog_text() { return kDefaultCatalog; }

const std::vector<IonRecord>& default_catalog() {
  static const std::vector<IonRecord> catalog = load_catalog_text(kDefaultCatalog);
  return catalog;
}

const IonRecord& find_ion(const std::vector<IonRecord>& catalog, std::string_view symbol) {
  const std::string key = lower(symbol);
  for (const auto& rec : catalog)
    if (lower(rec.symbol) == key) return rec;
  throw NotFoundError("unknown ion '" + std::string(symbol) + "'; valid symbols are " +
                      valid_symbol_list());
}

const IonRecord& ion_record(std::string_view symbol) { return find_ion(default_catalog(), symbol); }

std::vector<IonRecord> load_catalog_text(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
    return {};

  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog parse error: ") + e.what(), e.byte);
  }

  if (!doc.is_object()) throw ValidationError("catalog must be an object with key 'ions'");
  for (const auto& [key, _] : doc.items())
    if (key != "ions") throw ValidationError("catalog: unknown top-level key '" + key + "'");
  if (!doc.contains("ions") || !doc.at("ions").is_array())
    throw ValidationError("catalog: 'ions' must be an array");

  std::vector<IonRecord> out;
  std::set<int> seen;
  const json& ions = doc.at("ions");
  for (std::size_t i = 0; i < ions.size(); ++i) {
    IonRecord rec = record_from_json(ions[i], i);
    if (!seen.insert(rec.n4f).second)
      throw ValidationError("ions[" + std::to_string(i) + "] (" + rec.symbol + "): duplicate ion");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<IonRecord> load_catalog(std::istream& source) {
  const std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  return load_catalog_text(text);
}

}  // namespace spinorbit
