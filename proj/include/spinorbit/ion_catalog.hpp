#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinorbit/angular.hpp"
#include "spinorbit/half_int.hpp"

namespace spinorbit {

struct HundTerm {
  HalfInt s;
  HalfInt l;
  HalfInt j0;
};

/// Ground-state (s, l, j0) of a 4f^n shell, 1 <= n <= 13.
HundTerm hund_rules(int n4f);

/// Spin-orbit coupling from the first excitation gap: ΔE = zeta (j0+1) for a
/// less-than-half-filled shell, ΔE = -zeta j0 otherwise.
double coupling_from_gap(double delta_e, HalfInt j0, bool light);

struct IonRecord {
  std::string symbol;
  int n4f = 0;
  HalfInt s;
  HalfInt l;
  HalfInt j0;
  std::optional<double> delta_e;
  std::optional<double> zeta;
  /// Tabulated entanglement temperature. Reference data for checks only.
  std::optional<double> te_paper;

  bool light() const { return n4f < 7; }

  /// Throws DomainError when the record carries no coupling (Gd).
  SpinOrbitSystem system(Weighting w) const;
};

/// Symbols for 4f^1 .. 4f^13, Ce through Yb.
const std::vector<std::string>& lanthanide_symbols();

/// Case-insensitive lookup in the embedded catalog.
const IonRecord& ion_record(std::string_view symbol);

/// The embedded thirteen-ion table.
const std::vector<IonRecord>& default_catalog();

/// The embedded table in catalog file format.
std::string_view default_catalog_text();

/// Parses and validates a catalog document `{"ions": [...]}`. Whitespace-only
/// input yields an empty list. Throws ParseError or ValidationError.
std::vector<IonRecord> load_catalog(std::istream& source);
std::vector<IonRecord> load_catalog_text(std::string_view text);

/// Lookup in an arbitrary record list; throws NotFoundError listing valid symbols.
const IonRecord& find_ion(const std::vector<IonRecord>& catalog, std::string_view symbol);

}  // namespace spinorbit
