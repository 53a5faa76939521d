#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramiq/repring.hpp"
#include "ramiq/stratum.hpp"

namespace ramiq {

enum class SheafKind { general, cotangent, canonical_power };

// A complete problem instance: the group action, the ambient invariants, the
// sheaf, and the fixed-locus strata.
struct Scenario {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
  std::optional<CharacterTable> table;  // filled by finalize() when absent
  int ambient_dim = 1;
  int sheaf_rank = 0;
  Rational global_euler = 0;  // chi(X, E)
  std::vector<Stratum> strata;
  SheafKind sheaf_kind = SheafKind::general;
  int canonical_n = 0;  // for SheafKind::canonical_power
  std::optional<std::int64_t> chi_o;  // chi(X, O_X), surfaces
  std::optional<std::int64_t> k2;     // K_X^2, surfaces

  const CharacterTable& character_table() const;

  // Stratum invariants, unique ids, table presence.
  void validate() const;
};

// chi(Z, F) = rk(1 - genus) + deg for a locally free sheaf on a curve.
Rational curve_euler(std::int64_t rank, std::int64_t degree, std::int64_t genus);

// Fills per-stratum sheaf eigendata and the global Euler characteristic for
// the cotangent and canonical-power presets on (Z/2)^n surfaces.
Scenario surface_sheaf_presets(Scenario s);

// Strict JSON parsing: unknown keys rejected, roots of unity as [N, k] pairs.
Scenario parse_scenario(const std::string& json_text);

}  // namespace ramiq
