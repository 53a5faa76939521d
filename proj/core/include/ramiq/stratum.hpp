#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramiq/class_function.hpp"

namespace ramiq {

enum class StratumDim { point, curve, ambient };

// One eigen-line (or isotypic block) of the conormal bundle under the
// stabilizer. `degree` is the first Chern number of the eigen sub-bundle,
// meaningful only for curve strata.
struct NormalEigen {
  LinearCharacter character;  // on stabilizer.group()
  int multiplicity = 1;
  std::int64_t degree = 0;
};

// One eigensheaf of E restricted to the stratum.
struct SheafEigen {
  LinearCharacter character;  // on stabilizer.group()
  int rank = 0;
  std::int64_t degree = 0;  // curve strata only
};

// Geometric input for one component Z of a fixed locus.
struct Stratum {
  std::string id;
  StratumDim dim = StratumDim::point;
  Subgroup stabilizer;  // of the ambient group G
  std::vector<NormalEigen> normal;
  std::vector<SheafEigen> sheaf;
  std::int64_t genus = 0;                    // curve strata only
  std::optional<ClassFunction> ambient_chi;  // on stabilizer.group(); ambient strata
  std::optional<std::int64_t> kc;            // K_X . C, curve-in-surface strata
  std::optional<std::int64_t> c_squared;     // C^2, curve-in-surface strata

  // Invariant checks: codimension vs normal multiplicities, sheaf rank sum,
  // nontrivial normal characters. Throws InvalidStratum.
  void validate(int ambient_dim, int sheaf_rank) const;

  int codim(int ambient_dim) const;
};

// Element of H^even(Z,Q) tensor R(H) truncated at complex dimension 1: a
// degree-0 and a degree-2 coefficient, both class functions on the same group.
struct GradedClassValue {
  ClassFunction c0;
  ClassFunction c1;

  GradedClassValue(ClassFunction a, ClassFunction b);

  static GradedClassValue zero(const std::shared_ptr<const FiniteGroup>& g);

  // Truncated product: (a0 + a1)(b0 + b1) -> a0 b0 + (a0 b1 + a1 b0).
  GradedClassValue operator*(const GradedClassValue& o) const;
  GradedClassValue scaled(const Rational& r) const;
  bool operator==(const GradedClassValue& o) const { return c0 == o.c0 && c1 == o.c1; }
};

}  // namespace ramiq
