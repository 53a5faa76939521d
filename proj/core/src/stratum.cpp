#include "ramiq/stratum.hpp"

namespace ramiq {

int Stratum::codim(int ambient_dim) const {
  switch (dim) {
    case StratumDim::ambient: return 0;
    case StratumDim::curve: return ambient_dim - 1;
    case StratumDim::point: return ambient_dim;
  }
  return 0;
}

void Stratum::validate(int ambient_dim, int sheaf_rank) const {
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::InvalidStratum, "stratum '" + id + "': " + why);
  };
  if (dim == StratumDim::curve && ambient_dim != 2)
    bad("curve strata require a surface ambient");
  if (genus < 0) bad("negative genus");

  for (const auto& e : normal)
    if (e.character.group().get() != stabilizer.group().get())
      bad("normal character lives off the stabilizer");
  for (const auto& e : sheaf)
    if (e.character.group().get() != stabilizer.group().get())
      bad("sheaf character lives off the stabilizer");

  int mult_sum = 0;
  for (const auto& e : normal) {
    if (e.multiplicity <= 0) bad("nonpositive eigen multiplicity");
    mult_sum += e.multiplicity;
  }
  if (mult_sum != codim(ambient_dim))
    bad("normal multiplicities sum to " + std::to_string(mult_sum) +
        ", expected the codimension " + std::to_string(codim(ambient_dim)));

  if (dim != StratumDim::ambient) {
    int rank_sum = 0;
    for (const auto& e : sheaf) {
      if (e.rank < 0) bad("negative sheaf rank");
      rank_sum += e.rank;
    }
    if (rank_sum != sheaf_rank)
      bad("sheaf ranks sum to " + std::to_string(rank_sum) + ", expected " +
          std::to_string(sheaf_rank));
    for (const auto& e : normal)
      if (e.character.is_trivial())
        bad("normal eigencharacter is trivial on the stabilizer");
  }

  if (dim == StratumDim::curve && c_squared && !normal.empty()) {
    // deg N* = -C^2 for a curve in a surface
    if (normal.size() == 1 && normal[0].multiplicity == 1 &&
        normal[0].degree != -*c_squared)
      bad("conormal degree disagrees with -C^2");
  }
  if (ambient_chi && ambient_chi->group().get() != stabilizer.group().get())
    bad("ambient equivariant chi lives off the stabilizer");
}

GradedClassValue::GradedClassValue(ClassFunction a, ClassFunction b)
    : c0(std::move(a)), c1(std::move(b)) {
  if (c0.group().get() != c1.group().get())
    fail(ErrorKind::GroupMismatch, "graded coefficients on different groups");
}

GradedClassValue GradedClassValue::zero(const std::shared_ptr<const FiniteGroup>& g) {
  return GradedClassValue(ClassFunction::zero(g), ClassFunction::zero(g));
}

GradedClassValue GradedClassValue::operator*(const GradedClassValue& o) const {
  return GradedClassValue(c0 * o.c0, c0 * o.c1 + c1 * o.c0);
}

GradedClassValue GradedClassValue::scaled(const Rational& r) const {
  return GradedClassValue(c0.scaled(r), c1.scaled(r));
}

}  // namespace ramiq
