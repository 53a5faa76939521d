#pragma once

#include <memory>
#include <vector>

#include "ramiq/cyclotomic.hpp"
#include "ramiq/group.hpp"

namespace ramiq {

// A virtual character: one exact cyclotomic value per conjugacy class. This is
// the computational avatar of R(G)_Q; identities stated by the theory in
// localizations are evaluated on these trace values, where they are faithful.
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const FiniteGroup> group, std::vector<Cyclotomic> class_values);

  static ClassFunction zero(std::shared_ptr<const FiniteGroup> g);
  static ClassFunction trivial(std::shared_ptr<const FiniteGroup> g);
  static ClassFunction regular(std::shared_ptr<const FiniteGroup> g);
  static ClassFunction constant(std::shared_ptr<const FiniteGroup> g, const Cyclotomic& v);
  // Values per element; must be constant on conjugacy classes.
  static ClassFunction from_element_values(std::shared_ptr<const FiniteGroup> g,
                                           const std::vector<Cyclotomic>& values);

  const std::shared_ptr<const FiniteGroup>& group() const { return group_; }
  const std::vector<Cyclotomic>& class_values() const { return values_; }
  const Cyclotomic& at_class(int c) const { return values_[c]; }
  const Cyclotomic& at_element(int g) const { return values_[group_->class_of(g)]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // tensor product
  ClassFunction operator-() const;
  ClassFunction scaled(const Rational& r) const;
  ClassFunction conjugated() const;

  bool is_zero() const;
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Cyclotomic> values_;
};

// A degree-one character, stored per element; multiplicativity is checked
// exhaustively at construction.
class LinearCharacter {
 public:
  LinearCharacter(std::shared_ptr<const FiniteGroup> group, std::vector<Cyclotomic> values);

  static LinearCharacter trivial(std::shared_ptr<const FiniteGroup> g);

  const std::shared_ptr<const FiniteGroup>& group() const { return group_; }
  const Cyclotomic& value(int g) const { return values_[g]; }
  const std::vector<Cyclotomic>& values() const { return values_; }

  bool is_trivial() const;
  int order() const;  // smallest t with phi^t trivial
  LinearCharacter power(std::int64_t e) const;
  LinearCharacter operator*(const LinearCharacter& o) const;

  // Restriction along a subgroup of this character's group.
  LinearCharacter restricted(const Subgroup& sub) const;
  ClassFunction to_class_function() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Cyclotomic> values_;
};

// Irreducible characters, trivial first; validated orthonormal with the
// dimension-sum identity at construction.
class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const FiniteGroup> group, std::vector<ClassFunction> irreducibles);

  const std::shared_ptr<const FiniteGroup>& group() const { return group_; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  int size() const { return static_cast<int>(irreducibles_.size()); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<ClassFunction> irreducibles_;
};

}  // namespace ramiq
