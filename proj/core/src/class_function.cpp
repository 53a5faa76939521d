#include "ramiq/class_function.hpp"

#include <numeric>

namespace ramiq {

ClassFunction::ClassFunction(std::shared_ptr<const FiniteGroup> group,
                             std::vector<Cyclotomic> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (static_cast<int>(values_.size()) != group_->num_classes())
    fail(ErrorKind::InvalidInput, "class value count does not match class count");
}

ClassFunction ClassFunction::zero(std::shared_ptr<const FiniteGroup> g) {
  int n = g->num_classes();
  return ClassFunction(std::move(g), std::vector<Cyclotomic>(n));
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const FiniteGroup> g) {
  return constant(std::move(g), Cyclotomic(1));
}

ClassFunction ClassFunction::constant(std::shared_ptr<const FiniteGroup> g, const Cyclotomic& v) {
  int n = g->num_classes();
  return ClassFunction(std::move(g), std::vector<Cyclotomic>(n, v));
}

ClassFunction ClassFunction::regular(std::shared_ptr<const FiniteGroup> g) {
  std::vector<Cyclotomic> vals(g->num_classes());
  vals[g->class_of(0)] = Cyclotomic(static_cast<std::int64_t>(g->order()));
  return ClassFunction(std::move(g), std::move(vals));
}

ClassFunction ClassFunction::from_element_values(std::shared_ptr<const FiniteGroup> g,
                                                const std::vector<Cyclotomic>& values) {
  if (static_cast<int>(values.size()) != g->order())
    fail(ErrorKind::InvalidInput, "element value count does not match group order");
  std::vector<Cyclotomic> cls(g->num_classes());
  for (int c = 0; c < g->num_classes(); ++c) {
    const auto& members = g->conjugacy_classes()[c];
    cls[c] = values[members[0]];
    for (int x : members)
      if (values[x] != cls[c])
        fail(ErrorKind::InvalidInput, "values are not constant on conjugacy classes");
  }
  return ClassFunction(std::move(g), std::move(cls));
}

namespace {
void check_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group().get() != b.group().get())
    fail(ErrorKind::GroupMismatch, "class functions live on different groups");
}
}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  check_same_group(*this, o);
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  check_same_group(*this, o);
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] - o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  check_same_group(*this, o);
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-() const {
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rational& r) const {
  Cyclotomic c{r};
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * c;
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::conjugated() const {
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i].conjugate();
  return ClassFunction(group_, std::move(v));
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  check_same_group(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != o.values_[i]) return false;
  return true;
}

LinearCharacter::LinearCharacter(std::shared_ptr<const FiniteGroup> group,
                                 std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->order())
    fail(ErrorKind::InvalidInput, "character value count does not match group order");
  if (!values_[0].is_one())
    fail(ErrorKind::InvalidInput, "character value at the identity must be 1");
  for (const auto& v : values_)
    if (v.root_order() == 0)
      fail(ErrorKind::InvalidInput, "character value is not a root of unity");
  int n = group_->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (values_[group_->mul(a, b)] != values_[a] * values_[b])
        fail(ErrorKind::InvalidInput, "character is not multiplicative");
}

LinearCharacter LinearCharacter::trivial(std::shared_ptr<const FiniteGroup> g) {
  int n = g->order();
  return LinearCharacter(std::move(g), std::vector<Cyclotomic>(n, Cyclotomic(1)));
}

bool LinearCharacter::is_trivial() const {
  for (const auto& v : values_)
    if (!v.is_one()) return false;
  return true;
}

int LinearCharacter::order() const {
  std::int64_t l = 1;
  for (const auto& v : values_) l = std::lcm(l, v.root_order());
  return static_cast<int>(l);
}

LinearCharacter LinearCharacter::power(std::int64_t e) const {
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i].pow(e);
  return LinearCharacter(group_, std::move(v));
}

LinearCharacter LinearCharacter::operator*(const LinearCharacter& o) const {
  if (group_.get() != o.group_.get())
    fail(ErrorKind::GroupMismatch, "characters live on different groups");
  std::vector<Cyclotomic> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
  return LinearCharacter(group_, std::move(v));
}

LinearCharacter LinearCharacter::restricted(const Subgroup& sub) const {
  if (sub.parent().get() != group_.get())
    fail(ErrorKind::NotASubgroup, "subgroup of a different group");
  std::vector<Cyclotomic> v(sub.order());
  for (int i = 0; i < sub.order(); ++i) v[i] = values_[sub.to_parent(i)];
  return LinearCharacter(sub.group(), std::move(v));
}

ClassFunction LinearCharacter::to_class_function() const {
  return ClassFunction::from_element_values(group_, values_);
}

CharacterTable::CharacterTable(std::shared_ptr<const FiniteGroup> group,
                               std::vector<ClassFunction> irreducibles)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {
  int k = static_cast<int>(irreducibles_.size());
  if (k != group_->num_classes())
    fail(ErrorKind::InvalidTable, "row count must equal the number of conjugacy classes");
  for (const auto& row : irreducibles_)
    if (row.group().get() != group_.get())
      fail(ErrorKind::InvalidTable, "row lives on a different group");
  if (irreducibles_[0] != ClassFunction::trivial(group_))
    fail(ErrorKind::InvalidTable, "first row must be the trivial character");
  Rational dim_sq_sum = 0;
  for (int i = 0; i < k; ++i) {
    const Cyclotomic& dim = irreducibles_[i].at_element(0);
    if (!dim.is_rational() || !is_integer(dim.to_rational()) || dim.to_rational() <= 0)
      fail(ErrorKind::InvalidTable, "row dimension is not a positive integer");
    dim_sq_sum += dim.to_rational() * dim.to_rational();
  }
  if (dim_sq_sum != Rational(group_->order()))
    fail(ErrorKind::InvalidTable, "dimension-sum identity fails");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Cyclotomic ip = Cyclotomic(0);
      // inline inner product to avoid a header cycle
      for (int c = 0; c < group_->num_classes(); ++c)
        ip += Cyclotomic(static_cast<std::int64_t>(group_->class_size(c))) *
              irreducibles_[i].at_class(c) * irreducibles_[j].at_class(c).conjugate();
      ip *= Cyclotomic(Rational(1, group_->order()));
      if (ip != Cyclotomic(i == j ? 1 : 0))
        fail(ErrorKind::InvalidTable, "orthonormality fails");
    }
}

}  // namespace ramiq
