#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ramiq/errors.hpp"

namespace ramiq {

class Subgroup;

// Finite group materialized by its Cayley table. Element 0 is the identity.
// Immutable after construction; derived caches are built at construction.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  static constexpr int kOrderCap = 512;

  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> abelian_product(const std::vector<int>& orders);
  static std::shared_ptr<const FiniteGroup> from_cayley_table(std::vector<std::vector<int>> table);
  // Generators given as products of cycles on arbitrary integer points.
  static std::shared_ptr<const FiniteGroup> from_permutation_generators(
      const std::vector<std::vector<std::vector<int>>>& generators);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  int conjugate(int s, int g) const { return mul(mul(s, g), inv(s)); }

  bool is_abelian() const { return abelian_; }
  int exponent() const;

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  int class_rep(int c) const { return classes_[c][0]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }

  // Validated subgroup from an explicit member set (identity added).
  Subgroup subgroup(std::vector<int> members) const;
  Subgroup subgroup_generated(const std::vector<int>& gens) const;
  Subgroup trivial_subgroup() const;
  Subgroup full_subgroup() const;
  Subgroup cyclic_subgroup_of(int g) const;

  // Every <g> deduplicated, including the trivial subgroup, sorted by order
  // then lexicographically by member list.
  std::vector<Subgroup> cyclic_subgroups() const;

  // Materialized subgroup group, cached per member set so repeated requests
  // share one instance.
  std::shared_ptr<const FiniteGroup> materialize(const std::vector<int>& members) const;

 private:
  explicit FiniteGroup(std::vector<std::vector<int>> table);
  void validate() const;
  void build_caches();

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  bool abelian_ = false;

  mutable std::mutex sub_mutex_;
  mutable std::map<std::vector<int>, std::shared_ptr<const FiniteGroup>> sub_cache_;
};

// A subgroup as a sorted element-index set of a parent group, together with a
// materialized FiniteGroup on the members.
class Subgroup {
 public:
  Subgroup(std::shared_ptr<const FiniteGroup> parent, std::vector<int> members);

  const std::shared_ptr<const FiniteGroup>& parent() const { return parent_; }
  const std::shared_ptr<const FiniteGroup>& group() const { return group_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }

  bool contains(int parent_index) const;
  int to_parent(int local_index) const { return members_[local_index]; }
  int to_local(int parent_index) const;  // NotASubgroup if absent

  bool is_cyclic() const;
  // Smallest generator; NotCyclic when the subgroup is not cyclic.
  int generator() const;

  bool operator==(const Subgroup& o) const {
    return parent_.get() == o.parent_.get() && members_ == o.members_;
  }

 private:
  std::shared_ptr<const FiniteGroup> parent_;
  std::vector<int> members_;
  std::shared_ptr<const FiniteGroup> group_;
};

}  // namespace ramiq
