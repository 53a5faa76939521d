#include "ramiq/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace ramiq {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  validate();
  build_caches();
}

void FiniteGroup::validate() const {
  int n = order();
  if (n < 1) fail(ErrorKind::NotAGroup, "empty element set");
  if (n > kOrderCap)
    fail(ErrorKind::UnsupportedOrder,
         "order " + std::to_string(n) + " exceeds cap " + std::to_string(kOrderCap));
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::NotAGroup, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail(ErrorKind::NotAGroup, "table entry out of range");
  }
  for (int i = 0; i < n; ++i)
    if (table_[0][i] != i || table_[i][0] != i)
      fail(ErrorKind::NotAGroup, "element 0 is not the identity");
  // inverses, exhaustively
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = 0; j < n && !found; ++j) found = table_[i][j] == 0 && table_[j][i] == 0;
    if (!found) fail(ErrorKind::NotAGroup, "element " + std::to_string(i) + " has no inverse");
  }
  // associativity: exhaustive up to order 64, spot-checked beyond
  auto check = [&](int a, int b, int c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      fail(ErrorKind::NotAGroup, "associativity fails");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 20000; ++t) check(d(rng), d(rng), d(rng));
  }
}

void FiniteGroup::build_caches() {
  int n = order();
  inverse_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table_[i][j] == 0) inverse_[i] = j;

  element_order_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int x = i, ord = 1;
    while (x != 0) {
      x = table_[x][i];
      ++ord;
    }
    element_order_[i] = ord;
  }

  abelian_ = true;
  for (int i = 0; i < n && abelian_; ++i)
    for (int j = i + 1; j < n && abelian_; ++j) abelian_ = table_[i][j] == table_[j][i];

  class_of_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (class_of_[g] >= 0) continue;
    std::set<int> orbit;
    for (int s = 0; s < n; ++s) orbit.insert(table_[table_[s][g]][inverse_[s]]);
    int c = static_cast<int>(classes_.size());
    classes_.emplace_back(orbit.begin(), orbit.end());
    for (int x : orbit) class_of_[x] = c;
  }
  std::sort(classes_.begin(), classes_.end());
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (int x : classes_[c]) class_of_[x] = c;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int ord : element_order_) e = std::lcm(e, ord);
  return e;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "cyclic group order must be positive");
  if (n > kOrderCap) fail(ErrorKind::UnsupportedOrder, "order exceeds cap");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(t)));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::abelian_product(const std::vector<int>& orders) {
  long long n = 1;
  for (int o : orders) {
    if (o < 1) fail(ErrorKind::InvalidInput, "factor order must be positive");
    n *= o;
    if (n > kOrderCap) fail(ErrorKind::UnsupportedOrder, "order exceeds cap");
  }
  int total = static_cast<int>(n);
  // index = mixed-radix with the last factor fastest
  auto combine = [&](int a, int b) {
    int out = 0;
    int ra = a, rb = b;
    std::vector<int> digits(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      int o = orders[i];
      digits[i] = (ra % o + rb % o) % o;
      ra /= o;
      rb /= o;
    }
    for (std::size_t i = 0; i < orders.size(); ++i) out = out * orders[i] + digits[i];
    return out;
  };
  std::vector<std::vector<int>> t(total, std::vector<int>(total));
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) t[i][j] = combine(i, j);
  return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(t)));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_cayley_table(
    std::vector<std::vector<int>> table) {
  return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(table)));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutation_generators(
    const std::vector<std::vector<std::vector<int>>>& generators) {
  // Collect the support points appearing in any cycle.
  std::set<int> points;
  for (const auto& gen : generators)
    for (const auto& cyc : gen)
      for (int p : cyc) points.insert(p);
  std::vector<int> pts(points.begin(), points.end());
  std::map<int, int> pos;
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
  int deg = static_cast<int>(pts.size());

  using Perm = std::vector<int>;
  Perm id(deg);
  for (int i = 0; i < deg; ++i) id[i] = i;
  std::vector<Perm> gens;
  for (const auto& gen : generators) {
    Perm p = id;
    for (const auto& cyc : gen) {
      if (cyc.size() < 2) continue;
      for (std::size_t i = 0; i < cyc.size(); ++i)
        p[pos[cyc[i]]] = pos[cyc[(i + 1) % cyc.size()]];
    }
    gens.push_back(p);
  }

  auto compose = [deg](const Perm& a, const Perm& b) {
    Perm r(deg);
    for (int i = 0; i < deg; ++i) r[i] = a[b[i]];
    return r;
  };

  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = compose(g, elems[i]);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        if (static_cast<int>(elems.size()) >= kOrderCap &&
            index.size() > static_cast<std::size_t>(kOrderCap))
          fail(ErrorKind::UnsupportedOrder, "generated group exceeds order cap");
        elems.push_back(next);
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = index.at(compose(elems[i], elems[j]));
  return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(t)));
}

Subgroup FiniteGroup::subgroup(std::vector<int> members) const {
  return Subgroup(shared_from_this(), std::move(members));
}

Subgroup FiniteGroup::subgroup_generated(const std::vector<int>& gens) const {
  std::set<int> closure{0};
  for (int g : gens) {
    if (g < 0 || g >= order()) fail(ErrorKind::InvalidInput, "generator index out of range");
    closure.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closure.begin(), closure.end());
    for (int a : cur)
      for (int b : cur)
        if (closure.insert(mul(a, b)).second) grew = true;
  }
  return subgroup(std::vector<int>(closure.begin(), closure.end()));
}

Subgroup FiniteGroup::trivial_subgroup() const { return subgroup({0}); }

Subgroup FiniteGroup::full_subgroup() const {
  std::vector<int> all(order());
  for (int i = 0; i < order(); ++i) all[i] = i;
  return subgroup(std::move(all));
}

Subgroup FiniteGroup::cyclic_subgroup_of(int g) const {
  std::set<int> members{0};
  int x = g;
  while (x != 0) {
    members.insert(x);
    x = mul(x, g);
  }
  return subgroup(std::vector<int>(members.begin(), members.end()));
}

std::vector<Subgroup> FiniteGroup::cyclic_subgroups() const {
  std::set<std::vector<int>> seen;
  for (int g = 0; g < order(); ++g) {
    std::set<int> members{0};
    int x = g;
    while (x != 0) {
      members.insert(x);
      x = mul(x, g);
    }
    seen.insert(std::vector<int>(members.begin(), members.end()));
  }
  std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto& m : sorted) out.push_back(subgroup(std::move(m)));
  return out;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::materialize(
    const std::vector<int>& members) const {
  std::lock_guard<std::mutex> lock(sub_mutex_);
  auto it = sub_cache_.find(members);
  if (it != sub_cache_.end()) return it->second;
  int m = static_cast<int>(members.size());
  std::map<int, int> local;
  for (int i = 0; i < m; ++i) local[members[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it2 = local.find(mul(members[i], members[j]));
      if (it2 == local.end()) fail(ErrorKind::NotASubgroup, "member set is not closed");
      t[i][j] = it2->second;
    }
  auto g = std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(t)));
  sub_cache_[members] = g;
  return g;
}

Subgroup::Subgroup(std::shared_ptr<const FiniteGroup> parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= parent_->order()))
    fail(ErrorKind::NotASubgroup, "member index out of range");
  if (members_.empty() || members_[0] != 0) members_.insert(members_.begin(), 0);
  for (int a : members_)
    if (!std::binary_search(members_.begin(), members_.end(), parent_->inv(a)))
      fail(ErrorKind::NotASubgroup, "member set not closed under inversion");
  group_ = parent_->materialize(members_);  // also checks closure
}

bool Subgroup::contains(int parent_index) const {
  return std::binary_search(members_.begin(), members_.end(), parent_index);
}

int Subgroup::to_local(int parent_index) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), parent_index);
  if (it == members_.end() || *it != parent_index)
    fail(ErrorKind::NotASubgroup, "element not in subgroup");
  return static_cast<int>(it - members_.begin());
}

bool Subgroup::is_cyclic() const {
  for (int i = 0; i < group_->order(); ++i)
    if (group_->element_order(i) == group_->order()) return true;
  return false;
}

int Subgroup::generator() const {
  for (int i = 0; i < group_->order(); ++i)
    if (group_->element_order(i) == group_->order()) return i;
  fail(ErrorKind::NotCyclic, "subgroup is not cyclic");
}

}  // namespace ramiq
