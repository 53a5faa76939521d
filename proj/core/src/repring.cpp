#include "ramiq/repring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ramiq {

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group().get() != b.group().get())
    fail(ErrorKind::GroupMismatch, "inner product across different groups");
  const auto& g = *a.group();
  Cyclotomic sum(0);
  for (int c = 0; c < g.num_classes(); ++c)
    sum += Cyclotomic(static_cast<std::int64_t>(g.class_size(c))) * a.at_class(c) *
           b.at_class(c).conjugate();
  return sum * Cyclotomic(Rational(1, g.order()));
}

ClassFunction restrict_to(const ClassFunction& a, const Subgroup& h) {
  if (a.group().get() != h.parent().get())
    fail(ErrorKind::NotASubgroup, "restriction along a subgroup of a different group");
  const auto& hg = *h.group();
  std::vector<Cyclotomic> vals(hg.num_classes());
  for (int c = 0; c < hg.num_classes(); ++c)
    vals[c] = a.at_element(h.to_parent(hg.class_rep(c)));
  return ClassFunction(h.group(), std::move(vals));
}

ClassFunction induce(const ClassFunction& a, const Subgroup& h) {
  if (a.group().get() != h.group().get())
    fail(ErrorKind::NotASubgroup, "induction source does not live on the subgroup");
  const auto& g = *h.parent();
  std::vector<Cyclotomic> vals(g.num_classes());
  Cyclotomic scale{Rational(1, h.order())};
  for (int c = 0; c < g.num_classes(); ++c) {
    int rep = g.class_rep(c);
    Cyclotomic sum(0);
    for (int s = 0; s < g.order(); ++s) {
      int conj = g.conjugate(g.inv(s), rep);
      if (h.contains(conj)) sum += a.at_element(h.to_local(conj));
    }
    vals[c] = sum * scale;
  }
  return ClassFunction(h.parent(), std::move(vals));
}

ClassFunction theta(const Subgroup& h) {
  if (!h.is_cyclic()) fail(ErrorKind::NotCyclic, "theta requires a cyclic subgroup");
  const auto& hg = *h.group();
  std::vector<Cyclotomic> vals(hg.order());
  for (int x = 0; x < hg.order(); ++x)
    vals[x] = Cyclotomic(hg.element_order(x) == hg.order() ? 1 : 0);
  ClassFunction direct = ClassFunction::from_element_values(h.group(), vals);
  if (debug_asserts_enabled() && direct != theta_via_recursion(h))
    fail(ErrorKind::InternalCheck, "theta recursion disagrees with the direct form");
  return direct;
}

ClassFunction theta_via_recursion(const Subgroup& h) {
  if (!h.is_cyclic()) fail(ErrorKind::NotCyclic, "theta requires a cyclic subgroup");
  const auto& hg = h.group();
  ClassFunction acc = ClassFunction::trivial(hg);
  for (const Subgroup& b : hg->cyclic_subgroups()) {
    if (b.order() == hg->order()) continue;  // proper subgroups only
    acc = acc - induce(theta(b), b).scaled(Rational(b.order(), hg->order()));
  }
  return acc;
}

ClassFunction artin_recover(const ClassFunction& chi) {
  const auto& g = chi.group();
  ClassFunction acc = ClassFunction::zero(g);
  for (const Subgroup& h : g->cyclic_subgroups()) {
    ClassFunction term = induce(theta(h) * restrict_to(chi, h), h);
    acc = acc + term.scaled(Rational(h.order(), g->order()));
  }
  return acc;
}

ClassFunction localized_division(const ClassFunction& psi, const LinearCharacter& phi) {
  if (psi.group().get() != phi.group().get())
    fail(ErrorKind::GroupMismatch, "operands live on different groups");
  const auto& hg = psi.group();
  bool cyclic = false;
  for (int i = 0; i < hg->order(); ++i) cyclic = cyclic || hg->element_order(i) == hg->order();
  if (!cyclic || hg->order() == 1)
    fail(ErrorKind::NotCyclic, "localized division needs a nontrivial cyclic group");
  if (phi.is_trivial()) fail(ErrorKind::InvalidInput, "phi must be nontrivial");
  for (int x = 0; x < hg->order(); ++x)
    if (phi.value(x).is_one() && !psi.at_element(x).is_zero())
      fail(ErrorKind::SupportViolation, "psi does not vanish on the kernel of phi");

  Cyclotomic one(1);
  std::vector<Cyclotomic> vals(hg->order());
  for (int x = 0; x < hg->order(); ++x)
    vals[x] = phi.value(x).is_one() ? Cyclotomic(0)
                                    : psi.at_element(x) * (one - phi.value(x)).inverse();
  ClassFunction result = ClassFunction::from_element_values(hg, vals);

  // Polynomial representative: -(1/n) psi sum_{d=0}^{n-1} d phi^d with n = |phi|.
  int n = phi.order();
  ClassFunction poly = ClassFunction::zero(hg);
  for (int d = 1; d < n; ++d) {
    ClassFunction term = phi.power(d).to_class_function().scaled(Rational(d));
    poly = poly + term;
  }
  poly = (psi * poly).scaled(Rational(-1, n));
  if (result != poly)
    fail(ErrorKind::InternalCheck, "localized division disagrees with polynomial form");
  return result;
}

Decomposition decompose(const ClassFunction& chi, const CharacterTable& table) {
  if (chi.group().get() != table.group().get())
    fail(ErrorKind::GroupMismatch, "table is for a different group");
  Decomposition out;
  out.integral = true;
  for (const auto& irr : table.irreducibles()) {
    Cyclotomic ip = inner_product(chi, irr);
    if (!ip.is_rational())
      fail(ErrorKind::NotRationalMultiplicity, "irrational multiplicity " + ip.str());
    Rational r = ip.to_rational();
    out.integral = out.integral && is_integer(r);
    out.multiplicities.push_back(std::move(r));
  }
  return out;
}

namespace {

struct QuotientData {
  std::shared_ptr<const FiniteGroup> q;
  std::vector<int> coset_of;  // parent element -> quotient index
  std::vector<int> rep;       // quotient index -> parent representative
};

QuotientData quotient_by(const std::shared_ptr<const FiniteGroup>& g,
                         const std::vector<int>& sub_members) {
  QuotientData out;
  int n = g->order();
  out.coset_of.assign(n, -1);
  std::map<std::vector<int>, int> index;
  for (int x = 0; x < n; ++x) {
    if (out.coset_of[x] >= 0) continue;
    std::set<int> coset;
    for (int s : sub_members) coset.insert(g->mul(x, s));
    std::vector<int> key(coset.begin(), coset.end());
    auto [it, fresh] = index.emplace(key, static_cast<int>(index.size()));
    if (fresh) out.rep.push_back(key[0]);
    for (int y : key) out.coset_of[y] = it->second;
  }
  // identity coset is discovered first (x = 0), so it has index 0
  int m = static_cast<int>(out.rep.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = out.coset_of[g->mul(out.rep[i], out.rep[j])];
  out.q = FiniteGroup::from_cayley_table(std::move(t));
  return out;
}

// Internal direct-product decomposition of an abelian group: element indices
// b_1..b_k with G = <b_1> x ... x <b_k>. Uses the classical argument that a
// maximal-order cyclic subgroup is a direct summand, lifting a basis of the
// quotient with the exponent correction.
std::vector<int> abelian_basis(const std::shared_ptr<const FiniteGroup>& g) {
  if (g->order() == 1) return {};
  int g1 = 0, best = 1;
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(x) > best) {
      best = g->element_order(x);
      g1 = x;
    }
  std::vector<int> s_members;
  {
    int x = 0;
    do {
      s_members.push_back(x);
      x = g->mul(x, g1);
    } while (x != 0);
    std::sort(s_members.begin(), s_members.end());
  }
  QuotientData qd = quotient_by(g, s_members);
  std::vector<int> basis{g1};
  auto power = [&](int base, long long e) {
    long long ord = g->element_order(base);
    e %= ord;
    if (e < 0) e += ord;
    int acc = 0;
    for (long long i = 0; i < e; ++i) acc = g->mul(acc, base);
    return acc;
  };
  for (int xq : abelian_basis(qd.q)) {
    int m = qd.q->element_order(xq);
    int x = qd.rep[xq];
    int xm = power(x, m);
    // xm lies in <g1>; find its discrete log
    int c = 0, acc = 0;
    while (acc != xm) {
      acc = g->mul(acc, g1);
      ++c;
    }
    if (c % m != 0) fail(ErrorKind::InternalCheck, "basis lifting correction failed");
    basis.push_back(g->mul(x, power(g1, -(c / m))));
  }
  return basis;
}

CharacterTable abelian_dual(const std::shared_ptr<const FiniteGroup>& g) {
  std::vector<int> basis = abelian_basis(g);
  std::vector<int> orders;
  orders.reserve(basis.size());
  for (int b : basis) orders.push_back(g->element_order(b));

  // exponent vector of every element in the basis
  int n = g->order();
  std::vector<std::vector<int>> expo(n);
  std::vector<int> tuple(basis.size(), 0);
  long long count = 0;
  bool done = basis.empty();
  while (!done) {
    int elem = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int t = 0; t < tuple[i]; ++t) elem = g->mul(elem, basis[i]);
    expo[elem] = tuple;
    ++count;
    std::size_t i = basis.size();
    while (i-- > 0) {
      if (++tuple[i] < orders[i]) break;
      tuple[i] = 0;
      if (i == 0) done = true;
    }
  }
  if (basis.empty()) expo[0] = {};
  else if (count != n) fail(ErrorKind::InternalCheck, "abelian basis does not span");

  std::vector<ClassFunction> rows;
  std::vector<int> a(basis.size(), 0);
  for (int row = 0; row < n; ++row) {
    std::vector<Cyclotomic> vals(n);
    for (int x = 0; x < n; ++x) {
      Cyclotomic v(1);
      for (std::size_t i = 0; i < basis.size(); ++i)
        v *= Cyclotomic::root_of_unity(orders[i],
                                       static_cast<std::int64_t>(a[i]) * expo[x][i]);
      vals[x] = v;
    }
    rows.push_back(ClassFunction::from_element_values(g, vals));
    std::size_t i = basis.size();
    while (i-- > 0) {
      if (++a[i] < orders[i]) break;
      a[i] = 0;
    }
  }
  return CharacterTable(g, std::move(rows));
}

}  // namespace

CharacterTable irreducible_characters(std::shared_ptr<const FiniteGroup> g,
                                      std::optional<std::vector<ClassFunction>> supplied) {
  if (supplied) return CharacterTable(std::move(g), std::move(*supplied));
  if (!g->is_abelian())
    fail(ErrorKind::TableRequired, "non-abelian groups need a supplied character table");
  return abelian_dual(g);
}

}  // namespace ramiq
