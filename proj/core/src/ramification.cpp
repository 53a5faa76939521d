#include "ramiq/ramification.hpp"

#include <algorithm>

namespace ramiq {

namespace {

void check_parent(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g) {
  if (z.stabilizer.parent().get() != g.get())
    fail(ErrorKind::GroupMismatch, "stratum stabilizer belongs to a different group");
}

void check_under_stabilizer(const Stratum& z, const Subgroup& h) {
  for (int p : h.members())
    if (!z.stabilizer.contains(p))
      fail(ErrorKind::NotASubgroup, "subgroup is not contained in the stabilizer");
}

// Value of the j-th conormal eigencharacter at a parent-group element.
Cyclotomic normal_value(const Stratum& z, std::size_t j, int parent_elem) {
  return z.normal[j].character.value(z.stabilizer.to_local(parent_elem));
}

// A stabilizer-group character restricted to a subgroup of G lying inside the
// stabilizer, as a character on h.group().
LinearCharacter restrict_to_sub(const Stratum& z, const LinearCharacter& chi,
                                const Subgroup& h) {
  std::vector<Cyclotomic> vals(h.order());
  for (int x = 0; x < h.order(); ++x)
    vals[x] = chi.value(z.stabilizer.to_local(h.to_parent(x)));
  return LinearCharacter(h.group(), std::move(vals));
}

bool in_k_set(const Stratum& z, int parent_elem) {
  if (z.dim == StratumDim::ambient) return parent_elem == 0;
  for (std::size_t j = 0; j < z.normal.size(); ++j)
    if (normal_value(z, j, parent_elem).is_one()) return true;
  return false;
}

}  // namespace

std::vector<Subgroup> compute_hz(const Stratum& z,
                                 const std::shared_ptr<const FiniteGroup>& g) {
  check_parent(z, g);
  std::vector<Subgroup> out;
  for (const Subgroup& local : z.stabilizer.group()->cyclic_subgroups()) {
    std::vector<int> members;
    members.reserve(local.order());
    for (int x : local.members()) members.push_back(z.stabilizer.to_parent(x));
    std::sort(members.begin(), members.end());
    if (z.dim == StratumDim::ambient) {
      out.emplace_back(g, std::move(members));
      continue;
    }
    if (local.order() == 1) continue;
    // Z is a full component of X^H iff no conormal eigencharacter dies on H.
    bool ok = true;
    for (std::size_t j = 0; j < z.normal.size() && ok; ++j) {
      bool nontrivial = false;
      for (int p : members) nontrivial = nontrivial || !normal_value(z, j, p).is_one();
      ok = nontrivial;
    }
    if (ok) out.emplace_back(g, std::move(members));
  }
  if (out.empty())
    fail(ErrorKind::EmptyHZ, "stratum '" + z.id + "' admits no inertial subgroup");
  return out;
}

std::vector<int> k_set(const Stratum& z, const Subgroup& h) {
  check_parent(z, h.parent());
  check_under_stabilizer(z, h);
  std::vector<int> out;
  for (int p : h.members())
    if (in_k_set(z, p)) out.push_back(p);
  return out;
}

ClassFunction theta_z(const Stratum& z, const Subgroup& h) {
  check_under_stabilizer(z, h);
  std::vector<Cyclotomic> vals(h.order());
  for (int x = 0; x < h.order(); ++x)
    vals[x] = Cyclotomic(in_k_set(z, h.to_parent(x)) ? 0 : 1);
  ClassFunction direct = ClassFunction::from_element_values(h.group(), vals);
  if (debug_asserts_enabled() && direct != theta_z_inductive(z, h))
    fail(ErrorKind::InternalCheck, "theta_Z recursion disagrees with the direct form");
  return direct;
}

ClassFunction theta_z_inductive(const Stratum& z, const Subgroup& h) {
  check_under_stabilizer(z, h);
  const auto& hg = h.group();
  ClassFunction acc = ClassFunction::trivial(hg);
  for (const Subgroup& b : hg->cyclic_subgroups()) {
    bool inside_k = true;
    for (int x : b.members()) inside_k = inside_k && in_k_set(z, h.to_parent(x));
    if (!inside_k) continue;
    acc = acc - induce(theta(b), b).scaled(Rational(b.order(), hg->order()));
  }
  return acc;
}

GradedClassValue tau(const Stratum& z, const Subgroup& h) {
  check_under_stabilizer(z, h);
  const auto& hg = h.group();
  Cyclotomic one(1);
  std::vector<Cyclotomic> v0(h.order()), v1(h.order());
  for (int x = 0; x < h.order(); ++x) {
    int p = h.to_parent(x);
    if (in_k_set(z, p)) continue;  // tau is supported off K_{Z,H}
    Cyclotomic c0(1), corr(0);
    for (std::size_t j = 0; j < z.normal.size(); ++j) {
      Cyclotomic phi = normal_value(z, j, p);
      Cyclotomic inv = (one - phi).inverse();
      c0 *= inv.pow(z.normal[j].multiplicity);
      if (z.dim == StratumDim::curve)
        corr += Cyclotomic(Rational(z.normal[j].multiplicity * z.normal[j].degree)) *
                phi * inv;
    }
    v0[x] = c0;
    if (z.dim == StratumDim::curve) v1[x] = c0 * corr;
  }
  GradedClassValue out(ClassFunction::from_element_values(hg, v0),
                       ClassFunction::from_element_values(hg, v1));
  if (debug_asserts_enabled()) {
    GradedClassValue lhs = out * ch_lambda(z, h);
    GradedClassValue want(theta_z(z, h), ClassFunction::zero(hg));
    if (!(lhs == want))
      fail(ErrorKind::InternalCheck, "tau is not a partial inverse of ch lambda");
  }
  return out;
}

GradedClassValue ch_lambda(const Stratum& z, const Subgroup& h) {
  check_under_stabilizer(z, h);
  const auto& hg = h.group();
  std::vector<Cyclotomic> v0(h.order()), v1(h.order());
  Cyclotomic one(1);
  for (int x = 0; x < h.order(); ++x) {
    int p = h.to_parent(x);
    Cyclotomic c0(1);
    for (std::size_t j = 0; j < z.normal.size(); ++j)
      c0 *= (one - normal_value(z, j, p)).pow(z.normal[j].multiplicity);
    v0[x] = c0;
    if (z.dim != StratumDim::curve) continue;
    // c1 as the formal derivative term, with no division so K poses no issue:
    // sum_j m_j d_j (-phi_j) (1-phi_j)^{m_j-1} prod_{k!=j} (1-phi_k)^{m_k}
    Cyclotomic c1(0);
    for (std::size_t j = 0; j < z.normal.size(); ++j) {
      Cyclotomic term = Cyclotomic(Rational(z.normal[j].multiplicity * z.normal[j].degree)) *
                        (-normal_value(z, j, p)) *
                        (one - normal_value(z, j, p)).pow(z.normal[j].multiplicity - 1);
      for (std::size_t k = 0; k < z.normal.size(); ++k)
        if (k != j) term *= (one - normal_value(z, k, p)).pow(z.normal[k].multiplicity);
      c1 += term;
    }
    v1[x] = c1;
  }
  return GradedClassValue(ClassFunction::from_element_values(hg, v0),
                          ClassFunction::from_element_values(hg, v1));
}

ChTd ch_and_todd(const Stratum& z, const Subgroup& h) {
  check_under_stabilizer(z, h);
  const auto& hg = h.group();
  std::vector<Cyclotomic> e0(h.order()), e1(h.order());
  for (int x = 0; x < h.order(); ++x) {
    int p = h.to_parent(x);
    Cyclotomic c0(0), c1(0);
    for (const auto& s : z.sheaf) {
      Cyclotomic psi = s.character.value(z.stabilizer.to_local(p));
      c0 += Cyclotomic(static_cast<std::int64_t>(s.rank)) * psi;
      if (z.dim == StratumDim::curve) c1 += Cyclotomic(s.degree) * psi;
    }
    e0[x] = c0;
    e1[x] = c1;
  }
  GradedClassValue ch_e(ClassFunction::from_element_values(hg, e0),
                        ClassFunction::from_element_values(hg, e1));
  ClassFunction td1 = z.dim == StratumDim::curve
                          ? ClassFunction::constant(hg, Cyclotomic(1 - z.genus))
                          : ClassFunction::zero(hg);
  GradedClassValue td(ClassFunction::trivial(hg), std::move(td1));
  return ChTd{std::move(ch_e), std::move(td)};
}

namespace {

// Integrate over Z: pick the coefficient matching the stratum dimension.
ClassFunction integrate(const Stratum& z, const GradedClassValue& v) {
  return z.dim == StratumDim::curve ? v.c1 : v.c0;
}

ClassFunction finish(const Stratum& z, ClassFunction result) {
  if (!result.at_element(0).is_zero())
    fail(ErrorKind::InternalCheck,
         "ramification module of '" + z.id + "' has nonzero virtual dimension");
  return result;
}

}  // namespace

ClassFunction gamma(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g) {
  check_parent(z, g);
  if (z.dim == StratumDim::ambient) return gamma_ambient(z, g);
  ClassFunction acc = ClassFunction::zero(g);
  for (const Subgroup& h : compute_hz(z, g)) {
    ChTd ct = ch_and_todd(z, h);
    GradedClassValue integrand = ct.ch_e * tau(z, h) * ct.td;
    ClassFunction inner = theta(h) * integrate(z, integrand);
    acc = acc + induce(inner, h).scaled(Rational(h.order(), g->order()));
  }
  return finish(z, std::move(acc));
}

ClassFunction gamma_point(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g) {
  check_parent(z, g);
  if (z.dim != StratumDim::point)
    fail(ErrorKind::HypothesisViolation, "gamma_point needs a point stratum");
  ClassFunction acc = ClassFunction::zero(g);
  for (const Subgroup& h : compute_hz(z, g)) {
    const auto& hg = h.group();
    // td_H as a polynomial: prod_phi (-(1/|phi|) sum_d d phi^d)^{m_phi}
    ClassFunction td_h = ClassFunction::trivial(hg);
    for (const auto& e : z.normal) {
      LinearCharacter phi = restrict_to_sub(z, e.character, h);
      int n = phi.order();
      ClassFunction s = ClassFunction::zero(hg);
      for (int d = 1; d < n; ++d)
        s = s + phi.power(d).to_class_function().scaled(Rational(d));
      s = s.scaled(Rational(-1, n));
      for (int rep = 0; rep < e.multiplicity; ++rep) td_h = td_h * s;
    }
    ClassFunction ch0 = ClassFunction::zero(hg);
    for (const auto& s : z.sheaf)
      ch0 = ch0 + restrict_to_sub(z, s.character, h)
                      .to_class_function()
                      .scaled(Rational(s.rank));
    acc = acc + induce(theta(h) * ch0 * td_h, h).scaled(Rational(h.order(), g->order()));
  }
  return finish(z, std::move(acc));
}

ClassFunction gamma_curve(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g) {
  check_parent(z, g);
  if (z.dim != StratumDim::curve)
    fail(ErrorKind::HypothesisViolation, "gamma_curve needs a curve stratum");
  if (!z.stabilizer.is_cyclic())
    fail(ErrorKind::HypothesisViolation, "gamma_curve needs a cyclic stabilizer");
  if (z.normal.size() != 1 || z.normal[0].multiplicity != 1)
    fail(ErrorKind::HypothesisViolation, "gamma_curve needs a single conormal eigen-line");
  const auto& gc = z.stabilizer.group();
  const LinearCharacter& phi = z.normal[0].character;
  int n = gc->order();
  if (phi.order() != n)
    fail(ErrorKind::HypothesisViolation, "gamma_curve needs a faithful conormal character");
  Integer c_sq = z.c_squared ? Integer(*z.c_squared) : Integer(-z.normal[0].degree);

  ClassFunction s = ClassFunction::zero(gc);
  for (int d = 1; d < n; ++d)
    s = s + phi.power(d).to_class_function().scaled(Rational(d));

  ClassFunction inner = ClassFunction::zero(gc);
  for (const auto& eig : z.sheaf) {
    Rational chi_e = Rational(eig.rank) * Rational(1 - z.genus) + Rational(eig.degree);
    ClassFunction part = s.scaled(chi_e / n) +
                         (s * s * phi.to_class_function())
                             .scaled(Rational(eig.rank) * Rational(c_sq) / (Rational(n) * n));
    inner = inner + eig.character.to_class_function() * part;
  }
  ClassFunction theta_c =
      ClassFunction::trivial(gc) - ClassFunction::regular(gc).scaled(Rational(1, n));
  ClassFunction local = (theta_c * inner).scaled(Rational(-1));
  return finish(z, induce(local, z.stabilizer).scaled(Rational(n, g->order())));
}

ClassFunction gamma_cyclic(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g) {
  check_parent(z, g);
  if (z.dim == StratumDim::ambient)
    fail(ErrorKind::HypothesisViolation, "gamma_cyclic needs a positive-codimension stratum");
  if (!z.stabilizer.is_cyclic())
    fail(ErrorKind::HypothesisViolation, "gamma_cyclic needs a cyclic stabilizer");
  ChTd ct = ch_and_todd(z, z.stabilizer);
  GradedClassValue integrand = ct.ch_e * tau(z, z.stabilizer) * ct.td;
  ClassFunction local = integrate(z, integrand);
  return finish(z, induce(local, z.stabilizer)
                       .scaled(Rational(z.stabilizer.order(), g->order())));
}

ClassFunction gamma_ambient(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g) {
  check_parent(z, g);
  if (z.dim != StratumDim::ambient)
    fail(ErrorKind::HypothesisViolation, "gamma_ambient needs an ambient stratum");
  if (z.stabilizer.order() == 1) return ClassFunction::zero(g);
  if (!z.ambient_chi)
    fail(ErrorKind::MissingAmbientChi,
         "stratum '" + z.id + "' has a nontrivial stabilizer but no equivariant chi");
  const ClassFunction& chi = *z.ambient_chi;
  const Cyclotomic& dim = chi.at_element(0);
  if (!dim.is_rational())
    fail(ErrorKind::InvalidStratum, "ambient equivariant chi has irrational dimension");
  ClassFunction induced =
      induce(chi, z.stabilizer).scaled(Rational(z.stabilizer.order(), g->order()));
  ClassFunction reg = ClassFunction::regular(g).scaled(dim.to_rational() / g->order());
  return finish(z, induced - reg);
}

}  // namespace ramiq
