#include "ramiq/chevalley_weil.hpp"

namespace ramiq {

namespace {

ClassFunction assemble_chi(const Scenario& s) {
  ClassFunction acc =
      ClassFunction::regular(s.group).scaled(s.global_euler / s.group->order());
  for (const Stratum& z : s.strata) acc = acc + gamma(z, s.group);
  return acc;
}

// True when Z is a component of X^g: g stabilizes Z and fixes no normal
// direction at Z.
bool stratum_meets(const Stratum& z, int g) {
  if (!z.stabilizer.contains(g)) return false;
  int local = z.stabilizer.to_local(g);
  for (const auto& e : z.normal)
    if (e.character.value(local).is_one()) return false;
  return true;
}

Cyclotomic stratum_fixed_point_term(const Stratum& z, int g) {
  int local = z.stabilizer.to_local(g);
  if (z.dim == StratumDim::ambient) return z.ambient_chi->at_element(local);
  Cyclotomic one(1);
  Cyclotomic e0(0), e1(0);
  for (const auto& s : z.sheaf) {
    Cyclotomic psi = s.character.value(local);
    e0 += Cyclotomic(static_cast<std::int64_t>(s.rank)) * psi;
    e1 += Cyclotomic(s.degree) * psi;
  }
  Cyclotomic l0(1), ratio(0);
  for (const auto& e : z.normal) {
    Cyclotomic phi = e.character.value(local);
    l0 *= (one - phi).pow(e.multiplicity);
    ratio += Cyclotomic(Rational(e.multiplicity * e.degree)) * phi * (one - phi).inverse();
  }
  Cyclotomic inv0 = l0.inverse();
  if (z.dim == StratumDim::point) return e0 * inv0;
  // degree-2 coefficient of ch(E) td (ch lambda)^{-1}, value-wise at g; the
  // inverse is (1/L0, -L1/L0^2) with L1 = -L0 * ratio.
  Cyclotomic inv1 = ratio * inv0;
  Cyclotomic td1(1 - z.genus);
  return e0 * inv0 * td1 + e0 * inv1 + e1 * inv0;
}

Cyclotomic lefschetz_rhs(const Scenario& s, int g, std::string* note) {
  if (g == 0) return Cyclotomic(s.global_euler);
  Cyclotomic sum(0);
  bool any = false;
  for (const Stratum& z : s.strata) {
    if (!stratum_meets(z, g)) continue;
    if (z.dim == StratumDim::ambient && !z.ambient_chi)
      fail(ErrorKind::MissingAmbientChi,
           "stratum '" + z.id + "' needs an equivariant chi for the trace check");
    any = true;
    sum += stratum_fixed_point_term(z, g);
  }
  if (!any && note) *note = "no stratum contains this element";
  return sum;
}

}  // namespace

std::pair<Cyclotomic, Cyclotomic> lefschetz_trace_check(const Scenario& s, int g) {
  ClassFunction chi = assemble_chi(s);
  return {chi.at_element(g), lefschetz_rhs(s, g, nullptr)};
}

Report chi_g(const Scenario& s) {
  s.validate();
  Report r{assemble_chi(s), {}, false, {}, {}, true};
  for (const Stratum& z : s.strata)
    r.per_stratum_gamma.emplace_back(z.id, gamma(z, s.group));

  // constructor invariant of the theorem, asserted independently of assemble
  ClassFunction recomposed =
      ClassFunction::regular(s.group).scaled(s.global_euler / s.group->order());
  for (const auto& [id, gm] : r.per_stratum_gamma) recomposed = recomposed + gm;
  if (recomposed != r.chi_g)
    fail(ErrorKind::InternalCheck, "report invariant violated");

  Decomposition d = decompose(r.chi_g, s.character_table());
  r.multiplicities = std::move(d.multiplicities);
  r.integral = d.integral;

  for (int c = 0; c < s.group->num_classes(); ++c) {
    TraceRow row;
    row.class_index = c;
    row.representative = s.group->class_rep(c);
    row.lhs = r.chi_g.at_class(c);
    row.rhs = lefschetz_rhs(s, row.representative, &row.note);
    row.match = row.lhs == row.rhs;
    if (row.match) row.note.clear();
    r.traces_consistent = r.traces_consistent && row.match;
    r.trace_table.push_back(std::move(row));
  }
  return r;
}

ClassFunction z2n_surface(const Scenario& s) {
  s.validate();
  if (s.ambient_dim != 2)
    fail(ErrorKind::HypothesisViolation, "z2n_surface needs a surface ambient");
  for (int x = 0; x < s.group->order(); ++x)
    if (s.group->element_order(x) > 2)
      fail(ErrorKind::HypothesisViolation, "z2n_surface needs an elementary abelian 2-group");

  Rational order(s.group->order());
  ClassFunction acc = ClassFunction::regular(s.group).scaled(s.global_euler / order);
  for (const Stratum& z : s.strata) {
    if (z.dim == StratumDim::ambient) {
      if (z.stabilizer.order() > 1)
        fail(ErrorKind::HypothesisViolation, "z2n_surface needs a faithful action");
      continue;
    }
    std::vector<Subgroup> hz = compute_hz(z, s.group);
    if (hz.size() != 1)
      fail(ErrorKind::HypothesisViolation,
           "stratum '" + z.id + "' does not have a unique inertial subgroup");
    const Subgroup& h = hz[0];
    if (h.order() != 2)
      fail(ErrorKind::HypothesisViolation,
           "stratum '" + z.id + "' has an inertial subgroup of order != 2");
    const auto& hg = h.group();
    ClassFunction inner = ClassFunction::zero(hg);
    if (z.dim == StratumDim::point) {
      for (const auto& e : z.sheaf) {
        std::vector<Cyclotomic> vals(h.order());
        for (int x = 0; x < h.order(); ++x)
          vals[x] = e.character.value(z.stabilizer.to_local(h.to_parent(x)));
        inner = inner + ClassFunction::from_element_values(hg, vals)
                            .scaled(Rational(e.rank));
      }
      inner = inner - ClassFunction::regular(hg).scaled(Rational(s.sheaf_rank, 2));
    } else {
      if (!z.kc)
        fail(ErrorKind::HypothesisViolation,
             "stratum '" + z.id + "' needs K.C for the closed form");
      Rational coeff = 0;
      for (const auto& e : z.sheaf) {
        Cyclotomic sign = e.character.value(z.stabilizer.to_local(h.to_parent(h.order() - 1)));
        Rational plus = sign.is_one() ? 1 : -1;
        coeff += plus * (Rational(-*z.kc) * e.rank + 2 * Rational(e.degree));
      }
      inner = (ClassFunction::trivial(hg) -
               ClassFunction::regular(hg).scaled(Rational(1, 2)))
                  .scaled(coeff);
    }
    acc = acc + induce(inner, h).scaled(Rational(1) / (2 * order));
  }
  return acc;
}

}  // namespace ramiq
