// Acceptance gate: one line per criterion, exact equality throughout.
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ramiq/chevalley_weil.hpp"
#include "ramiq/corpus.hpp"

using namespace ramiq;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label
            << detail << "\n";
  if (!ok) ++g_failures;
}

ClassFunction random_cf(const std::shared_ptr<const FiniteGroup>& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), pick(0, 4);
  std::vector<Cyclotomic> vals(g->num_classes());
  for (auto& v : vals) {
    v = Cyclotomic(Rational(num(rng), den(rng)));
    if (pick(rng) == 0)
      v += Cyclotomic(Rational(num(rng))) *
           Cyclotomic::root_of_unity(g->exponent(), pick(rng));
  }
  return ClassFunction(g, std::move(vals));
}

std::vector<ClassFunction> s3_rows(const std::shared_ptr<const FiniteGroup>& g) {
  auto by_order = [&](std::int64_t at1, std::int64_t at2, std::int64_t at3) {
    std::vector<Cyclotomic> vals(g->order());
    for (int x = 0; x < g->order(); ++x) {
      int o = g->element_order(x);
      vals[x] = Cyclotomic(o == 1 ? at1 : o == 2 ? at2 : at3);
    }
    return ClassFunction::from_element_values(g, vals);
  };
  return {by_order(1, 1, 1), by_order(1, -1, 1), by_order(2, 0, -1)};
}

}  // namespace

int main() {
  criterion(1, "antipodal involution on the line yields the trivial module", [] {
    Scenario s = corpus_scenario("p1_antipode");
    Report r = chi_g(s);
    return r.chi_g == ClassFunction::trivial(s.group) &&
           r.multiplicities == std::vector<Rational>{1, 0};
  });

  criterion(2, "hyperelliptic involution with the canonical sheaf gives 2 sign - trivial",
            [] {
              Scenario s = corpus_scenario("genus2_hyperelliptic");
              Report r = chi_g(s);
              return r.multiplicities == std::vector<Rational>{-1, 2} && r.integral;
            });

  criterion(3, "quadric involution matches the order-2 surface closed form", [] {
    Scenario s = corpus_scenario("p1xp1_involution");
    Report r = chi_g(s);
    return r.chi_g == ClassFunction::trivial(s.group) && z2n_surface(s) == r.chi_g;
  });

  criterion(4, "holomorphic fixed-point identity on every corpus conjugacy class", [] {
    for (const std::string& name : corpus_names()) {
      Scenario s = corpus_scenario(name);
      for (int c = 0; c < s.group->num_classes(); ++c) {
        auto [lhs, rhs] = lefschetz_trace_check(s, s.group->class_rep(c));
        if (lhs != rhs) return false;
        if (s.group->class_rep(c) == 0 && lhs != Cyclotomic(s.global_euler)) return false;
      }
    }
    return true;
  });

  criterion(5, "induction-restriction recovery is the identity on random modules", [] {
    std::mt19937 rng(0x5eed);
    auto s3 = FiniteGroup::from_permutation_generators({{{1, 2}}, {{1, 2, 3}}});
    std::vector<std::shared_ptr<const FiniteGroup>> groups{
        FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
        FiniteGroup::abelian_product({2, 2}), s3};
    irreducible_characters(s3, s3_rows(s3));  // table exists and validates
    for (const auto& g : groups)
      for (int rep = 0; rep < 100; ++rep) {
        ClassFunction chi = random_cf(g, rng);
        if (artin_recover(chi) != chi) return false;
      }
    return true;
  });

  criterion(6, "characteristic modules: recursion equals the direct form", [] {
    for (const std::string& name : corpus_names()) {
      auto g = corpus_scenario(name).group;
      for (const Subgroup& h : g->cyclic_subgroups()) {
        if (theta(h) != theta_via_recursion(h)) return false;
        if (h.order() > 1 && !theta(h).at_element(0).is_zero()) return false;
      }
    }
    return true;
  });

  criterion(7, "tau inverts ch lambda on every corpus stratum pair", [] {
    for (const std::string& name : corpus_names()) {
      Scenario s = corpus_scenario(name);
      for (const Stratum& z : s.strata) {
        if (z.dim == StratumDim::ambient) continue;
        for (const Subgroup& h : compute_hz(z, s.group)) {
          GradedClassValue product = tau(z, h) * ch_lambda(z, h);
          if (product.c0 != theta_z(z, h) || !product.c1.is_zero()) return false;
        }
      }
    }
    return true;
  });

  criterion(8, "closed forms agree with the engine, presets included", [] {
    for (const std::string& name : corpus_names()) {
      Scenario s = corpus_scenario(name);
      for (const Stratum& z : s.strata) {
        ClassFunction engine = gamma(z, s.group);
        if (z.dim == StratumDim::point && engine != gamma_point(z, s.group)) return false;
        if (z.dim != StratumDim::ambient && z.stabilizer.is_cyclic() &&
            engine != gamma_cyclic(z, s.group))
          return false;
        if (z.dim == StratumDim::curve && engine != gamma_curve(z, s.group)) return false;
      }
    }
    for (const char* name : {"p1xp1_involution", "klein4_surface"}) {
      Scenario base = corpus_scenario(name);
      Scenario ct = base;
      ct.sheaf_kind = SheafKind::cotangent;
      ct = surface_sheaf_presets(std::move(ct));
      if (ct.global_euler != Rational(*ct.k2) - 10 * Rational(*ct.chi_o)) return false;
      if (z2n_surface(ct) != chi_g(ct).chi_g) return false;
      for (int n = -2; n <= 3; ++n) {
        Scenario cp = base;
        cp.sheaf_kind = SheafKind::canonical_power;
        cp.canonical_n = n;
        cp = surface_sheaf_presets(std::move(cp));
        if (cp.global_euler !=
            Rational(*cp.chi_o) + Rational(n * (n - 1)) * Rational(*cp.k2) / 2)
          return false;
        if (z2n_surface(cp) != chi_g(cp).chi_g) return false;
      }
    }
    return true;
  });

  criterion(9, "integral corpus, and a deleted stratum trips the consistency flags", [] {
    for (const std::string& name : corpus_names())
      if (!chi_g(corpus_scenario(name)).integral) return false;
    Scenario s = corpus_scenario("genus2_hyperelliptic");
    s.strata.pop_back();
    Report r = chi_g(s);
    bool flagged = !r.integral || !r.traces_consistent;  // drives exit status 2
    return flagged;
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all 9 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return 1;
}
