#include <doctest.h>

#include "helpers.hpp"

using namespace ramiq;
using test_helpers::kind_of;
using test_helpers::make_cf;

namespace {

std::vector<Rational> multiplicities(const std::string& name) {
  return chi_g(corpus_scenario(name)).multiplicities;
}

}  // namespace

TEST_CASE("corpus: antipodal involution on the line") {
  Scenario s = corpus_scenario("p1_antipode");
  Report r = chi_g(s);
  CHECK(r.chi_g == ClassFunction::trivial(s.group));
  CHECK(r.multiplicities == std::vector<Rational>{1, 0});
  CHECK(r.integral);
  CHECK(r.traces_consistent);
}

TEST_CASE("corpus: hyperelliptic involution with the canonical sheaf") {
  Scenario s = corpus_scenario("genus2_hyperelliptic");
  Report r = chi_g(s);
  CHECK(s.global_euler == Rational(1));
  CHECK(r.multiplicities == std::vector<Rational>{-1, 2});  // chi_G = 2 sign - trivial
  CHECK(r.integral);
  CHECK(r.traces_consistent);
  // the trace of the involution is -3, from six simple fixed points
  CHECK(r.chi_g.at_element(1) == Cyclotomic(-3));
}

TEST_CASE("corpus: quadric involution with two fixed fibers") {
  Scenario s = corpus_scenario("p1xp1_involution");
  Report r = chi_g(s);
  CHECK(r.chi_g == ClassFunction::trivial(s.group));
  CHECK(z2n_surface(s) == r.chi_g);
  CHECK(r.traces_consistent);
}

TEST_CASE("corpus: Klein four group on the quadric") {
  Scenario s = corpus_scenario("klein4_surface");
  Report r = chi_g(s);
  CHECK(r.chi_g == ClassFunction::trivial(s.group));
  CHECK(z2n_surface(s) == r.chi_g);
  CHECK(r.traces_consistent);
  // the isolated fixed point contributes only at the product involution
  const ClassFunction& p00 = r.per_stratum_gamma[0].second;
  CHECK(r.per_stratum_gamma[0].first == "P00");
  CHECK(p00.at_element(0) == Cyclotomic(0));
  CHECK(p00.at_element(1) == Cyclotomic(0));
  CHECK(p00.at_element(2) == Cyclotomic(0));
  CHECK(p00.at_element(3) == Cyclotomic(Rational(1, 4)));
}

TEST_CASE("corpus: free cyclic action") {
  Scenario s = corpus_scenario("free_action_curve");
  Report r = chi_g(s);
  CHECK(r.chi_g == -ClassFunction::regular(s.group));
  CHECK(r.multiplicities == std::vector<Rational>{-1, -1, -1});
  CHECK(r.traces_consistent);
}

TEST_CASE("corpus: order-four rotation of the line") {
  Scenario s = corpus_scenario("z4_curve");
  Report r = chi_g(s);
  CHECK(r.chi_g == ClassFunction::trivial(s.group));
  CHECK(r.multiplicities == std::vector<Rational>{1, 0, 0, 0});
  CHECK(r.traces_consistent);
}

TEST_CASE("Lefschetz check at the identity returns the Euler characteristic") {
  for (const std::string& name : corpus_names()) {
    Scenario s = corpus_scenario(name);
    auto [lhs, rhs] = lefschetz_trace_check(s, 0);
    CHECK(lhs == Cyclotomic(s.global_euler));
    CHECK(rhs == lhs);
  }
}

TEST_CASE("Lefschetz check on every conjugacy class of the corpus") {
  for (const std::string& name : corpus_names()) {
    Scenario s = corpus_scenario(name);
    for (int c = 0; c < s.group->num_classes(); ++c) {
      auto [lhs, rhs] = lefschetz_trace_check(s, s.group->class_rep(c));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("a deleted stratum is flagged") {
  // The truncated stratum list stays internally trace-consistent (both sides
  // of the fixed-point identity are computed from the same data), but the
  // resulting virtual module is no longer integral, which trips the flag.
  Scenario s = corpus_scenario("genus2_hyperelliptic");
  s.strata.pop_back();
  Report r = chi_g(s);
  CHECK_FALSE(r.integral);

  // Deleting a rotation fixed point leaves fractional multiplicities too.
  Scenario z = corpus_scenario("z4_curve");
  z.strata.pop_back();
  Report rz = chi_g(z);
  CHECK_FALSE(rz.integral);
  CHECK(rz.multiplicities == std::vector<Rational>{{5, 8}, {3, 8}, {1, 8}, {-1, 8}});
}

TEST_CASE("multiplicity formula recomputed independently") {
  for (const std::string& name : corpus_names()) {
    Scenario s = corpus_scenario(name);
    Report r = chi_g(s);
    const CharacterTable& table = s.character_table();
    for (int m = 0; m < table.size(); ++m) {
      const ClassFunction& irr = table.irreducibles()[m];
      Cyclotomic mu = Cyclotomic(irr.at_element(0).to_rational() * s.global_euler /
                                 s.group->order());
      for (const Stratum& z : s.strata) {
        if (z.dim == StratumDim::ambient) {
          mu += inner_product(irr, gamma(z, s.group));
          continue;
        }
        for (const Subgroup& h : compute_hz(z, s.group)) {
          ChTd ct = ch_and_todd(z, h);
          GradedClassValue integrand = ct.ch_e * tau(z, h) * ct.td;
          ClassFunction local =
              theta(h) * (z.dim == StratumDim::curve ? integrand.c1 : integrand.c0);
          mu += Cyclotomic(Rational(h.order(), s.group->order())) *
                inner_product(restrict_to(irr, h), local);
        }
      }
      CHECK(mu == Cyclotomic(r.multiplicities[m]));
    }
  }
}

TEST_CASE("curve Euler characteristics") {
  CHECK(curve_euler(1, 0, 0) == Rational(1));
  CHECK(curve_euler(1, 2, 2) == Rational(1));
  CHECK(curve_euler(2, -4, 0) == Rational(-2));
}

TEST_CASE("cotangent preset") {
  Scenario s = corpus_scenario("p1xp1_involution");
  s.sheaf_kind = SheafKind::cotangent;
  s = surface_sheaf_presets(std::move(s));
  CHECK(s.global_euler == Rational(-2));  // K^2 - 10 chi(O) = 8 - 10
  CHECK(s.sheaf_rank == 2);
  Report r = chi_g(s);
  CHECK(r.integral);
  CHECK(r.traces_consistent);
  CHECK(z2n_surface(s) == r.chi_g);

  Scenario k = corpus_scenario("klein4_surface");
  k.sheaf_kind = SheafKind::cotangent;
  k = surface_sheaf_presets(std::move(k));
  Report rk = chi_g(k);
  CHECK(rk.integral);
  CHECK(rk.traces_consistent);
  CHECK(z2n_surface(k) == rk.chi_g);
}

TEST_CASE("canonical power presets") {
  for (int n = -2; n <= 3; ++n) {
    for (const char* name : {"p1xp1_involution", "klein4_surface"}) {
      Scenario s = corpus_scenario(name);
      s.sheaf_kind = SheafKind::canonical_power;
      s.canonical_n = n;
      s = surface_sheaf_presets(std::move(s));
      CHECK(s.global_euler == Rational(1) + Rational(n * (n - 1)) * 8 / 2);
      Report r = chi_g(s);
      CHECK(r.integral);
      CHECK(r.traces_consistent);
      CHECK(z2n_surface(s) == r.chi_g);
    }
  }
}

TEST_CASE("preset hypotheses") {
  Scenario s = corpus_scenario("z4_curve");
  s.sheaf_kind = SheafKind::cotangent;
  CHECK(kind_of([&] { surface_sheaf_presets(s); }) == ErrorKind::HypothesisViolation);

  Scenario c = corpus_scenario("p1_antipode");
  c.sheaf_kind = SheafKind::canonical_power;
  CHECK(kind_of([&] { surface_sheaf_presets(c); }) == ErrorKind::HypothesisViolation);
}

TEST_CASE("z2n_surface demands its hypotheses") {
  CHECK(kind_of([&] { z2n_surface(corpus_scenario("p1_antipode")); }) ==
        ErrorKind::HypothesisViolation);
}

TEST_CASE("scenario validation catches duplicate ids") {
  Scenario s = corpus_scenario("p1_antipode");
  s.strata[1].id = "P0";
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidInput);
}

TEST_CASE("report invariant ties chi_G to the strata") {
  Scenario s = corpus_scenario("klein4_surface");
  Report r = chi_g(s);
  ClassFunction sum =
      ClassFunction::regular(s.group).scaled(s.global_euler / s.group->order());
  for (const auto& [id, gm] : r.per_stratum_gamma) sum = sum + gm;
  CHECK(sum == r.chi_g);
}
