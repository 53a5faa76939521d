#include <doctest.h>

#include "helpers.hpp"
#include "ramiq/cyclotomic.hpp"

using namespace ramiq;
using test_helpers::kind_of;

TEST_CASE("roots of unity satisfy their defining relations") {
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(i.pow(4) == Cyclotomic(1));

  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 * z3 + z3 + Cyclotomic(1) == Cyclotomic(0));

  // zeta_6^2 = zeta_3 across conductors
  CHECK(Cyclotomic::root_of_unity(6, 1).pow(2) == Cyclotomic::root_of_unity(3, 1));
  // exponents reduce mod N
  CHECK(Cyclotomic::root_of_unity(5, 7) == Cyclotomic::root_of_unity(5, 2));
  CHECK(Cyclotomic::root_of_unity(8, -1) == Cyclotomic::root_of_unity(8, 7));
}

TEST_CASE("field operations are exact") {
  Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  Cyclotomic a = Cyclotomic(1) + z5;
  CHECK(a * a.inverse() == Cyclotomic(1));
  CHECK(a - a == Cyclotomic(0));
  CHECK(-a + a == Cyclotomic(0));
  CHECK(a / a == Cyclotomic(1));
  CHECK(Rational(2, 3) * Cyclotomic(Rational(3, 2)) == Cyclotomic(1));
  CHECK(kind_of([] { Cyclotomic(0).inverse(); }) == ErrorKind::InvalidInput);
}

TEST_CASE("conjugation sends zeta to its inverse") {
  Cyclotomic z7 = Cyclotomic::root_of_unity(7, 1);
  CHECK(z7.conjugate() == Cyclotomic::root_of_unity(7, 6));
  CHECK(Cyclotomic(Rational(5, 3)).conjugate() == Cyclotomic(Rational(5, 3)));
  Cyclotomic v = z7 + z7.conjugate();
  CHECK(v.conjugate() == v);  // real value
}

TEST_CASE("negative powers invert") {
  Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  CHECK(z5.pow(-1) == Cyclotomic::root_of_unity(5, 4));
  CHECK(z5.pow(-7) == z5.pow(3));
  CHECK(z5.pow(0) == Cyclotomic(1));
}

TEST_CASE("rationality detection collapses the conductor") {
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic sum = i + i.pow(3);  // i + (-i) = 0
  CHECK(sum.is_rational());
  CHECK(sum.to_rational() == Rational(0));

  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK((z3 + z3 * z3).to_rational() == Rational(-1));

  CHECK_FALSE(z3.is_rational());
  CHECK(kind_of([&] { z3.to_rational(); }) == ErrorKind::NotRational);
}

TEST_CASE("root order detection") {
  CHECK(Cyclotomic::root_of_unity(12, 1).root_order() == 12);
  CHECK(Cyclotomic::root_of_unity(12, 8).root_order() == 3);
  CHECK(Cyclotomic(1).root_order() == 1);
  CHECK(Cyclotomic(-1).root_order() == 2);
  CHECK(Cyclotomic(2).root_order() == 0);
  CHECK((Cyclotomic(1) + Cyclotomic::root_of_unity(5, 1)).root_order() == 0);
}

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(Cyclotomic::euler_phi(1) == 1);
  CHECK(Cyclotomic::euler_phi(12) == 4);
  CHECK(Cyclotomic::euler_phi(30) == 8);
  // Phi_12 = x^4 - x^2 + 1
  const auto& p12 = Cyclotomic::cyclotomic_polynomial(12);
  CHECK(p12 == std::vector<Integer>{1, 0, -1, 0, 1});
  // Phi_2 = x + 1
  CHECK(Cyclotomic::cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
}

TEST_CASE("lifting preserves the value") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3.lifted_to(12) == z3);
  CHECK(z3.lifted_to(12).conductor() == 12);
}

TEST_CASE("conductor cap is enforced") {
  CHECK(kind_of([] { Cyclotomic::root_of_unity(10007, 1); }) ==
        ErrorKind::ConductorOverflow);
  CHECK(kind_of([] { Cyclotomic::root_of_unity(0, 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("mixed-conductor arithmetic lifts to the lcm") {
  Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z4 * z3 == Cyclotomic::root_of_unity(12, 7));
  CHECK((z4 + z3) - z3 == z4);
}
