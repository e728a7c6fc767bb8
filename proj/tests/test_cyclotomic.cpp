#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charfam/cyclotomic.hpp"
#include "charfam/errors.hpp"

using namespace charfam;

TEST_CASE("cyclotomic polynomial degrees and small cases") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(27) == 18);
  // Phi_3 = x^2 + x + 1
  auto phi3 = cyclotomic_polynomial(3);
  REQUIRE(phi3.size() == 3);
  CHECK(phi3[0] == 1);
  CHECK(phi3[1] == 1);
  CHECK(phi3[2] == 1);
  // Phi_9 = x^6 + x^3 + 1
  auto phi9 = cyclotomic_polynomial(9);
  REQUIRE(phi9.size() == 7);
  CHECK(phi9[0] == 1);
  CHECK(phi9[3] == 1);
  CHECK(phi9[6] == 1);
  CHECK(phi9[1] == 0);
  // Phi_6 = x^2 - x + 1
  auto phi6 = cyclotomic_polynomial(6);
  REQUIRE(phi6.size() == 3);
  CHECK(phi6[1] == -1);
}

TEST_CASE("roots of unity satisfy their defining relations") {
  for (int m : {1, 2, 3, 4, 6, 9, 12, 27}) {
    Cyclotomic z = Cyclotomic::root_of_unity(m, 1);
    Cyclotomic pow = Cyclotomic::integer(1);
    for (int k = 0; k < m; ++k) pow = pow * z;
    CHECK(pow == Cyclotomic::integer(1));
    // sum over all m-th roots vanishes for m > 1
    if (m > 1) {
      Cyclotomic sum = Cyclotomic::zero(m);
      for (int k = 0; k < m; ++k) sum += Cyclotomic::root_of_unity(m, k);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("ring axioms on random elements, fixed seed") {
  std::mt19937 rng(20240911);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto random_elt = [&](int m) {
    std::vector<mpq_class> c(euler_phi(m));
    for (auto& v : c) v = mpq_class(coeff(rng), 1 + (coeff(rng) & 3));
    return Cyclotomic::from_coeffs(m, std::move(c));
  };
  for (int iter = 0; iter < 50; ++iter) {
    int m = std::vector<int>{3, 9, 12}[iter % 3];
    Cyclotomic a = random_elt(m), b = random_elt(m), c = random_elt(m);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
  }
}

TEST_CASE("conjugation inverts roots of unity") {
  Cyclotomic z = Cyclotomic::root_of_unity(9, 2);
  CHECK(z.conjugate() == Cyclotomic::root_of_unity(9, 7));
  CHECK((z * z.conjugate()) == Cyclotomic::integer(1));
}

TEST_CASE("rationality and integrality detection") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  // 1 + z + z^2 = 0, so z + z^2 = -1 is a rational integer
  Cyclotomic s = z3 + z3 * z3;
  CHECK(s.is_rational());
  CHECK(s.is_integer());
  CHECK(s.rational_value() == -1);
  CHECK(!z3.is_rational());
  Cyclotomic half = Cyclotomic::rational(mpq_class(1, 2));
  CHECK(half.is_rational());
  CHECK(!half.is_integer());
  CHECK(!Cyclotomic::integer(-2).is_nonnegative_integer());
  CHECK(Cyclotomic::integer(2).is_nonnegative_integer());
}

TEST_CASE("conductor changes") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic z9cubed = Cyclotomic::root_of_unity(9, 3);
  CHECK(z3.lifted(9) == z9cubed);
  CHECK(z9cubed.to_conductor(3) == z3);
  // a value not in the subfield is rejected
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(9, 1).to_conductor(3), LiftFailureError);
  // rationals drop to conductor 1
  Cyclotomic s = z3 + z3.conjugate();  // = -1
  CHECK(s.to_conductor(1) == Cyclotomic::integer(-1));
}

TEST_CASE("mixed-conductor arithmetic lifts to the lcm") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic prod = z3 * z4;
  CHECK(prod.conductor() == 12);
  CHECK(prod == Cyclotomic::root_of_unity(12, 7));
}

TEST_CASE("total order is consistent") {
  Cyclotomic a = Cyclotomic::integer(1), b = Cyclotomic::integer(2);
  CHECK(Cyclotomic::compare(a, b) < 0);
  CHECK(Cyclotomic::compare(b, a) > 0);
  CHECK(Cyclotomic::compare(a, a) == 0);
}
