#include <random>

#include "support.hpp"

using namespace qschubert;

TEST_SUITE("coeff") {

TEST_CASE("Laurent arithmetic") {
  Laurent v = vpow(1);
  CHECK((v + 1) * (v - 1) == vpow(2) - 1);
  CHECK(Laurent(0L).is_zero());
  CHECK((v - v).is_zero());
  CHECK(v.pow(3) == vpow(3));
  CHECK(vpow(-2).pow(2) == vpow(-4));
  CHECK(Laurent(5L).bar() == Laurent(5L));
  CHECK((vpow(3) + 2).bar() == vpow(-3) + 2);
  CHECK((vpow(1) + 1).substitute(2) == vpow(2) + 1);
  CHECK(Laurent::from_terms({{2, 1}, {2, 1}, {-1, 3}}) == vpow(2, 2) + vpow(-1, 3));
}

TEST_CASE("Rat normal form") {
  CHECK(rat(vpow(2) - vpow(-2), vpow(1) - vpow(-1)) == Rat(vpow(1) + vpow(-1)));
  CHECK(rat(vpow(2) - 1, vpow(1) - 1) == Rat(vpow(1) + 1));
  CHECK(rat(vpow(-3, 7)).is_laurent());
  CHECK(error_of([] { Rat x = Rat(vpow(1)) / Rat(0L); (void)x; }) == ErrorKind::DivisionByZero);
  CHECK(error_of([] { as_laurent(rat(1L, vpow(1) + 1)); }) == ErrorKind::NotALaurentPolynomial);
  CHECK(as_laurent(rat(vpow(-3, 7))) == vpow(-3, 7));
  Rat a = rat(vpow(1), vpow(2) + 1);
  CHECK(a.bar().bar() == a);
  CHECK(bar_conj(Rat(5L)) == Rat(5L));
  CHECK(arith(a, a, ArithOp::Div) == Rat(1L));
}

TEST_CASE("scalar sets") {
  CHECK(membership(vpow(-2) - vpow(-6), ScalarSet::Kminus));
  CHECK_FALSE(membership(vpow(1), ScalarSet::A0));
  CHECK(membership(vpow(2) - vpow(-4), ScalarSet::A0));
  CHECK(membership(Laurent(1L) - vpow(-2), ScalarSet::OnePlusKminus));
  CHECK_FALSE(membership(Laurent(1L) - vpow(-1), ScalarSet::OnePlusKminus));
  CHECK(membership(vpow(3), ScalarSet::A));
  CHECK_FALSE(membership(rat(1L, vpow(1) + 1), ScalarSet::A));
}

TEST_CASE("q-combinatorics") {
  CHECK(q_round(2) == vpow(1) + vpow(-1));
  CHECK(gauss_binomial(2, 1) == vpow(1) + 1);
  CHECK(q_binomial(-1, 1) == Laurent(-1L));
  CHECK(q_angle(1, 2) == vpow(2) - vpow(-2));
  CHECK(q_combinatorics(QKind::RoundFact, {3}, 1) == q_round(2) * q_round(3));
  // Pascal rules
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      CHECK(q_binomial(n, k) == vpow(k) * q_binomial(n - 1, k) + vpow(k - n) * q_binomial(n - 1, k - 1));
      CHECK(gauss_binomial(n, k) == gauss_binomial(n - 1, k - 1) + vpow(k) * gauss_binomial(n - 1, k));
    }
}

TEST_CASE("gcd and exact division") {
  Laurent a = (vpow(1) + 1) * (vpow(2) - 3);
  Laurent b = (vpow(1) + 1) * (vpow(-1) + 5);
  Laurent g = gcd(a, b);
  CHECK(g == vpow(1) + 1);
  CHECK(a.divide_exact(g).value() == vpow(2) - 3);
  CHECK_FALSE((vpow(2) + 1).divide_exact(vpow(1) + 1).has_value());
}

TEST_CASE("field axioms on random fractions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3), e(-3, 3);
  auto poly = [&] {
    Laurent p;
    for (int t = 0; t < 3; ++t) p += vpow(e(rng), c(rng));
    return p;
  };
  for (int t = 0; t < 60; ++t) {
    Laurent d1 = poly(), d2 = poly();
    if (d1.is_zero() || d2.is_zero()) continue;
    Rat x = rat(poly(), d1), y = rat(poly(), d2), z(poly());
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x - y) + y == x);
    CHECK((x * y).bar() == x.bar() * y.bar());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

}  // TEST_SUITE
