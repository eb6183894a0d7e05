#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace hpade;

TEST_CASE("exponential series for B = 1") {
  std::vector<RatPoly> b = {RatPoly(IntPoly::constant(1, 1))};
  TruncSeries<RatPoly> s = exp_product(b, 0, 1, 5);
  for (int n = 0; n <= 5; ++n) {
    RatPoly expect(IntPoly::variable(1, 0, static_cast<uint32_t>(n)),
                   factorial(static_cast<unsigned long>(n)));
    CHECK(s.coeff(n) == expect);
  }
}

TEST_CASE("specialized series for B = t - 2 at a = 1") {
  std::vector<Rat> b = {Rat(-2), Rat(1)};
  TruncSeries<Rat> s = exp_product(b, Int(1), 3);
  CHECK(s.coeff(0) == Rat(-2));
  CHECK(s.coeff(1) == Rat(-1));
  CHECK(s.coeff(2) == Rat(0));
  CHECK(s.coeff(3) == make_rat(1, 6));
}

TEST_CASE("exp product is linear in B") {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rat> b1, b2, sum;
    for (int h = 0; h < 4; ++h) {
      b1.emplace_back(dist(rng));
      b2.emplace_back(dist(rng));
      sum.push_back(b1.back() + b2.back());
    }
    Int a(3);
    TruncSeries<Rat> s1 = exp_product(b1, a, 8);
    TruncSeries<Rat> s2 = exp_product(b2, a, 8);
    TruncSeries<Rat> s = exp_product(sum, a, 8);
    for (int n = 0; n <= 8; ++n) CHECK(s.coeff(n) == s1.coeff(n) + s2.coeff(n));
  }
}

TEST_CASE("exp product satisfies the derivative recurrence") {
  // (B e^{at})' = (B' + a B) e^{at} gives
  // (n+1) r_{n+1}(B) = a r_n(B) + r_n(B').
  std::mt19937_64 rng(92);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rat> b;
    for (int h = 0; h < 5; ++h) b.emplace_back(dist(rng));
    std::vector<Rat> db;  // coefficients of B'
    for (int h = 1; h < 5; ++h) db.push_back(Rat(h) * b[static_cast<size_t>(h)]);
    Int a(dist(rng));
    TruncSeries<Rat> s = exp_product(b, a, 9);
    TruncSeries<Rat> ds = exp_product(db, a, 9);
    for (int n = 0; n + 1 <= 9; ++n)
      CHECK(Rat(n + 1) * s.coeff(n + 1) ==
            Rat(a) * s.coeff(n) + ds.coeff(n));
  }
}

TEST_CASE("order certification") {
  // Remainder of the m=1, l0=1, l1=1 solution at a = 1: coefficients
  // 0,1,2 vanish and coefficient 3 is 1/6, so the order is exactly 3.
  std::vector<Rat> b = {Rat(-2), Rat(1)};
  TruncSeries<Rat> s = exp_product(b, Int(1), 7);
  std::vector<Rat> numer(s.coeffs.begin(), s.coeffs.begin() + 2);
  TruncSeries<Rat> rem = subtract_polynomial(s, numer);
  OrderCertificate cert = order_at_zero(rem, 3);
  CHECK(cert.first_nonzero == 3);
  CHECK(cert.order_known_finite());

  // Claiming order >= 4 must be falsified by the same coefficient.
  CHECK_THROWS_AS(order_at_zero(rem, 4), CoefficientNonZero);
}

TEST_CASE("zero series certifies any order up to truncation") {
  TruncSeries<Rat> z;
  z.truncation_order = 6;
  z.coeffs.assign(7, Rat(0));
  OrderCertificate cert = order_at_zero(z, 6);
  CHECK_FALSE(cert.order_known_finite());
  CHECK_THROWS_AS(order_at_zero(z, 9), PreconditionError);
}

TEST_CASE("twin solution remainders vanish symbolically") {
  WildSolution sol = twin_solve(WildProblem::twin({1, 3}));
  REQUIRE(sol.remainder_orders.size() == 2);
  CHECK(sol.remainder_orders[0].claimed_min == 6);   // L + l_1 + 1
  CHECK(sol.remainder_orders[1].claimed_min == 8);   // L + l_2 + 1
  CHECK(sol.remainder_orders[0].first_nonzero == 6); // order exactly met
  CHECK(sol.remainder_orders[1].first_nonzero == 8);
}
