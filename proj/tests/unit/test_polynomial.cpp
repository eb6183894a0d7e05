#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace hpade;
using hpade::testing::random_nonzero_poly;
using hpade::testing::random_point;
using hpade::testing::random_poly;

TEST_CASE("monomial order is lexicographic with a1 > a2 > ...") {
  Monomial a(std::vector<uint32_t>{2, 0});
  Monomial b(std::vector<uint32_t>{1, 5});
  Monomial c(std::vector<uint32_t>{1, 5});
  CHECK(Monomial::lex_cmp(a, b) > 0);
  CHECK(Monomial::lex_cmp(b, a) < 0);
  CHECK(Monomial::lex_cmp(b, c) == 0);
  CHECK_THROWS_AS(Monomial::lex_cmp(a, Monomial(3)), ArityMismatch);
}

TEST_CASE("polynomial product identities") {
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  IntPoly one = IntPoly::constant(2, 1);
  IntPoly p = 3 * a1 * a1 * a2 - 1;
  CHECK(p * one == p);
  CHECK((a1 + a2) * (a1 - a2) == a1 * a1 - a2 * a2);
}

TEST_CASE("product agrees with evaluation homomorphism") {
  std::mt19937_64 rng(20240811);
  for (int t = 0; t < 25; ++t) {
    IntPoly p = random_poly(rng, 3, 4, 5, 9);
    IntPoly q = random_poly(rng, 3, 4, 5, 9);
    IntPoly pq = p * q;
    for (int s = 0; s < 5; ++s) {
      IntegerPoint pt = random_point(rng, 3, 20);
      CHECK(pq.eval(pt) == p.eval(pt) * q.eval(pt));
      CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    }
  }
}

TEST_CASE("product is commutative, associative, distributive") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t) {
    IntPoly p = random_poly(rng, 3, 4, 4, 6);
    IntPoly q = random_poly(rng, 3, 4, 4, 6);
    IntPoly r = random_poly(rng, 3, 4, 4, 6);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("exact division") {
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  CHECK(exact_div(a1 * a1 - a2 * a2, a1 - a2) == a1 + a2);
  IntPoly p = 7 * a1 * a2 * a2 - 3 * a1 + 5;
  CHECK(exact_div(p, p) == IntPoly::constant(2, 1));
  CHECK_THROWS_AS(exact_div(18 * (a1 - a2), a1 * a2), NotDivisible);
  CHECK_THROWS_AS(exact_div(p, IntPoly::zero(2)), PreconditionError);
}

TEST_CASE("non-divisibility witnessed by evaluation") {
  // If d | p then d(x) | p(x) at every integer point; a point where that
  // fails certifies the NotDivisible outcome above.
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  IntPoly p = 18 * (a1 - a2), d = a1 * a2;
  IntegerPoint pt({Int(2), Int(5)});
  CHECK(p.eval(pt) % d.eval(pt) != 0);
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 30; ++t) {
    IntPoly p = random_poly(rng, 2, 3, 4, 8);
    IntPoly d = random_nonzero_poly(rng, 2, 3, 3, 8);
    CHECK(exact_div(p * d, d) == p);
  }
}

TEST_CASE("gcd reproduces the reference minor gcd") {
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  IntPoly g = poly_gcd({18 * (a1 - a2), 6 * (a1 * a1 - a2 * a2),
                        3 * a1 * a2 * (a1 - a2)});
  CHECK(g == 3 * (a1 - a2));
}

TEST_CASE("gcd normalization and trivial cases") {
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  IntPoly p = -4 * a1 * a2 + 2 * a2 * a2;
  CHECK(poly_gcd({p}) == 4 * a1 * a2 - 2 * a2 * a2);  // sign normalized
  CHECK(poly_gcd(a1 - a2, a1 * a2) == IntPoly::constant(2, 1));
  CHECK_THROWS_AS(poly_gcd({IntPoly::zero(2), IntPoly::zero(2)}),
                  PreconditionError);
}

TEST_CASE("gcd divides every input and ignores order and signs") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 15; ++t) {
    IntPoly c = random_nonzero_poly(rng, 2, 2, 2, 4);
    IntPoly p = c * random_nonzero_poly(rng, 2, 2, 2, 4);
    IntPoly q = c * random_nonzero_poly(rng, 2, 2, 2, 4);
    IntPoly r = c * random_nonzero_poly(rng, 2, 2, 2, 4);
    IntPoly g = poly_gcd({p, q, r});
    CHECK(divides(g, p));
    CHECK(divides(g, q));
    CHECK(divides(g, r));
    CHECK(divides(c, g));  // the planted common factor is found
    CHECK(poly_gcd({-q, r, p}) == g);
    CHECK(poly_gcd({r, -p, -q}) == g);
  }
}

TEST_CASE("gcd is multiplicative in a common factor") {
  // gcd(g p, g q) = g * gcd(p, q) up to the sign normalization.
  std::mt19937_64 rng(100);
  for (int t = 0; t < 12; ++t) {
    IntPoly g = random_nonzero_poly(rng, 3, 2, 3, 5);
    IntPoly p = random_nonzero_poly(rng, 3, 3, 3, 5);
    IntPoly q = random_nonzero_poly(rng, 3, 3, 3, 5);
    IntPoly lhs = poly_gcd(g * p, g * q);
    IntPoly rhs = (g.sign_normalized() * poly_gcd(p, q)).sign_normalized();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("derivative basics") {
  auto a1 = IntPoly::variable(2, 0);
  IntPoly p = pow(a1, 3);
  CHECK(p.derivative(0) == 3 * a1 * a1);
  CHECK(p.derivative(1) == IntPoly::zero(2));
}

TEST_CASE("derivative matches first difference on degree-1 slices") {
  // For polynomials of degree <= 1 in the chosen variable,
  // p(x + e_v) - p(x) equals the partial derivative evaluated at x.
  std::mt19937_64 rng(555);
  for (int t = 0; t < 20; ++t) {
    IntPoly p = random_poly(rng, 3, 1, 5, 9);
    IntegerPoint pt = random_point(rng, 3, 15);
    for (int v = 0; v < 3; ++v) {
      std::vector<Int> shifted = pt.values();
      shifted[static_cast<size_t>(v)] += 1;
      CHECK(p.derivative(v).eval(pt) == p.eval_at(shifted) - p.eval(pt));
    }
  }
}

TEST_CASE("derivative satisfies the product rule") {
  std::mt19937_64 rng(556);
  for (int t = 0; t < 15; ++t) {
    IntPoly p = random_poly(rng, 2, 3, 4, 7);
    IntPoly q = random_poly(rng, 2, 3, 4, 7);
    for (int v = 0; v < 2; ++v)
      CHECK((p * q).derivative(v) ==
            p.derivative(v) * q + p * q.derivative(v));
  }
}

TEST_CASE("evaluation") {
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  CHECK((a1 - a2).eval(IntegerPoint({Int(2), Int(1)})) == 1);
  CHECK(IntPoly::zero(2).eval(IntegerPoint({Int(5), Int(7)})) == 0);
  CHECK((a1 * a1 + 3 * a1 * a2).eval(IntegerPoint({Int(2), Int(5)})) == 34);
  CHECK_THROWS_AS((a1 + a2).eval(IntegerPoint({Int(1)})), ArityMismatch);
}

TEST_CASE("content and primitive part") {
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  IntPoly p = -6 * a1 + 9 * a2;
  CHECK(p.content() == 3);
  CHECK(p.primitive_part() * p.content() == p);
  CHECK(IntPoly::zero(2).content() == 0);
  std::mt19937_64 rng(600);
  for (int t = 0; t < 20; ++t) {
    IntPoly q = random_nonzero_poly(rng, 2, 3, 5, 30);
    CHECK(q.content() >= 1);
    CHECK(q.primitive_part().content() == 1);
    CHECK(q.primitive_part() * q.content() == q);
  }
}

TEST_CASE("integer point validation") {
  CHECK_THROWS_AS(IntegerPoint({Int(1), Int(0)}), PreconditionError);
  CHECK_THROWS_AS(IntegerPoint({Int(2), Int(2)}), PreconditionError);
}

TEST_CASE("canonical serialization") {
  auto a1 = IntPoly::variable(2, 0), a2 = IntPoly::variable(2, 1);
  CHECK(to_string(IntPoly::zero(2)) == "0");
  CHECK(to_string(3 * a1 * a1 * a2 - 1) == "3*a1^2*a2 - 1");
  CHECK(to_string(-a1 + 2) == "-a1 + 2");
  CHECK(to_string(a1 * a2) == "a1*a2");
  CHECK(to_string(IntPoly::constant(2, -7)) == "-7");
}

TEST_CASE("parser accepts canonical output") {
  CHECK(parse_poly("3*a1^2*a2 - 1", 2) ==
        3 * pow(IntPoly::variable(2, 0), 2) * IntPoly::variable(2, 1) - 1);
  CHECK(parse_poly("0", 3) == IntPoly::zero(3));
  CHECK_THROWS_AS(parse_poly("a3 + 1", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("2 +", 2), ParseError);
}

TEST_CASE("serialization round-trips through the parser") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 50; ++t) {
    IntPoly p = random_poly(rng, 3, 5, 6, 1000);
    CHECK(parse_poly(to_string(p), 3) == p);
  }
}
