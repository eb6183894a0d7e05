#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace hpade;
using hpade::testing::random_nonzero_poly;

namespace {

// Random monic univariate polynomial of exact degree d.
IntPoly random_monic(std::mt19937_64& rng, int d, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  IntPoly p = IntPoly::variable(1, 0, static_cast<uint32_t>(d));
  for (int k = 0; k < d; ++k)
    p += IntPoly::variable(1, 0, static_cast<uint32_t>(k)) * Int(dist(rng));
  return p;
}

}  // namespace

TEST_CASE("case A construction") {
  PolySequence seq = monomial_sequence(2);
  PolyMatrix m = build_case_a(seq, BlockSpec({1, 1}));
  auto x1 = IntPoly::variable(2, 0), x2 = IntPoly::variable(2, 1);
  CHECK(m.at(0, 0) == IntPoly::constant(2, 1));
  CHECK(m.at(0, 1) == x1);
  CHECK(m.at(1, 0) == IntPoly::constant(2, 1));
  CHECK(m.at(1, 1) == x2);

  // Derivative row: spec (2,1) with p_i = x^i has second row (0, 1, 2 x1).
  PolyMatrix m3 = build_case_a(monomial_sequence(3), BlockSpec({2, 1}));
  auto y1 = IntPoly::variable(2, 0);
  CHECK(m3.at(1, 0) == IntPoly::zero(2));
  CHECK(m3.at(1, 1) == IntPoly::constant(2, 1));
  CHECK(m3.at(1, 2) == 2 * y1);

  CHECK_THROWS_AS(build_case_a(monomial_sequence(3), BlockSpec({1, 1})),
                  DimensionMismatch);
}

TEST_CASE("single block gives the Wronskian-style matrix") {
  PolyMatrix m = build_case_a(monomial_sequence(3), BlockSpec({3}));
  auto x = IntPoly::variable(1, 0);
  CHECK(m.at(0, 2) == x * x);
  CHECK(m.at(1, 2) == 2 * x);
  CHECK(m.at(2, 2) == IntPoly::constant(1, 2));
}

TEST_CASE("case B construction") {
  // With all block sizes 1 case B equals case A.
  PolySequence seq = monomial_sequence(2);
  CHECK(build_case_b(seq, BlockSpec({1, 1})) ==
        build_case_a(seq, BlockSpec({1, 1})));

  // spec (2,1): n_max = 2, block 2 is the single derivative row p_i'(x2).
  PolyMatrix m = build_case_b(monomial_sequence(3), BlockSpec({2, 1}));
  auto x2 = IntPoly::variable(2, 1);
  CHECK(m.at(2, 0) == IntPoly::zero(2));
  CHECK(m.at(2, 1) == IntPoly::constant(2, 1));
  CHECK(m.at(2, 2) == 2 * x2);

  // spec (1,2): block 1 is the first-derivative row (0, 1, 2 x1).
  PolyMatrix m2 = build_case_b(monomial_sequence(3), BlockSpec({1, 2}));
  auto x1 = IntPoly::variable(2, 0);
  CHECK(m2.at(0, 0) == IntPoly::zero(2));
  CHECK(m2.at(0, 1) == IntPoly::constant(2, 1));
  CHECK(m2.at(0, 2) == 2 * x1);
}

TEST_CASE("case A factor certificate") {
  // p_i = x^i with unit blocks: det = x2 - x1, factor (x1 - x2).
  PolySequence seq = monomial_sequence(2);
  IntPoly q = certify_case_a_factor(seq, BlockSpec({1, 1}));
  CHECK(q == IntPoly::constant(2, -1));

  // Graded sequence, blocks (2,2): the quotient is a constant.
  PolySequence seq4 = monomial_sequence(4);
  IntPoly q4 = certify_case_a_factor(seq4, BlockSpec({2, 2}));
  CHECK(q4.is_constant());

  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    std::vector<IntPoly> ps;
    for (int i = 0; i < 3; ++i) ps.push_back(random_monic(rng, i, 5));
    IntPoly q3 = certify_case_a_factor(PolySequence(ps), BlockSpec({2, 1}));
    CHECK(q3.is_constant());
  }
}

TEST_CASE("case A and case B certificates never fail on random sequences") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> mdist(2, 3), sdist(1, 3);
  for (int t = 0; t < 25; ++t) {
    std::vector<int> sizes;
    int m = mdist(rng);
    int n = 0;
    for (int j = 0; j < m; ++j) {
      sizes.push_back(sdist(rng));
      n += sizes.back();
    }
    if (n > 7) continue;
    std::vector<IntPoly> ps;
    for (int i = 0; i < n; ++i)
      ps.push_back(random_nonzero_poly(rng, 1, n, 3, 5));
    PolySequence seq(ps);
    BlockSpec spec(sizes);
    CHECK_NOTHROW(certify_case_a_factor(seq, spec));
    CHECK_NOTHROW(certify_case_b_factor(seq, spec));
  }
}

TEST_CASE("case B exponent uses min of squared block sizes") {
  // spec (1,2): exponent min(1,4) = 1.
  PolySequence seq = monomial_sequence(3);
  PolyMatrix b = build_case_b(seq, BlockSpec({1, 2}));
  IntPoly d = det_bareiss(b);
  IntPoly factor = IntPoly::variable(2, 0) - IntPoly::variable(2, 1);
  IntPoly q = exact_div(d, factor);
  CHECK(q == certify_case_b_factor(seq, BlockSpec({1, 2})));
}

TEST_CASE("case B with equal blocks is a row permutation of case A") {
  std::mt19937_64 rng(33);
  std::vector<IntPoly> ps;
  for (int i = 0; i < 4; ++i) ps.push_back(random_nonzero_poly(rng, 1, 4, 3, 5));
  PolySequence seq(ps);
  BlockSpec spec({2, 2});
  IntPoly da = det_bareiss(build_case_a(seq, spec));
  IntPoly db = det_bareiss(build_case_b(seq, spec));
  // Each block of size k is reversed: sign (-1)^(k(k-1)/2) per block.
  int flips = (2 * 1 / 2) * 2;  // two blocks of size 2, one swap each
  IntPoly expect = (flips % 2 == 0) ? da : -da;
  CHECK(db == expect);
}

TEST_CASE("closed form for graded unit-block sequences") {
  // p_i = x^i, n = 3.
  PolySequence seq = monomial_sequence(3);
  IntPoly cf = vandermonde_closed_form(seq);
  CHECK(cf == det_bareiss(build_case_a(seq, BlockSpec({1, 1, 1}))));

  // Leading coefficients multiply in: p_i = (i+1) x^i, n = 2.
  std::vector<IntPoly> ps = {IntPoly::constant(1, 1),
                             2 * IntPoly::variable(1, 0)};
  IntPoly cf2 = vandermonde_closed_form(PolySequence(ps));
  auto x1 = IntPoly::variable(2, 0), x2 = IntPoly::variable(2, 1);
  CHECK(cf2 == 2 * (x2 - x1));

  // Falling factorials (x]_0, (x]_1, (x]_2: closed form equals the direct
  // determinant.
  PolySequence ff = falling_factorial_sequence(3);
  CHECK(vandermonde_closed_form(ff) ==
        det_bareiss(build_case_a(ff, BlockSpec({1, 1, 1}))));
}

TEST_CASE("constant factor") {
  CHECK(constant_factor(monomial_sequence(2), BlockSpec({1, 1})) ==
        IntPoly::constant(2, -1));
  IntPoly f22 = constant_factor(monomial_sequence(4), BlockSpec({2, 2}));
  CHECK(f22.is_constant());

  // Scaling p_i by c_i scales F by prod c_i.
  std::vector<IntPoly> scaled;
  std::vector<Int> cs = {Int(2), Int(-3), Int(5), Int(7)};
  for (int i = 0; i < 4; ++i)
    scaled.push_back(IntPoly::variable(1, 0, static_cast<uint32_t>(i)) * cs[static_cast<size_t>(i)]);
  IntPoly f_scaled = constant_factor(PolySequence(scaled), BlockSpec({2, 2}));
  CHECK(f_scaled == f22 * (cs[0] * cs[1] * cs[2] * cs[3]));

  // Degree precondition: p_0 must have degree 0.
  std::vector<IntPoly> bad = {IntPoly::variable(1, 0),
                              IntPoly::constant(1, 1)};
  CHECK_THROWS_AS(constant_factor(PolySequence(bad), BlockSpec({2})),
                  PreconditionError);
}

TEST_CASE("degree bound in each variable for graded sequences") {
  PolySequence seq = monomial_sequence(5);
  BlockSpec spec({2, 3});
  IntPoly d = det_bareiss(build_case_a(seq, spec));
  CHECK(d.degree_in(0) <= 2 * (5 - 2));
  CHECK(d.degree_in(1) <= 3 * (5 - 3));
}

TEST_CASE("determinant vanishes when two points coincide") {
  std::mt19937_64 rng(34);
  std::vector<IntPoly> ps;
  for (int i = 0; i < 4; ++i) ps.push_back(random_nonzero_poly(rng, 1, 4, 3, 5));
  IntPoly d = det_bareiss(build_case_a(PolySequence(ps), BlockSpec({2, 2})));
  CHECK(d.identify_vars(0, 1).is_zero());
}
