#include <doctest.h>

#include "gradedca/laurent.hpp"
#include "support.hpp"

using namespace gradedca;
using namespace testing_support;

TEST_SUITE("laurent") {
  TEST_CASE("serialization order and round trip") {
    LaurentPoly p(2);
    p.add_term({-1, 0}, 1);
    p.add_term({-1, 1}, 1);
    CHECK(p.to_string() == "(1)*x1^-1*x2^1 + (1)*x1^-1");
    CHECK(LaurentPoly::parse(p.to_string(), 2) == p);
    CHECK(LaurentPoly(3).to_string() == "0");
    CHECK(LaurentPoly::parse("0", 3).is_zero());
    CHECK(LaurentPoly::parse("(-12)*x3^2 + (5)", 3).to_string() == "(-12)*x3^2 + (5)");
  }

  TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS(LaurentPoly::parse("(1)*y1", 2));
    CHECK_THROWS(LaurentPoly::parse("(1)*x3", 2));
    CHECK_THROWS(LaurentPoly::parse("1*x1", 2));
  }

  TEST_CASE("arithmetic cancels zero terms") {
    const LaurentPoly x = LaurentPoly::variable(2, 0);
    const LaurentPoly y = LaurentPoly::variable(2, 1);
    const LaurentPoly s = (x + y) * (x - y);
    CHECK(s == x * x - y * y);
    CHECK((s - s).is_zero());
    CHECK((x + y).pow(3).size() == 4);
  }

  TEST_CASE("exact division") {
    const LaurentPoly x = LaurentPoly::variable(2, 0);
    const LaurentPoly y = LaurentPoly::variable(2, 1);
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    CHECK(divide_exact(x * x - y * y, x + y) == x - y);
    const LaurentPoly q = divide_exact(y + one, x);
    CHECK(q * x == y + one);
    CHECK_THROWS_AS(divide_exact(x + one, y + one), InexactDivision);
  }

  TEST_CASE("property: (a*b)/b == a for random Laurent polynomials") {
    std::mt19937 rng(11);
    auto random_poly = [&](std::size_t nvars) {
      LaurentPoly p(nvars);
      const long terms = uniform(rng, 1, 4);
      for (long t = 0; t < terms; ++t) {
        Exponent e(nvars);
        for (auto& v : e) v = static_cast<int>(uniform(rng, -2, 2));
        p.add_term(e, uniform(rng, -3, 3));
      }
      return p.is_zero() ? LaurentPoly::constant(nvars, 1) : p;
    };
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
      const LaurentPoly a = random_poly(n);
      const LaurentPoly b = random_poly(n);
      REQUIRE(divide_exact(a * b, b) == a);
      std::vector<mpq_class> point;
      for (std::size_t i = 0; i < n; ++i) {
        point.emplace_back(uniform(rng, 1, 9), uniform(rng, 1, 9));
        point.back().canonicalize();
      }
      REQUIRE(eval_laurent(a * b, point) == eval_laurent(a, point) * eval_laurent(b, point));
      REQUIRE(LaurentPoly::parse(a.to_string(), n) == a);
    }
  }

  TEST_CASE("specialize_to_one drops variables") {
    const LaurentPoly p = LaurentPoly::parse("(1)*x1^1*x3^2 + (1)*x2^-1 + (2)*x3^1", 3);
    const LaurentPoly q = p.specialize_to_one({false, false, true});
    CHECK(q == LaurentPoly::parse("(1)*x1^1 + (1)*x2^-1 + (2)", 2));
  }

  TEST_CASE("min exponents") {
    const LaurentPoly p = LaurentPoly::parse("(1)*x1^-1*x2^2 + (3)*x1^2*x2^-3", 2);
    CHECK(p.min_exponents() == Exponent{-1, -3});
  }
}
