#include <doctest.h>

#include "gradedca/error.hpp"
#include "gradedca/roots.hpp"
#include "gradedca/zlinalg.hpp"
#include "support.hpp"

using namespace gradedca;
using namespace testing_support;

namespace {

bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool seen_pivot = false;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h(i, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (seen_pivot && c <= last_pivot_col) return false;
    if (h(i, c) <= 0) return false;
    for (std::size_t above = 0; above < i; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(i, c)) return false;
    last_pivot_col = c;
    seen_pivot = true;
  }
  return true;
}

}  // namespace

TEST_SUITE("zlinalg") {
  TEST_CASE("hnf of the identity is trivial") {
    const HermiteForm hf = hermite_normal_form(IntMatrix::identity(2));
    CHECK(hf.h == IntMatrix::identity(2));
    CHECK(hf.u == IntMatrix::identity(2));
  }

  TEST_CASE("hnf of [[2,4],[1,3]]") {
    const IntMatrix m{{2, 4}, {1, 3}};
    const HermiteForm hf = hermite_normal_form(m);
    CHECK(hf.h == IntMatrix{{1, 1}, {0, 2}});
    CHECK(hermite_normal_form(IntMatrix{{1, 3}, {0, 2}}).h == hf.h);
    CHECK(hf.u * m == hf.h);
    CHECK(abs(laplace_det(hf.u)) == 1);
  }

  TEST_CASE("hnf of the zero matrix") {
    const HermiteForm hf = hermite_normal_form(IntMatrix(3, 3));
    CHECK(hf.h == IntMatrix(3, 3));
    CHECK(hf.u == IntMatrix::identity(3));
  }

  TEST_CASE("kernel examples") {
    const IntMatrix a3{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}};
    CHECK(kernel_basis(a3.transpose()) == IntMatrix{{1}, {0}, {-1}});
    const IntMatrix a2{{0, 1}, {-1, 0}};
    CHECK(kernel_basis(a2.transpose()).cols() == 0);
    CHECK(kernel_basis(IntMatrix::identity(4)).cols() == 0);
    CHECK(kernel_basis(IntMatrix::identity(4)).rows() == 4);
  }

  TEST_CASE("kernel of B^T for B3 is (2,0,-1)") {
    const IntMatrix b3{{0, 1, 0}, {-1, 0, -1}, {0, 2, 0}};
    const IntMatrix k = kernel_basis(b3.transpose());
    CHECK(k == IntMatrix{{2}, {0}, {-1}});
  }

  TEST_CASE("rank examples") {
    CHECK(rank(bipartite_pattern(DynkinType::parse("A5")).matrix()) == 4);
    for (const char* t : {"E6", "E8", "F4", "G2"}) {
      const IntMatrix b = bipartite_pattern(DynkinType::parse(t)).matrix();
      CHECK_MESSAGE(rank(b) == b.rows(), t);
    }
    CHECK(rank(IntMatrix(3, 4)) == 0);
  }

  TEST_CASE("property: random hnf is unimodular, canonical and idempotent") {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 5));
      const std::size_t c = static_cast<std::size_t>(uniform(rng, 1, 5));
      const IntMatrix m = random_matrix(rng, r, c, -4, 4);
      const HermiteForm hf = hermite_normal_form(m);
      REQUIRE(hf.u * m == hf.h);
      REQUIRE(abs(laplace_det(hf.u)) == 1);
      REQUIRE(is_row_hnf(hf.h));
      const HermiteForm again = hermite_normal_form(hf.h);
      REQUIRE(again.h == hf.h);
      REQUIRE(again.u == IntMatrix::identity(r));
    }
  }

  TEST_CASE("property: random kernels are saturated lattice bases") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 4));
      const std::size_t c = static_cast<std::size_t>(uniform(rng, 1, 6));
      IntMatrix m = random_matrix(rng, r, c, -3, 3);
      if (trial % 3 == 0 && r > 1)
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);  // force a rank drop
      const IntMatrix k = kernel_basis(m);
      REQUIRE(k.rows() == c);
      REQUIRE(rank(m) + k.cols() == c);
      REQUIRE((m * k).is_zero());
      REQUIRE(gcd_of_maximal_minors(k) == 1);
      REQUIRE(kernel_basis(m) == k);
    }
  }

  TEST_CASE("solve_integer") {
    const IntMatrix a{{1}, {0}, {-1}, {0}, {1}};
    const auto m = solve_integer(a, mpz_class(-2) * a);
    REQUIRE(m);
    CHECK(*m == IntMatrix{{-2}});
    CHECK_FALSE(solve_integer(IntMatrix{{2}}, IntMatrix{{1}}));
    CHECK_THROWS_AS(solve_integer(IntMatrix{{1, 2}, {2, 4}}, IntMatrix{{1}, {2}}), InputError);
  }

  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
      const IntMatrix m = random_matrix(rng, n, n, -5, 5);
      REQUIRE(determinant(m) == laplace_det(m));
    }
  }
}
