#include <doctest.h>

#include <set>

#include "gradedca/cluster.hpp"
#include "gradedca/error.hpp"
#include "gradedca/roots.hpp"
#include "support.hpp"

using namespace gradedca;
using namespace testing_support;

namespace {

const IntMatrix kA2{{0, 1}, {-1, 0}};
const IntMatrix kA3{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}};

GradedSeed a2_seed() { return GradedSeed::initial(ExchangePattern::square(kA2), GradingMatrix::zero(2)); }

}  // namespace

TEST_SUITE("cluster") {
  TEST_CASE("pattern validation") {
    CHECK_THROWS_AS(ExchangePattern::square(IntMatrix{{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(ExchangePattern::square(IntMatrix{{1, 0}, {0, 0}}), InputError);
    CHECK_THROWS_AS(ExchangePattern(IntMatrix{{0, 1}, {-1, 0}}, {0, 0}), InputError);
    // 3-cycle with weights that admit no symmetrizer
    CHECK_THROWS_AS(ExchangePattern::square(IntMatrix{{0, 1, -1}, {-2, 0, 1}, {1, -1, 0}}), InputError);
    CHECK_NOTHROW(ExchangePattern::square(IntMatrix{{0, 1, 0}, {-1, 0, -1}, {0, 2, 0}}));
  }

  TEST_CASE("b vectors") {
    const ExchangePattern a2 = ExchangePattern::square(kA2);
    ExchangeVectors v = b_vectors(a2, 1);
    CHECK(v.plus == Exponent{1, -1});
    CHECK(v.minus == Exponent{0, -1});
    v = b_vectors(ExchangePattern::square(kA3), 1);
    CHECK(v.plus == Exponent{1, -1, 1});
    CHECK(v.minus == Exponent{0, -1, 0});
    v = b_vectors(ExchangePattern::square(IntMatrix(3, 3)), 2);
    CHECK(v.plus == Exponent{0, 0, -1});
    CHECK(v.minus == Exponent{0, 0, -1});
  }

  TEST_CASE("E matrix examples") {
    const IntMatrix e = e_matrix(ExchangePattern::square(kA2), 0);
    CHECK(e == IntMatrix{{-1, 0}, {1, 1}});
    CHECK(e * e == IntMatrix::identity(2));
    CHECK(e_matrix(ExchangePattern::square(kA3), 1) == IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  }

  TEST_CASE("pattern mutation examples") {
    CHECK(mutate_pattern(ExchangePattern::square(kA2), 0).matrix() == IntMatrix{{0, -1}, {1, 0}});
    const IntMatrix linear{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
    const IntMatrix mutated = mutate_pattern(ExchangePattern::square(linear), 1).matrix();
    CHECK(mutated == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
    CHECK(mutated(0, 2) == 1);
    CHECK(mutated(2, 0) == -1);
  }

  TEST_CASE("grading mutation examples") {
    const ExchangePattern a3 = ExchangePattern::square(kA3);
    const GradingMatrix g(IntMatrix{{1}, {0}, {-1}});
    CHECK(mutate_grading(a3, g, 1) == g);
    CHECK(mutate_grading(a3, g, 0) == GradingMatrix(IntMatrix{{-1}, {0}, {-1}}));
    CHECK(mutate_grading(a3, GradingMatrix::zero(3, 1), 2) == GradingMatrix::zero(3, 1));
    CHECK_THROWS_AS(mutate_grading(a3, GradingMatrix(IntMatrix{{1}, {1}, {1}}), 0), InputError);
  }

  TEST_CASE("seed mutation in A2") {
    const GradedSeed s = a2_seed();
    const GradedSeed m = mutate_seed(s, 0);
    CHECK(m.cluster()[0] == LaurentPoly::parse("(1)*x1^-1*x2^1 + (1)*x1^-1", 2));
    CHECK(mutate_seed(m, 0) == s);

    GradedSeed walk = s;
    for (int step = 0; step < 5; ++step) walk = mutate_seed(walk, static_cast<std::size_t>(step % 2));
    CHECK(walk.cluster()[0] == s.cluster()[1]);
    CHECK(walk.cluster()[1] == s.cluster()[0]);
    for (int step = 5; step < 10; ++step) walk = mutate_seed(walk, static_cast<std::size_t>(step % 2));
    CHECK(walk == s);
    GradedSeed five = s;
    std::set<std::string> seen;
    for (int step = 0; step < 10; ++step) {
      five = mutate_seed(five, static_cast<std::size_t>(step % 2));
      seen.insert(five.cluster()[step % 2].to_string());
    }
    CHECK(seen.size() == 5);
  }

  TEST_CASE("degree") {
    CHECK(degree(LaurentPoly::variable(2, 0), GradingMatrix(IntMatrix{{1, 0}, {0, 1}})) == Degree{1, 0});
    const LaurentPoly y = LaurentPoly::parse("(1)*x1^-1*x2^1 + (1)*x1^-1*x3^1", 4);
    CHECK(degree(y, GradingMatrix(IntMatrix{{1}, {0}, {0}, {-1}})) == Degree{-1});
    const LaurentPoly bad = LaurentPoly::parse("(1)*x2^1 + (1)", 2);
    try {
      degree(bad, GradingMatrix(IntMatrix{{1}, {1}}));
      FAIL("expected an inhomogeneity error");
    } catch (const InhomogeneousError& e) {
      CHECK(e.first_witness != e.second_witness);
    }
    CHECK_THROWS_AS(degree(LaurentPoly(2), GradingMatrix::zero(2, 1)), InputError);
  }

  TEST_CASE("standard grading and change of basis") {
    CHECK(standard_grading(bipartite_pattern(DynkinType::parse("A5"))) ==
          GradingMatrix(IntMatrix{{1}, {0}, {-1}, {0}, {1}}));
    CHECK(standard_grading(ExchangePattern::square(kA2)).dimension() == 0);
    const GradingMatrix g(IntMatrix{{1}, {0}, {-1}, {0}, {1}});
    CHECK(change_of_basis(g, g) == IntMatrix::identity(1));
    CHECK(change_of_basis(g, GradingMatrix(mpz_class(3) * g.matrix())) == IntMatrix{{3}});
    CHECK(change_of_basis(g, GradingMatrix(IntMatrix{{-2}, {0}, {2}, {0}, {-2}})) == IntMatrix{{-2}});
    CHECK_THROWS_AS(change_of_basis(GradingMatrix(mpz_class(2) * g.matrix()), g), InputError);
  }

  TEST_CASE("D4 standard grading is lattice-equal to the published kernel vectors") {
    const DynkinType d4 = DynkinType::parse("D4");
    const GradingMatrix g = standard_grading(bipartite_pattern(d4));
    const GradingMatrix ref = *reference_grading(d4);
    const IntMatrix m = change_of_basis(g, ref);
    const IntMatrix minv = change_of_basis(ref, g);
    CHECK(m * minv == IntMatrix::identity(2));
  }

  TEST_CASE("property: mutation agrees with independent formulas and is an involution") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 5));
      const IntMatrix b = random_skew_symmetrizable(rng, r, 3);
      const ExchangePattern p = ExchangePattern::square(b);
      const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(r) - 1));
      const ExchangePattern q = mutate_pattern(p, k);
      REQUIRE(q.matrix() == fz_mutate(b, k, k));
      const IntMatrix e = e_matrix(p, k);
      REQUIRE(e * e == IntMatrix::identity(r));
      REQUIRE(mutate_pattern(q, k) == p);
    }
  }

  TEST_CASE("property: mutation with frozen rows matches the entrywise formula") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 4));
      const std::size_t extra = static_cast<std::size_t>(uniform(rng, 1, 3));
      const IntMatrix b = random_skew_symmetrizable(rng, m, 2).vstack(random_matrix(rng, extra, m, -2, 2));
      std::vector<std::size_t> rows(m);
      for (std::size_t i = 0; i < m; ++i) rows[i] = i;
      const ExchangePattern p(b, rows);
      const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1));
      REQUIRE(mutate_pattern(p, k).matrix() == fz_mutate(b, k, k));
      REQUIRE(mutate_pattern(mutate_pattern(p, k), k) == p);
    }
  }

  TEST_CASE("property: 1000 random mutation walks on finite-type seeds") {
    std::mt19937 rng(1000);
    const auto catalogue = finite_type_catalogue();
    for (int walk = 0; walk < 1000; ++walk) {
      const DynkinType& t = catalogue[static_cast<std::size_t>(walk) % catalogue.size()];
      GradedSeed seed = bipartite_seed(t);
      const GradingMatrix initial = seed.grading();
      const std::size_t n = seed.size();
      std::vector<mpq_class> point(n);
      for (auto& v : point) {
        v = mpq_class(uniform(rng, 1, 7), uniform(rng, 1, 7));
        v.canonicalize();
      }
      std::vector<mpq_class> values = point;
      const long length = uniform(rng, 1, 20);
      for (long step = 0; step < length; ++step) {
        const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        values = rational_mutation(values, seed.pattern().matrix(), k, k);
        const GradedSeed next = mutate_seed(seed, k);
        REQUIRE(is_valid_grading(next.pattern(), next.grading()));
        REQUIRE(kernel_basis(next.pattern().matrix().transpose()).cols() == next.grading().dimension());
        REQUIRE(abs(laplace_det(change_of_basis(standard_grading(next.pattern()), next.grading()))) == 1);
        REQUIRE(degree(next.cluster()[k], initial) == next.grading().row_degree(k));
        REQUIRE(eval_laurent(next.cluster()[k], point) == values[k]);
        const ExchangeVectors bv = b_vectors(seed.pattern(), k);
        REQUIRE(monomial_degree(bv.plus, seed.grading()) == monomial_degree(bv.minus, seed.grading()));
        REQUIRE(mutate_seed(next, k) == seed);
        seed = next;
      }
    }
  }
}
