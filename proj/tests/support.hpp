#pragma once

// Generators and independent reference computations shared by the tests.
// Nothing here calls into the algorithms it is used to check.

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gradedca/cluster.hpp"
#include "gradedca/laurent.hpp"
#include "gradedca/roots.hpp"
#include "gradedca/zlinalg.hpp"

namespace testing_support {

using gradedca::DynkinType;
using gradedca::ExchangePattern;
using gradedca::IntMatrix;
using gradedca::LaurentPoly;

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

// Cofactor expansion along the first row.
inline mpz_class laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const mpz_class term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

// gcd of the k x k minors of an n x k matrix: 1 iff its columns span a
// saturated sublattice of rank k.
inline mpz_class gcd_of_maximal_minors(const IntMatrix& k) {
  const std::size_t n = k.rows();
  const std::size_t d = k.cols();
  if (d == 0) return 1;
  mpz_class g = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    IntMatrix sub(d, d);
    for (std::size_t i = 0, r = 0; i < n; ++i)
      if (pick[i]) {
        for (std::size_t j = 0; j < d; ++j) sub(r, j) = k(i, j);
        ++r;
      }
    mpz_class det = laplace_det(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

inline int sign_of(const mpz_class& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Fomin-Zelevinsky mutation in the form b'_ij = b_ij + sgn(b_ik) [b_ik b_kj]_+.
inline IntMatrix fz_mutate(const IntMatrix& b, std::size_t row_k, std::size_t col_k) {
  IntMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == row_k || j == col_k) {
        out(i, j) = -b(i, j);
        continue;
      }
      const mpz_class prod = b(i, col_k) * b(row_k, j);
      if (prod > 0) out(i, j) = b(i, j) + sign_of(b(i, col_k)) * prod;
    }
  return out;
}

// Random skew-symmetrizable square matrix with entries in [-bound, bound].
inline IntMatrix random_skew_symmetrizable(std::mt19937& rng, std::size_t r, long bound) {
  for (;;) {
    IntMatrix b(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        const long x = uniform(rng, -bound, bound);
        if (x == 0) continue;
        const long y = uniform(rng, 1, bound);
        b(i, j) = x;
        b(j, i) = x > 0 ? -y : y;
      }
    if (gradedca::is_skew_symmetrizable(b)) return b;
  }
}

inline mpq_class eval_laurent(const LaurentPoly& p, const std::vector<mpq_class>& point) {
  mpq_class total = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      mpq_class f = e[i] >= 0 ? point[i] : mpq_class(1) / point[i];
      for (int t = 0; t < std::abs(e[i]); ++t) term *= f;
    }
    total += term;
  }
  return total;
}

// Cluster exchange carried out on numbers instead of polynomials.
inline std::vector<mpq_class> rational_mutation(const std::vector<mpq_class>& values, const IntMatrix& b,
                                                std::size_t row_k, std::size_t col_k) {
  mpq_class plus = 1;
  mpq_class minus = 1;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const long e = b.at(i, col_k);
    for (long t = 0; t < std::abs(e); ++t) (e > 0 ? plus : minus) *= values[i];
  }
  std::vector<mpq_class> out = values;
  out[row_k] = (plus + minus) / values[row_k];
  return out;
}

struct NaiveCount {
  std::size_t clusters = 0;
  std::size_t variables = 0;
  gradedca::DegreeDistribution distribution;
  bool degrees_consistent = true;
};

// Exchange graph walked on rational values at a random point, with degrees
// propagated by deg X'_k = deg(prod_{b_ik > 0} X_i^b_ik) - deg X_k.
inline NaiveCount naive_enumerate(const ExchangePattern& pattern, const gradedca::GradingMatrix& grading,
                                  std::uint32_t seed = 7, std::size_t max_seeds = 200000) {
  using gradedca::Degree;
  struct State {
    std::vector<mpq_class> values;
    std::vector<Degree> degrees;
    IntMatrix b;
  };
  std::mt19937 rng(seed);
  const std::size_t r = pattern.size();
  const auto& rows = pattern.mutable_rows();
  State start{{}, {}, pattern.matrix()};
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class v(uniform(rng, 2, 1000), uniform(rng, 2, 1000));
    v.canonicalize();
    start.values.push_back(v);
    start.degrees.push_back(grading.row_degree(i));
  }
  auto key_of = [&](const State& s) {
    std::vector<std::string> k;
    for (std::size_t row : rows) k.push_back(s.values[row].get_str());
    std::sort(k.begin(), k.end());
    return k;
  };
  NaiveCount out;
  std::map<std::string, Degree> variables;
  std::set<std::vector<std::string>> seen{key_of(start)};
  std::deque<State> queue{start};
  for (std::size_t row : rows) variables.emplace(start.values[row].get_str(), start.degrees[row]);
  while (!queue.empty() && seen.size() <= max_seeds) {
    State s = std::move(queue.front());
    queue.pop_front();
    for (std::size_t c = 0; c < rows.size(); ++c) {
      const std::size_t k = rows[c];
      State next{rational_mutation(s.values, s.b, k, c), s.degrees, fz_mutate(s.b, k, c)};
      Degree d(s.degrees[k].size(), 0);
      for (std::size_t i = 0; i < r; ++i) {
        const long e = s.b.at(i, c);
        if (e > 0)
          for (std::size_t t = 0; t < d.size(); ++t) d[t] += e * s.degrees[i][t];
      }
      for (std::size_t t = 0; t < d.size(); ++t) d[t] -= s.degrees[k][t];
      next.degrees[k] = d;
      auto [it, fresh] = variables.emplace(next.values[k].get_str(), d);
      if (!fresh && it->second != d) out.degrees_consistent = false;
      if (seen.insert(key_of(next)).second) queue.push_back(std::move(next));
    }
  }
  out.clusters = seen.size();
  out.variables = variables.size();
  for (const auto& [v, d] : variables) ++out.distribution[d];
  return out;
}

inline std::vector<DynkinType> finite_type_catalogue() {
  std::vector<DynkinType> out;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6",
                           "F4", "G2"})
    out.push_back(DynkinType::parse(name));
  return out;
}

}  // namespace testing_support
