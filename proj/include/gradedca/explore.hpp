#pragma once

// Breadth-first enumeration of the exchange graph of a graded seed, plus the
// checks that run over the result: degree distribution, balancedness, the
// almost-positive-root bijection and exactness of the degree frieze.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedca/cluster.hpp"
#include "gradedca/degree.hpp"
#include "gradedca/report.hpp"
#include "gradedca/roots.hpp"

namespace gradedca {

struct EnumerationLimits {
  std::size_t max_seeds = 1'000'000;
  std::size_t max_variables = 10'000;
};

struct EnumerationOptions {
  EnumerationLimits limits;
  unsigned workers = 1;
  // Recompute every exchange symbolically and compare with the interned
  // variable, instead of trusting the modular fingerprint on rediscovery.
  bool verify_exchanges = false;
  std::uint64_t fingerprint_seed = 0x5eed5eedULL;
};

struct ClusterVariable {
  LaurentPoly poly;
  Degree degree;
  bool frozen = false;
  std::optional<std::size_t> initial_position;
};

struct ExchangeFactor {
  std::size_t variable;
  int power;
  friend bool operator==(const ExchangeFactor&, const ExchangeFactor&) = default;
};

/// One mutation X_k -> X'_k between two seeds. `plus` and `minus` are the
/// two monomials of the exchange binomial X_k X'_k = prod(plus) + prod(minus).
struct ExchangeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t position = 0;
  std::size_t old_variable = 0;
  std::size_t new_variable = 0;
  std::vector<ExchangeFactor> plus;
  std::vector<ExchangeFactor> minus;
  friend bool operator==(const ExchangeEdge&, const ExchangeEdge&) = default;
};

struct EnumerationResult {
  std::size_t cardinality = 0;  // variables per cluster, frozen included
  std::vector<std::size_t> mutable_positions;
  std::vector<ClusterVariable> variables;           // discovery order
  std::vector<std::vector<std::size_t>> clusters;   // variable ids by position
  std::vector<ExchangeEdge> edges;                  // each undirected edge once

  std::size_t cluster_count() const { return clusters.size(); }
  std::size_t mutable_variable_count() const;
};

/// Sorted variable ids at the mutable positions: seeds with the same cluster
/// up to order share a key.
using SeedKey = std::vector<std::size_t>;
SeedKey seed_key(const std::vector<std::size_t>& cluster, const std::vector<std::size_t>& mutable_positions);

/// The key in printable form: sorted serialized Laurent polynomials.
std::vector<std::string> seed_key_strings(const EnumerationResult& result, std::size_t seed);

/// Explores every seed reachable from `seed`, which must be an initial seed
/// (cluster = x_1..x_r). Throws LimitExceeded when a limit trips before the
/// exchange graph closes, InvariantViolation on any failed internal check.
EnumerationResult enumerate(const GradedSeed& seed, const EnumerationOptions& options = {});

/// Counts of mutable cluster variables per degree.
DegreeDistribution distribution(const EnumerationResult& result);

/// counts(d) == counts(-d) for every d.
bool is_balanced(const DegreeDistribution& dist);

/// Degrees pushed through a change of basis: d -> d * M.
DegreeDistribution push_forward(const DegreeDistribution& dist, const IntMatrix& m);

struct RootBijectionReport : CheckReport {
  std::map<std::size_t, Root> root_of_variable;
};

/// Denominator vectors of the mutable variables must biject onto the almost
/// positive roots of `t`, with nonzero constant term in the numerator and
/// degree -alpha G.
RootBijectionReport verify_root_bijection(const EnumerationResult& result, const DynkinType& t,
                                          const GradingMatrix& grading);

/// Every recorded exchange has deg(plus) == deg(minus) == deg X_k + deg X'_k.
CheckReport frieze_exactness_check(const EnumerationResult& result);

/// Decides finite type of B_mut by exploring its mutation class: finite iff
/// every matrix in the class has |b_ij b_ji| <= 3. nullopt if the class
/// exceeds `max_class` matrices before closing.
std::optional<bool> is_finite_type(const ExchangePattern& pattern, std::size_t max_class = 200'000);

}  // namespace gradedca
