#pragma once

// Finite-type data: Cartan matrices, bipartite seeds, positive roots, the
// degree formula deg X[alpha] = -alpha G and the published degree counts.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradedca/cluster.hpp"
#include "gradedca/degree.hpp"
#include "gradedca/zlinalg.hpp"

namespace gradedca {

struct DynkinType {
  char family = 'A';  // one of A B C D E F G
  std::size_t rank = 1;

  /// Parses `A5`, `d4`, `E7`, ...; throws InputError on invalid types.
  static DynkinType parse(std::string_view text);
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Throws InputError unless the rank is allowed for the family.
void validate(const DynkinType& t);

/// Coefficients of an almost positive root in the basis of simple roots.
/// Negative simple roots are stored as -e_i.
struct Root {
  std::vector<int> coeffs;

  bool is_positive() const;
  bool is_negative_simple() const;
  std::size_t height() const;
  std::string to_string() const;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Standard Cartan matrix. Vertices are numbered along the Dynkin diagram so
/// that the short/branch end carries the last index (B, C, D); E_n is the
/// chain 1..n-1 with vertex n attached to vertex n-3.
IntMatrix cartan_matrix(const DynkinType& t);

/// +1 for sources, -1 for sinks of the bipartite orientation (0-based).
std::vector<int> bipartite_signs(const DynkinType& t);

/// b_ij = sign_i * |a_ij| for i != j: Cartan companion cartan_matrix(t),
/// every row single-signed.
ExchangePattern bipartite_pattern(const DynkinType& t);

/// Initial seed on the bipartite pattern with its standard grading.
GradedSeed bipartite_seed(const DynkinType& t);

/// Positive roots by closure of the simple roots under simple reflections
/// s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i, sorted by (height, coeffs).
std::vector<Root> positive_roots(const DynkinType& t);

/// Positive roots followed by the negative simple roots.
std::vector<Root> almost_positive_roots(const DynkinType& t);

/// Classical count of almost positive roots.
std::size_t almost_positive_root_count(const DynkinType& t);

/// -alpha G (which is +G_i for the negative simple root -alpha_i).
Degree degree_of_root(const Root& alpha, const GradingMatrix& grading);

/// Published degree counts for the type. Types admitting only the zero
/// grading get all variables in the empty degree. Two-dimensional D_n (n even)
/// counts are in the basis of reference_grading(t).
DegreeDistribution closed_form_distribution(const DynkinType& t);

/// Published kernel vectors, for the families where they form a valid
/// grading of bipartite_pattern(t) (A, D). nullopt otherwise.
std::optional<GradingMatrix> reference_grading(const DynkinType& t);

/// deg over every almost positive root: the distribution predicted by -alpha G.
DegreeDistribution root_formula_distribution(const DynkinType& t, const GradingMatrix& grading);

}  // namespace gradedca
