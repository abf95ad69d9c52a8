#pragma once

// Seeds, graded seeds and their mutation.
//
// Indices are 0-based throughout the library. A "mutable index" k is the
// position of a mutable variable in the cluster (a row of B); the column of B
// that carries its exchange relation is pattern.column_of(k).
//
// Sign convention: b_ij > 0 means b_ij arrows i -> j in the quiver of B.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gradedca/degree.hpp"
#include "gradedca/laurent.hpp"
#include "gradedca/zlinalg.hpp"

namespace gradedca {

class ExchangePattern {
 public:
  ExchangePattern() = default;
  /// `b` is r x m; column c exchanges the variable in row mutable_rows[c].
  ExchangePattern(IntMatrix b, std::vector<std::size_t> mutable_rows);
  /// Square B with every row mutable (no frozen variables).
  static ExchangePattern square(IntMatrix b);

  const IntMatrix& matrix() const { return b_; }
  std::size_t size() const { return b_.rows(); }
  std::size_t mutable_count() const { return mutable_rows_.size(); }
  const std::vector<std::size_t>& mutable_rows() const { return mutable_rows_; }
  bool is_mutable(std::size_t k) const;
  /// Column of B for mutable index k; throws InputError if k is frozen.
  std::size_t column_of(std::size_t k) const;
  /// b_{i,k}: entry in row i of the exchange column of k.
  const mpz_class& entry(std::size_t i, std::size_t k) const { return b_(i, column_of(k)); }
  /// B_mut: the rows of the mutable variables, in column order.
  IntMatrix principal_part() const;
  bool has_frozen() const { return mutable_rows_.size() != b_.rows(); }

  friend bool operator==(const ExchangePattern& a, const ExchangePattern& b) {
    return a.b_ == b.b_ && a.mutable_rows_ == b.mutable_rows_;
  }

 private:
  IntMatrix b_;
  std::vector<std::size_t> mutable_rows_;
};

/// True iff some positive diagonal D makes D * B_mut skew-symmetric.
bool is_skew_symmetrizable(const IntMatrix& principal);

class GradingMatrix {
 public:
  GradingMatrix() = default;
  explicit GradingMatrix(IntMatrix g) : g_(std::move(g)) {}
  static GradingMatrix zero(std::size_t rows, std::size_t d = 0) { return GradingMatrix(IntMatrix(rows, d)); }

  const IntMatrix& matrix() const { return g_; }
  std::size_t rows() const { return g_.rows(); }
  std::size_t dimension() const { return g_.cols(); }
  /// deg(X_i) = G_i.
  Degree row_degree(std::size_t i) const;

  friend bool operator==(const GradingMatrix& a, const GradingMatrix& b) { return a.g_ == b.g_; }

 private:
  IntMatrix g_;
};

/// B^T G == 0.
bool is_valid_grading(const ExchangePattern& pattern, const GradingMatrix& grading);

class GradedSeed {
 public:
  GradedSeed() = default;
  GradedSeed(std::vector<LaurentPoly> cluster, ExchangePattern pattern, GradingMatrix grading);
  /// Cluster x_1..x_r as single-variable monomials.
  static GradedSeed initial(ExchangePattern pattern, GradingMatrix grading);

  const std::vector<LaurentPoly>& cluster() const { return cluster_; }
  const ExchangePattern& pattern() const { return pattern_; }
  const GradingMatrix& grading() const { return grading_; }
  std::size_t size() const { return cluster_.size(); }

  friend bool operator==(const GradedSeed& a, const GradedSeed& b) {
    return a.cluster_ == b.cluster_ && a.pattern_ == b.pattern_ && a.grading_ == b.grading_;
  }

 private:
  std::vector<LaurentPoly> cluster_;
  ExchangePattern pattern_;
  GradingMatrix grading_;
};

struct ExchangeVectors {
  Exponent plus;
  Exponent minus;
};

/// b_k^+ = -e_k + sum_{b_ik>0} b_ik e_i and b_k^- = -e_k - sum_{b_ik<0} b_ik e_i.
ExchangeVectors b_vectors(const ExchangePattern& pattern, std::size_t k);

/// The r x r matrix E with E^2 = 1 that encodes mutation at k.
IntMatrix e_matrix(const ExchangePattern& pattern, std::size_t k);

ExchangePattern mutate_pattern(const ExchangePattern& pattern, std::size_t k);

/// G' = E^T G. Throws InputError if `grading` is not valid for `pattern`.
GradingMatrix mutate_grading(const ExchangePattern& pattern, const GradingMatrix& grading, std::size_t k);

/// Exchange relation evaluated over the initial variables. Throws
/// InexactDivision if the exchange binomial is not divisible by X_k.
GradedSeed mutate_seed(const GradedSeed& seed, std::size_t k);

class InhomogeneousError : public InputError {
 public:
  InhomogeneousError(const std::string& what, std::string first, std::string second)
      : InputError(what), first_witness(std::move(first)), second_witness(std::move(second)) {}
  std::string first_witness;
  std::string second_witness;
};

/// Common degree of every monomial of p under G. Throws InhomogeneousError
/// (with two witness monomials) or InputError for the zero polynomial.
Degree degree(const LaurentPoly& p, const GradingMatrix& grading);

/// deg of the monomial x^a.
Degree monomial_degree(const Exponent& a, const GradingMatrix& grading);

/// Columns form the canonical lattice basis of ker(B^T).
GradingMatrix standard_grading(const ExchangePattern& pattern);

/// M with H = G * M. Throws InputError when no integer M exists.
IntMatrix change_of_basis(const GradingMatrix& standard, const GradingMatrix& h);

}  // namespace gradedca
