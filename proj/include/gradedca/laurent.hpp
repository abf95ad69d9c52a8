#pragma once

// Multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. Terms are kept in a map ordered lexicographically descending
// on exponent vectors, which is both the canonical order for equality and the
// order of the text serialization.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gradedca/error.hpp"

namespace gradedca {

using Exponent = std::vector<int>;

struct ExponentDescending {
  bool operator()(const Exponent& a, const Exponent& b) const { return b < a; }
};

class InexactDivision : public InvariantViolation {
 public:
  explicit InexactDivision(const std::string& what) : InvariantViolation(what) {}
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, mpz_class, ExponentDescending>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const mpz_class& c);
  static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1);
  /// The initial variable x_{i+1} (0-based index i).
  static LaurentPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const Exponent& e, const mpz_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned e) const;

  /// Componentwise minimum exponent over all terms (the monomial content).
  Exponent min_exponents() const;

  /// Sets every variable flagged in `drop` to 1 and removes it from the
  /// variable list; the result lives in the remaining variables.
  LaurentPoly specialize_to_one(const std::vector<bool>& drop) const;

  /// `(c)*x1^a*x2^b + ...`, terms in descending lexicographic exponent order,
  /// zero exponents omitted; the zero polynomial prints as `0`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, std::size_t nvars);

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Exact quotient a / b in the Laurent ring. Throws InexactDivision when b
/// does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace gradedca
