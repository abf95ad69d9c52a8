#include "gradedca/homog.hpp"

#include <set>

#include "gradedca/error.hpp"

namespace gradedca {

std::string to_string(HomogenisationMethod m) { return m == HomogenisationMethod::Lemma ? "lemma" : "principal"; }

namespace {

HomogenisedSeed finish(ExchangePattern pattern, IntMatrix g, std::size_t first_added, HomogenisationMethod method) {
  GradingMatrix grading(std::move(g));
  if (!is_valid_grading(pattern, grading))
    throw InvariantViolation("homogenise: B_hom^T G_hom is not zero");
  HomogenisedSeed out;
  for (std::size_t i = first_added; i < pattern.size(); ++i) out.added_indices.push_back(i);
  out.seed = GradedSeed::initial(std::move(pattern), std::move(grading));
  out.method = method;
  return out;
}

void check_rows(const ExchangePattern& pattern, const IntMatrix& g, const char* what) {
  if (g.rows() != pattern.size())
    throw InputError(std::string(what) + ": G has " + std::to_string(g.rows()) + " rows, B has " +
                     std::to_string(pattern.size()));
}

}  // namespace

HomogenisedSeed homogenise(const ExchangePattern& pattern, const IntMatrix& g) {
  check_rows(pattern, g, "homogenise");
  const std::size_t r = pattern.size();
  if (g.cols() == 0) return finish(pattern, g, r, HomogenisationMethod::Lemma);
  const IntMatrix& b = pattern.matrix();
  const IntMatrix b_hom = b.vstack(mpz_class(-1) * (g.transpose() * b));
  const IntMatrix g_hom = g.vstack(IntMatrix::identity(g.cols()));
  return finish(ExchangePattern(b_hom, pattern.mutable_rows()), g_hom, r, HomogenisationMethod::Lemma);
}

HomogenisedSeed principal_homogenise(const ExchangePattern& pattern, const IntMatrix& g, int sign) {
  check_rows(pattern, g, "principal_homogenise");
  if (pattern.has_frozen() || pattern.matrix().rows() != pattern.matrix().cols())
    throw InputError("principal_homogenise: exchange matrix must be square without frozen rows");
  if (sign != 1 && sign != -1) throw InputError("principal_homogenise: sign must be +1 or -1");
  const std::size_t n = pattern.size();
  const mpz_class s = sign;
  const IntMatrix& b = pattern.matrix();
  const IntMatrix b_hom = b.vstack(s * IntMatrix::identity(n));
  const IntMatrix g_hom = g.vstack(mpz_class(-sign) * (b.transpose() * g));
  return finish(ExchangePattern(b_hom, pattern.mutable_rows()), g_hom, n, HomogenisationMethod::Principal);
}

CheckReport quotient_recovers(const GradedSeed& original, const HomogenisedSeed& hom,
                              const EnumerationOptions& options) {
  CheckReport report;
  const std::size_t r = original.size();
  if (hom.seed.size() != r + hom.added_indices.size()) {
    report.failures.push_back("homogenised seed does not extend the original by its added variables");
    return report;
  }
  const EnumerationResult plain = enumerate(original, options);
  const EnumerationResult extended = enumerate(hom.seed, options);
  std::vector<bool> drop(hom.seed.size(), false);
  for (std::size_t i : hom.added_indices) drop.at(i) = true;

  std::set<std::string> expected;
  for (const auto& v : plain.variables)
    if (!v.frozen) expected.insert(v.poly.to_string());
  std::set<std::string> recovered;
  for (const auto& v : extended.variables)
    if (!v.frozen) recovered.insert(v.poly.specialize_to_one(drop).to_string());

  if (extended.mutable_variable_count() != plain.mutable_variable_count())
    report.failures.push_back("homogenised algebra has " + std::to_string(extended.mutable_variable_count()) +
                              " mutable variables, original has " + std::to_string(plain.mutable_variable_count()));
  for (const auto& s : recovered)
    if (!expected.count(s)) report.failures.push_back("specialised variable " + s + " is not in the original");
  for (const auto& s : expected)
    if (!recovered.count(s)) report.failures.push_back("original variable " + s + " is not recovered");
  return report;
}

}  // namespace gradedca
