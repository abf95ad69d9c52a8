#pragma once

// Homogenisation: extending a seed by frozen variables so that an arbitrary
// degree assignment becomes a grading.

#include <cstddef>
#include <string>
#include <vector>

#include "gradedca/cluster.hpp"
#include "gradedca/explore.hpp"
#include "gradedca/report.hpp"

namespace gradedca {

enum class HomogenisationMethod { Lemma, Principal };

std::string to_string(HomogenisationMethod m);

struct HomogenisedSeed {
  GradedSeed seed;
  std::vector<std::size_t> added_indices;  // frozen positions introduced
  HomogenisationMethod method = HomogenisationMethod::Lemma;
};

/// B_hom = [B; -G^T B], G_hom = [G; I_d], cluster (X_1..X_r, h_1..h_d).
/// `g` is r x d and need not be a grading. d == 0 returns the seed unchanged.
HomogenisedSeed homogenise(const ExchangePattern& pattern, const IntMatrix& g);

/// B_hom = [B; s I_n] for square B, G_hom = [g; -s B^T g] with s = +-1.
HomogenisedSeed principal_homogenise(const ExchangePattern& pattern, const IntMatrix& g, int sign = 1);

/// Enumerates both algebras and checks that setting every added variable to 1
/// maps the mutable variables of `hom` onto those of `original`.
CheckReport quotient_recovers(const GradedSeed& original, const HomogenisedSeed& hom,
                              const EnumerationOptions& options = {});

}  // namespace gradedca
