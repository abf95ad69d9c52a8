#include "gradedca/cluster.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "gradedca/error.hpp"

namespace gradedca {

// ---- degree vectors -------------------------------------------------------

Degree operator+(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw InputError("degree sum: dimension mismatch");
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Degree operator-(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw InputError("degree difference: dimension mismatch");
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Degree operator-(const Degree& a) {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero_degree(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](std::int64_t v) { return v == 0; });
}

std::string to_string(const Degree& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + "]";
}

std::string to_string(const DegreeDistribution& dist) {
  std::string s = "{";
  bool first = true;
  for (auto it = dist.rbegin(); it != dist.rend(); ++it) {
    if (!first) s += ", ";
    first = false;
    s += to_string(it->first) + ":" + std::to_string(it->second);
  }
  return s + "}";
}

std::size_t total_count(const DegreeDistribution& dist) {
  std::size_t n = 0;
  for (const auto& [d, c] : dist) n += c;
  return n;
}

// ---- patterns ---------------------------------------------------------------

bool is_skew_symmetrizable(const IntMatrix& b) {
  const std::size_t n = b.rows();
  if (b.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((b(i, j) == 0) != (b(j, i) == 0)) return false;
      if (b(i, j) * b(j, i) > 0) return false;
    }
  }
  // Propagate a candidate symmetrizer d along the graph of B: d_i b_ij = -d_j b_ji.
  std::vector<mpq_class> d(n, mpq_class(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        mpq_class want = -d[i] * mpq_class(b(i, j)) / mpq_class(b(j, i));
        if (d[j] == 0) {
          d[j] = want;
          todo.push(j);
        } else if (d[j] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

ExchangePattern::ExchangePattern(IntMatrix b, std::vector<std::size_t> mutable_rows)
    : b_(std::move(b)), mutable_rows_(std::move(mutable_rows)) {
  if (mutable_rows_.size() != b_.cols())
    throw InputError("ExchangePattern: need one mutable row per column of B");
  std::vector<bool> seen(b_.rows(), false);
  for (std::size_t r : mutable_rows_) {
    if (r >= b_.rows()) throw InputError("ExchangePattern: mutable row out of range");
    if (seen[r]) throw InputError("ExchangePattern: repeated mutable row");
    seen[r] = true;
  }
  if (!is_skew_symmetrizable(principal_part()))
    throw InputError("ExchangePattern: principal part " + principal_part().to_string() +
                     " is not skew-symmetrizable");
}

ExchangePattern ExchangePattern::square(IntMatrix b) {
  if (b.rows() != b.cols()) throw InputError("ExchangePattern::square: matrix not square");
  std::vector<std::size_t> rows(b.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return ExchangePattern(std::move(b), std::move(rows));
}

bool ExchangePattern::is_mutable(std::size_t k) const {
  return std::find(mutable_rows_.begin(), mutable_rows_.end(), k) != mutable_rows_.end();
}

std::size_t ExchangePattern::column_of(std::size_t k) const {
  auto it = std::find(mutable_rows_.begin(), mutable_rows_.end(), k);
  if (it == mutable_rows_.end())
    throw InputError("index " + std::to_string(k + 1) + " is not mutable");
  return static_cast<std::size_t>(it - mutable_rows_.begin());
}

IntMatrix ExchangePattern::principal_part() const {
  const std::size_t m = mutable_rows_.size();
  IntMatrix p(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) p(a, c) = b_(mutable_rows_[a], c);
  return p;
}

// ---- gradings and seeds -----------------------------------------------------

Degree GradingMatrix::row_degree(std::size_t i) const {
  Degree d(g_.cols());
  for (std::size_t j = 0; j < g_.cols(); ++j) d[j] = g_.at(i, j);
  return d;
}

bool is_valid_grading(const ExchangePattern& pattern, const GradingMatrix& grading) {
  if (grading.rows() != pattern.size()) return false;
  if (grading.dimension() == 0 || pattern.mutable_count() == 0) return true;
  return (pattern.matrix().transpose() * grading.matrix()).is_zero();
}

GradedSeed::GradedSeed(std::vector<LaurentPoly> cluster, ExchangePattern pattern, GradingMatrix grading)
    : cluster_(std::move(cluster)), pattern_(std::move(pattern)), grading_(std::move(grading)) {
  if (cluster_.size() != pattern_.size()) throw InputError("GradedSeed: cluster size differs from B rows");
  if (!is_valid_grading(pattern_, grading_)) throw InputError("GradedSeed: B^T G != 0");
  for (const auto& x : cluster_)
    if (x.nvars() != cluster_.size()) throw InputError("GradedSeed: cluster variable in wrong ring");
}

GradedSeed GradedSeed::initial(ExchangePattern pattern, GradingMatrix grading) {
  const std::size_t r = pattern.size();
  std::vector<LaurentPoly> cluster;
  cluster.reserve(r);
  for (std::size_t i = 0; i < r; ++i) cluster.push_back(LaurentPoly::variable(r, i));
  return GradedSeed(std::move(cluster), std::move(pattern), std::move(grading));
}

// ---- mutation ----------------------------------------------------------------

ExchangeVectors b_vectors(const ExchangePattern& pattern, std::size_t k) {
  const std::size_t c = pattern.column_of(k);
  const IntMatrix& b = pattern.matrix();
  ExchangeVectors v{Exponent(b.rows(), 0), Exponent(b.rows(), 0)};
  v.plus[k] = -1;
  v.minus[k] = -1;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const long bik = b.at(i, c);
    if (bik > 0) v.plus[i] += static_cast<int>(bik);
    if (bik < 0) v.minus[i] -= static_cast<int>(bik);
  }
  return v;
}

IntMatrix e_matrix(const ExchangePattern& pattern, std::size_t k) {
  const std::size_t c = pattern.column_of(k);
  const IntMatrix& b = pattern.matrix();
  IntMatrix e = IntMatrix::identity(b.rows());
  e(k, k) = -1;
  for (std::size_t r = 0; r < b.rows(); ++r)
    if (r != k && b(r, c) < 0) e(r, k) = -b(r, c);
  return e;
}

ExchangePattern mutate_pattern(const ExchangePattern& pattern, std::size_t k) {
  const std::size_t kc = pattern.column_of(k);
  const IntMatrix& b = pattern.matrix();
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == kc) {
        out(i, j) = -b(i, j);
        continue;
      }
      const mpz_class& bik = b(i, kc);
      const mpz_class& bkj = b(k, j);
      // b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
      mpz_class corr = abs(bik) * bkj + bik * abs(bkj);
      out(i, j) = b(i, j) + corr / 2;
    }
  }
  return ExchangePattern(std::move(out), pattern.mutable_rows());
}

GradingMatrix mutate_grading(const ExchangePattern& pattern, const GradingMatrix& grading, std::size_t k) {
  if (!is_valid_grading(pattern, grading)) throw InputError("mutate_grading: B^T G != 0");
  const ExchangeVectors bv = b_vectors(pattern, k);
  IntMatrix g = grading.matrix();
  for (std::size_t j = 0; j < g.cols(); ++j) {
    mpz_class v = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
      if (bv.minus[i] != 0) v += bv.minus[i] * grading.matrix()(i, j);
    g(k, j) = v;
  }
  return GradingMatrix(std::move(g));
}

GradedSeed mutate_seed(const GradedSeed& seed, std::size_t k) {
  const ExchangePattern& pattern = seed.pattern();
  const std::size_t c = pattern.column_of(k);
  const std::size_t r = seed.size();
  LaurentPoly plus = LaurentPoly::constant(r, 1);
  LaurentPoly minus = LaurentPoly::constant(r, 1);
  for (std::size_t i = 0; i < r; ++i) {
    const long bik = pattern.matrix().at(i, c);
    if (bik > 0) plus = plus * seed.cluster()[i].pow(static_cast<unsigned>(bik));
    if (bik < 0) minus = minus * seed.cluster()[i].pow(static_cast<unsigned>(-bik));
  }
  std::vector<LaurentPoly> cluster = seed.cluster();
  cluster[k] = divide_exact(plus + minus, seed.cluster()[k]);
  return GradedSeed(std::move(cluster), mutate_pattern(pattern, k), mutate_grading(pattern, seed.grading(), k));
}

// ---- degrees -------------------------------------------------------------------

Degree monomial_degree(const Exponent& a, const GradingMatrix& grading) {
  const IntMatrix& g = grading.matrix();
  if (a.size() != g.rows()) throw InputError("monomial_degree: grading has wrong number of rows");
  Degree d(g.cols());
  mpz_class acc;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) acc += a[i] * g(i, j);
    if (!acc.fits_slong_p()) throw InputError("monomial_degree: degree out of machine range");
    d[j] = acc.get_si();
  }
  return d;
}

Degree degree(const LaurentPoly& p, const GradingMatrix& grading) {
  if (p.is_zero()) throw InputError("degree: the zero polynomial has no degree");
  if (p.nvars() != grading.rows()) throw InputError("degree: grading has wrong number of rows");
  const auto& terms = p.terms();
  const Exponent& first_exp = terms.begin()->first;
  const Degree d = monomial_degree(first_exp, grading);
  for (const auto& [e, c] : terms) {
    Degree de = monomial_degree(e, grading);
    if (de != d) {
      std::string w1 = LaurentPoly::monomial(first_exp, terms.begin()->second).to_string();
      std::string w2 = LaurentPoly::monomial(e, c).to_string();
      throw InhomogeneousError("degree: inhomogeneous polynomial, " + w1 + " has degree " + to_string(d) +
                                   " but " + w2 + " has degree " + to_string(de),
                               w1, w2);
    }
  }
  return d;
}

GradingMatrix standard_grading(const ExchangePattern& pattern) {
  const IntMatrix& b = pattern.matrix();
  if (b.cols() == 0) return GradingMatrix(IntMatrix::identity(b.rows()));
  return GradingMatrix(kernel_basis(b.transpose()));
}

IntMatrix change_of_basis(const GradingMatrix& standard, const GradingMatrix& h) {
  if (standard.rows() != h.rows()) throw InputError("change_of_basis: gradings have different row counts");
  if (standard.dimension() == 0) {
    if (!h.matrix().is_zero()) throw InputError("change_of_basis: nonzero grading but empty standard grading");
    return IntMatrix(0, h.dimension());
  }
  auto m = solve_integer(standard.matrix(), h.matrix());
  if (!m) throw InputError("change_of_basis: no integer solution; the first grading is not standard");
  return *m;
}

}  // namespace gradedca
