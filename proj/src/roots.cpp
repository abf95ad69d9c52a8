#include "gradedca/roots.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "gradedca/error.hpp"

namespace gradedca {

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("bad Dynkin type '" + std::string(text) + "'");
  DynkinType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("bad Dynkin type '" + std::string(text) + "'");
  t.rank = n;
  validate(t);
  return t;
}

void validate(const DynkinType& t) {
  const std::size_t n = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = n >= 1; break;
    case 'B':
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) throw InputError("unsupported Dynkin type " + t.name());
}

bool Root::is_positive() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; });
}

bool Root::is_negative_simple() const {
  int minus_ones = 0;
  for (int c : coeffs) {
    if (c == -1) ++minus_ones;
    else if (c != 0) return false;
  }
  return minus_ones == 1;
}

std::size_t Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return static_cast<std::size_t>(std::max(h, 0));
}

std::string Root::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs[i]);
  }
  return s + ")";
}

namespace {

void link(IntMatrix& a, std::size_t i, std::size_t j, long aij = -1, long aji = -1) {
  a(i, j) = aij;
  a(j, i) = aji;
}

}  // namespace

IntMatrix cartan_matrix(const DynkinType& t) {
  validate(t);
  const std::size_t n = t.rank;
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 4, n - 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2, -2, -1);
      link(a, 2, 3);
      break;
    case 'G':
      link(a, 0, 1, -1, -3);
      break;
  }
  return a;
}

std::vector<int> bipartite_signs(const DynkinType& t) {
  validate(t);
  const std::size_t n = t.rank;
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (i % 2 == 0) ? 1 : -1;
  if (t.family == 'D') s[n - 1] = s[n - 2];
  if (t.family == 'E') s[n - 1] = -s[n - 4];
  return s;
}

ExchangePattern bipartite_pattern(const DynkinType& t) {
  const IntMatrix a = cartan_matrix(t);
  const std::vector<int> sign = bipartite_signs(t);
  const std::size_t n = t.rank;
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b(i, j) = sign[i] * abs(a(i, j));
  return ExchangePattern::square(std::move(b));
}

GradedSeed bipartite_seed(const DynkinType& t) {
  ExchangePattern p = bipartite_pattern(t);
  GradingMatrix g = standard_grading(p);
  return GradedSeed::initial(std::move(p), std::move(g));
}

std::vector<Root> positive_roots(const DynkinType& t) {
  const IntMatrix a = cartan_matrix(t);
  const std::size_t n = t.rank;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    std::vector<int> beta = std::move(todo.back());
    todo.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      long pairing = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pairing += a.at(i, j) * beta[j];
      if (pairing == 0) continue;
      std::vector<int> img = beta;
      img[i] -= static_cast<int>(pairing);
      if (img[i] < 0) continue;  // only beta == alpha_i leaves the positive cone
      if (seen.insert(img).second) todo.push_back(img);
    }
  }
  std::vector<Root> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.push_back(Root{c});
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coeffs < y.coeffs;
  });
  return out;
}

std::vector<Root> almost_positive_roots(const DynkinType& t) {
  std::vector<Root> out = positive_roots(t);
  for (std::size_t i = 0; i < t.rank; ++i) {
    std::vector<int> e(t.rank, 0);
    e[i] = -1;
    out.push_back(Root{e});
  }
  return out;
}

std::size_t almost_positive_root_count(const DynkinType& t) {
  validate(t);
  const std::size_t n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 3) / 2;
    case 'B':
    case 'C': return n * n + n;
    case 'D': return n * n;
    case 'E': return n == 6 ? 42 : n == 7 ? 70 : 128;
    case 'F': return 28;
    case 'G': return 8;
  }
  return 0;
}

Degree degree_of_root(const Root& alpha, const GradingMatrix& grading) {
  if (alpha.coeffs.size() != grading.rows())
    throw InputError("degree_of_root: root length " + std::to_string(alpha.coeffs.size()) +
                     " does not match grading rows " + std::to_string(grading.rows()));
  Exponent minus_alpha(alpha.coeffs.size());
  for (std::size_t i = 0; i < minus_alpha.size(); ++i) minus_alpha[i] = -alpha.coeffs[i];
  return monomial_degree(minus_alpha, grading);
}

namespace {

bool has_only_zero_grading(const DynkinType& t) {
  switch (t.family) {
    case 'A':
    case 'B':
    case 'C': return t.rank % 2 == 0;
    case 'D': return false;
    case 'E': return t.rank != 7;
    default: return true;
  }
}

}  // namespace

DegreeDistribution closed_form_distribution(const DynkinType& t) {
  validate(t);
  const std::size_t n = t.rank;
  DegreeDistribution d;
  if (has_only_zero_grading(t)) {
    d[Degree{}] = almost_positive_root_count(t);
    return d;
  }
  switch (t.family) {
    case 'A':
      d[{1}] = (n + 1) * (n + 3) / 8;
      d[{0}] = (n - 1) * (n + 3) / 4;
      d[{-1}] = (n + 1) * (n + 3) / 8;
      break;
    case 'B':
      d[{2}] = (n + 1) * (n - 1) / 4;
      d[{1}] = (n + 1) / 2;
      d[{0}] = (n + 1) * (n - 1) / 4;
      d[{-1}] = (n + 1) / 2;
      d[{-2}] = (n + 1) * (n - 1) / 4;
      break;
    case 'C':
      d[{1}] = ((n + 1) / 2) * ((n + 1) / 2);
      d[{0}] = (n + 1) * (n - 1) / 2;
      d[{-1}] = ((n + 1) / 2) * ((n + 1) / 2);
      break;
    case 'D':
      if (n % 2 == 1) {
        d[{1}] = n;
        d[{0}] = n * (n - 2);
        d[{-1}] = n;
      } else {
        // rows: first coordinate, columns: second coordinate
        d[{-1, 0}] = (n * n - 2 * n) / 4;
        d[{-1, 1}] = n / 2;
        d[{0, -1}] = n / 2;
        d[{0, 0}] = (n * n - 2 * n) / 2;
        d[{0, 1}] = n / 2;
        d[{1, -1}] = n / 2;
        d[{1, 0}] = (n * n - 2 * n) / 4;
      }
      break;
    case 'E':
      d[{1}] = 15;
      d[{0}] = 40;
      d[{-1}] = 15;
      break;
  }
  return d;
}

std::optional<GradingMatrix> reference_grading(const DynkinType& t) {
  validate(t);
  const std::size_t n = t.rank;
  if (t.family == 'A' && n % 2 == 1) {
    IntMatrix g(n, 1);
    for (std::size_t i = 1; i <= n; ++i) g(i - 1, 0) = (i % 4 == 1) ? 1 : (i % 4 == 3) ? -1 : 0;
    return GradingMatrix(g);
  }
  if (t.family == 'D' && n % 2 == 1) {
    IntMatrix g(n, 1);
    g(n - 2, 0) = 1;
    g(n - 1, 0) = -1;
    return GradingMatrix(g);
  }
  if (t.family == 'D') {
    IntMatrix g(n, 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (i % 4 == 1) g(i - 1, 0) = 1;
      if (i % 4 == 3) g(i - 1, 0) = -1;
    }
    if (n % 4 == 0) {
      g(n - 2, 0) = -1;
      g(n - 2, 1) = 1;
      g(n - 1, 1) = -1;
    } else {
      g(n - 2, 0) = 1;
      g(n - 2, 1) = -1;
      g(n - 1, 1) = 1;
    }
    return GradingMatrix(g);
  }
  return std::nullopt;
}

DegreeDistribution root_formula_distribution(const DynkinType& t, const GradingMatrix& grading) {
  DegreeDistribution d;
  for (const Root& r : almost_positive_roots(t)) ++d[degree_of_root(r, grading)];
  return d;
}

}  // namespace gradedca
