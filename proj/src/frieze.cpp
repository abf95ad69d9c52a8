#include "gradedca/frieze.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "gradedca/error.hpp"

namespace gradedca {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

void require_type_a(const DynkinType& t, const char* what) {
  validate(t);
  if (t.family != 'A') throw InputError(std::string(what) + ": type " + t.name() + " is not of type A");
}

Degree zero_degree(std::size_t d) { return Degree(d, 0); }

// Sides of the polygon present in a triangulation: its diagonals plus the
// boundary edges.
std::vector<std::vector<bool>> side_table(const std::vector<Diagonal>& triangulation, std::size_t polygon) {
  std::vector<std::vector<bool>> side(polygon, std::vector<bool>(polygon, false));
  for (std::size_t v = 0; v < polygon; ++v) {
    const std::size_t w = (v + 1) % polygon;
    side[v][w] = side[w][v] = true;
  }
  for (const Diagonal& d : triangulation) side[d.i][d.j] = side[d.j][d.i] = true;
  return side;
}

}  // namespace

Diagonal Diagonal::of(long a, long b, std::size_t polygon) {
  if (!is_diagonal(a, b, polygon))
    throw InputError("(" + std::to_string(a) + "," + std::to_string(b) + ") is not a diagonal of the " +
                     std::to_string(polygon) + "-gon");
  const long n = static_cast<long>(polygon);
  auto x = static_cast<std::size_t>(mod(a, n));
  auto y = static_cast<std::size_t>(mod(b, n));
  if (x > y) std::swap(x, y);
  return Diagonal{x, y};
}

bool Diagonal::is_diagonal(long a, long b, std::size_t polygon) {
  if (polygon < 4) return false;
  const long n = static_cast<long>(polygon);
  const long gap = mod(b - a, n);
  return gap >= 2 && gap <= n - 2;
}

std::string Diagonal::to_string() const { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::string StripVertex::to_string() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::vector<Diagonal> diagonals(std::size_t polygon) {
  if (polygon < 4) throw InputError("diagonals: polygon needs at least 4 vertices");
  std::vector<Diagonal> out;
  for (std::size_t i = 0; i < polygon; ++i)
    for (std::size_t j = i + 2; j < polygon; ++j)
      if (Diagonal::is_diagonal(static_cast<long>(i), static_cast<long>(j), polygon)) out.push_back({i, j});
  return out;
}

std::vector<Diagonal> zigzag_triangulation(std::size_t n) {
  if (n == 0) throw InputError("zigzag_triangulation: rank must be positive");
  const std::size_t polygon = n + 3;
  std::vector<Diagonal> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t m = (k + 1) / 2;
    const std::size_t j = (k % 2 == 1) ? polygon - m : polygon - m - 1;
    out.push_back(Diagonal{m, j});
  }
  return out;
}

IntMatrix triangulation_matrix(const std::vector<Diagonal>& triangulation, std::size_t polygon) {
  const auto side = side_table(triangulation, polygon);
  std::map<Diagonal, std::size_t> position;
  for (std::size_t k = 0; k < triangulation.size(); ++k) position.emplace(triangulation[k], k);
  const std::size_t n = triangulation.size();
  IntMatrix b(n, n);
  auto arrow = [&](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    auto u = position.find(Diagonal{std::min(a1, a2), std::max(a1, a2)});
    auto v = position.find(Diagonal{std::min(b1, b2), std::max(b1, b2)});
    if (u == position.end() || v == position.end()) return;
    b(u->second, v->second) += 1;
    b(v->second, u->second) -= 1;
  };
  for (std::size_t a = 0; a < polygon; ++a)
    for (std::size_t c = a + 1; c < polygon; ++c)
      for (std::size_t e = c + 1; e < polygon; ++e) {
        if (!side[a][c] || !side[c][e] || !side[a][e]) continue;
        arrow(a, c, c, e);
        arrow(c, e, e, a);
        arrow(e, a, a, c);
      }
  return b;
}

std::vector<Diagonal> flip(const std::vector<Diagonal>& triangulation, std::size_t position, std::size_t polygon) {
  if (position >= triangulation.size()) throw InputError("flip: position out of range");
  const auto side = side_table(triangulation, polygon);
  const Diagonal d = triangulation[position];
  std::vector<std::size_t> apex;
  for (std::size_t v = 0; v < polygon; ++v)
    if (v != d.i && v != d.j && side[d.i][v] && side[v][d.j]) apex.push_back(v);
  if (apex.size() != 2)
    throw InvariantViolation("flip: diagonal " + d.to_string() + " does not bound exactly two triangles");
  std::vector<Diagonal> out = triangulation;
  out[position] = Diagonal::of(static_cast<long>(apex[0]), static_cast<long>(apex[1]), polygon);
  return out;
}

PolygonFrieze label_diagonals(const DynkinType& t, const GradedSeed& seed) {
  require_type_a(t, "label_diagonals");
  const std::size_t n = t.rank;
  const std::size_t polygon = n + 3;
  const ExchangePattern& pattern = seed.pattern();
  if (pattern.size() != n || pattern.has_frozen())
    throw InputError("label_diagonals: seed is not a coefficient-free seed of rank " + std::to_string(n));
  const std::vector<Diagonal> start = zigzag_triangulation(n);
  const IntMatrix model = triangulation_matrix(start, polygon);
  int orientation = 0;
  if (pattern.matrix() == model) orientation = 1;
  else if (pattern.matrix() == mpz_class(-1) * model) orientation = -1;
  else
    throw InputError("label_diagonals: exchange matrix " + pattern.matrix().to_string() +
                     " is not the matrix of the zigzag triangulation");
  const mpz_class sign = orientation;

  PolygonFrieze out;
  out.polygon = polygon;
  out.dimension = seed.grading().dimension();

  auto assign = [&](const Diagonal& d, Degree deg) {
    auto [it, fresh] = out.values.emplace(d, deg);
    if (!fresh && it->second != deg)
      throw InvariantViolation("label_diagonals: diagonal " + d.to_string() + " reached with degrees " +
                               to_string(it->second) + " and " + to_string(deg));
  };

  struct State {
    std::vector<Diagonal> triangulation;
    ExchangePattern pattern;
    GradingMatrix grading;
  };
  auto key_of = [](std::vector<Diagonal> t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  constexpr std::size_t kMaxStates = 2'000'000;
  std::set<std::vector<Diagonal>> seen{key_of(start)};
  std::deque<State> todo{State{start, pattern, seed.grading()}};
  for (std::size_t k = 0; k < n; ++k) assign(start[k], seed.grading().row_degree(k));
  while (!todo.empty()) {
    State s = std::move(todo.front());
    todo.pop_front();
    for (std::size_t k = 0; k < n; ++k) {
      State next{flip(s.triangulation, k, polygon), mutate_pattern(s.pattern, k),
                 mutate_grading(s.pattern, s.grading, k)};
      if (!(next.pattern.matrix() == sign * triangulation_matrix(next.triangulation, polygon)))
        throw InvariantViolation("label_diagonals: mutation at " + std::to_string(k + 1) +
                                 " and the flip of " + s.triangulation[k].to_string() + " disagree");
      assign(next.triangulation[k], next.grading.row_degree(k));
      if (seen.insert(key_of(next.triangulation)).second) {
        if (seen.size() > kMaxStates) throw LimitExceeded("label_diagonals: too many triangulations");
        todo.push_back(std::move(next));
      }
    }
  }
  if (out.values.size() != polygon * (polygon - 3) / 2)
    throw InvariantViolation("label_diagonals: only " + std::to_string(out.values.size()) + " diagonals labelled");
  return out;
}

CheckReport check_sigma_sign_flip(const PolygonFrieze& frieze) {
  CheckReport report;
  const std::size_t polygon = frieze.polygon;
  for (const Diagonal& d : diagonals(polygon)) {
    const Degree* deg = frieze.find(d);
    if (!deg) {
      report.failures.push_back("diagonal " + d.to_string() + " has no degree");
      continue;
    }
    const Diagonal r = Diagonal::of(static_cast<long>(d.i) + 1, static_cast<long>(d.j) + 1, polygon);
    const Degree* rdeg = frieze.find(r);
    if (!rdeg || *rdeg != -*deg)
      report.failures.push_back("deg " + r.to_string() + " = " + (rdeg ? to_string(*rdeg) : "?") +
                                " is not -deg " + d.to_string() + " = " + to_string(-*deg));
    std::size_t orbit = 1;
    for (Diagonal e = r; !(e == d); ++orbit)
      e = Diagonal::of(static_cast<long>(e.i) + 1, static_cast<long>(e.j) + 1, polygon);
    if (orbit % 2 == 1 && !is_zero_degree(*deg))
      report.failures.push_back("diagonal " + d.to_string() + " has odd rotation orbit but degree " +
                                to_string(*deg));
  }
  return report;
}

CheckReport check_polygon_mesh(const PolygonFrieze& frieze) {
  CheckReport report;
  const std::size_t polygon = frieze.polygon;
  auto deg = [&](long a, long b) -> Degree {
    if (!Diagonal::is_diagonal(a, b, polygon)) return zero_degree(frieze.dimension);
    const Degree* d = frieze.find(Diagonal::of(a, b, polygon));
    if (!d) throw InputError("check_polygon_mesh: frieze misses diagonal");
    return *d;
  };
  for (const Diagonal& d : diagonals(polygon)) {
    const long i = static_cast<long>(d.i);
    const long j = static_cast<long>(d.j);
    const Degree lhs = deg(i - 1, j - 1) + deg(i, j);
    const Degree rhs = deg(i - 1, j) + deg(i, j - 1);
    if (lhs != rhs)
      report.failures.push_back("mesh ending at " + d.to_string() + ": " + to_string(lhs) + " != " + to_string(rhs));
  }
  return report;
}

Diagonal diagonal_of(const StripVertex& v, std::size_t n) {
  if (v.q < 1 || v.q > static_cast<long>(n)) throw InputError("diagonal_of: height out of range");
  return Diagonal::of(v.p, v.p + v.q + 1, n + 3);
}

StripWindow default_window(std::size_t n) { return StripWindow{0, 6 * static_cast<long>(n + 3) - 1}; }

std::vector<StripVertex> slice_positions(std::size_t n, const StripWindow& window, SliceShape shape) {
  std::vector<StripVertex> out;
  const long rank = static_cast<long>(n);
  if (shape == SliceShape::Column) {
    for (long q = 1; q <= rank; ++q) out.push_back({window.p_min, q});
    return out;
  }
  // Anchor so that the slice sits on the zigzag triangulation: p0 = -1 mod N.
  const long polygon = rank + 3;
  long p0 = window.p_min + rank / 2;
  p0 += mod(polygon - 1 - p0, polygon);
  for (long q = 1; q <= rank; ++q) out.push_back({p0 - q / 2, q});
  return out;
}

namespace {

bool in_window(const StripVertex& v, std::size_t n, const StripWindow& w) {
  return v.q >= 1 && v.q <= static_cast<long>(n) && v.p >= w.p_min && v.p <= w.p_max;
}

}  // namespace

StripFrieze knit_strip(const DynkinType& t, const std::vector<Degree>& slice, const StripWindow& window,
                       SliceShape shape) {
  require_type_a(t, "knit_strip");
  const std::size_t n = t.rank;
  if (n > kMaxStripRank) throw InputError("knit_strip: rank exceeds " + std::to_string(kMaxStripRank));
  if (slice.size() != n)
    throw InputError("knit_strip: slice has " + std::to_string(slice.size()) + " values, expected " +
                     std::to_string(n));
  const std::size_t dim = slice.front().size();
  for (const Degree& d : slice)
    if (d.size() != dim) throw InputError("knit_strip: slice degrees differ in dimension");
  if (window.p_max < window.p_min) throw InputError("knit_strip: empty window");
  if (window.p_max - window.p_min + 1 > kMaxWindowWidth)
    throw InputError("knit_strip: window wider than " + std::to_string(kMaxWindowWidth) + " columns");

  StripFrieze strip;
  strip.n = n;
  strip.dimension = dim;
  strip.window = window;
  const std::vector<StripVertex> positions = slice_positions(n, window, shape);
  for (std::size_t q = 0; q < n; ++q) {
    if (!in_window(positions[q], n, window))
      throw InputError("knit_strip: window too narrow for the slice at " + positions[q].to_string());
    strip.values[positions[q]] = slice[q];
  }

  const long rank = static_cast<long>(n);
  // Mesh ending at x = (p,q): f(x) + f(p-1,q) - f(p,q-1) - f(p-1,q+1) = 0.
  auto mesh_terms = [&](long p, long q) {
    std::vector<std::pair<StripVertex, int>> terms{{{p, q}, 1}, {{p - 1, q}, 1}};
    if (q > 1) terms.push_back({{p, q - 1}, -1});
    if (q < rank) terms.push_back({{p - 1, q + 1}, -1});
    return terms;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (long p = window.p_min + 1; p <= window.p_max; ++p)
      for (long q = 1; q <= rank; ++q) {
        const auto terms = mesh_terms(p, q);
        const std::pair<StripVertex, int>* unknown = nullptr;
        std::size_t missing = 0;
        for (const auto& term : terms)
          if (!strip.values.count(term.first)) {
            ++missing;
            unknown = &term;
          }
        if (missing != 1) continue;
        Degree sum = zero_degree(dim);
        for (const auto& [v, c] : terms)
          if (&v != &unknown->first) {
            const Degree& val = strip.values.at(v);
            sum = c > 0 ? sum + val : sum - val;
          }
        strip.values[unknown->first] = unknown->second > 0 ? -sum : sum;
        progress = true;
      }
  }
  const std::size_t expected = static_cast<std::size_t>(window.p_max - window.p_min + 1) * n;
  if (strip.values.size() != expected)
    throw InvariantViolation("knit_strip: slice does not determine the whole window");
  return strip;
}

CheckReport check_strip_mesh(const StripFrieze& strip) {
  CheckReport report;
  const long rank = static_cast<long>(strip.n);
  auto value = [&](long p, long q) -> Degree {
    if (q < 1 || q > rank) return zero_degree(strip.dimension);
    return strip.values.at(StripVertex{p, q});
  };
  for (long p = strip.window.p_min + 1; p <= strip.window.p_max; ++p)
    for (long q = 1; q <= rank; ++q) {
      const Degree lhs = value(p, q) + value(p - 1, q);
      const Degree rhs = value(p, q - 1) + value(p - 1, q + 1);
      if (lhs != rhs) report.failures.push_back("mesh at " + StripVertex{p, q}.to_string() + " fails");
    }
  return report;
}

StripVertex sigma(const StripVertex& v, std::size_t n) {
  return StripVertex{v.p + v.q, static_cast<long>(n) + 1 - v.q};
}

StripVertex f_translate(const StripVertex& v, std::size_t n) {
  StripVertex s = sigma(v, n);
  return StripVertex{s.p + 1, s.q};
}

DescentReport check_descent(const DynkinType& t, const StripFrieze& strip) {
  require_type_a(t, "check_descent");
  if (t.rank != strip.n) throw InputError("check_descent: strip rank does not match " + t.name());
  DescentReport report;
  for (const auto& [x, fx] : strip.values) {
    if (const Degree* fs = strip.find(sigma(x, strip.n)); fs && *fs != -fx) report.shift_negates = false;
    const StripVertex y = f_translate(x, strip.n);
    const Degree* fy = strip.find(y);
    if (!fy) continue;
    ++report.pairs_compared;
    if (*fy != fx && report.consistent) {
      report.consistent = false;
      report.witness = std::make_pair(x, y);
      report.witness_values = std::make_pair(fx, *fy);
    }
  }
  return report;
}

CheckReport check_strip_against_polygon(const StripFrieze& strip, const PolygonFrieze& polygon) {
  CheckReport report;
  if (polygon.polygon != strip.n + 3) {
    report.failures.push_back("polygon size does not match the strip rank");
    return report;
  }
  for (const auto& [v, value] : strip.values) {
    const Diagonal d = diagonal_of(v, strip.n);
    const Degree* expected = polygon.find(d);
    if (!expected || *expected != value)
      report.failures.push_back("strip " + v.to_string() + " = " + to_string(value) + " but diagonal " +
                                d.to_string() + " = " + (expected ? to_string(*expected) : "?"));
  }
  return report;
}

std::string format_degree(const Degree& d) { return d.size() == 1 ? std::to_string(d[0]) : to_string(d); }

std::string render_strip_text(const StripFrieze& strip) {
  std::size_t width = 1;
  for (const auto& [v, d] : strip.values) width = std::max(width, format_degree(d).size());
  const long rank = static_cast<long>(strip.n);
  const long slots = 2 * (strip.window.p_max - strip.window.p_min) + rank;
  const std::string label_pad = std::to_string(rank).size() > 1 ? "" : " ";
  std::ostringstream out;
  for (long q = rank; q >= 1; --q) {
    std::string line(static_cast<std::size_t>(slots) * width, ' ');
    for (long p = strip.window.p_min; p <= strip.window.p_max; ++p) {
      const Degree* d = strip.find(StripVertex{p, q});
      if (!d) continue;
      const std::string s = format_degree(*d);
      const std::size_t slot = static_cast<std::size_t>(2 * (p - strip.window.p_min) + q - 1);
      line.replace(slot * width + width - s.size(), s.size(), s);
    }
    line.erase(line.find_last_not_of(' ') + 1);
    std::string label = "q=" + std::to_string(q);
    label.resize(std::to_string(rank).size() + 3, ' ');
    out << label << "| " << line << '\n';
  }
  return out.str();
}

std::string render_strip_svg(const StripFrieze& strip) {
  constexpr int dx = 18;
  constexpr int dy = 30;
  const long rank = static_cast<long>(strip.n);
  const long slots = 2 * (strip.window.p_max - strip.window.p_min) + rank;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (slots + 1) * dx << "\" height=\""
      << (rank + 1) * dy << "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (const auto& [v, d] : strip.values) {
    const long slot = 2 * (v.p - strip.window.p_min) + v.q - 1;
    out << "  <text x=\"" << (slot + 1) * dx << "\" y=\"" << (rank - v.q + 1) * dy
        << "\" text-anchor=\"middle\" data-p=\"" << v.p << "\" data-q=\"" << v.q << "\">" << format_degree(d)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_polygon_text(const PolygonFrieze& frieze) {
  std::ostringstream out;
  for (const auto& [d, deg] : frieze.values) out << d.to_string() << ' ' << format_degree(deg) << '\n';
  return out.str();
}

}  // namespace gradedca
