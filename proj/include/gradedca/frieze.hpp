#pragma once

// Combinatorial models for type A: diagonals of the (n+3)-gon, the
// repetition quiver ZA_n, degree friezes on both, and the checks relating
// them (sign flip under rotation, mesh additivity, descent along F).
//
// Polygon vertices are 0..N-1 counterclockwise. Strip vertex (p, q) has
// 1 <= q <= n; arrows are (p,q) -> (p,q+1) and (p,q) -> (p+1,q-1), and
// tau(p,q) = (p-1,q).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedca/cluster.hpp"
#include "gradedca/degree.hpp"
#include "gradedca/report.hpp"
#include "gradedca/roots.hpp"

namespace gradedca {

struct Diagonal {
  std::size_t i = 0;
  std::size_t j = 0;

  /// Normalized diagonal {a, b} of the N-gon (a, b taken mod N); throws
  /// InputError for boundary edges and degenerate pairs.
  static Diagonal of(long a, long b, std::size_t polygon);
  /// {a, b} mod N is a proper diagonal.
  static bool is_diagonal(long a, long b, std::size_t polygon);
  std::string to_string() const;  // 1-based vertices, `(1,4)`
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

struct StripVertex {
  long p = 0;
  long q = 1;
  std::string to_string() const;
  friend auto operator<=>(const StripVertex&, const StripVertex&) = default;
};

template <class Key>
struct FriezeAssignment {
  std::map<Key, Degree> values;

  const Degree* find(const Key& k) const {
    auto it = values.find(k);
    return it == values.end() ? nullptr : &it->second;
  }
};

struct PolygonFrieze : FriezeAssignment<Diagonal> {
  std::size_t polygon = 0;
  std::size_t dimension = 0;
};

struct StripWindow {
  long p_min = 0;
  long p_max = 0;  // inclusive
};

struct StripFrieze : FriezeAssignment<StripVertex> {
  std::size_t n = 0;
  std::size_t dimension = 0;
  StripWindow window;
};

/// All N(N-3)/2 diagonals, ordered by (i, j).
std::vector<Diagonal> diagonals(std::size_t polygon);

/// The zigzag triangulation matching the bipartite A_n seed: position k
/// (0-based) holds d_{k+1}, where d_{2m-1} = (m, N-m) and d_{2m} = (m, N-m-1).
std::vector<Diagonal> zigzag_triangulation(std::size_t n);

/// Signed adjacency of a triangulation: for two sides of a triangle, +1 from
/// a side to the next one counterclockwise.
IntMatrix triangulation_matrix(const std::vector<Diagonal>& triangulation, std::size_t polygon);

/// Flips the diagonal at `position`: the new diagonal joins the opposite
/// corners of the quadrilateral formed by its two triangles.
std::vector<Diagonal> flip(const std::vector<Diagonal>& triangulation, std::size_t position, std::size_t polygon);

/// Degrees of all diagonals, by walking the flip graph from the zigzag
/// triangulation in step with mutations of `seed`. The seed's pattern must be
/// +-(triangulation_matrix) of the zigzag; any later disagreement between the
/// flipped triangulation and the mutated pattern, or two degrees for one
/// diagonal, throws InvariantViolation.
PolygonFrieze label_diagonals(const DynkinType& t, const GradedSeed& seed);

/// deg(rho d) == -deg(d) with rho(i, j) = (i+1, j+1); diagonals with an odd
/// rotation orbit have degree 0.
CheckReport check_sigma_sign_flip(const PolygonFrieze& frieze);

/// deg(i-1,j-1) + deg(i,j) == deg(i-1,j) + deg(i,j-1) for every diagonal,
/// boundary edges counting as 0.
CheckReport check_polygon_mesh(const PolygonFrieze& frieze);

/// Shape of the initial slice in the strip.
enum class SliceShape {
  Zigzag,  // (p0 - floor(q/2), q), the section of the zigzag triangulation
  Column,  // (p_min, q)
};

/// Diagonal {p, p+q+1} of the (n+3)-gon attached to a strip vertex.
Diagonal diagonal_of(const StripVertex& v, std::size_t n);

/// Strip positions of the initial slice for the window.
std::vector<StripVertex> slice_positions(std::size_t n, const StripWindow& window, SliceShape shape);

/// Default window: six periods of n+3 columns starting at 0.
StripWindow default_window(std::size_t n);

inline constexpr long kMaxWindowWidth = 4096;
inline constexpr std::size_t kMaxStripRank = 256;

/// Fills the window by the mesh rule f(x) + f(tau x) = sum_{y -> x} f(y),
/// missing neighbours counting as 0. Throws InputError on malformed input or
/// a window wider than kMaxWindowWidth.
StripFrieze knit_strip(const DynkinType& t, const std::vector<Degree>& slice, const StripWindow& window,
                       SliceShape shape = SliceShape::Zigzag);

/// Mesh rule at every vertex whose mesh lies in the window.
CheckReport check_strip_mesh(const StripFrieze& strip);

/// Sigma(p,q) = (p+q, n+1-q) and F = tau^{-1} Sigma.
StripVertex sigma(const StripVertex& v, std::size_t n);
StripVertex f_translate(const StripVertex& v, std::size_t n);

struct DescentReport {
  bool consistent = true;
  std::size_t pairs_compared = 0;
  std::optional<std::pair<StripVertex, StripVertex>> witness;  // x and F x
  std::optional<std::pair<Degree, Degree>> witness_values;
  bool shift_negates = true;  // f(Sigma x) == -f(x) wherever both lie in the window
};

/// Compares f(x) with f(F x) wherever both lie in the window.
DescentReport check_descent(const DynkinType& t, const StripFrieze& strip);

/// Strip values agree with the polygon frieze under diagonal_of.
CheckReport check_strip_against_polygon(const StripFrieze& strip, const PolygonFrieze& polygon);

/// Degree as printed in renderings: a bare integer when d == 1.
std::string format_degree(const Degree& d);

/// Fixed-width text grid: rows q = n..1, vertex (p,q) at horizontal slot 2p+q.
std::string render_strip_text(const StripFrieze& strip);
std::string render_strip_svg(const StripFrieze& strip);
/// One `(i,j) degree` line per diagonal.
std::string render_polygon_text(const PolygonFrieze& frieze);

}  // namespace gradedca
