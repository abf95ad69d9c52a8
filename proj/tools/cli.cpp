#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "gradedca/cluster.hpp"
#include "gradedca/error.hpp"
#include "gradedca/explore.hpp"
#include "gradedca/frieze.hpp"
#include "gradedca/homog.hpp"
#include "gradedca/roots.hpp"
#include "gradedca/seed_io.hpp"

namespace gradedca::cli {

namespace {

struct Options {
  std::string type;
  std::string seed_file;
  std::string grading;  // standard | file | zero; default depends on the source
  std::string g_text;
  std::string g_file;
  std::string limits;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "text";
  std::string cache;
  bool enumerate = false;
  bool verify = false;
  std::string sequence;
  std::string slice;
  std::string section = "zigzag";
  std::string window;
  std::string svg;
  std::string method = "lemma";
  std::string sign = "+";
};

long parse_long(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_long(part));
  return out;
}

EnumerationLimits parse_limits(const std::string& text) {
  EnumerationLimits limits;
  if (text.empty()) return limits;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("--limits: expected key=value, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    const long value = parse_long(part.substr(eq + 1));
    if (value <= 0) throw InputError("--limits: values must be positive");
    if (key == "seeds") limits.max_seeds = static_cast<std::size_t>(value);
    else if (key == "vars") limits.max_variables = static_cast<std::size_t>(value);
    else throw InputError("--limits: unknown key '" + key + "'");
  }
  return limits;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Columns separated by ';', entries by ','.
IntMatrix parse_matrix_columns(const std::string& text, std::size_t rows) {
  if (text.empty()) return IntMatrix(rows, 0);
  const auto columns = split(text, ';');
  IntMatrix g(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto values = parse_list(columns[c]);
    if (values.size() != rows)
      throw InputError("grading column " + std::to_string(c + 1) + " has " + std::to_string(values.size()) +
                       " entries, expected " + std::to_string(rows));
    for (std::size_t i = 0; i < rows; ++i) g(i, c) = values[i];
  }
  return g;
}

std::optional<IntMatrix> explicit_g(const Options& o, std::size_t rows) {
  if (!o.g_text.empty() && !o.g_file.empty()) throw InputError("give at most one of --g and --g-file");
  if (!o.g_file.empty()) {
    const json j = read_json_file(o.g_file);
    const std::size_t cols = (j.is_array() && !j.empty()) ? j[0].size() : 0;
    return matrix_from_json(j, rows, cols);
  }
  if (!o.g_text.empty()) return parse_matrix_columns(o.g_text == "none" ? "" : o.g_text, rows);
  return std::nullopt;
}

struct Input {
  std::optional<DynkinType> type;
  GradedSeed seed;
  bool standard = false;  // grading is the standard grading of a Dynkin type
};

Input load_input(const Options& o, bool use_g_for_grading) {
  if (o.type.empty() == o.seed_file.empty()) throw InputError("give exactly one of TYPE and --seed");
  Input in;
  ExchangePattern pattern;
  std::optional<GradingMatrix> file_grading;
  std::vector<LaurentPoly> cluster;
  if (!o.type.empty()) {
    in.type = DynkinType::parse(o.type);
    pattern = bipartite_pattern(*in.type);
  } else {
    GradedSeed s = seed_from_json(read_json_file(o.seed_file));
    pattern = s.pattern();
    file_grading = s.grading();
    cluster = s.cluster();
  }
  GradingMatrix grading;
  std::optional<IntMatrix> g = use_g_for_grading ? explicit_g(o, pattern.size()) : std::nullopt;
  const std::string source = o.grading.empty() ? (file_grading ? "file" : "standard") : o.grading;
  if (g) {
    grading = GradingMatrix(*g);
  } else if (source == "zero") {
    grading = GradingMatrix::zero(pattern.size());
  } else if (source == "standard") {
    grading = standard_grading(pattern);
    in.standard = in.type.has_value();
  } else if (source == "file" && file_grading) {
    grading = *file_grading;
  } else {
    throw InputError("grading source '" + source + "' needs a seed file");
  }
  if (!is_valid_grading(pattern, grading))
    throw InputError("G is not a grading: B^T G = " +
                     (pattern.matrix().transpose() * grading.matrix()).to_string() + " is not zero");
  if (cluster.empty()) {
    in.seed = GradedSeed::initial(std::move(pattern), std::move(grading));
  } else {
    in.seed = GradedSeed(std::move(cluster), std::move(pattern), std::move(grading));
  }
  return in;
}

EnumerationResult run_enumeration(const Options& o, const GradedSeed& seed, std::ostream& err) {
  EnumerationOptions opts;
  opts.limits = parse_limits(o.limits);
  opts.workers = std::max(1u, o.workers);
  opts.verify_exchanges = o.verify;
  if (o.cache.empty()) return enumerate(seed, opts);
  const std::string key = cache_key(seed, opts.limits);
  if (auto cached = load_cached(o.cache, key)) {
    err << "cache: hit " << key << '\n';
    return std::move(*cached);
  }
  EnumerationResult r = enumerate(seed, opts);
  store_cached(o.cache, key, r);
  err << "cache: stored " << key << '\n';
  return r;
}

DegreeDistribution negated(const DegreeDistribution& d) {
  DegreeDistribution out;
  for (const auto& [deg, c] : d) out[-deg] = c;
  return out;
}

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Aligns `dist` (degrees under `g`) with the basis of the published counts.
struct Alignment {
  bool comparable = false;
  DegreeDistribution aligned;
  std::string basis;
};

Alignment align_to_published(const DynkinType& t, const GradingMatrix& g, const DegreeDistribution& dist) {
  const DegreeDistribution published = closed_form_distribution(t);
  const std::size_t dim = published.begin()->first.size();
  Alignment a;
  if (g.dimension() != dim) return a;
  a.comparable = true;
  if (dim == 0) {
    a.aligned = dist;
    a.basis = "zero grading";
    return a;
  }
  if (auto ref = reference_grading(t); ref && is_valid_grading(bipartite_pattern(t), *ref)) {
    const IntMatrix m = change_of_basis(g, *ref);
    a.aligned = push_forward(dist, m);
    a.basis = "published kernel vectors, M = " + m.to_string();
    return a;
  }
  if (dim == 1) {
    const bool flip = dist != published && negated(dist) == published;
    a.aligned = flip ? negated(dist) : dist;
    a.basis = flip ? "standard grading, global sign flipped" : "standard grading";
    return a;
  }
  a.comparable = false;
  return a;
}

std::string status(bool pass) { return pass ? "PASS" : "FAIL"; }

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  parse_limits(o.limits);
  const Input in = load_input(o, true);
  const GradedSeed& seed = in.seed;
  const GradingMatrix standard = standard_grading(seed.pattern());
  const GradingMatrix& g = seed.grading();

  json report;
  if (in.type) report["type"] = in.type->name();
  else report["seed"] = o.seed_file;
  report["kernel_dimension"] = standard.dimension();
  report["standard_grading"] = matrix_to_json(standard.matrix());
  report["zero_grading_only"] = standard.dimension() == 0;
  report["grading"] = matrix_to_json(g.matrix());

  std::optional<DegreeDistribution> root_dist;
  if (in.type) {
    root_dist = root_formula_distribution(*in.type, g);
    report["root_formula_distribution"] = distribution_to_json(*root_dist);
  }

  std::vector<Claim> checks;
  std::optional<EnumerationResult> result;
  std::optional<DegreeDistribution> enum_dist;
  if (o.enumerate) {
    result = run_enumeration(o, seed, err);
    enum_dist = distribution(*result);
    json e;
    e["clusters"] = result->cluster_count();
    e["variables"] = result->mutable_variable_count();
    e["distribution"] = distribution_to_json(*enum_dist);
    e["balanced"] = is_balanced(*enum_dist);
    report["enumeration"] = e;
    const CheckReport exact = frieze_exactness_check(*result);
    checks.push_back({"frieze exactness over " + std::to_string(result->edges.size()) + " exchanges", exact.ok(),
                      exact.ok() ? "" : exact.failures.front()});
    if (in.type) {
      const RootBijectionReport bij = verify_root_bijection(*result, *in.type, g);
      checks.push_back({"denominator vectors biject onto almost positive roots with degree -alpha G", bij.ok(),
                        bij.ok() ? "" : bij.failures.front()});
      checks.push_back({"enumerated distribution equals the root formula", *enum_dist == *root_dist,
                        to_string(*enum_dist) + " vs " + to_string(*root_dist)});
      const std::size_t expected = almost_positive_root_count(*in.type);
      checks.push_back({"variable count equals the number of almost positive roots",
                        result->mutable_variable_count() == expected,
                        std::to_string(result->mutable_variable_count()) + " vs " + std::to_string(expected)});
    }
  }

  std::vector<Claim> claims;
  std::vector<std::string> warnings;
  std::optional<DegreeDistribution> published;
  if (in.type && in.standard) {
    const DynkinType& t = *in.type;
    published = closed_form_distribution(t);
    const std::size_t published_dim = published->begin()->first.size();
    const std::size_t published_total = total_count(*published);
    const std::size_t roots = almost_positive_root_count(t);
    report["published_distribution"] = distribution_to_json(*published);
    report["published_total"] = published_total;
    claims.push_back({"kernel dimension " + std::to_string(published_dim), standard.dimension() == published_dim,
                      "computed " + std::to_string(standard.dimension())});
    const DegreeDistribution& dist = enum_dist ? *enum_dist : *root_dist;
    const Alignment a = align_to_published(t, g, dist);
    const bool dist_ok = a.comparable && a.aligned == *published;
    claims.push_back({"distribution matches the published counts", dist_ok,
                      a.comparable ? to_string(a.aligned) + " (" + a.basis + ") vs published " + to_string(*published)
                                   : "no alignment with the published basis"});
    claims.push_back({"published counts sum to the number of almost positive roots", published_total == roots,
                      std::to_string(published_total) + " vs " + std::to_string(roots)});
    claims.push_back({"distribution is balanced", is_balanced(dist), to_string(dist)});
    if (published_total != roots)
      warnings.push_back("SUM-MISMATCH: published counts for " + t.name() + " sum to " + std::to_string(published_total) +
                         " but there are " + std::to_string(roots) + " cluster variables");
    if (!dist_ok)
      warnings.push_back("DISTRIBUTION-MISMATCH: published " + to_string(*published) + ", computed " + to_string(dist));
  }

  auto claims_json = [](const std::vector<Claim>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(json{{"claim", c.name}, {"status", status(c.pass)}, {"detail", c.detail}});
    return a;
  };
  report["checks"] = claims_json(checks);
  report["published_claims"] = claims_json(claims);
  report["warnings"] = warnings;

  const bool internal_ok = std::all_of(checks.begin(), checks.end(), [](const Claim& c) { return c.pass; });

  if (o.format == "json") {
    out << report.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << distribution_csv(enum_dist ? *enum_dist : root_dist ? *root_dist : DegreeDistribution{});
  } else {
    out << (in.type ? "type: " + in.type->name() : "seed: " + o.seed_file) << '\n';
    out << "kernel dimension: " << standard.dimension() << '\n';
    if (standard.dimension() == 0) out << "zero grading only\n";
    out << "standard grading: " << standard.matrix().to_string() << '\n';
    if (!in.standard) out << "grading: " << g.matrix().to_string() << '\n';
    if (root_dist)
      out << "root formula distribution: " << to_string(*root_dist) << " total " << total_count(*root_dist) << '\n';
    if (published) out << "published distribution: " << to_string(*published) << " total " << total_count(*published) << '\n';
    if (result) {
      out << "enumerated distribution: " << to_string(*enum_dist) << " total " << total_count(*enum_dist) << '\n';
      out << "clusters: " << result->cluster_count() << '\n';
      out << "balanced: " << (is_balanced(*enum_dist) ? "yes" : "no") << '\n';
    }
    if (!checks.empty()) out << "checks:\n";
    for (const auto& c : checks)
      out << "  " << status(c.pass) << "  " << c.name << (c.pass || c.detail.empty() ? "" : ": " + c.detail) << '\n';
    if (!claims.empty()) out << "published claims:\n";
    for (const auto& c : claims) out << "  " << status(c.pass) << "  " << c.name << ": " << c.detail << '\n';
    for (const auto& w : warnings) out << "WARN " << w << '\n';
  }
  return internal_ok ? kSuccess : kInvariantViolation;
}

int cmd_seed(const Options& o, std::ostream& out) {
  const Input in = load_input(o, true);
  out << seed_to_json(in.seed).dump(2) << '\n';
  return kSuccess;
}

int cmd_mutate(const Options& o, std::ostream& out) {
  Input in = load_input(o, true);
  GradedSeed seed = in.seed;
  if (!o.sequence.empty())
    for (long k : parse_list(o.sequence)) {
      if (k < 1 || static_cast<std::size_t>(k) > seed.size())
        throw InputError("mutation index " + std::to_string(k) + " out of range");
      if (!seed.pattern().is_mutable(static_cast<std::size_t>(k - 1)))
        throw InputError("position " + std::to_string(k) + " is frozen");
      seed = mutate_seed(seed, static_cast<std::size_t>(k - 1));
    }
  out << seed_to_json(seed).dump(2) << '\n';
  return kSuccess;
}

StripWindow parse_window(const std::string& text, std::size_t n) {
  if (text.empty()) return default_window(n);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--window: expected FROM:TO");
  return StripWindow{parse_long(text.substr(0, colon)), parse_long(text.substr(colon + 1))};
}

int cmd_frieze(const Options& o, std::ostream& out) {
  if (o.type.empty()) throw InputError("frieze: a type A_n is required");
  const DynkinType t = DynkinType::parse(o.type);
  if (t.family != 'A') throw InputError("frieze: only type A is supported, got " + t.name());
  const std::size_t n = t.rank;
  const ExchangePattern pattern = bipartite_pattern(t);

  std::vector<Degree> slice;
  GradingMatrix g;
  if (o.slice.empty()) {
    g = standard_grading(pattern);
    for (std::size_t i = 0; i < n; ++i) slice.push_back(g.row_degree(i));
  } else {
    const auto values = parse_list(o.slice);
    if (values.size() != n)
      throw InputError("--slice needs " + std::to_string(n) + " values, got " + std::to_string(values.size()));
    IntMatrix m(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      slice.push_back(Degree{values[i]});
      m(i, 0) = values[i];
    }
    g = GradingMatrix(m);
  }
  if (o.section != "zigzag" && o.section != "column") throw InputError("--section must be zigzag or column");
  const SliceShape shape = o.section == "zigzag" ? SliceShape::Zigzag : SliceShape::Column;
  const StripFrieze strip = knit_strip(t, slice, parse_window(o.window, n), shape);
  const CheckReport strip_mesh = check_strip_mesh(strip);
  const DescentReport descent = check_descent(t, strip);

  bool internal_ok = strip_mesh.ok();
  const bool is_grading = is_valid_grading(pattern, g);
  std::optional<PolygonFrieze> polygon;
  CheckReport poly_mesh, sign_flip, agree;
  if (is_grading) {
    polygon = label_diagonals(t, GradedSeed::initial(pattern, g));
    poly_mesh = check_polygon_mesh(*polygon);
    sign_flip = check_sigma_sign_flip(*polygon);
    if (shape == SliceShape::Zigzag) agree = check_strip_against_polygon(strip, *polygon);
    internal_ok = internal_ok && poly_mesh.ok() && sign_flip.ok() && agree.ok();
  }

  if (!o.svg.empty()) {
    std::ofstream svg(o.svg);
    if (!svg) throw InputError("cannot write " + o.svg);
    svg << render_strip_svg(strip);
  }

  auto witness_text = [&]() -> std::string {
    if (!descent.witness) return "";
    const auto& [x, y] = *descent.witness;
    const auto& [fx, fy] = *descent.witness_values;
    return "f" + x.to_string() + " = " + format_degree(fx) + " but f" + y.to_string() + " = " + format_degree(fy);
  };

  if (o.format == "json") {
    json j;
    j["type"] = t.name();
    j["polygon"] = n + 3;
    json values = json::array();
    for (const auto& [v, d] : strip.values) values.push_back(json{{"p", v.p}, {"q", v.q}, {"degree", d}});
    j["strip"] = values;
    j["strip_mesh"] = status(strip_mesh.ok());
    j["descent"] = descent.consistent ? "CONSISTENT" : "INCONSISTENT";
    if (descent.witness) j["descent_witness"] = witness_text();
    j["shift_negates"] = descent.shift_negates;
    if (polygon) {
      json diags = json::array();
      for (const auto& [d, deg] : polygon->values)
        diags.push_back(json{{"diagonal", {d.i + 1, d.j + 1}}, {"degree", deg}});
      j["diagonals"] = diags;
      j["polygon_mesh"] = status(poly_mesh.ok());
      j["sign_flip"] = status(sign_flip.ok());
      if (shape == SliceShape::Zigzag) j["strip_matches_polygon"] = status(agree.ok());
    }
    out << j.dump(2) << '\n';
  } else {
    out << "type: " << t.name() << ", polygon with " << n + 3 << " vertices\n";
    out << "slice:";
    for (const auto& d : slice) out << ' ' << format_degree(d);
    out << " (" << o.section << ")\n";
    out << render_strip_text(strip);
    out << "strip mesh: " << status(strip_mesh.ok()) << '\n';
    if (polygon) {
      DegreeDistribution dist;
      for (const auto& [d, deg] : polygon->values) ++dist[deg];
      out << "diagonal degrees: " << to_string(dist) << '\n';
      out << "polygon mesh: " << status(poly_mesh.ok()) << '\n';
      out << "sign flip: " << status(sign_flip.ok()) << '\n';
      if (shape == SliceShape::Zigzag) out << "strip matches polygon: " << status(agree.ok()) << '\n';
      for (const auto* r : {&poly_mesh, &sign_flip, &agree})
        for (const auto& f : r->failures) out << "  " << f << '\n';
    } else {
      out << "slice is not a grading of the bipartite seed; polygon checks skipped\n";
    }
    out << "shift negates degrees: " << (descent.shift_negates ? "yes" : "no") << '\n';
    out << "descent: " << (descent.consistent ? "CONSISTENT" : "INCONSISTENT") << " (" << descent.pairs_compared
        << " identified pairs)";
    if (descent.witness) out << ", witness " << witness_text();
    out << '\n';
  }
  return internal_ok ? kSuccess : kInvariantViolation;
}

int cmd_homogenise(const Options& o, std::ostream& out, std::ostream& err) {
  const Input in = load_input(o, false);
  const ExchangePattern& pattern = in.seed.pattern();
  const IntMatrix g = explicit_g(o, pattern.size()).value_or(IntMatrix(pattern.size(), 0));
  if (o.sign != "+" && o.sign != "-") throw InputError("--sign must be + or -");
  HomogenisedSeed hom;
  if (o.method == "lemma") hom = homogenise(pattern, g);
  else if (o.method == "principal") hom = principal_homogenise(pattern, g, o.sign == "+" ? 1 : -1);
  else throw InputError("--method must be lemma or principal");

  json j = seed_to_json(hom.seed);
  j["method"] = to_string(hom.method);
  json added = json::array();
  for (std::size_t i : hom.added_indices) added.push_back(i + 1);
  j["added"] = added;
  j["grading_space"] = matrix_to_json(standard_grading(hom.seed.pattern()).matrix());
  int code = kSuccess;
  if (o.verify) {
    EnumerationOptions opts;
    opts.limits = parse_limits(o.limits);
    opts.workers = std::max(1u, o.workers);
    const CheckReport r = quotient_recovers(in.seed, hom, opts);
    j["quotient_recovers"] = status(r.ok());
    err << "quotient check: " << status(r.ok()) << '\n';
    for (const auto& f : r.failures) err << "  " << f << '\n';
    if (!r.ok()) code = kInvariantViolation;
  }
  out << j.dump(2) << '\n';
  return code;
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("type", o.type, "Dynkin type such as A5, D4, E7");
  sub->add_option("--seed", o.seed_file, "seed JSON file");
}

void add_grading(CLI::App* sub, Options& o) {
  sub->add_option("--grading", o.grading, "grading source: standard | file | zero")
      ->check(CLI::IsMember({"standard", "file", "zero"}));
  sub->add_option("--g", o.g_text, "grading columns, entries ',' separated, columns ';' separated");
  sub->add_option("--g-file", o.g_file, "grading matrix as JSON rows");
}

void add_enumeration(CLI::App* sub, Options& o) {
  sub->add_option("--limits", o.limits, "seeds=N,vars=M");
  sub->add_option("--workers", o.workers, "enumeration worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--verify", o.verify, "extra verification");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graded cluster algebras: classification, enumeration, friezes and homogenisation", "gradedca"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "standard grading, degree distribution and published-claim checks");
  add_source(classify, o);
  add_grading(classify, o);
  add_enumeration(classify, o);
  classify->add_flag("--enumerate", o.enumerate, "enumerate the exchange graph and verify against it");
  classify->add_option("--format", o.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  classify->add_option("--cache", o.cache, "enumeration cache directory");

  auto* seed = app.add_subcommand("seed", "print the bipartite seed of a type as JSON");
  add_source(seed, o);
  add_grading(seed, o);

  auto* mutate = app.add_subcommand("mutate", "apply a sequence of mutations and print the seed");
  add_source(mutate, o);
  add_grading(mutate, o);
  mutate->add_option("--sequence", o.sequence, "1-based mutable positions, e.g. 1,2,1");

  auto* frieze = app.add_subcommand("frieze", "degree frieze on the repetition quiver and the polygon (type A)");
  frieze->add_option("type", o.type, "type A_n")->required();
  frieze->add_option("--slice", o.slice, "initial slice values q = 1..n (default: standard grading rows)");
  frieze->add_option("--section", o.section, "zigzag | column")->check(CLI::IsMember({"zigzag", "column"}));
  frieze->add_option("--window", o.window, "strip columns FROM:TO");
  frieze->add_option("--svg", o.svg, "also write the strip as SVG");
  frieze->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* homog = app.add_subcommand("homogenise", "extend a seed so that G becomes a grading");
  add_source(homog, o);
  homog->add_option("--g", o.g_text, "degree columns, entries ',' separated, columns ';' separated");
  homog->add_option("--g-file", o.g_file, "degree matrix as JSON rows");
  homog->add_option("--method", o.method, "lemma | principal")->check(CLI::IsMember({"lemma", "principal"}));
  homog->add_option("--sign", o.sign, "+ | - for principal coefficients")->check(CLI::IsMember({"+", "-"}));
  add_enumeration(homog, o);

  std::vector<const char*> argv{"gradedca"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (seed->parsed()) return cmd_seed(o, out);
    if (mutate->parsed()) return cmd_mutate(o, out);
    if (frieze->parsed()) return cmd_frieze(o, out);
    if (homog->parsed()) return cmd_homogenise(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kInputError;
}

}  // namespace gradedca::cli
