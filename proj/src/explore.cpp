#include "gradedca/explore.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <exception>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "gradedca/error.hpp"

namespace gradedca {

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1. Cluster variables are
// evaluated at two random points; the pair of values identifies a variable
// when it is rediscovered, and is checked against the symbolic polynomial
// when the variable is first seen.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_reduce(unsigned __int128 x) {
  std::uint64_t lo = static_cast<std::uint64_t>(x & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return mod_reduce(static_cast<unsigned __int128>(a) * b);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

using Fingerprint = std::array<std::uint64_t, 2>;

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const { return f[0] ^ (f[1] * 0x9e3779b97f4a7c15ULL); }
};

struct SeedKeyHash {
  std::size_t operator()(const SeedKey& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::size_t v : k) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

// Evaluates p at `point` (values of x_1..x_r) modulo kPrime.
std::uint64_t evaluate_mod(const LaurentPoly& p, const std::vector<std::uint64_t>& point,
                           const std::vector<std::uint64_t>& inverse) {
  static const mpz_class prime(std::to_string(kPrime));
  std::uint64_t acc = 0;
  mpz_class reduced;
  for (const auto& [e, c] : p.terms()) {
    mpz_fdiv_r(reduced.get_mpz_t(), c.get_mpz_t(), prime.get_mpz_t());
    std::uint64_t term = std::stoull(reduced.get_str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = mul_mod(term, pow_mod(point[i], static_cast<std::uint64_t>(e[i])));
      if (e[i] < 0) term = mul_mod(term, pow_mod(inverse[i], static_cast<std::uint64_t>(-e[i])));
    }
    acc = add_mod(acc, term);
  }
  return acc;
}

struct SeedRecord {
  std::vector<std::size_t> ids;
  ExchangePattern pattern;
  GradingMatrix grading;
};

struct Proposal {
  Fingerprint value{};
  ExchangePattern pattern;
  GradingMatrix grading;
  std::vector<ExchangeFactor> plus;
  std::vector<ExchangeFactor> minus;
};

class Explorer {
 public:
  Explorer(const GradedSeed& seed, const EnumerationOptions& options)
      : options_(options), initial_grading_(seed.grading()) {
    const std::size_t r = seed.size();
    for (std::size_t i = 0; i < r; ++i)
      if (!(seed.cluster()[i] == LaurentPoly::variable(r, i)))
        throw InputError("enumerate: the starting seed must be an initial seed (cluster x_1..x_r)");
    if (options.limits.max_seeds == 0 || options.limits.max_variables == 0)
      throw InputError("enumerate: limits must be positive");
    result_.cardinality = r;
    result_.mutable_positions = seed.pattern().mutable_rows();
    std::sort(result_.mutable_positions.begin(), result_.mutable_positions.end());

    std::mt19937_64 rng(options.fingerprint_seed);
    for (auto& pt : points_) {
      pt.resize(r);
      for (auto& v : pt) v = 2 + rng() % (kPrime - 3);
    }
    for (std::size_t pt = 0; pt < 2; ++pt) {
      inverses_[pt].resize(r);
      for (std::size_t i = 0; i < r; ++i) inverses_[pt][i] = inv_mod(points_[pt][i]);
    }

    std::vector<std::size_t> ids(r);
    for (std::size_t i = 0; i < r; ++i) {
      ClusterVariable v;
      v.poly = seed.cluster()[i];
      v.degree = seed.grading().row_degree(i);
      v.frozen = !seed.pattern().is_mutable(i);
      v.initial_position = i;
      ids[i] = intern(std::move(v), Fingerprint{points_[0][i], points_[1][i]});
    }
    if (result_.mutable_variable_count() > options.limits.max_variables)
      throw LimitExceeded("enumerate: variable limit exceeded by the initial seed");
    add_seed(SeedRecord{ids, seed.pattern(), seed.grading()});
  }

  EnumerationResult run() {
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<Proposal> proposals = propose(frontier);
      std::vector<std::size_t> next;
      const std::vector<std::size_t>& positions = result_.mutable_positions;
      for (std::size_t f = 0; f < frontier.size(); ++f)
        for (std::size_t j = 0; j < positions.size(); ++j)
          merge(frontier[f], positions[j], std::move(proposals[f * positions.size() + j]), next);
      frontier = std::move(next);
    }
    result_.clusters.reserve(seeds_.size());
    for (auto& s : seeds_) result_.clusters.push_back(std::move(s.ids));
    return std::move(result_);
  }

 private:
  std::size_t intern(ClusterVariable v, const Fingerprint& fp) {
    const std::size_t id = result_.variables.size();
    result_.variables.push_back(std::move(v));
    values_.push_back(fp);
    by_value_.emplace(fp, id);
    return id;
  }

  std::size_t add_seed(SeedRecord s) {
    const std::size_t id = seeds_.size();
    by_key_.emplace(seed_key(s.ids, result_.mutable_positions), id);
    seeds_.push_back(std::move(s));
    if (seeds_.size() > options_.limits.max_seeds)
      throw LimitExceeded("enumerate: seed limit of " + std::to_string(options_.limits.max_seeds) + " exceeded");
    return id;
  }

  Proposal propose_one(const SeedRecord& s, std::size_t k) const {
    Proposal p;
    const ExchangePattern& pattern = s.pattern;
    const std::size_t c = pattern.column_of(k);
    Fingerprint plus{1, 1};
    Fingerprint minus{1, 1};
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const long bik = pattern.matrix().at(i, c);
      if (bik == 0) continue;
      const std::size_t id = s.ids[i];
      Fingerprint& side = bik > 0 ? plus : minus;
      const auto power = static_cast<std::uint64_t>(bik > 0 ? bik : -bik);
      for (std::size_t pt = 0; pt < 2; ++pt) side[pt] = mul_mod(side[pt], pow_mod(values_[id][pt], power));
      (bik > 0 ? p.plus : p.minus).push_back(ExchangeFactor{id, static_cast<int>(power)});
    }
    const Fingerprint& old = values_[s.ids[k]];
    for (std::size_t pt = 0; pt < 2; ++pt) {
      if (old[pt] == 0) throw InvariantViolation("enumerate: cluster variable vanishes at the evaluation point");
      p.value[pt] = mul_mod(add_mod(plus[pt], minus[pt]), inv_mod(old[pt]));
    }
    p.pattern = mutate_pattern(pattern, k);
    p.grading = mutate_grading(pattern, s.grading, k);
    return p;
  }

  std::vector<Proposal> propose(const std::vector<std::size_t>& frontier) const {
    const std::vector<std::size_t>& positions = result_.mutable_positions;
    const std::size_t total = frontier.size() * positions.size();
    std::vector<Proposal> out(total);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t)
        out[t] = propose_one(seeds_[frontier[t / positions.size()]], positions[t % positions.size()]);
    };
    const unsigned workers = std::max(1u, options_.workers);
    if (workers == 1 || total < 2 * workers) {
      work(0, total);
      return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return out;
  }

  LaurentPoly exchange_symbolically(const std::vector<ExchangeFactor>& plus, const std::vector<ExchangeFactor>& minus,
                                    std::size_t old_id) const {
    const std::size_t r = result_.cardinality;
    LaurentPoly p = LaurentPoly::constant(r, 1);
    LaurentPoly m = LaurentPoly::constant(r, 1);
    for (const auto& f : plus) p = p * result_.variables[f.variable].poly.pow(static_cast<unsigned>(f.power));
    for (const auto& f : minus) m = m * result_.variables[f.variable].poly.pow(static_cast<unsigned>(f.power));
    return divide_exact(p + m, result_.variables[old_id].poly);
  }

  Degree factor_degree(const std::vector<ExchangeFactor>& factors) const {
    Degree d(initial_grading_.dimension(), 0);
    for (const auto& f : factors) {
      const Degree& v = result_.variables[f.variable].degree;
      for (std::size_t j = 0; j < d.size(); ++j) d[j] += f.power * v[j];
    }
    return d;
  }

  void merge(std::size_t from, std::size_t k, Proposal p, std::vector<std::size_t>& next) {
    const std::size_t old_id = seeds_[from].ids[k];
    std::size_t new_id;
    auto found = by_value_.find(p.value);
    if (found == by_value_.end()) {
      ClusterVariable v;
      v.poly = exchange_symbolically(p.plus, p.minus, old_id);
      for (std::size_t pt = 0; pt < 2; ++pt)
        if (evaluate_mod(v.poly, points_[pt], inverses_[pt]) != p.value[pt])
          throw InvariantViolation("enumerate: symbolic exchange disagrees with its modular evaluation for " +
                                   v.poly.to_string());
      v.degree = degree(v.poly, initial_grading_);
      new_id = intern(std::move(v), p.value);
      if (result_.mutable_variable_count() > options_.limits.max_variables)
        throw LimitExceeded("enumerate: variable limit of " + std::to_string(options_.limits.max_variables) +
                            " exceeded");
    } else {
      new_id = found->second;
      if (options_.verify_exchanges) {
        LaurentPoly poly = exchange_symbolically(p.plus, p.minus, old_id);
        if (!(poly == result_.variables[new_id].poly))
          throw InvariantViolation("enumerate: fingerprint collision between " + poly.to_string() + " and " +
                                   result_.variables[new_id].poly.to_string());
      }
    }

    const ClusterVariable& nv = result_.variables[new_id];
    const Degree row = p.grading.row_degree(k);
    if (row != nv.degree)
      throw InvariantViolation("enumerate: grading row " + to_string(row) + " disagrees with degree " +
                               to_string(nv.degree) + " of " + nv.poly.to_string());
    const Degree dplus = factor_degree(p.plus);
    const Degree dminus = factor_degree(p.minus);
    if (dplus != dminus)
      throw InvariantViolation("enumerate: inhomogeneous exchange relation for " + nv.poly.to_string());
    if (result_.variables[old_id].degree + nv.degree != dplus)
      throw InvariantViolation("enumerate: deg X_k + deg X'_k differs from the exchange degree");

    std::vector<std::size_t> ids = seeds_[from].ids;
    ids[k] = new_id;
    SeedKey key = seed_key(ids, result_.mutable_positions);
    std::size_t to;
    auto existing = by_key_.find(key);
    if (existing == by_key_.end()) {
      to = add_seed(SeedRecord{std::move(ids), std::move(p.pattern), std::move(p.grading)});
      next.push_back(to);
    } else {
      to = existing->second;
    }
    if (from < to)
      result_.edges.push_back(ExchangeEdge{from, to, k, old_id, new_id, std::move(p.plus), std::move(p.minus)});
  }

  EnumerationOptions options_;
  GradingMatrix initial_grading_;
  std::array<std::vector<std::uint64_t>, 2> points_;
  std::array<std::vector<std::uint64_t>, 2> inverses_;
  EnumerationResult result_;
  std::vector<Fingerprint> values_;
  std::unordered_map<Fingerprint, std::size_t, FingerprintHash> by_value_;
  std::vector<SeedRecord> seeds_;
  std::unordered_map<SeedKey, std::size_t, SeedKeyHash> by_key_;
};

}  // namespace

std::size_t EnumerationResult::mutable_variable_count() const {
  return static_cast<std::size_t>(
      std::count_if(variables.begin(), variables.end(), [](const ClusterVariable& v) { return !v.frozen; }));
}

SeedKey seed_key(const std::vector<std::size_t>& cluster, const std::vector<std::size_t>& mutable_positions) {
  SeedKey key;
  key.reserve(mutable_positions.size());
  for (std::size_t pos : mutable_positions) key.push_back(cluster[pos]);
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<std::string> seed_key_strings(const EnumerationResult& result, std::size_t seed) {
  std::vector<std::string> out;
  for (std::size_t pos : result.mutable_positions)
    out.push_back(result.variables[result.clusters.at(seed)[pos]].poly.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

EnumerationResult enumerate(const GradedSeed& seed, const EnumerationOptions& options) {
  return Explorer(seed, options).run();
}

DegreeDistribution distribution(const EnumerationResult& result) {
  DegreeDistribution d;
  for (const auto& v : result.variables)
    if (!v.frozen) ++d[v.degree];
  return d;
}

bool is_balanced(const DegreeDistribution& dist) {
  for (const auto& [d, count] : dist) {
    auto it = dist.find(-d);
    if (it == dist.end() || it->second != count) return false;
  }
  return true;
}

DegreeDistribution push_forward(const DegreeDistribution& dist, const IntMatrix& m) {
  DegreeDistribution out;
  for (const auto& [d, count] : dist) {
    if (d.size() != m.rows()) throw InputError("push_forward: degree dimension does not match M");
    Degree image(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < d.size(); ++i) image[j] += d[i] * m.at(i, j);
    out[image] += count;
  }
  return out;
}

RootBijectionReport verify_root_bijection(const EnumerationResult& result, const DynkinType& t,
                                          const GradingMatrix& grading) {
  RootBijectionReport report;
  const std::size_t n = t.rank;
  if (result.cardinality != n || grading.rows() != n) {
    report.failures.push_back("verify_root_bijection: result is not over the " + std::to_string(n) +
                              " initial variables of " + t.name());
    return report;
  }
  const std::vector<Root> roots = almost_positive_roots(t);
  const std::set<Root> root_set(roots.begin(), roots.end());
  std::map<Root, std::size_t> hit;
  for (std::size_t id = 0; id < result.variables.size(); ++id) {
    const ClusterVariable& v = result.variables[id];
    if (v.frozen) continue;
    const Exponent low = v.poly.min_exponents();
    Root alpha{std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) alpha.coeffs[i] = -low[i];
    const std::string name = v.poly.to_string();
    // x^alpha * X must have a nonzero constant term: X contains x^{-alpha}.
    if (v.poly.terms().find(low) == v.poly.terms().end())
      report.failures.push_back("numerator of " + name + " has zero constant term");
    if (!root_set.count(alpha))
      report.failures.push_back("denominator vector " + alpha.to_string() + " of " + name +
                                " is not an almost positive root");
    if (v.initial_position && !alpha.is_negative_simple())
      report.failures.push_back("initial variable " + name + " does not map to a negative simple root");
    if (auto [it, fresh] = hit.emplace(alpha, id); !fresh)
      report.failures.push_back("root " + alpha.to_string() + " is hit by both " +
                                result.variables[it->second].poly.to_string() + " and " + name);
    Degree expected = degree_of_root(alpha, grading);
    if (v.degree != expected)
      report.failures.push_back("degree " + to_string(v.degree) + " of " + name + " differs from -alpha G = " +
                                to_string(expected));
    report.root_of_variable.emplace(id, alpha);
  }
  for (const Root& r : roots)
    if (!hit.count(r)) report.failures.push_back("root " + r.to_string() + " has no cluster variable");
  return report;
}

CheckReport frieze_exactness_check(const EnumerationResult& result) {
  CheckReport report;
  auto sum = [&](const std::vector<ExchangeFactor>& factors, std::size_t dim) {
    Degree d(dim, 0);
    for (const auto& f : factors)
      for (std::size_t j = 0; j < dim; ++j) d[j] += f.power * result.variables.at(f.variable).degree.at(j);
    return d;
  };
  for (const ExchangeEdge& e : result.edges) {
    const Degree& dold = result.variables.at(e.old_variable).degree;
    const Degree& dnew = result.variables.at(e.new_variable).degree;
    const std::size_t dim = dold.size();
    const Degree dplus = sum(e.plus, dim);
    const Degree dminus = sum(e.minus, dim);
    const std::string where = "edge " + std::to_string(e.from) + " -[" + std::to_string(e.position + 1) + "]-> " +
                              std::to_string(e.to);
    if (dplus != dminus)
      report.failures.push_back(where + ": exchange monomials have degrees " + to_string(dplus) + " and " +
                                to_string(dminus));
    if (dold.size() != dnew.size() || dold + dnew != dplus)
      report.failures.push_back(where + ": deg X_k + deg X'_k = " + to_string(dold + dnew) +
                                " but the exchange degree is " + to_string(dplus));
  }
  return report;
}

std::optional<bool> is_finite_type(const ExchangePattern& pattern, std::size_t max_class) {
  const ExchangePattern start = ExchangePattern::square(pattern.principal_part());
  const std::size_t m = start.size();
  auto bad = [&](const IntMatrix& b) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (abs(b(i, j) * b(j, i)) > 3) return true;
    return false;
  };
  // Breadth-first over labelled matrices: |b_ij b_ji| > 3 anywhere in the
  // class rules out finite type.
  const std::size_t budget = std::min<std::size_t>(max_class, 2'000);
  std::set<std::string> seen{start.matrix().to_string()};
  std::deque<ExchangePattern> todo{start};
  while (!todo.empty() && seen.size() <= budget) {
    ExchangePattern p = std::move(todo.front());
    todo.pop_front();
    if (bad(p.matrix())) return false;
    for (std::size_t k = 0; k < m; ++k) {
      ExchangePattern q = mutate_pattern(p, k);
      if (seen.insert(q.matrix().to_string()).second) todo.push_back(std::move(q));
    }
  }
  if (todo.empty()) return true;
  // A finite exchange graph means finite type.
  EnumerationOptions opts;
  opts.limits = {max_class, std::numeric_limits<std::size_t>::max()};
  try {
    enumerate(GradedSeed::initial(start, GradingMatrix::zero(m)), opts);
    return true;
  } catch (const LimitExceeded&) {
    return std::nullopt;
  }
}

}  // namespace gradedca
