#include "gradedca/seed_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gradedca/error.hpp"

namespace gradedca {

namespace {

constexpr const char* kCacheVersion = "gradedca-cache-v1";

std::string variable_name(std::size_t i) { return "x" + std::to_string(i + 1); }

template <class F>
auto schema(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

}  // namespace

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols_if_empty) {
  return schema("matrix", [&] {
    if (!j.is_array() || j.size() != rows)
      throw InputError("matrix: expected " + std::to_string(rows) + " rows");
    std::size_t cols = rows == 0 ? cols_if_empty : j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!j[i].is_array() || j[i].size() != cols) throw InputError("matrix: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<long>();
    }
    return m;
  });
}

json seed_to_json(const GradedSeed& seed) {
  json j;
  json names = json::array();
  for (std::size_t i = 0; i < seed.size(); ++i) names.push_back(variable_name(i));
  j["variables"] = names;
  json mut = json::array();
  for (std::size_t k : seed.pattern().mutable_rows()) mut.push_back(k + 1);
  j["mutable"] = mut;
  j["B"] = matrix_to_json(seed.pattern().matrix());
  j["G"] = matrix_to_json(seed.grading().matrix());
  json cluster = json::array();
  for (const auto& x : seed.cluster()) cluster.push_back(x.to_string());
  j["cluster"] = cluster;
  return j;
}

GradedSeed seed_from_json(const json& j) {
  return schema("seed", [&] {
    if (!j.is_object()) throw InputError("seed: expected a JSON object");
    const auto names = j.at("variables").get<std::vector<std::string>>();
    const std::size_t r = names.size();
    for (std::size_t i = 0; i < r; ++i)
      if (names[i] != variable_name(i))
        throw InputError("seed: variable " + std::to_string(i + 1) + " must be named " + variable_name(i));
    std::vector<std::size_t> mut;
    for (const auto& k : j.at("mutable")) {
      const long v = k.get<long>();
      if (v < 1 || static_cast<std::size_t>(v) > r) throw InputError("seed: mutable index out of range");
      mut.push_back(static_cast<std::size_t>(v - 1));
    }
    IntMatrix b = matrix_from_json(j.at("B"), r, mut.size());
    if (b.cols() != mut.size()) throw InputError("seed: B needs one column per mutable index");
    const std::size_t d = (r > 0 && j.at("G").size() > 0) ? j.at("G")[0].size() : 0;
    IntMatrix g = matrix_from_json(j.at("G"), r, d);
    std::vector<LaurentPoly> cluster;
    if (j.contains("cluster")) {
      for (const auto& s : j.at("cluster")) cluster.push_back(LaurentPoly::parse(s.get<std::string>(), r));
      if (cluster.size() != r) throw InputError("seed: cluster size does not match variables");
    } else {
      for (std::size_t i = 0; i < r; ++i) cluster.push_back(LaurentPoly::variable(r, i));
    }
    return GradedSeed(std::move(cluster), ExchangePattern(std::move(b), std::move(mut)), GradingMatrix(std::move(g)));
  });
}

json degree_to_json(const Degree& d) { return json(d); }

json distribution_to_json(const DegreeDistribution& dist) {
  json out = json::array();
  for (auto it = dist.rbegin(); it != dist.rend(); ++it)
    out.push_back(json{{"degree", degree_to_json(it->first)}, {"count", it->second}});
  return out;
}

std::string distribution_csv(const DegreeDistribution& dist) {
  std::ostringstream out;
  out << "degree,count\n";
  for (auto it = dist.rbegin(); it != dist.rend(); ++it) out << '"' << to_string(it->first) << "\"," << it->second << '\n';
  return out.str();
}

json result_to_json(const EnumerationResult& result) {
  json j;
  j["version"] = kCacheVersion;
  j["cardinality"] = result.cardinality;
  j["mutable_positions"] = result.mutable_positions;
  json vars = json::array();
  for (const auto& v : result.variables) {
    json e{{"poly", v.poly.to_string()}, {"degree", v.degree}, {"frozen", v.frozen}};
    e["initial_position"] = v.initial_position ? json(*v.initial_position) : json(nullptr);
    vars.push_back(std::move(e));
  }
  j["variables"] = std::move(vars);
  j["clusters"] = result.clusters;
  json edges = json::array();
  for (const auto& e : result.edges) {
    auto factors = [](const std::vector<ExchangeFactor>& fs) {
      json a = json::array();
      for (const auto& f : fs) a.push_back(json::array({f.variable, f.power}));
      return a;
    };
    edges.push_back(json::array(
        {e.from, e.to, e.position, e.old_variable, e.new_variable, factors(e.plus), factors(e.minus)}));
  }
  j["edges"] = std::move(edges);
  return j;
}

EnumerationResult result_from_json(const json& j) {
  return schema("result", [&] {
    if (j.at("version").get<std::string>() != kCacheVersion) throw InputError("result: unsupported version");
    EnumerationResult r;
    r.cardinality = j.at("cardinality").get<std::size_t>();
    r.mutable_positions = j.at("mutable_positions").get<std::vector<std::size_t>>();
    for (const auto& v : j.at("variables")) {
      ClusterVariable cv;
      cv.poly = LaurentPoly::parse(v.at("poly").get<std::string>(), r.cardinality);
      cv.degree = v.at("degree").get<Degree>();
      cv.frozen = v.at("frozen").get<bool>();
      if (!v.at("initial_position").is_null()) cv.initial_position = v.at("initial_position").get<std::size_t>();
      r.variables.push_back(std::move(cv));
    }
    r.clusters = j.at("clusters").get<std::vector<std::vector<std::size_t>>>();
    auto factors = [](const json& a) {
      std::vector<ExchangeFactor> fs;
      for (const auto& f : a) fs.push_back(ExchangeFactor{f.at(0).get<std::size_t>(), f.at(1).get<int>()});
      return fs;
    };
    for (const auto& e : j.at("edges"))
      r.edges.push_back(ExchangeEdge{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                                     e.at(2).get<std::size_t>(), e.at(3).get<std::size_t>(),
                                     e.at(4).get<std::size_t>(), factors(e.at(5)), factors(e.at(6))});
    return r;
  });
}

std::string cache_key(const GradedSeed& seed, const EnumerationLimits& limits) {
  std::ostringstream canon;
  canon << kCacheVersion << "\nB=" << seed.pattern().matrix().to_string() << "\nmutable=";
  for (std::size_t k : seed.pattern().mutable_rows()) canon << k << ',';
  canon << "\nG=" << seed.grading().matrix().to_string() << " cols=" << seed.grading().dimension()
        << "\nlimits=" << limits.max_seeds << ',' << limits.max_variables << '\n';
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canon.str()) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& key) {
  return dir / ("enum-" + key + ".json");
}

}  // namespace

std::optional<EnumerationResult> load_cached(const std::filesystem::path& dir, const std::string& key) {
  std::ifstream in(cache_file(dir, key));
  if (!in) return std::nullopt;
  try {
    return result_from_json(json::parse(in));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const std::filesystem::path& dir, const std::string& key, const EnumerationResult& result) {
  std::filesystem::create_directories(dir);
  const auto target = cache_file(dir, key);
  const auto tmp = std::filesystem::path(target.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache file " + tmp.string());
    out << result_to_json(result).dump();
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace gradedca
