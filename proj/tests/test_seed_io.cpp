#include <doctest.h>

#include <filesystem>
#include <random>

#include "gradedca/error.hpp"
#include "gradedca/homog.hpp"
#include "gradedca/seed_io.hpp"
#include "support.hpp"

using namespace gradedca;
using namespace testing_support;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("gradedca-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("seed_io") {
  TEST_CASE("seed schema") {
    const json j = seed_to_json(bipartite_seed(DynkinType{'A', 3}));
    CHECK(j.dump() ==
          R"({"variables":["x1","x2","x3"],"mutable":[1,2,3],"B":[[0,1,0],[-1,0,-1],[0,1,0]],)"
          R"("G":[[1],[0],[-1]],"cluster":["(1)*x1^1","(1)*x2^1","(1)*x3^1"]})");
  }

  TEST_CASE("round trips") {
    std::vector<GradedSeed> corpus;
    for (const DynkinType& t : finite_type_catalogue()) {
      const GradedSeed s = bipartite_seed(t);
      corpus.push_back(s);
      corpus.push_back(mutate_seed(mutate_seed(s, 0), t.rank - 1));
    }
    corpus.push_back(homogenise(ExchangePattern::square(IntMatrix{{0, 1}, {-1, 0}}), IntMatrix{{1}, {0}}).seed);
    corpus.push_back(principal_homogenise(ExchangePattern::square(IntMatrix{{0, 1}, {-1, 0}}), IntMatrix(2, 0)).seed);
    for (const GradedSeed& s : corpus) {
      CHECK(seed_from_json(seed_to_json(s)) == s);
      CHECK(seed_from_json(json::parse(seed_to_json(s).dump())) == s);
    }
  }

  TEST_CASE("cluster is optional") {
    json j = seed_to_json(bipartite_seed(DynkinType{'A', 2}));
    j.erase("cluster");
    CHECK(seed_from_json(j) == bipartite_seed(DynkinType{'A', 2}));
  }

  TEST_CASE("schema violations") {
    const json good = seed_to_json(bipartite_seed(DynkinType{'A', 2}));
    auto broken = [&](auto edit) {
      json j = good;
      edit(j);
      return j;
    };
    CHECK_THROWS_AS(seed_from_json(json::array()), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["mutable"] = {0, 1}; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["mutable"] = {1, 1}; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["B"] = {{0, 1}, {1, 0}}; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["B"] = {{0, 1}, {-1}}; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["G"] = {{1}, {0}}; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["variables"] = {"a", "b"}; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["B"][0][1] = "one"; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j["cluster"] = {"x1", "(1)*x2^1"}; })), InputError);
    CHECK_THROWS_AS(seed_from_json(broken([](json& j) { j.erase("B"); })), InputError);
  }

  TEST_CASE("distribution formats") {
    const DegreeDistribution d{{{1, 0}, 6}, {{0, 0}, 8}, {{-1, 2}, 1}};
    CHECK(distribution_csv(d) == "degree,count\n\"[1,0]\",6\n\"[0,0]\",8\n\"[-1,2]\",1\n");
    CHECK(distribution_to_json(d).dump() ==
          R"([{"degree":[1,0],"count":6},{"degree":[0,0],"count":8},{"degree":[-1,2],"count":1}])");
    CHECK(distribution_csv({{{}, 42}}) == "degree,count\n\"[]\",42\n");
  }

  TEST_CASE("enumeration results round trip") {
    for (const char* name : {"B3", "D4"}) {
      const EnumerationResult r = enumerate(bipartite_seed(DynkinType::parse(name)));
      const EnumerationResult back = result_from_json(json::parse(result_to_json(r).dump()));
      CHECK(result_to_json(back) == result_to_json(r));
      CHECK(back.clusters == r.clusters);
      CHECK(back.edges == r.edges);
      CHECK(distribution(back) == distribution(r));
    }
    json j = result_to_json(enumerate(bipartite_seed(DynkinType{'A', 2})));
    j["version"] = "other";
    CHECK_THROWS_AS(result_from_json(j), InputError);
  }

  TEST_CASE("cache") {
    const auto dir = fresh_dir("cache");
    const GradedSeed seed = bipartite_seed(DynkinType{'C', 3});
    const EnumerationLimits limits;
    const std::string key = cache_key(seed, limits);
    CHECK(key.size() == 16);
    CHECK(key == cache_key(seed, limits));
    CHECK(key != cache_key(seed, EnumerationLimits{5, 5}));
    CHECK(key != cache_key(bipartite_seed(DynkinType{'B', 3}), limits));
    CHECK(key != cache_key(GradedSeed::initial(seed.pattern(), GradingMatrix::zero(3, 1)), limits));
    CHECK_FALSE(load_cached(dir, key));
    const EnumerationResult r = enumerate(seed);
    store_cached(dir, key, r);
    const auto loaded = load_cached(dir, key);
    REQUIRE(loaded);
    CHECK(result_to_json(*loaded) == result_to_json(r));
    std::filesystem::remove_all(dir);
  }
}
