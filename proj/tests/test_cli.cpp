#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stabpat/cache.hpp"
#include "stabpat/cli.hpp"
#include "stabpat/errors.hpp"

using namespace stabpat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args)
{
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_cache(const std::string& name)
{
  auto path = std::filesystem::temp_directory_path() / ("stabpat_test_" + name + ".jsonl");
  std::filesystem::remove(path);
  return path;
}

} // namespace

TEST_CASE("plain outputs")
{
  CHECK(call({"count", "1-2", "321432212"}).out == "9\n");
  CHECK(call({"bijection", "theta", "1", "321432212"}).out == "321431112\n");
  CHECK(call({"dist", "12", "(1,1,1)"}).out == "0 1\n1 4\n2 1\n");
  CHECK(call({"verify-pde", "--xdeg", "4", "--ydeg", "2", "--zdeg", "4"}).out == "pass\n");
  CHECK(call({"verify-gf", "21", "(2,2)", "1"}).code == cli::kExitOk);
}

TEST_CASE("witness JSON")
{
  const auto r = call({"--json", "witness", "3142"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["multiset"] == nlohmann::json({1, 1, 2, 1, 1}));
  CHECK(j["swapped_multiset"] == nlohmann::json({1, 1, 1, 1, 2}));
  CHECK(j["s"] == 2);
  CHECK(j["swapped_count"] == "0");
}

TEST_CASE("global flags after the subcommand")
{
  const auto r = call({"dist", "12", "(2,2)", "--json", "--threads", "3"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["counts"]["1"] == "4");
}

TEST_CASE("exit codes")
{
  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"count", "13", "12"}).code == cli::kExitUsage);
  CHECK(call({"bijection", "rho", "1", "12"}).code == cli::kExitUsage);
  CHECK(call({"--budget", "10", "dist", "12", "(3,3)"}).code == cli::kExitBudget);
  CHECK(call({"witness", "123"}).code == cli::kExitCheckFailed);
  CHECK(call({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cache round trip, canonical keys and integrity")
{
  const auto path = temp_cache("roundtrip");
  CHECK(call({"--cache", path.string(), "dist", "12", "(1,2,1)"}).code == 0);
  {
    ResultCache cache(path);
    CHECK(cache.size() == 3);
    // 12 is order-insensitive: M(2,1,1) hits the same entries.
    CHECK(cache.lookup_distribution(Multiset{2, 1, 1}, parse_pattern("12")));
    CHECK(cache.lookup(Multiset{1, 1, 2}, parse_pattern("12"), 1) == 7);
  }
  CHECK(call({"--cache", path.string(), "dist", "132", "(1,2,1)"}).code == 0);
  {
    ResultCache cache(path);
    CHECK(cache.lookup_distribution(Multiset{1, 2, 1}, parse_pattern("132")));
    CHECK_FALSE(cache.lookup_distribution(Multiset{2, 1, 1}, parse_pattern("132")));
    CHECK_THROWS_AS(cache.store({make_cache_key(Multiset{1, 1, 2}, parse_pattern("12"), 1),
                                 BigInt(8), "bruteforce"}),
                    IntegrityError);
    CHECK_NOTHROW(cache.store({make_cache_key(Multiset{1, 1, 2}, parse_pattern("12"), 1),
                               BigInt(7), "recurrence"}));
  }
  const auto stats = call({"--cache", path.string(), "cache", "stats"});
  CHECK(stats.out.rfind("entries 5\n", 0) == 0);

  std::ofstream(path, std::ios::app) << "{not json\n";
  CHECK(call({"--cache", path.string(), "cache", "stats"}).code == cli::kExitIntegrity);
  std::filesystem::remove(path);

  const auto path2 = temp_cache("conflict");
  std::ofstream(path2)
      << R"({"multiset":[2,1],"pattern":"12","s":1,"value":"2","provenance":"bruteforce"})"
      << "\n"
      << R"({"multiset":[2,1],"pattern":"12","s":1,"value":"3","provenance":"bruteforce"})"
      << "\n";
  CHECK_THROWS_AS(ResultCache{path2}, IntegrityError);
  CHECK(call({"--cache", path2.string(), "cache", "clear"}).code == cli::kExitIntegrity);
  std::filesystem::remove(path2);
}

TEST_CASE("eulerian CSV")
{
  const auto r = call({"eulerian", "--max-m", "3"});
  CHECK(r.out.rfind("m,k,s,value\n", 0) == 0);
  CHECK(r.out.find("3,0,1,4\n") != std::string::npos);
}
