#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "overrank/error.hpp"
#include "overrank/io/table_io.hpp"

using namespace overrank;

namespace {

const qseries::RankTable& table60() {
  static const qseries::RankTable t = qseries::rank_table(60);
  return t;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("overrank_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("binary round trip") {
    std::stringstream ss;
    io::write_binary(ss, table60());
    CHECK(io::read_binary(ss) == table60());
  }

  TEST_CASE("csv round trip") {
    std::stringstream ss;
    io::write_csv(ss, table60());
    CHECK(ss.str().rfind("n,m,count\n0,0,1\n", 0) == 0);
    CHECK(io::read_csv(ss) == table60());
  }

  TEST_CASE("json round trip") {
    std::stringstream ss;
    io::write_json(ss, table60());
    CHECK(ss.str().find("\"format_version\":1") != std::string::npos);
    CHECK(io::read_json(ss) == table60());
  }

  TEST_CASE("malformed input") {
    std::stringstream bad_bin("OVRKTBL9xxxxxxxx");
    CHECK_THROWS_AS(io::read_binary(bad_bin), FormatError);
    std::stringstream full;
    io::write_binary(full, table60());
    std::stringstream truncated(full.str().substr(0, full.str().size() / 2));
    CHECK_THROWS_AS(io::read_binary(truncated), FormatError);
    std::stringstream bad_csv("n,m,count\n0,0,1\n1,0,x\n");
    CHECK_THROWS_AS(io::read_csv(bad_csv), FormatError);
    std::stringstream bad_header("a,b,c\n");
    CHECK_THROWS_AS(io::read_csv(bad_header), FormatError);
    std::stringstream bad_json(R"({"format_version":2,"n_max":0,"rows":[[[0,"1"]]]})");
    CHECK_THROWS_AS(io::read_json(bad_json), FormatError);
    std::stringstream not_json("{");
    CHECK_THROWS_AS(io::read_json(not_json), FormatError);
    // counts that violate the row totals
    std::stringstream wrong_total("n,m,count\n0,0,1\n1,0,3\n1,1,0\n");
    CHECK_THROWS(io::read_csv(wrong_total).validate());
  }

  TEST_CASE("cache store, load and truncate") {
    TempDir tmp;
    const io::TableCache cache(tmp.path);
    CHECK_FALSE(cache.load(10).has_value());
    cache.store(table60());
    const auto hit = cache.load(25);
    REQUIRE(hit.has_value());
    CHECK(*hit == table60().truncated(25));
    CHECK_FALSE(cache.load(61).has_value());
    // write-once: a second store leaves the file alone
    const auto file = tmp.path / "ranks_60.bin";
    const auto stamp = std::filesystem::last_write_time(file);
    cache.store(table60());
    CHECK(std::filesystem::last_write_time(file) == stamp);
    const qseries::RankTable built = cache.get_or_build(70);
    CHECK(built.truncated(60) == table60());
    CHECK(std::filesystem::exists(tmp.path / "ranks_70.bin"));
  }

  TEST_CASE("cache path resolution") {
    CHECK(io::TableCache::resolve(std::filesystem::path("/x/y")) == "/x/y");
    ::setenv("OVERRANK_CACHE", "/from/env", 1);
    CHECK(io::TableCache::resolve(std::nullopt) == "/from/env");
    ::unsetenv("OVERRANK_CACHE");
    CHECK_FALSE(io::TableCache::resolve(std::nullopt).empty());
  }
}
