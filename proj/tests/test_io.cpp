#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "taskgroup/fixtures.hpp"
#include "taskgroup/table_io.hpp"
#include "test_util.hpp"

using namespace taskgroup;

TEST_CASE("minimal table file") {
  const std::string text = R"({
    "schema_version": 1,
    "tasks": ["s"],
    "networks": [{"id": "s@1000", "cost_msnt": 1000, "losses": {"s": 0.25}}]
  })";
  PerformanceTable table = parse_table(text);
  CHECK(table.size() == 1);
  CHECK(table.network("s@1000").loss_on("s") == 0.25);
}

TEST_CASE("table parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_table("not json"), ParseError);
  CHECK_THROWS_AS(parse_table("[]"), ParseError);
  CHECK_THROWS_AS(parse_table(R"({"tasks": ["s"], "networks": []})"), ParseError);  // no version
  CHECK_THROWS_AS(parse_table(R"({"schema_version": 2, "tasks": ["s"], "networks": []})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_table(R"({"schema_version": 1, "tasks": ["s"], "networks": [], "x": 0})"),
                  ParseError);  // unknown key
  // duplicate id
  CHECK_THROWS_AS(parse_table(R"({"schema_version": 1, "tasks": ["s"], "networks": [
      {"id": "a", "cost_msnt": 1000, "losses": {"s": 0.1}},
      {"id": "a", "cost_msnt": 1000, "losses": {"s": 0.2}}]})"),
                  ValidationError);
  // unknown task
  CHECK_THROWS_AS(parse_table(R"({"schema_version": 1, "tasks": ["s"], "networks": [
      {"id": "a", "cost_msnt": 1000, "losses": {"d": 0.1}}]})"),
                  UnknownTask);
  // non-positive cost
  CHECK_THROWS_AS(parse_table(R"({"schema_version": 1, "tasks": ["s"], "networks": [
      {"id": "a", "cost_msnt": 0, "losses": {"s": 0.1}}]})"),
                  ValidationError);
  // negative loss
  CHECK_THROWS_AS(parse_table(R"({"schema_version": 1, "tasks": ["s"], "networks": [
      {"id": "a", "cost_msnt": 1000, "losses": {"s": -0.1}}]})"),
                  ValidationError);
  // fractional cost
  CHECK_THROWS_AS(parse_table(R"({"schema_version": 1, "tasks": ["s"], "networks": [
      {"id": "a", "cost_msnt": 10.5, "losses": {"s": 0.1}}]})"),
                  ParseError);
}

TEST_CASE("table serialization round-trips exactly") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto table = testutil::random_instance(seed);
    std::string text = serialize_table(table);
    PerformanceTable parsed = parse_table(text);

    REQUIRE(parsed.size() == table.size());
    CHECK(parsed.task_set() == table.task_set());
    for (const auto& n : table.networks()) {
      const CandidateNetwork& p = parsed.network(n.id);
      CHECK(p.cost_msnt == n.cost_msnt);
      CHECK(p.losses == n.losses);  // exact through shortest round-trip floats
      CHECK(p.predicted == n.predicted);
    }
    CHECK(serialize_table(parsed) == text);  // canonical form is a fixed point
  }
}

TEST_CASE("predicted flag survives the table format") {
  auto table = testutil::make_table({"s"}, {{"a", 1000, {{"s", 0.5}}}});
  std::vector<CandidateNetwork> nets(table.networks().begin(), table.networks().end());
  nets[0].predicted = true;
  PerformanceTable flagged(table.task_set(), std::move(nets));
  PerformanceTable parsed = parse_table(serialize_table(flagged));
  CHECK(parsed.network("a").predicted);
}

TEST_CASE("matrix files round-trip both kinds") {
  auto directed = load_pairwise_fixture("setting1_pairwise");
  std::string text = serialize_matrix(directed);
  Matrix parsed = parse_matrix(text);
  auto* m = std::get_if<PairwiseRelationMatrix>(&parsed);
  REQUIRE(m != nullptr);
  CHECK(m->label() == "setting1");
  CHECK(m->task_set() == directed.task_set());
  for (const auto& e : directed.entries())
    CHECK(m->at(e.trained_with, e.performance_on) == e.value);
  CHECK(serialize_matrix(*m) == text);

  auto affinity = load_affinity_fixture("taskonomy_transfer");
  Matrix parsed_affinity = parse_matrix(serialize_matrix(affinity));
  auto* a = std::get_if<AffinityMatrix>(&parsed_affinity);
  REQUIRE(a != nullptr);
  CHECK(a->at("Normals", "Keypoints") == 0.089);
}

TEST_CASE("matrix parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("who,what,why\na,b,1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("trained_with,performance_on,value\na,b\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("trained_with,performance_on,value\na,b,zero\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("trained_with,performance_on,value\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("trained_with,performance_on,value\na,a,1.0\n"), ValidationError);
  CHECK_THROWS_AS(parse_matrix("trained_with,performance_on,value\na,b,1.0\na,b,2.0\n"),
                  ValidationError);
}

TEST_CASE("SNT amounts parse exactly or not at all") {
  CHECK(parse_snt_to_msnt("1") == 1000);
  CHECK(parse_snt_to_msnt("2.5") == 2500);
  CHECK(parse_snt_to_msnt("0.5") == 500);
  CHECK(parse_snt_to_msnt("2.500") == 2500);
  CHECK(parse_snt_to_msnt("2.5000") == 2500);  // trailing zeros carry no extra precision
  CHECK(parse_snt_to_msnt("0.001") == 1);
  CHECK(parse_snt_to_msnt("12.345") == 12345);

  CHECK_THROWS_AS(parse_snt_to_msnt("2.0001"), ValidationError);  // sub-milli
  CHECK_THROWS_AS(parse_snt_to_msnt("1e3"), ValidationError);
  CHECK_THROWS_AS(parse_snt_to_msnt("-1"), ValidationError);
  CHECK_THROWS_AS(parse_snt_to_msnt(""), ValidationError);
  CHECK_THROWS_AS(parse_snt_to_msnt("1."), ValidationError);
  CHECK_THROWS_AS(parse_snt_to_msnt(".5"), ValidationError);
  CHECK_THROWS_AS(parse_snt_to_msnt("1 000"), ValidationError);

  CHECK(format_msnt_as_snt(2500) == "2.500");
  CHECK(format_msnt_as_snt(1) == "0.001");
  CHECK(format_msnt_as_snt(0) == "0.000");
}

namespace {

std::uint64_t fnv1a(const std::string& text, std::uint64_t hash) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace

TEST_CASE("fixture integrity checksum") {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const auto& name : fixture_names())
    hash = fnv1a(serialize_matrix(load_fixture(name)), hash);
  // frozen over the canonical serialization of all six embedded tables
  CHECK(hash == 0xcc8350731a4727eaULL);
}
