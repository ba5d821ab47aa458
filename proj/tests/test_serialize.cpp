#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "palclosure/pal.hpp"
#include "palclosure/pal_suffix.hpp"
#include "palclosure/serialize.hpp"

using namespace palclosure;

TEST_CASE("json for the compact automaton of Pal(abc)") {
  const std::string text = to_json(build_direct("abc").automaton());
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["states"] == nlohmann::json({0, 1, 2, 3}));
  CHECK(parsed["initial"] == 0);
  CHECK(parsed["terminals"] == nlohmann::json({0, 1, 2, 3}));
  REQUIRE(parsed["edges"].size() == 6);
  CHECK(parsed["edges"][0] ==
        nlohmann::json({{"from", 0}, {"label", "a"}, {"to", 1}}));
  // Edges sorted by (from, label).
  std::pair<int, std::string> previous{-1, ""};
  for (const auto& edge : parsed["edges"]) {
    std::pair<int, std::string> key{edge["from"].get<int>(),
                                    edge["label"].get<std::string>()};
    CHECK(previous < key);
    previous = key;
  }
}

TEST_CASE("json for a dfa uses single-letter labels") {
  const auto parsed = nlohmann::json::parse(to_json(suffix_automaton("aa")));
  CHECK(parsed["states"].size() == 3);
  for (const auto& edge : parsed["edges"]) {
    CHECK(edge["label"].get<std::string>().size() == 1);
  }
  const auto sabc = nlohmann::json::parse(to_json(suffix_automaton(pal_word_fast("abc"))));
  CHECK(sabc["states"].size() == 8);
  CHECK(sabc["terminals"].size() == 4);
  CHECK(sabc["edges"].size() == 10);
}

TEST_CASE("json for a counting graph carries integer labels") {
  const auto parsed = nlohmann::json::parse(to_json(counting_graph("abc")));
  CHECK(parsed["states"].size() == 4);
  CHECK(parsed["edges"][0]["label"] == 1);
  CHECK(parsed["edges"].back()["label"] == 4);
}

TEST_CASE("dot output marks initial and terminal states") {
  const std::string dot = to_dot(build_direct("ab").automaton());
  CHECK(dot.find("digraph {") == 0);
  CHECK(dot.find("start -> 0;") != std::string::npos);
  CHECK(dot.find("[shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("0 -> 1 [label=\"a\"];") != std::string::npos);

  const std::string counting = to_dot(counting_graph("ab"));
  CHECK(counting.find("[label=\"1\"];") != std::string::npos);
}

TEST_CASE("text listing is line oriented and deterministic") {
  const std::string text = to_text(build_direct("ab").automaton());
  CHECK(text ==
        "states 3\n"
        "initial 0\n"
        "terminals 0 1 2\n"
        "edge 0 a 1\n"
        "edge 0 ba 2\n"
        "edge 1 ba 2\n");
  CHECK(to_text(build_direct("ab").automaton()) == text);

  const std::string counting = to_text(counting_graph("ab"));
  CHECK(counting ==
        "states 3\n"
        "initial 0\n"
        "terminals\n"
        "edge 0 1 1\n"
        "edge 0 2 2\n"
        "edge 1 2 2\n");
}

TEST_CASE("serialization canonicalizes state identifiers") {
  const CompactAutomaton shifted({4, 8}, 4, {8}, {{4, "ab", 8}});
  const auto parsed = nlohmann::json::parse(to_json(shifted));
  CHECK(parsed["states"] == nlohmann::json({0, 1}));
  CHECK(parsed["initial"] == 0);
  CHECK(parsed["terminals"] == nlohmann::json({1}));
}
