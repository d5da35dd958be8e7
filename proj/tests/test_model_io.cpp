#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "procmatch/lexicon.hpp"
#include "procmatch/matcher.hpp"
#include "procmatch/model_io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/subprocess.hpp"

using namespace procmatch;

namespace {

PetriNet tiny_net() {
    PetriNet net("tiny");
    net.add_place("i");
    net.add_place("o");
    net.add_transition("T", "Task");
    net.add_arc("i", "T");
    net.add_arc("T", "o");
    return net;
}

const char* const tiny_golden = R"({
  "schema_version": "1",
  "name": "tiny",
  "places": [
    "i",
    "o"
  ],
  "transitions": [
    {
      "id": "T",
      "label": "Task"
    }
  ],
  "arcs": [
    {
      "from": "i",
      "to": "T"
    },
    {
      "from": "T",
      "to": "o"
    }
  ],
  "initial_marking": {
    "i": 1
  }
}
)";

std::string violation_location(const std::string& content) {
    try {
        net_from_json_string(content);
    } catch (const schema_violation_error& e) {
        return e.location;
    }
    return "<no violation>";
}

}  // namespace

TEST_CASE("serialization matches the golden document byte for byte") {
    PetriNet net = tiny_net();
    Marking m;
    m.tokens["i"] = 1;
    CHECK(to_json_string(net, m) == tiny_golden);
    CHECK(to_json_string(net, m) == to_json_string(net, m));
}

TEST_CASE("round trip preserves the walkthrough net") {
    PetriNet net = fixtures::expected_order_net("order_fulfillment");
    Marking m = initial_marking(net);
    auto [loaded, marking] = net_from_json_string(to_json_string(net, m));
    CHECK(loaded == net);
    CHECK(loaded.name() == "order_fulfillment");
    REQUIRE(marking.has_value());
    CHECK(*marking == m);
}

TEST_CASE("a document without a marking loads without one") {
    auto [net, marking] = net_from_json_string(to_json_string(tiny_net()));
    CHECK(net == tiny_net());
    CHECK_FALSE(marking.has_value());
}

TEST_CASE("save_net writes exactly the serialized string") {
    std::string path = testcli::scratch_dir() + "/tiny_roundtrip.net.json";
    save_net(tiny_net(), path);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == to_json_string(tiny_net()));
}

TEST_CASE("zero token counts are dropped on load") {
    std::string doc = R"({
      "schema_version": "1",
      "places": ["i", "o"],
      "transitions": [{"id": "T", "label": "Task"}],
      "arcs": [{"from": "i", "to": "T"}, {"from": "T", "to": "o"}],
      "initial_marking": {"i": 0}
    })";
    auto [net, marking] = net_from_json_string(doc);
    CHECK(net.name().empty());
    REQUIRE(marking.has_value());
    CHECK(marking->tokens.empty());
}

TEST_CASE("schema violations carry a JSON pointer location") {
    const std::string head = R"("schema_version": "1")";
    CHECK(violation_location("[]") == "/");
    CHECK(violation_location("{ not json") == "/");
    CHECK(violation_location(R"({"places": []})") == "/schema_version");
    CHECK(violation_location(R"({)" + head + R"(, "places": 3})") == "/places");
    CHECK(violation_location(R"({)" + head +
                             R"(, "places": ["a", 7]})") == "/places/1");
    CHECK(violation_location(R"({)" + head +
                             R"(, "places": ["a", "a"]})") == "/places/1");
    CHECK(violation_location(
              R"({)" + head +
              R"(, "places": [], "transitions": [{"label": "X"}]})") ==
          "/transitions/0/id");
    CHECK(violation_location(
              R"({)" + head +
              R"(, "places": [], "transitions": [{"id": "t", "label": ""}]})") ==
          "/transitions/0/label");
    CHECK(violation_location(
              R"({)" + head + R"(, "places": ["i"], "transitions": [],)" +
              R"( "arcs": [{"from": "i", "to": "ghost"}]})") == "/arcs/0/to");
    CHECK(violation_location(
              R"({)" + head + R"(, "places": ["i", "o"], "transitions": [],)" +
              R"( "arcs": [{"from": "i", "to": "o"}]})") == "/arcs/0");
    CHECK(violation_location(
              R"({)" + head +
              R"(, "places": ["i"], "transitions": [], "arcs": [],)" +
              R"( "initial_marking": {"ghost": 1}})") ==
          "/initial_marking/ghost");
    CHECK(violation_location(
              R"({)" + head +
              R"(, "places": ["i"], "transitions": [], "arcs": [],)" +
              R"( "initial_marking": {"i": -1}})") == "/initial_marking/i");
    CHECK(violation_location(
              R"({)" + head +
              R"(, "places": ["i"], "transitions": [], "arcs": [],)" +
              R"( "initial_marking": {"i": 1.5}})") == "/initial_marking/i");
}

TEST_CASE("future schema versions are refused") {
    CHECK_THROWS_AS(net_from_json_string(
                        R"({"schema_version": "2", "places": []})"),
                    schema_version_unsupported_error);
    CHECK_THROWS_AS(net_from_json_string(
                        R"({"schema_version": 1, "places": []})"),
                    schema_violation_error);
}

TEST_CASE("the sample reference library loads in filename order") {
    ReferenceLibrary library =
        load_reference_library(fixtures::samples_dir() + "/references");
    CHECK(library.errors.empty());
    REQUIRE(library.nets.size() == 3);
    CHECK(library.nets[0].name() == "fulfillment_parallel_checks");
    CHECK(library.nets[1].name() == "fulfillment_with_audit");
    CHECK(library.nets[2].name() == "standard_fulfillment");
    CHECK(library.nets[2].transitions().size() == 7);
    CHECK(library.nets[0].transitions().size() == 10);
}

TEST_CASE("library loading names nameless nets after the file") {
    std::string dir = testcli::scratch_dir() + "/lib_naming";
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/anon.net.json")
        << R"({"schema_version": "1", "places": ["i"], "transitions": [],)"
        << R"( "arcs": []})" << "\n";
    std::ofstream(dir + "/broken.net.json") << "{ nope\n";
    std::ofstream(dir + "/ignored.json") << "{}\n";
    ReferenceLibrary library = load_reference_library(dir);
    REQUIRE(library.nets.size() == 1);
    CHECK(library.nets[0].name() == "anon");
    REQUIRE(library.errors.size() == 1);
    CHECK(library.errors[0].find("broken.net.json") != std::string::npos);
}

TEST_CASE("library loading requires a directory") {
    CHECK_THROWS_AS(load_reference_library("/nonexistent/refdir"), error);
}

TEST_CASE("random nets survive a serialization round trip") {
    std::mt19937 rng(161803);
    for (int i = 0; i < 300; ++i) {
        PetriNet net = testgen::random_bipartite_net(rng);
        std::string text = to_json_string(net);
        auto [loaded, marking] = net_from_json_string(text);
        CHECK(loaded == net);
        CHECK_FALSE(marking.has_value());
        CHECK(to_json_string(loaded) == text);
    }
}

TEST_CASE("dot export shapes places, transitions, and silent tasks") {
    PetriNet net = tiny_net();
    net.add_transition("s", std::string(silent_prefix) + "skip");
    net.add_arc("o", "s");
    std::string dot = export_dot(net);
    CHECK(dot.find("digraph \"tiny\"") != std::string::npos);
    CHECK(dot.find("rankdir=LR;") != std::string::npos);

    std::size_t circles = 0, boxes = 0, edges = 0, filled = 0;
    for (std::size_t pos = 0; (pos = dot.find("shape=circle", pos)) != std::string::npos; ++pos) ++circles;
    for (std::size_t pos = 0; (pos = dot.find("shape=box", pos)) != std::string::npos; ++pos) ++boxes;
    for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
    for (std::size_t pos = 0; (pos = dot.find("fillcolor=lightgray", pos)) != std::string::npos; ++pos) ++filled;
    CHECK(circles == 2);
    CHECK(boxes == 2);
    CHECK(edges == 3);
    CHECK(filled == 1);
    CHECK(export_dot(net) == dot);
}

TEST_CASE("dot export annotates aligned transitions with their score") {
    PetriNet net = tiny_net();
    TaskAlignment alignment;
    alignment.pairs.push_back({"T", "r9", 0.9634999});
    std::string dot = export_dot(net, &alignment);
    CHECK(dot.find("label=\"Task (0.963)\"") != std::string::npos);
}

TEST_CASE("quotes and backslashes are escaped in dot labels") {
    PetriNet net("with\"quote");
    net.add_place("p0");
    net.add_transition("t0", "Say \"hi\" \\ wave");
    net.add_arc("p0", "t0");
    std::string dot = export_dot(net);
    CHECK(dot.find("digraph \"with\\\"quote\"") != std::string::npos);
    CHECK(dot.find("Say \\\"hi\\\" \\\\ wave") != std::string::npos);
}

TEST_CASE("the bundled lexicon files mirror the built-in tables") {
    std::ifstream verbs(fixtures::data_dir() + "/verb_lexicon.tsv",
                        std::ios::binary);
    REQUIRE(verbs.good());
    std::ostringstream verb_buffer;
    verb_buffer << verbs.rdbuf();
    CHECK(verb_buffer.str() == procmatch::detail::verb_lexicon_tsv);

    std::ifstream irregular(fixtures::data_dir() + "/irregular_verbs.tsv",
                            std::ios::binary);
    REQUIRE(irregular.good());
    std::ostringstream irregular_buffer;
    irregular_buffer << irregular.rdbuf();
    CHECK(irregular_buffer.str() == procmatch::detail::irregular_verbs_tsv);

    Lexicon from_files = Lexicon::from_tsv(verb_buffer.str(),
                                           irregular_buffer.str());
    CHECK(from_files.verb_form_count() == Lexicon::builtin().verb_form_count());
    CHECK(from_files.irregular_count() == Lexicon::builtin().irregular_count());
}
