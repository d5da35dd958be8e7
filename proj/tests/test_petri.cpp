#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "procmatch/petri.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace procmatch;

namespace {

PetriNet linear_net() {
    PetriNet net("linear");
    net.add_place("i");
    net.add_place("o");
    net.add_transition("T", "Task");
    net.add_arc("i", "T");
    net.add_arc("T", "o");
    return net;
}

PetriNet xor_net() {
    PetriNet net("xor");
    net.add_place("i");
    net.add_place("o");
    net.add_transition("ta", "Left");
    net.add_transition("tb", "Right");
    net.add_arc("i", "ta");
    net.add_arc("i", "tb");
    net.add_arc("ta", "o");
    net.add_arc("tb", "o");
    return net;
}

}  // namespace

TEST_CASE("builder rejects duplicate ids") {
    PetriNet net;
    net.add_place("p1");
    CHECK_THROWS_AS(net.add_place("p1"), duplicate_id_error);
    net.add_transition("t1", "Task");
    CHECK_THROWS_AS(net.add_transition("t1", "Other"), duplicate_id_error);
    CHECK_THROWS_AS(net.add_transition("p1", "Task"), duplicate_id_error);
}

TEST_CASE("builder rejects non-bipartite arcs") {
    PetriNet net;
    net.add_place("p1");
    net.add_place("p2");
    net.add_transition("t1", "Task");
    net.add_transition("t2", "Other");
    net.add_arc("p1", "t1");
    CHECK_THROWS_AS(net.add_arc("p1", "p2"), bipartite_violation_error);
    CHECK_THROWS_AS(net.add_arc("t1", "t2"), bipartite_violation_error);
    CHECK_THROWS_AS(net.add_arc("p1", "nope"), bipartite_violation_error);
    CHECK_THROWS_AS(net.add_arc("p1", "t1"), duplicate_id_error);
}

TEST_CASE("builder rejects empty labels") {
    PetriNet net;
    CHECK_THROWS_AS(net.add_transition("t1", ""), error);
}

TEST_CASE("silent label detection") {
    CHECK(is_silent_label("\xcf\x84:else"));
    CHECK_FALSE(is_silent_label("Ship"));
    PetriNet net;
    net.add_transition("t0", "Ship");
    net.add_transition("t1", std::string(silent_prefix) + "skip");
    CHECK(net.non_silent_transition_count() == 1);
}

TEST_CASE("validate_workflow accepts the minimal net") {
    auto diag = validate_workflow(linear_net());
    CHECK(diag.is_workflow_net);
    CHECK(diag.source == "i");
    CHECK(diag.sink == "o");
    CHECK(diag.violations.empty());
}

TEST_CASE("validate_workflow reports multiple sources") {
    PetriNet net;
    net.add_place("a");
    net.add_place("b");
    auto diag = validate_workflow(net);
    CHECK_FALSE(diag.is_workflow_net);
    bool mentions_sources = false;
    for (const std::string& v : diag.violations) {
        if (v.find("multiple source candidates") != std::string::npos) {
            mentions_sources = true;
        }
    }
    CHECK(mentions_sources);
}

TEST_CASE("validate_workflow reports nodes off the source-sink path") {
    PetriNet net = linear_net();
    net.add_place("island_p");
    net.add_transition("island_t", "Stray");
    net.add_arc("island_p", "island_t");
    net.add_arc("island_t", "island_p");
    auto diag = validate_workflow(net);
    CHECK_FALSE(diag.is_workflow_net);
    bool mentions_island = false;
    for (const std::string& v : diag.violations) {
        if (v.find("island_t") != std::string::npos) mentions_island = true;
    }
    CHECK(mentions_island);
}

TEST_CASE("enabled follows token availability") {
    PetriNet net = linear_net();
    Marking m;
    m.tokens["i"] = 1;
    CHECK(enabled(net, m) == std::vector<std::string>{"T"});
    CHECK(enabled(net, Marking{}).empty());

    PetriNet split = xor_net();
    Marking one;
    one.tokens["i"] = 1;
    CHECK(enabled(split, one) == std::vector<std::string>{"ta", "tb"});
}

TEST_CASE("fire moves tokens and preserves the input marking") {
    PetriNet net = linear_net();
    Marking m;
    m.tokens["i"] = 1;
    Marking after = fire(net, m, "T");
    CHECK(after.count("o") == 1);
    CHECK(after.count("i") == 0);
    CHECK(m.count("i") == 1);  // unchanged
    CHECK_THROWS_AS(fire(net, Marking{}, "T"), not_enabled_error);
    CHECK_THROWS_AS(fire(net, m, "missing"), not_enabled_error);
}

TEST_CASE("firing one xor branch disables the other") {
    PetriNet net = xor_net();
    Marking m;
    m.tokens["i"] = 1;
    Marking after = fire(net, m, "ta");
    CHECK(enabled(net, after).empty());
    CHECK(after.count("o") == 1);
}

TEST_CASE("token count conservation under firing") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 30; ++i) {
        PetriNet net = testgen::random_state_machine(rng);
        Marking m = initial_marking(net);
        for (int step = 0; step < 20; ++step) {
            auto fireable = enabled(net, m);
            if (fireable.empty()) break;
            const std::string& t = fireable[rng() % fireable.size()];
            int before = m.total();
            int delta = static_cast<int>(net.successors(t).size()) -
                        static_cast<int>(net.predecessors(t).size());
            m = fire(net, m, t);
            CHECK(m.total() == before + delta);
        }
    }
}

TEST_CASE("check_soundness accepts a linear chain") {
    PetriNet net("chain");
    net.add_place("p0");
    for (int i = 0; i < 3; ++i) {
        net.add_transition("t" + std::to_string(i), "Step" + std::to_string(i));
        net.add_place("p" + std::to_string(i + 1));
        net.add_arc("p" + std::to_string(i), "t" + std::to_string(i));
        net.add_arc("t" + std::to_string(i), "p" + std::to_string(i + 1));
    }
    auto report = check_soundness(net, 100);
    CHECK(report.verdict == Soundness::Sound);
    CHECK(report.option_to_complete);
    CHECK(report.proper_completion);
    CHECK(report.dead_transitions.empty());
    CHECK(report.explored_markings == 4);
}

TEST_CASE("check_soundness flags improper completion") {
    auto report = check_soundness(testgen::improper_completion_net(), 1000);
    CHECK(report.verdict == Soundness::Unsound);
    CHECK_FALSE(report.proper_completion);
}

TEST_CASE("check_soundness flags deadlock and dead transitions") {
    auto report = check_soundness(testgen::deadlock_net(), 1000);
    CHECK(report.verdict == Soundness::Unsound);
    CHECK_FALSE(report.option_to_complete);
    CHECK(std::find(report.dead_transitions.begin(),
                    report.dead_transitions.end(),
                    "tJ") != report.dead_transitions.end());
}

TEST_CASE("check_soundness finds a dead transition in a valid net") {
    PetriNet net = testgen::dead_transition_net();
    CHECK(validate_workflow(net).is_workflow_net);
    auto report = check_soundness(net, 1000);
    CHECK(report.verdict == Soundness::Unsound);
    CHECK(report.option_to_complete);
    CHECK(report.proper_completion);
    CHECK(report.dead_transitions == std::vector<std::string>{"tX"});
}

TEST_CASE("check_soundness respects the bound") {
    auto report = check_soundness(xor_net(), 1);
    CHECK(report.verdict == Soundness::Inconclusive);
    CHECK(report.hit_bound);
}

TEST_CASE("check_soundness requires a workflow net") {
    PetriNet net;
    net.add_place("a");
    net.add_place("b");
    CHECK_THROWS_AS(check_soundness(net, 10), not_workflow_net_error);
}

TEST_CASE("soundness agrees with the brute-force oracle") {
    std::mt19937 rng(555);
    std::vector<PetriNet> nets;
    for (int i = 0; i < 25; ++i) {
        nets.push_back(testgen::random_state_machine(rng));
    }
    int collected = 0;
    while (collected < 25) {
        PetriNet net = testgen::random_series_parallel(rng);
        if (net.places().size() <= 8) {
            nets.push_back(std::move(net));
            ++collected;
        }
    }
    nets.push_back(testgen::improper_completion_net());
    nets.push_back(testgen::deadlock_net());
    nets.push_back(testgen::dead_transition_net());

    for (const PetriNet& net : nets) {
        auto expected = oracle::classify(net);
        REQUIRE(expected.has_value());
        auto report = check_soundness(net, 50000);
        REQUIRE(report.verdict != Soundness::Inconclusive);
        CHECK((report.verdict == Soundness::Sound) == expected->sound);
        CHECK(report.option_to_complete == expected->option_to_complete);
        CHECK(report.proper_completion == expected->proper_completion);
        CHECK(report.dead_transitions.size() ==
              expected->dead_transitions.size());
    }
}

TEST_CASE("state machines and series-parallel nets are sound") {
    std::mt19937 rng(77);
    for (int i = 0; i < 15; ++i) {
        auto report = check_soundness(testgen::random_state_machine(rng), 10000);
        CHECK(report.verdict == Soundness::Sound);
    }
    for (int i = 0; i < 15; ++i) {
        auto report =
            check_soundness(testgen::random_series_parallel(rng), 10000);
        CHECK(report.verdict == Soundness::Sound);
    }
}
