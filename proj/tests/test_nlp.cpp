#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "procmatch/nlp.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace procmatch;

namespace {

std::vector<std::string> texts_of(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const Token& t : tokens) out.push_back(t.text);
    return out;
}

std::vector<std::string> labels_of(const std::vector<ActionPhrase>& actions) {
    std::vector<std::string> out;
    for (const ActionPhrase& a : actions) out.push_back(a.label);
    return out;
}

std::string normalize_whitespace(const std::string& text) {
    std::string out;
    bool in_space = true;  // swallow leading whitespace
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out += ' ';
        in_space = false;
        out += c;
    }
    return out;
}

}  // namespace

TEST_CASE("tokenize splits word runs and punctuation") {
    CHECK(texts_of(tokenize("The customer places an order.")) ==
          std::vector<std::string>{"The", "customer", "places", "an", "order",
                                   "."});
    CHECK(tokenize("").empty());
    CHECK(texts_of(tokenize("goods are received, and then")) ==
          std::vector<std::string>{"goods", "are", "received", ",", "and",
                                   "then"});
}

TEST_CASE("tokenize keeps apostrophes and digits inside tokens") {
    CHECK(texts_of(tokenize("the clerk's 2 orders!")) ==
          std::vector<std::string>{"the", "clerk's", "2", "orders", "!"});
}

TEST_CASE("split_sentences finds the three sample sentences") {
    auto sentences = split_sentences(fixtures::order_fulfillment_text());
    REQUIRE(sentences.size() == 3);
    CHECK(sentences[0].text ==
          "The customer places an order, the system checks inventory.");
    CHECK(sentences[1].text ==
          "If the stock is available, the order is confirmed and packed.");
    CHECK(sentences[2].text ==
          "If the stock is not available, a purchase order is created, goods "
          "are received, and then the order is shipped to the customer.");
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        CHECK(sentences[i].index == i);
    }
}

TEST_CASE("split_sentences boundary rules") {
    CHECK(split_sentences("Approve the invoice.").size() == 1);
    CHECK(split_sentences("No terminator here").size() == 1);
    // Terminator not followed by whitespace-then-uppercase: no boundary.
    CHECK(split_sentences("See fig. 4 for details.").size() == 1);
    auto two = split_sentences("Pack it! Ship it.");
    REQUIRE(two.size() == 2);
    CHECK(two[0].text == "Pack it!");
    CHECK(two[1].text == "Ship it.");
}

TEST_CASE("pos_tag applies the rule cascade in order") {
    auto tagged = pos_tag(tokenize("The customer places an order."));
    REQUIRE(tagged.size() == 6);
    CHECK(tagged[0].pos == Pos::Det);
    CHECK(tagged[1].pos == Pos::Noun);  // after a determiner
    CHECK(tagged[2].pos == Pos::Verb);
    CHECK(tagged[3].pos == Pos::Det);
    CHECK(tagged[4].pos == Pos::Noun);
    CHECK(tagged[5].pos == Pos::Punct);
}

TEST_CASE("pos_tag closed classes win over everything") {
    auto tagged = pos_tag(tokenize("is are was have will must of if then"));
    for (std::size_t i = 0; i < 6; ++i) CHECK(tagged[i].pos == Pos::Aux);
    CHECK(tagged[6].pos == Pos::Adp);
    CHECK(tagged[7].pos == Pos::Adp);
    CHECK(tagged[8].pos == Pos::Adp);
}

TEST_CASE("pos_tag suffix rule needs a lexicon stem") {
    // "packings" is not a lexicon key, but stripping -s leaves "packing",
    // which is one.
    auto tagged = pos_tag(tokenize("packings"));
    REQUIRE(tagged.size() == 1);
    CHECK(tagged[0].pos == Pos::Verb);
    // "gift" matches no rule and has no preceding determiner.
    auto other = pos_tag(tokenize("gift arrives"));
    CHECK(other[0].pos == Pos::Other);
    CHECK(other[1].pos == Pos::Verb);
}

TEST_CASE("pos_tag noun-first words stay nominal") {
    // Base and third-person forms of noun-heavy business words are kept out
    // of the verb lexicon on purpose.
    auto tagged = pos_tag(tokenize("The clerk files the order and the stock"));
    CHECK(tagged[2].pos != Pos::Verb);  // "files"
    CHECK(tagged[4].pos == Pos::Noun);  // "order"
    CHECK(tagged[7].pos == Pos::Noun);  // "stock"
}

TEST_CASE("lemmatize handles the sample inflections") {
    auto lemma = [](const std::string& word) {
        Token tok;
        tok.text = word;
        return lemmatize(tok);
    };
    CHECK(lemma("places") == "place");
    CHECK(lemma("shipped") == "ship");
    CHECK(lemma("received") == "receive");
    CHECK(lemma("is") == "be");
    CHECK(lemma("was") == "be");
    CHECK(lemma("has") == "have");
    CHECK(lemma("carries") == "carry");
    CHECK(lemma("passes") == "pass");
    CHECK(lemma("boxes") == "box");
    CHECK(lemma("checking") == "check");
    CHECK(lemma("planned") == "plan");
    CHECK(lemma("used") == "use");
    CHECK(lemma("Ship") == "ship");
    CHECK(lemma("inventory") == "inventory");
}

TEST_CASE("extract_actions on the order-fulfillment sample") {
    auto actions = extract_actions(fixtures::order_fulfillment_text());
    CHECK(labels_of(actions) ==
          std::vector<std::string>{"Place", "Check", "Confirm", "Pack",
                                   "Create", "Receive", "Ship"});
    // Position of each source token, frozen from a hand walkthrough.
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    for (const ActionPhrase& a : actions) {
        positions.emplace_back(a.sentence_index, a.token_index);
    }
    CHECK(positions ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {0, 2}, {0, 8}, {1, 9}, {1, 11}, {2, 11}, {2, 15}, {2, 22}});
}

TEST_CASE("extract_actions simple and error cases") {
    CHECK(labels_of(extract_actions("The clerk approves the invoice.")) ==
          std::vector<std::string>{"Approve"});
    CHECK_THROWS_AS(extract_actions("The invoice and the receipt."),
                    empty_actions_error);
    CHECK_THROWS_AS(extract_actions(""), empty_actions_error);
}

TEST_CASE("extract_actions keeps duplicates") {
    auto actions =
        extract_actions("The clerk checks the order. The manager checks it.");
    CHECK(labels_of(actions) == std::vector<std::string>{"Check", "Check"});
}

TEST_CASE("extract_conditions on the sample sentences") {
    auto sentences = split_sentences(fixtures::order_fulfillment_text());
    auto clauses = extract_conditions(sentences);
    REQUIRE(clauses.size() == 2);
    CHECK(clauses[0].sentence_index == 1);
    CHECK(clauses[0].guard == "the stock is available");
    CHECK(labels_of(clauses[0].consequent_actions) ==
          std::vector<std::string>{"Confirm", "Pack"});
    CHECK(clauses[1].sentence_index == 2);
    CHECK(clauses[1].guard == "the stock is not available");
    CHECK(labels_of(clauses[1].consequent_actions) ==
          std::vector<std::string>{"Create", "Receive", "Ship"});
}

TEST_CASE("the word gift never triggers a condition") {
    auto clauses = extract_conditions(
        split_sentences("The gift arrives. The clerk notifies the manager."));
    CHECK(clauses.empty());
}

TEST_CASE("conditions need the standalone word if") {
    auto clauses =
        extract_conditions(split_sentences("If the stock is available, the "
                                           "clerk ships the order."));
    REQUIRE(clauses.size() == 1);
    CHECK(clauses[0].guard == "the stock is available");
    CHECK(labels_of(clauses[0].consequent_actions) ==
          std::vector<std::string>{"Ship"});
}

TEST_CASE("comma-free conditionals use the verb-phrase fallback") {
    auto clauses = extract_conditions(split_sentences(
        "If the manager approves the clerk ships the order."));
    REQUIRE(clauses.size() == 1);
    CHECK(clauses[0].guard == "the manager approves");
    CHECK(labels_of(clauses[0].consequent_actions) ==
          std::vector<std::string>{"Ship"});
}

TEST_CASE("empty guards are malformed") {
    CHECK_THROWS_AS(extract_conditions(split_sentences("Ship the order if.")),
                    malformed_condition_error);
    CHECK_THROWS_AS(
        extract_conditions(split_sentences("If, the clerk ships the order.")),
        malformed_condition_error);
}

TEST_CASE("condition soundness over generated sentences") {
    std::mt19937 rng(20260822);
    testgen::SentencePools pools;
    for (int i = 0; i < 200; ++i) {
        auto sentences =
            split_sentences(testgen::random_text(rng, pools, 4, true));
        auto clauses = extract_conditions(sentences);
        std::size_t with_if = 0;
        for (const Sentence& sent : sentences) {
            bool standalone_if = false;
            for (const Token& tok : sent.tokens) {
                if (procmatch::detail::lower(tok.text) == "if") {
                    standalone_if = true;
                }
            }
            if (standalone_if) ++with_if;
        }
        CHECK(clauses.size() == with_if);
    }
}

TEST_CASE("aux tokens never become actions") {
    std::mt19937 rng(42);
    testgen::SentencePools pools;
    const std::vector<std::string> aux_lemmas{"Be",  "Have",  "Do",   "Will",
                                              "Can", "Shall", "May",  "Must",
                                              "Am",  "Is",    "Are",  "Was",
                                              "Were", "Has",  "Had",  "Does",
                                              "Did", "Would", "Could", "Should",
                                              "Might"};
    for (int i = 0; i < 200; ++i) {
        std::string text = testgen::random_text(rng, pools);
        std::vector<ActionPhrase> actions;
        try {
            actions = extract_actions(text);
        } catch (const empty_actions_error&) {
            continue;
        }
        for (const ActionPhrase& action : actions) {
            for (const std::string& aux : aux_lemmas) {
                CHECK(action.label != aux);
            }
        }
    }
}

TEST_CASE("actions trace back to verb tokens") {
    std::mt19937 rng(7);
    testgen::SentencePools pools;
    for (int i = 0; i < 100; ++i) {
        std::string text = testgen::random_text(rng, pools);
        auto sentences = split_sentences(text);
        std::vector<ActionPhrase> actions;
        try {
            actions = extract_actions(text);
        } catch (const empty_actions_error&) {
            continue;
        }
        for (const ActionPhrase& action : actions) {
            REQUIRE(action.sentence_index < sentences.size());
            const Sentence& sent = sentences[action.sentence_index];
            REQUIRE(action.token_index < sent.tokens.size());
            const Token& tok = sent.tokens[action.token_index];
            CHECK(tok.pos == Pos::Verb);
            CHECK(procmatch::detail::capitalize(tok.lemma) == action.label);
        }
    }
}

TEST_CASE("pipeline is deterministic") {
    std::mt19937 rng(99);
    testgen::SentencePools pools;
    for (int i = 0; i < 50; ++i) {
        std::string text = testgen::random_text(rng, pools);
        auto first = split_sentences(text);
        auto second = split_sentences(text);
        REQUIRE(first.size() == second.size());
        for (std::size_t s = 0; s < first.size(); ++s) {
            CHECK(first[s].text == second[s].text);
            REQUIRE(first[s].tokens.size() == second[s].tokens.size());
            for (std::size_t t = 0; t < first[s].tokens.size(); ++t) {
                CHECK(first[s].tokens[t].text == second[s].tokens[t].text);
                CHECK(first[s].tokens[t].lemma == second[s].tokens[t].lemma);
                CHECK(first[s].tokens[t].pos == second[s].tokens[t].pos);
            }
        }
    }
}

TEST_CASE("sentences reproduce the normalized input") {
    std::mt19937 rng(123);
    testgen::SentencePools pools;
    std::vector<std::string> inputs{fixtures::order_fulfillment_text(),
                                    "  Approve   the\ninvoice. Ship it!  "};
    for (int i = 0; i < 30; ++i) {
        inputs.push_back(testgen::random_text(rng, pools));
    }
    for (const std::string& text : inputs) {
        std::string joined;
        for (const Sentence& sent : split_sentences(text)) {
            if (!joined.empty()) joined += ' ';
            joined += sent.text;
        }
        CHECK(normalize_whitespace(joined) == normalize_whitespace(text));
    }
}

TEST_CASE("token invariants hold") {
    for (const Sentence& sent :
         split_sentences(fixtures::order_fulfillment_text())) {
        for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
            const Token& tok = sent.tokens[i];
            CHECK(tok.index == i);
            CHECK(!tok.lemma.empty());
            CHECK(tok.lemma == procmatch::detail::lower(tok.lemma));
        }
    }
}
