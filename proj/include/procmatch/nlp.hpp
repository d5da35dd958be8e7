#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "procmatch/errors.hpp"
#include "procmatch/lexicon.hpp"

namespace procmatch {

enum class Pos { Verb, Aux, Noun, Det, Adp, Punct, Other };

inline std::string_view to_string(Pos pos) {
    switch (pos) {
        case Pos::Verb: return "VERB";
        case Pos::Aux: return "AUX";
        case Pos::Noun: return "NOUN";
        case Pos::Det: return "DET";
        case Pos::Adp: return "ADP";
        case Pos::Punct: return "PUNCT";
        case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

struct Token {
    std::string text;
    std::string lemma;  // lowercase; provisional (lowercased text) until lemmatized
    Pos pos = Pos::Other;
    std::size_t index = 0;  // 0-based position within its sentence
};

struct Sentence {
    std::string text;
    std::vector<Token> tokens;
    std::size_t index = 0;  // 0-based position within the document
};

struct ActionPhrase {
    std::string label;  // capitalized verb lemma
    std::size_t sentence_index = 0;
    std::size_t token_index = 0;
};

struct ConditionClause {
    std::size_t sentence_index = 0;
    std::string guard;  // token span between "if" and the clause separator
    std::vector<ActionPhrase> consequent_actions;
};

namespace detail {

inline bool is_word_char(unsigned char c) {
    // Multi-byte UTF-8 sequences count as word characters.
    return std::isalnum(c) != 0 || c == '\'' || c >= 0x80;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

inline std::string capitalize(std::string_view s) {
    std::string out(s);
    if (!out.empty()) {
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    }
    return out;
}

inline constexpr std::array<std::string_view, 23> aux_words{
    "be",   "am",   "is",    "are",   "was",   "were", "been",  "being",
    "have", "has",  "had",   "do",    "does",  "did",  "will",  "would",
    "can",  "could", "shall", "should", "may",  "might", "must"};

inline constexpr std::array<std::string_view, 7> det_words{
    "the", "a", "an", "this", "that", "these", "those"};

inline constexpr std::array<std::string_view, 13> adp_words{
    "of", "in", "on", "at", "by", "for", "to", "with", "and", "or",
    "if", "then", "when"};

template <std::size_t N>
inline bool in_set(const std::array<std::string_view, N>& set,
                   std::string_view word) {
    return std::find(set.begin(), set.end(), word) != set.end();
}

}  // namespace detail

// Split text into tokens: every maximal run of letters/digits/apostrophes is
// one token, each punctuation mark is its own token, whitespace is discarded.
// Tokens come back untagged (pos = OTHER, lemma = lowercased text).
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (detail::is_word_char(c)) {
            while (i < text.size() &&
                   detail::is_word_char(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
        } else {
            ++i;  // single punctuation character
        }
        Token tok;
        tok.text = std::string(text.substr(start, i - start));
        tok.lemma = detail::lower(tok.text);
        tok.index = tokens.size();
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

// Assign POS tags, applying rules in order: (1) closed-class lexicons and
// punctuation, (2) verb-lexicon lookup, (3) -s/-ed/-ing suffix with a
// verb-lexicon stem, (4) NOUN after a determiner in the same sentence,
// otherwise OTHER.  `tokens` must belong to one sentence.
inline std::vector<Token> pos_tag(std::vector<Token> tokens,
                                  const Lexicon& lex = Lexicon::builtin()) {
    bool det_seen = false;
    for (Token& tok : tokens) {
        const std::string word = detail::lower(tok.text);
        if (!tok.text.empty() &&
            !detail::is_word_char(static_cast<unsigned char>(tok.text[0]))) {
            tok.pos = Pos::Punct;
        } else if (detail::in_set(detail::aux_words, word)) {
            tok.pos = Pos::Aux;
        } else if (detail::in_set(detail::det_words, word)) {
            tok.pos = Pos::Det;
        } else if (detail::in_set(detail::adp_words, word)) {
            tok.pos = Pos::Adp;
        } else if (lex.is_verb_form(word)) {
            tok.pos = Pos::Verb;
        } else {
            bool verb_by_suffix = false;
            for (std::string_view suffix : {"s", "ed", "ing"}) {
                if (word.size() > suffix.size() && word.ends_with(suffix)) {
                    std::string stem =
                        word.substr(0, word.size() - suffix.size());
                    if (lex.is_verb_form(stem)) {
                        verb_by_suffix = true;
                        break;
                    }
                }
            }
            if (verb_by_suffix) {
                tok.pos = Pos::Verb;
            } else {
                tok.pos = det_seen ? Pos::Noun : Pos::Other;
            }
        }
        if (tok.pos == Pos::Det) det_seen = true;
    }
    return tokens;
}

// Dictionary base form of a token's text: irregular table first, then the
// verb lexicon, then suffix stripping with doubled-consonant collapse and
// silent-e restoration.  Always lowercase.
inline std::string lemmatize(const Token& token,
                             const Lexicon& lex = Lexicon::builtin()) {
    const std::string word = detail::lower(token.text);
    if (auto lemma = lex.irregular_lemma(word)) return *lemma;
    if (auto lemma = lex.verb_lemma(word)) return *lemma;

    auto is_consonant = [](char c) {
        return c != 'a' && c != 'e' && c != 'i' && c != 'o' && c != 'u' &&
               std::isalpha(static_cast<unsigned char>(c)) != 0;
    };
    // -ed / -ing: candidates are the bare stem, the stem with a doubled final
    // consonant collapsed, and the stem with a restored silent "e"; the first
    // candidate the lexicon knows as a lemma wins.
    auto strip_verbal = [&](std::string_view suffix) -> std::optional<std::string> {
        if (word.size() <= suffix.size() + 1 || !word.ends_with(suffix)) {
            return std::nullopt;
        }
        std::string stem = word.substr(0, word.size() - suffix.size());
        std::string collapsed;
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
            is_consonant(stem.back())) {
            collapsed = stem.substr(0, stem.size() - 1);
        }
        if (lex.is_known_lemma(stem)) return stem;
        if (!collapsed.empty() && lex.is_known_lemma(collapsed)) return collapsed;
        if (lex.is_known_lemma(stem + "e")) return stem + "e";
        return collapsed.empty() ? stem : collapsed;
    };

    if (word.size() > 3 && word.ends_with("ies")) {
        return word.substr(0, word.size() - 3) + "y";
    }
    for (std::string_view sibilant : {"sses", "shes", "ches", "xes", "zes"}) {
        if (word.size() > sibilant.size() && word.ends_with(sibilant)) {
            return word.substr(0, word.size() - 2);
        }
    }
    if (auto stripped = strip_verbal("ed")) return *stripped;
    if (auto stripped = strip_verbal("ing")) return *stripped;
    if (word.size() > 1 && word.ends_with("s") && !word.ends_with("ss")) {
        return word.substr(0, word.size() - 1);
    }
    return word;
}

// Split text into sentences at '.', '!', '?' followed by whitespace and an
// uppercase letter, or at end of text; terminators belong to the preceding
// sentence.  Sentences come back tokenized, tagged, and lemmatized.
inline std::vector<Sentence> split_sentences(
    std::string_view text, const Lexicon& lex = Lexicon::builtin()) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // [begin, end)
    std::size_t begin = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        std::size_t j = i + 1;
        while (j < text.size() &&
               std::isspace(static_cast<unsigned char>(text[j]))) {
            ++j;
        }
        bool at_end = j >= text.size();
        bool next_upper =
            !at_end && std::isupper(static_cast<unsigned char>(text[j])) != 0;
        if ((at_end || (j > i + 1 && next_upper))) {
            spans.emplace_back(begin, i + 1);
            begin = j;
            i = j - 1;
        }
    }
    if (begin < text.size()) spans.emplace_back(begin, text.size());

    std::vector<Sentence> sentences;
    for (auto [from, to] : spans) {
        std::string_view raw = text.substr(from, to - from);
        while (!raw.empty() &&
               std::isspace(static_cast<unsigned char>(raw.front()))) {
            raw.remove_prefix(1);
        }
        while (!raw.empty() &&
               std::isspace(static_cast<unsigned char>(raw.back()))) {
            raw.remove_suffix(1);
        }
        if (raw.empty()) continue;
        Sentence sent;
        sent.text = std::string(raw);
        sent.tokens = pos_tag(tokenize(raw), lex);
        for (Token& tok : sent.tokens) tok.lemma = lemmatize(tok, lex);
        sent.index = sentences.size();
        sentences.push_back(std::move(sent));
    }
    return sentences;
}

namespace detail {

// Where a conditional sentence splits into guard and consequent.
struct ConditionSpan {
    std::size_t if_index = 0;          // index of the standalone "if" token
    std::size_t guard_begin = 0;       // first guard token
    std::size_t guard_end = 0;         // one past the last guard token
    std::size_t consequent_begin = 0;  // first consequent token
};

inline std::string join_tokens(const std::vector<Token>& tokens,
                               std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
        if (!out.empty()) out += ' ';
        out += tokens[i].text;
    }
    return out;
}

// Locate the standalone "if" and the guard/consequent boundary: the first
// comma after "if", or, absent a comma, the start of the main clause found by
// walking back from the second verbal token after the guard's own verb phrase.
// Returns nothing for non-conditional sentences; throws malformed_condition_error
// when the guard would be empty.
inline std::optional<ConditionSpan> find_condition(const Sentence& sent) {
    const auto& toks = sent.tokens;
    std::size_t if_index = toks.size();
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (lower(toks[i].text) == "if") {
            if_index = i;
            break;
        }
    }
    if (if_index == toks.size()) return std::nullopt;

    auto malformed = [&]() -> malformed_condition_error {
        return malformed_condition_error(
            "conditional sentence " + std::to_string(sent.index) +
            " has an empty guard after \"if\": " + sent.text);
    };
    if (if_index + 1 >= toks.size()) throw malformed();

    ConditionSpan span;
    span.if_index = if_index;
    span.guard_begin = if_index + 1;

    std::size_t comma = toks.size();
    for (std::size_t i = span.guard_begin; i < toks.size(); ++i) {
        if (toks[i].text == ",") {
            comma = i;
            break;
        }
    }
    if (comma != toks.size()) {
        span.guard_end = comma;
        span.consequent_begin = comma + 1;
    } else {
        // Fallback for comma-free conditionals: let v1 be the guard's first
        // verbal token and v2 the next one; the main clause starts at v2 minus
        // its noun phrase (a NOUN/OTHER run and at most one determiner).
        auto is_verbal = [&](std::size_t i) {
            return toks[i].pos == Pos::Verb || toks[i].pos == Pos::Aux;
        };
        std::size_t v1 = toks.size();
        for (std::size_t i = span.guard_begin; i < toks.size(); ++i) {
            if (is_verbal(i)) {
                v1 = i;
                break;
            }
        }
        std::size_t v2 = toks.size();
        if (v1 != toks.size()) {
            for (std::size_t i = v1 + 1; i < toks.size(); ++i) {
                if (is_verbal(i)) {
                    v2 = i;
                    break;
                }
            }
        }
        if (v2 == toks.size()) {
            span.guard_end = toks.size();
            span.consequent_begin = toks.size();
        } else {
            std::size_t start = v2;
            while (start > span.guard_begin &&
                   (toks[start - 1].pos == Pos::Noun ||
                    toks[start - 1].pos == Pos::Other)) {
                --start;
            }
            if (start > span.guard_begin && toks[start - 1].pos == Pos::Det) {
                --start;
            }
            if (start <= span.guard_begin) start = v2;
            span.guard_end = start;
            span.consequent_begin = start;
        }
    }

    bool guard_has_word = false;
    for (std::size_t i = span.guard_begin; i < span.guard_end; ++i) {
        if (toks[i].pos != Pos::Punct) guard_has_word = true;
    }
    if (!guard_has_word) throw malformed();
    return span;
}

}  // namespace detail

// One ActionPhrase per VERB token in document order; auxiliaries never count.
// Throws empty_actions_error when the text contains no verb at all.
inline std::vector<ActionPhrase> extract_actions(
    std::string_view text, const Lexicon& lex = Lexicon::builtin()) {
    std::vector<ActionPhrase> actions;
    for (const Sentence& sent : split_sentences(text, lex)) {
        for (const Token& tok : sent.tokens) {
            if (tok.pos != Pos::Verb) continue;
            actions.push_back({detail::capitalize(tok.lemma), sent.index,
                               tok.index});
        }
    }
    if (actions.empty()) {
        throw empty_actions_error("no actions extracted: text contains no verb");
    }
    return actions;
}

// One ConditionClause per sentence containing the standalone word "if":
// guard text up to the first comma (or main-clause fallback), consequent
// actions from the remainder.
inline std::vector<ConditionClause> extract_conditions(
    const std::vector<Sentence>& sentences) {
    std::vector<ConditionClause> clauses;
    for (const Sentence& sent : sentences) {
        auto span = detail::find_condition(sent);
        if (!span) continue;
        ConditionClause clause;
        clause.sentence_index = sent.index;
        clause.guard =
            detail::join_tokens(sent.tokens, span->guard_begin, span->guard_end);
        for (std::size_t i = span->consequent_begin; i < sent.tokens.size();
             ++i) {
            const Token& tok = sent.tokens[i];
            if (tok.pos != Pos::Verb) continue;
            clause.consequent_actions.push_back(
                {detail::capitalize(tok.lemma), sent.index, tok.index});
        }
        clauses.push_back(std::move(clause));
    }
    return clauses;
}

}  // namespace procmatch
