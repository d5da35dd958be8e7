#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "procmatch/lexicon_data.hpp"

namespace procmatch {

// Verb lexicon: inflected form -> lemma, plus an irregular-verb table that is
// consulted first during lemmatization.  Both are loaded from TSV text
// (`form<TAB>lemma`, one entry per line).
class Lexicon {
public:
    // Parse a lexicon from TSV text. Blank lines are skipped; entries with a
    // later duplicate form keep the last mapping.
    static Lexicon from_tsv(std::string_view verb_tsv,
                            std::string_view irregular_tsv) {
        Lexicon lex;
        parse_into(verb_tsv, lex.verb_forms_);
        parse_into(irregular_tsv, lex.irregular_forms_);
        for (const auto& [form, lemma] : lex.verb_forms_) {
            lex.lemmas_.insert(lemma);
        }
        return lex;
    }

    // The lexicon compiled into the library (from data/verb_lexicon.tsv and
    // data/irregular_verbs.tsv).
    static const Lexicon& builtin() {
        static const Lexicon lex = from_tsv(detail::verb_lexicon_tsv,
                                            detail::irregular_verbs_tsv);
        return lex;
    }

    // Exact lookup of a lowercase inflected form in the verb lexicon.
    std::optional<std::string> verb_lemma(std::string_view form) const {
        auto it = verb_forms_.find(std::string(form));
        if (it == verb_forms_.end()) return std::nullopt;
        return it->second;
    }

    bool is_verb_form(std::string_view form) const {
        return verb_forms_.contains(std::string(form));
    }

    // Exact lookup in the irregular-verb table ("was" -> "be", ...).
    std::optional<std::string> irregular_lemma(std::string_view form) const {
        auto it = irregular_forms_.find(std::string(form));
        if (it == irregular_forms_.end()) return std::nullopt;
        return it->second;
    }

    // Whether `word` is a known lemma (a value of the verb lexicon). Used for
    // silent-e restoration when stripping -ed/-ing suffixes.
    bool is_known_lemma(std::string_view word) const {
        return lemmas_.contains(std::string(word));
    }

    std::size_t verb_form_count() const { return verb_forms_.size(); }
    std::size_t irregular_count() const { return irregular_forms_.size(); }

private:
    static void parse_into(std::string_view tsv,
                           std::unordered_map<std::string, std::string>& out) {
        std::size_t pos = 0;
        while (pos <= tsv.size()) {
            std::size_t eol = tsv.find('\n', pos);
            std::string_view line = tsv.substr(
                pos, eol == std::string_view::npos ? tsv.size() - pos
                                                   : eol - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty()) {
                std::size_t tab = line.find('\t');
                if (tab != std::string_view::npos) {
                    std::string form(line.substr(0, tab));
                    std::string lemma(line.substr(tab + 1));
                    if (!form.empty() && !lemma.empty()) {
                        out[std::move(form)] = std::move(lemma);
                    }
                }
            }
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
    }

    std::unordered_map<std::string, std::string> verb_forms_;
    std::unordered_map<std::string, std::string> irregular_forms_;
    std::unordered_set<std::string> lemmas_;
};

}  // namespace procmatch
