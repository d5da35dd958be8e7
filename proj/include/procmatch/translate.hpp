#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "procmatch/errors.hpp"
#include "procmatch/lexicon.hpp"
#include "procmatch/nlp.hpp"
#include "procmatch/petri.hpp"

namespace procmatch {

struct TranslationResult {
    PetriNet net;
    // Transition id -> originating action, for every non-silent transition.
    std::map<std::string, ActionPhrase> action_map;
    // Branch-entry transition id -> guard text of its condition.
    std::map<std::string, std::string> branch_guards;
    std::vector<std::string> warnings;
};

namespace detail {

// A sentence prepared for net construction: its actions split into the part
// that belongs to the sequential flow (everything outside a consequent) and
// the conditional consequent, if any.
struct SentencePlan {
    std::vector<ActionPhrase> sequential_actions;
    std::optional<ConditionClause> condition;
};

inline std::vector<SentencePlan> plan_sentences(
    const std::vector<Sentence>& sentences) {
    std::vector<SentencePlan> plans;
    for (const Sentence& sent : sentences) {
        SentencePlan plan;
        auto span = find_condition(sent);
        std::size_t consequent_begin =
            span ? span->consequent_begin : sent.tokens.size();
        for (const Token& tok : sent.tokens) {
            if (tok.pos != Pos::Verb) continue;
            if (!span || tok.index < consequent_begin) {
                plan.sequential_actions.push_back(
                    {capitalize(tok.lemma), sent.index, tok.index});
            }
        }
        if (span) {
            ConditionClause clause;
            clause.sentence_index = sent.index;
            clause.guard =
                join_tokens(sent.tokens, span->guard_begin, span->guard_end);
            for (std::size_t i = span->consequent_begin;
                 i < sent.tokens.size(); ++i) {
                const Token& tok = sent.tokens[i];
                if (tok.pos != Pos::Verb) continue;
                clause.consequent_actions.push_back(
                    {capitalize(tok.lemma), sent.index, tok.index});
            }
            plan.condition = std::move(clause);
        }
        plans.push_back(std::move(plan));
    }
    return plans;
}

}  // namespace detail

// Build a workflow Petri net from a process description: sequential sentences
// chain place -> transition -> place; a run of consecutive conditional
// sentences becomes one decision place whose branches (one per condition)
// converge on a single merge place.  Actions written before a sentence's
// consequent (including guard verbs) join the sequential flow ahead of the
// split.  A lone conditional gets a silent else branch; an action-free
// consequent becomes a silent skip branch.
inline TranslationResult translate(std::string_view text,
                                   const Lexicon& lex = Lexicon::builtin()) {
    if (text.empty()) {
        throw empty_actions_error("no actions extracted: text is empty");
    }
    const std::vector<Sentence> sentences = split_sentences(text, lex);
    const auto plans = detail::plan_sentences(sentences);

    bool any_action = false;
    for (const auto& plan : plans) {
        if (!plan.sequential_actions.empty() ||
            (plan.condition && !plan.condition->consequent_actions.empty())) {
            any_action = true;
        }
    }
    if (!any_action) {
        throw empty_actions_error("no actions extracted: text contains no verb");
    }

    TranslationResult result;
    PetriNet& net = result.net;
    std::size_t next_place = 0;
    std::size_t next_transition = 0;
    auto fresh_place = [&]() {
        std::string id = "p" + std::to_string(next_place++);
        net.add_place(id);
        return id;
    };
    auto fresh_transition = [&](const std::string& label) {
        std::string id = "t" + std::to_string(next_transition++);
        net.add_transition(id, label);
        return id;
    };

    std::string current = fresh_place();  // p0, the source

    auto chain_action = [&](const ActionPhrase& action) {
        std::string t = fresh_transition(action.label);
        result.action_map.emplace(t, action);
        net.add_arc(current, t);
        current = fresh_place();
        net.add_arc(t, current);
    };

    std::size_t i = 0;
    while (i < plans.size()) {
        if (!plans[i].condition) {
            for (const ActionPhrase& action : plans[i].sequential_actions) {
                chain_action(action);
            }
            ++i;
            continue;
        }
        // Maximal run of consecutive conditional sentences: one decision.
        std::size_t group_end = i;
        while (group_end < plans.size() && plans[group_end].condition) {
            ++group_end;
        }
        for (std::size_t s = i; s < group_end; ++s) {
            for (const ActionPhrase& action : plans[s].sequential_actions) {
                chain_action(action);
            }
        }
        const std::string decision = current;
        const std::string merge = fresh_place();
        for (std::size_t s = i; s < group_end; ++s) {
            const ConditionClause& clause = *plans[s].condition;
            if (clause.consequent_actions.empty()) {
                std::string t = fresh_transition(std::string(silent_prefix) +
                                                 "skip");
                result.branch_guards.emplace(t, clause.guard);
                net.add_arc(decision, t);
                net.add_arc(t, merge);
                result.warnings.push_back(
                    "condition \"" + clause.guard +
                    "\" has no actions; inserted a silent skip branch");
                continue;
            }
            std::string branch_place;
            for (std::size_t a = 0; a < clause.consequent_actions.size(); ++a) {
                const ActionPhrase& action = clause.consequent_actions[a];
                std::string t = fresh_transition(action.label);
                result.action_map.emplace(t, action);
                if (a == 0) {
                    result.branch_guards.emplace(t, clause.guard);
                    net.add_arc(decision, t);
                } else {
                    net.add_arc(branch_place, t);
                }
                if (a + 1 == clause.consequent_actions.size()) {
                    net.add_arc(t, merge);
                } else {
                    branch_place = fresh_place();
                    net.add_arc(t, branch_place);
                }
            }
        }
        if (group_end - i == 1) {
            std::string t = fresh_transition(std::string(silent_prefix) +
                                             "else");
            net.add_arc(decision, t);
            net.add_arc(t, merge);
            result.warnings.push_back(
                "single conditional sentence; added a silent else branch");
        }
        current = merge;
        i = group_end;
    }

    return result;
}

}  // namespace procmatch
