#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "procmatch/embeddings.hpp"
#include "procmatch/petri.hpp"

namespace procmatch {

struct AlignedPair {
    std::string business_id;
    std::string reference_id;
    double score = 0.0;
    friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

// Injective pairing between the non-silent transitions of two nets.
struct TaskAlignment {
    std::vector<AlignedPair> pairs;
    std::vector<std::string> unmatched_business;
    std::vector<std::string> unmatched_reference;
    double threshold = 0.7;
};

struct MatchReport {
    double embedding_similarity = 0.0;
    double structure_similarity = 0.0;
    double combined = 0.0;
    TaskAlignment alignment;
    std::string business_name;
    std::string reference_name;
};

namespace detail {

inline std::vector<const Transition*> non_silent(const PetriNet& net) {
    std::vector<const Transition*> out;
    for (const Transition& t : net.transitions()) {
        if (!is_silent_label(t.label)) out.push_back(&t);
    }
    return out;
}

}  // namespace detail

// Pair business and reference transitions by label-vector cosine: candidates
// at or above the threshold are taken greedily in descending score order,
// ties broken by (business id, reference id).
inline TaskAlignment align_tasks(const PetriNet& business,
                                 const PetriNet& reference,
                                 const EmbeddingTable& table,
                                 double threshold = 0.7) {
    if (threshold < 0.0 || threshold > 1.0) {
        throw std::invalid_argument("threshold must lie in [0, 1]");
    }
    TaskAlignment alignment;
    alignment.threshold = threshold;

    const auto business_tasks = detail::non_silent(business);
    const auto reference_tasks = detail::non_silent(reference);

    std::vector<LabelVector> business_vecs;
    business_vecs.reserve(business_tasks.size());
    for (const Transition* t : business_tasks) {
        business_vecs.push_back(embed_label(t->label, table));
    }
    std::vector<LabelVector> reference_vecs;
    reference_vecs.reserve(reference_tasks.size());
    for (const Transition* t : reference_tasks) {
        reference_vecs.push_back(embed_label(t->label, table));
    }

    struct Candidate {
        double score;
        std::size_t business_index;
        std::size_t reference_index;
    };
    std::vector<Candidate> candidates;
    for (std::size_t b = 0; b < business_tasks.size(); ++b) {
        for (std::size_t r = 0; r < reference_tasks.size(); ++r) {
            double score = cosine(business_vecs[b], reference_vecs[r]);
            if (score >= threshold) candidates.push_back({score, b, r});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](const Candidate& a, const Candidate& b) {
                  if (a.score != b.score) return a.score > b.score;
                  const std::string& a_bid =
                      business_tasks[a.business_index]->id;
                  const std::string& b_bid =
                      business_tasks[b.business_index]->id;
                  if (a_bid != b_bid) return a_bid < b_bid;
                  return reference_tasks[a.reference_index]->id <
                         reference_tasks[b.reference_index]->id;
              });

    std::vector<bool> business_used(business_tasks.size(), false);
    std::vector<bool> reference_used(reference_tasks.size(), false);
    for (const Candidate& c : candidates) {
        if (business_used[c.business_index] || reference_used[c.reference_index]) {
            continue;
        }
        business_used[c.business_index] = true;
        reference_used[c.reference_index] = true;
        alignment.pairs.push_back({business_tasks[c.business_index]->id,
                                   reference_tasks[c.reference_index]->id,
                                   c.score});
    }
    for (std::size_t b = 0; b < business_tasks.size(); ++b) {
        if (!business_used[b]) {
            alignment.unmatched_business.push_back(business_tasks[b]->id);
        }
    }
    for (std::size_t r = 0; r < reference_tasks.size(); ++r) {
        if (!reference_used[r]) {
            alignment.unmatched_reference.push_back(reference_tasks[r]->id);
        }
    }
    return alignment;
}

// Sum of pair scores over the larger non-silent transition count; 1.0 when
// both nets carry no non-silent transitions.
inline double embedding_similarity(const TaskAlignment& alignment,
                                   const PetriNet& business,
                                   const PetriNet& reference) {
    std::size_t denom = std::max(business.non_silent_transition_count(),
                                 reference.non_silent_transition_count());
    if (denom == 0) return 1.0;
    double sum = 0.0;
    for (const AlignedPair& pair : alignment.pairs) sum += pair.score;
    double value = sum / static_cast<double>(denom);
    if (value > 1.0) value = 1.0;
    if (value < 0.0) value = 0.0;
    return value;
}

namespace detail {

// Ordered pairs of transitions connected through exactly one intermediate
// place: t1 -> p -> t2 for some place p.
inline std::set<std::pair<std::string, std::string>> causally_follows(
    const PetriNet& net) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const Transition& t1 : net.transitions()) {
        for (const std::string& place : net.successors(t1.id)) {
            for (const std::string& t2 : net.successors(place)) {
                pairs.emplace(t1.id, t2);
            }
        }
    }
    return pairs;
}

}  // namespace detail

// Average of node ratio (matched pairs over the larger non-silent transition
// count; 1.0 when both are empty) and edge ratio (fraction of matched
// causally-follows pairs preserved by the alignment; vacuously 1.0).
inline double structure_similarity(const PetriNet& business,
                                   const PetriNet& reference,
                                   const TaskAlignment& alignment) {
    std::size_t denom = std::max(business.non_silent_transition_count(),
                                 reference.non_silent_transition_count());
    double node_ratio =
        denom == 0
            ? 1.0
            : static_cast<double>(alignment.pairs.size()) /
                  static_cast<double>(denom);

    std::unordered_map<std::string, std::string> mapped;
    for (const AlignedPair& pair : alignment.pairs) {
        mapped.emplace(pair.business_id, pair.reference_id);
    }
    const auto business_follows = detail::causally_follows(business);
    const auto reference_follows = detail::causally_follows(reference);
    std::size_t matched_edges = 0;
    std::size_t preserved_edges = 0;
    for (const auto& [t1, t2] : business_follows) {
        auto m1 = mapped.find(t1);
        auto m2 = mapped.find(t2);
        if (m1 == mapped.end() || m2 == mapped.end()) continue;
        ++matched_edges;
        if (reference_follows.contains({m1->second, m2->second})) {
            ++preserved_edges;
        }
    }
    double edge_ratio = matched_edges == 0
                            ? 1.0
                            : static_cast<double>(preserved_edges) /
                                  static_cast<double>(matched_edges);
    return 0.5 * node_ratio + 0.5 * edge_ratio;
}

// Full comparison: alignment, both similarity scores, and their weighted
// combination `w * embedding + (1 - w) * structure`.
inline MatchReport match(const PetriNet& business, const PetriNet& reference,
                         const EmbeddingTable& table, double weight = 0.5,
                         double threshold = 0.7) {
    if (weight < 0.0 || weight > 1.0) {
        throw std::invalid_argument("weight must lie in [0, 1]");
    }
    MatchReport report;
    report.business_name = business.name();
    report.reference_name = reference.name();
    report.alignment = align_tasks(business, reference, table, threshold);
    report.embedding_similarity =
        embedding_similarity(report.alignment, business, reference);
    report.structure_similarity =
        structure_similarity(business, reference, report.alignment);
    report.combined = weight * report.embedding_similarity +
                      (1.0 - weight) * report.structure_similarity;
    return report;
}

// Match against every reference and sort by combined score descending, then
// embedding similarity descending, then reference name ascending.
inline std::vector<MatchReport> rank_references(
    const PetriNet& business, const std::vector<PetriNet>& references,
    const EmbeddingTable& table, double weight = 0.5, double threshold = 0.7) {
    std::vector<MatchReport> reports;
    reports.reserve(references.size());
    for (const PetriNet& reference : references) {
        reports.push_back(match(business, reference, table, weight, threshold));
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const MatchReport& a, const MatchReport& b) {
                         if (a.combined != b.combined) {
                             return a.combined > b.combined;
                         }
                         if (a.embedding_similarity != b.embedding_similarity) {
                             return a.embedding_similarity >
                                    b.embedding_similarity;
                         }
                         return a.reference_name < b.reference_name;
                     });
    return reports;
}

}  // namespace procmatch
