#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "procmatch/errors.hpp"

namespace procmatch {

// Reserved label prefix marking routing transitions with no business meaning.
inline constexpr std::string_view silent_prefix = "\xcf\x84:";  // "τ:"

inline bool is_silent_label(std::string_view label) {
    return label.starts_with(silent_prefix);
}

struct Transition {
    std::string id;
    std::string label;
    friend bool operator==(const Transition&, const Transition&) = default;
};

struct Arc {
    std::string from;
    std::string to;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// Workflow Petri net: places, labeled transitions, and arcs between the two
// kinds only.  Insertion order is preserved and serialization follows it.
class PetriNet {
public:
    PetriNet() = default;
    explicit PetriNet(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    void add_place(const std::string& id) {
        if (kind_.contains(id)) {
            throw duplicate_id_error("duplicate id: \"" + id + "\"");
        }
        kind_.emplace(id, Kind::Place);
        places_.push_back(id);
    }

    void add_transition(const std::string& id, const std::string& label) {
        if (kind_.contains(id)) {
            throw duplicate_id_error("duplicate id: \"" + id + "\"");
        }
        if (label.empty()) {
            throw error("transition \"" + id + "\" has an empty label");
        }
        kind_.emplace(id, Kind::Transition);
        transitions_.push_back({id, label});
    }

    void add_arc(const std::string& from, const std::string& to) {
        auto from_kind = kind_.find(from);
        auto to_kind = kind_.find(to);
        if (from_kind == kind_.end()) {
            throw bipartite_violation_error(
                "arc endpoint \"" + from + "\" is neither a place nor a transition");
        }
        if (to_kind == kind_.end()) {
            throw bipartite_violation_error(
                "arc endpoint \"" + to + "\" is neither a place nor a transition");
        }
        if (from_kind->second == to_kind->second) {
            throw bipartite_violation_error(
                "arc \"" + from + "\" -> \"" + to +
                "\" connects two nodes of the same kind");
        }
        for (const Arc& arc : arcs_) {
            if (arc.from == from && arc.to == to) {
                throw duplicate_id_error("duplicate arc: \"" + from +
                                         "\" -> \"" + to + "\"");
            }
        }
        arcs_.push_back({from, to});
        successors_[from].push_back(to);
        predecessors_[to].push_back(from);
    }

    const std::vector<std::string>& places() const { return places_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_place(const std::string& id) const {
        auto it = kind_.find(id);
        return it != kind_.end() && it->second == Kind::Place;
    }
    bool has_transition(const std::string& id) const {
        auto it = kind_.find(id);
        return it != kind_.end() && it->second == Kind::Transition;
    }

    const std::string& label_of(const std::string& transition_id) const {
        for (const Transition& t : transitions_) {
            if (t.id == transition_id) return t.label;
        }
        throw error("unknown transition: \"" + transition_id + "\"");
    }

    // Direct successors/predecessors (empty for unknown ids).
    const std::vector<std::string>& successors(const std::string& id) const {
        auto it = successors_.find(id);
        return it == successors_.end() ? empty_ : it->second;
    }
    const std::vector<std::string>& predecessors(const std::string& id) const {
        auto it = predecessors_.find(id);
        return it == predecessors_.end() ? empty_ : it->second;
    }

    std::size_t non_silent_transition_count() const {
        std::size_t n = 0;
        for (const Transition& t : transitions_) {
            if (!is_silent_label(t.label)) ++n;
        }
        return n;
    }

    friend bool operator==(const PetriNet& a, const PetriNet& b) {
        return a.name_ == b.name_ && a.places_ == b.places_ &&
               a.transitions_ == b.transitions_ && a.arcs_ == b.arcs_;
    }

private:
    enum class Kind { Place, Transition };

    std::string name_;
    std::vector<std::string> places_;
    std::vector<Transition> transitions_;
    std::vector<Arc> arcs_;
    std::unordered_map<std::string, Kind> kind_;
    std::unordered_map<std::string, std::vector<std::string>> successors_;
    std::unordered_map<std::string, std::vector<std::string>> predecessors_;
    inline static const std::vector<std::string> empty_;
};

// Token counts per place; places with zero tokens are not stored.
struct Marking {
    std::map<std::string, int> tokens;

    int count(const std::string& place) const {
        auto it = tokens.find(place);
        return it == tokens.end() ? 0 : it->second;
    }
    int total() const {
        int sum = 0;
        for (const auto& [_, n] : tokens) sum += n;
        return sum;
    }
    friend bool operator==(const Marking&, const Marking&) = default;
    friend auto operator<=>(const Marking& a, const Marking& b) {
        return a.tokens <=> b.tokens;
    }
};

struct WorkflowDiagnostics {
    bool is_workflow_net = false;
    std::optional<std::string> source;
    std::optional<std::string> sink;
    std::vector<std::string> violations;
};

// Check the workflow-net conditions: unique source place, unique sink place,
// and every node on some directed source-to-sink path.
inline WorkflowDiagnostics validate_workflow(const PetriNet& net) {
    WorkflowDiagnostics diag;
    std::vector<std::string> sources;
    std::vector<std::string> sinks;
    for (const std::string& p : net.places()) {
        if (net.predecessors(p).empty()) sources.push_back(p);
        if (net.successors(p).empty()) sinks.push_back(p);
    }
    auto list_ids = [](const std::vector<std::string>& ids) {
        std::string out;
        for (const std::string& id : ids) {
            if (!out.empty()) out += ", ";
            out += "\"" + id + "\"";
        }
        return out;
    };
    if (sources.empty()) {
        diag.violations.push_back("no source place: every place has incoming arcs");
    } else if (sources.size() > 1) {
        diag.violations.push_back("multiple source candidates: " +
                                  list_ids(sources));
    } else {
        diag.source = sources.front();
    }
    if (sinks.empty()) {
        diag.violations.push_back("no sink place: every place has outgoing arcs");
    } else if (sinks.size() > 1) {
        diag.violations.push_back("multiple sink candidates: " + list_ids(sinks));
    } else {
        diag.sink = sinks.front();
    }

    if (diag.source && diag.sink) {
        auto reach = [&](const std::string& start, bool forward) {
            std::unordered_set<std::string> seen{start};
            std::deque<std::string> queue{start};
            while (!queue.empty()) {
                std::string node = queue.front();
                queue.pop_front();
                const auto& next =
                    forward ? net.successors(node) : net.predecessors(node);
                for (const std::string& n : next) {
                    if (seen.insert(n).second) queue.push_back(n);
                }
            }
            return seen;
        };
        auto from_source = reach(*diag.source, true);
        auto to_sink = reach(*diag.sink, false);
        auto check_node = [&](const std::string& id) {
            if (!from_source.contains(id) || !to_sink.contains(id)) {
                diag.violations.push_back(
                    "node \"" + id + "\" lies on no source-to-sink path");
            }
        };
        for (const std::string& p : net.places()) check_node(p);
        for (const Transition& t : net.transitions()) check_node(t.id);
    }

    diag.is_workflow_net = diag.violations.empty();
    return diag;
}

// Transitions whose every input place holds at least one token, in the net's
// transition order.
inline std::vector<std::string> enabled(const PetriNet& net, const Marking& m) {
    std::vector<std::string> result;
    for (const Transition& t : net.transitions()) {
        bool ok = true;
        for (const std::string& p : net.predecessors(t.id)) {
            if (m.count(p) < 1) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(t.id);
    }
    return result;
}

// Fire transition `t`: consume one token per input place, produce one per
// output place.  The input marking is left untouched.
inline Marking fire(const PetriNet& net, const Marking& m,
                    const std::string& transition_id) {
    if (!net.has_transition(transition_id)) {
        throw not_enabled_error("unknown transition: \"" + transition_id + "\"");
    }
    for (const std::string& p : net.predecessors(transition_id)) {
        if (m.count(p) < 1) {
            throw not_enabled_error("transition \"" + transition_id +
                                    "\" is not enabled: place \"" + p +
                                    "\" is empty");
        }
    }
    Marking out = m;
    for (const std::string& p : net.predecessors(transition_id)) {
        auto it = out.tokens.find(p);
        if (--(it->second) == 0) out.tokens.erase(it);
    }
    for (const std::string& p : net.successors(transition_id)) {
        ++out.tokens[p];
    }
    return out;
}

// The standard workflow-net initial state: one token on the source place.
inline Marking initial_marking(const PetriNet& net) {
    WorkflowDiagnostics diag = validate_workflow(net);
    if (!diag.source) {
        throw not_workflow_net_error("net has no unique source place");
    }
    Marking m;
    m.tokens[*diag.source] = 1;
    return m;
}

enum class Soundness { Sound, Unsound, Inconclusive };

struct SoundnessReport {
    Soundness verdict = Soundness::Inconclusive;
    bool option_to_complete = false;   // meaningful only when conclusive
    bool proper_completion = false;    // meaningful only when conclusive
    std::vector<std::string> dead_transitions;
    std::size_t explored_markings = 0;
    bool hit_bound = false;
    std::vector<std::string> notes;
};

// Bounded soundness analysis from {source: 1}: option-to-complete, proper
// completion, and dead-transition detection over the reachability graph,
// reporting "inconclusive" when the marking bound is hit.
inline SoundnessReport check_soundness(const PetriNet& net,
                                       std::size_t bound = 10000) {
    WorkflowDiagnostics diag = validate_workflow(net);
    if (!diag.is_workflow_net) {
        std::string what = "not a workflow net:";
        for (const std::string& v : diag.violations) what += " " + v + ";";
        throw not_workflow_net_error(what);
    }
    const std::string sink = *diag.sink;

    SoundnessReport report;
    Marking start = initial_marking(net);
    Marking final_marking;
    final_marking.tokens[sink] = 1;

    std::map<Marking, std::size_t> index_of;  // marking -> node index
    std::vector<Marking> markings;
    std::vector<std::vector<std::size_t>> out_edges;
    std::unordered_set<std::string> fired;

    index_of.emplace(start, 0);
    markings.push_back(start);
    out_edges.emplace_back();
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        if (markings.size() > bound) {
            report.hit_bound = true;
            break;
        }
        std::size_t node = queue.front();
        queue.pop_front();
        Marking current = markings[node];
        for (const std::string& t : enabled(net, current)) {
            Marking next = fire(net, current, t);
            fired.insert(t);
            auto [it, inserted] = index_of.emplace(next, markings.size());
            if (inserted) {
                markings.push_back(next);
                out_edges.emplace_back();
                queue.push_back(it->second);
            }
            out_edges[node].push_back(it->second);
        }
    }
    report.explored_markings = markings.size();

    if (report.hit_bound) {
        report.verdict = Soundness::Inconclusive;
        report.notes.push_back("marking bound of " + std::to_string(bound) +
                               " hit; verdict inconclusive");
        return report;
    }

    // Proper completion: a token on the sink means the marking is exactly
    // {sink: 1}.
    report.proper_completion = true;
    for (const Marking& m : markings) {
        int on_sink = m.count(sink);
        if (on_sink >= 1 && (on_sink > 1 || m.total() > on_sink)) {
            report.proper_completion = false;
            break;
        }
    }

    // Option to complete: every explored marking reaches the final marking.
    std::vector<std::vector<std::size_t>> in_edges(markings.size());
    for (std::size_t from = 0; from < out_edges.size(); ++from) {
        for (std::size_t to : out_edges[from]) in_edges[to].push_back(from);
    }
    std::vector<bool> reaches_final(markings.size(), false);
    auto final_it = index_of.find(final_marking);
    if (final_it != index_of.end()) {
        std::deque<std::size_t> back{final_it->second};
        reaches_final[final_it->second] = true;
        while (!back.empty()) {
            std::size_t node = back.front();
            back.pop_front();
            for (std::size_t prev : in_edges[node]) {
                if (!reaches_final[prev]) {
                    reaches_final[prev] = true;
                    back.push_back(prev);
                }
            }
        }
    }
    report.option_to_complete =
        std::all_of(reaches_final.begin(), reaches_final.end(),
                    [](bool b) { return b; });

    for (const Transition& t : net.transitions()) {
        if (!fired.contains(t.id)) report.dead_transitions.push_back(t.id);
    }

    bool sound = report.option_to_complete && report.proper_completion &&
                 report.dead_transitions.empty();
    report.verdict = sound ? Soundness::Sound : Soundness::Unsound;
    return report;
}

}  // namespace procmatch
