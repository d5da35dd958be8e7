#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "procmatch/errors.hpp"
#include "procmatch/matcher.hpp"
#include "procmatch/petri.hpp"

namespace procmatch {

inline constexpr std::string_view net_schema_version = "1";

// --- Serialization to the versioned *.net.json document ---

inline nlohmann::ordered_json to_json(
    const PetriNet& net, const std::optional<Marking>& marking = std::nullopt) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = std::string(net_schema_version);
    doc["name"] = net.name();
    doc["places"] = net.places();
    doc["transitions"] = nlohmann::ordered_json::array();
    for (const Transition& t : net.transitions()) {
        doc["transitions"].push_back({{"id", t.id}, {"label", t.label}});
    }
    doc["arcs"] = nlohmann::ordered_json::array();
    for (const Arc& arc : net.arcs()) {
        doc["arcs"].push_back({{"from", arc.from}, {"to", arc.to}});
    }
    if (marking) {
        nlohmann::ordered_json tokens = nlohmann::ordered_json::object();
        for (const auto& [place, count] : marking->tokens) {
            tokens[place] = count;  // std::map iteration: sorted by place id
        }
        doc["initial_marking"] = std::move(tokens);
    }
    return doc;
}

inline std::string to_json_string(
    const PetriNet& net, const std::optional<Marking>& marking = std::nullopt) {
    return to_json(net, marking).dump(2) + "\n";
}

inline void save_net(const PetriNet& net, const std::string& path,
                     const std::optional<Marking>& marking = std::nullopt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw error("cannot open file for writing: " + path);
    }
    out << to_json_string(net, marking);
    if (!out) {
        throw error("failed to write net document: " + path);
    }
}

// --- Deserialization with schema validation ---

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& doc,
                                           const char* key,
                                           const std::string& location) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw schema_violation_error(
            "missing field \"" + std::string(key) + "\" at " + location + key,
            location + key);
    }
    return *it;
}

inline std::string require_string(const nlohmann::json& value,
                                  const std::string& location) {
    if (!value.is_string()) {
        throw schema_violation_error("expected a string at " + location,
                                     location);
    }
    return value.get<std::string>();
}

}  // namespace detail

inline std::pair<PetriNet, std::optional<Marking>> net_from_json(
    const nlohmann::json& doc) {
    using detail::require_field;
    using detail::require_string;

    if (!doc.is_object()) {
        throw schema_violation_error("net document must be a JSON object", "/");
    }
    std::string version =
        require_string(require_field(doc, "schema_version", "/"),
                       "/schema_version");
    if (version != net_schema_version) {
        throw schema_version_unsupported_error(
            "unsupported schema_version \"" + version + "\"; this build reads \"" +
            std::string(net_schema_version) + "\"");
    }

    PetriNet net;
    if (auto it = doc.find("name"); it != doc.end()) {
        net.set_name(require_string(*it, "/name"));
    }

    const nlohmann::json& places = require_field(doc, "places", "/");
    if (!places.is_array()) {
        throw schema_violation_error("\"places\" must be an array", "/places");
    }
    for (std::size_t i = 0; i < places.size(); ++i) {
        std::string location = "/places/" + std::to_string(i);
        std::string id = require_string(places[i], location);
        try {
            net.add_place(id);
        } catch (const duplicate_id_error& e) {
            throw schema_violation_error(e.what(), location);
        }
    }

    const nlohmann::json& transitions = require_field(doc, "transitions", "/");
    if (!transitions.is_array()) {
        throw schema_violation_error("\"transitions\" must be an array",
                                     "/transitions");
    }
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        std::string location = "/transitions/" + std::to_string(i);
        const nlohmann::json& entry = transitions[i];
        if (!entry.is_object()) {
            throw schema_violation_error("expected an object at " + location,
                                         location);
        }
        std::string id = require_string(
            require_field(entry, "id", location + "/"), location + "/id");
        std::string label = require_string(
            require_field(entry, "label", location + "/"), location + "/label");
        if (label.empty()) {
            throw schema_violation_error("transition label must be nonempty",
                                         location + "/label");
        }
        try {
            net.add_transition(id, label);
        } catch (const duplicate_id_error& e) {
            throw schema_violation_error(e.what(), location + "/id");
        }
    }

    const nlohmann::json& arcs = require_field(doc, "arcs", "/");
    if (!arcs.is_array()) {
        throw schema_violation_error("\"arcs\" must be an array", "/arcs");
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        std::string location = "/arcs/" + std::to_string(i);
        const nlohmann::json& entry = arcs[i];
        if (!entry.is_object()) {
            throw schema_violation_error("expected an object at " + location,
                                         location);
        }
        std::string from = require_string(
            require_field(entry, "from", location + "/"), location + "/from");
        std::string to = require_string(
            require_field(entry, "to", location + "/"), location + "/to");
        if (!net.has_place(from) && !net.has_transition(from)) {
            throw schema_violation_error(
                "arc endpoint \"" + from + "\" is not declared",
                location + "/from");
        }
        if (!net.has_place(to) && !net.has_transition(to)) {
            throw schema_violation_error(
                "arc endpoint \"" + to + "\" is not declared", location + "/to");
        }
        try {
            net.add_arc(from, to);
        } catch (const error& e) {
            throw schema_violation_error(e.what(), location);
        }
    }

    std::optional<Marking> marking;
    if (auto it = doc.find("initial_marking"); it != doc.end()) {
        if (!it->is_object()) {
            throw schema_violation_error("\"initial_marking\" must be an object",
                                         "/initial_marking");
        }
        Marking m;
        for (const auto& [place, count] : it->items()) {
            std::string location = "/initial_marking/" + place;
            if (!net.has_place(place)) {
                throw schema_violation_error(
                    "marking references unknown place \"" + place + "\"",
                    location);
            }
            if (!count.is_number_integer() || count.get<long long>() < 0) {
                throw schema_violation_error(
                    "token count must be a nonnegative integer", location);
            }
            int n = count.get<int>();
            if (n > 0) m.tokens[place] = n;
        }
        marking = std::move(m);
    }
    return {std::move(net), std::move(marking)};
}

inline std::pair<PetriNet, std::optional<Marking>> net_from_json_string(
    std::string_view content) {
    nlohmann::json doc =
        nlohmann::json::parse(content, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        throw schema_violation_error("net document is not valid JSON", "/");
    }
    return net_from_json(doc);
}

inline std::pair<PetriNet, std::optional<Marking>> load_net(
    const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw error("cannot open net document: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return net_from_json_string(buffer.str());
}

// --- Reference library loading ---

struct ReferenceLibrary {
    std::vector<PetriNet> nets;
    std::vector<std::string> errors;  // one "<filename>: <message>" per failure
};

// Load every *.net.json in the directory in filename order.  Files that fail
// to load are reported in `errors`; the rest load normally.  A net with no
// name in its document is named after the filename stem.
inline ReferenceLibrary load_reference_library(const std::string& directory) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(directory)) {
        throw error("not a directory: " + directory);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        const std::string filename = entry.path().filename().string();
        if (filename.ends_with(".net.json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    ReferenceLibrary library;
    for (const fs::path& file : files) {
        const std::string filename = file.filename().string();
        try {
            auto [net, marking] = load_net(file.string());
            if (net.name().empty()) {
                net.set_name(
                    filename.substr(0, filename.size() - std::string(".net.json").size()));
            }
            library.nets.push_back(std::move(net));
        } catch (const error& e) {
            library.errors.push_back(filename + ": " + e.what());
        }
    }
    return library;
}

// --- DOT export ---

namespace detail {

inline std::string dot_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace detail

// Render the net as a DOT digraph: places as circles, transitions as boxes,
// silent transitions filled.  With an alignment, matched transitions carry
// their pair's score in the node label.
inline std::string export_dot(const PetriNet& net,
                              const TaskAlignment* alignment = nullptr) {
    std::ostringstream out;
    out << "digraph \"" << detail::dot_escape(net.name()) << "\" {\n";
    out << "  rankdir=LR;\n";
    for (const std::string& place : net.places()) {
        out << "  \"" << detail::dot_escape(place)
            << "\" [shape=circle, label=\"" << detail::dot_escape(place)
            << "\"];\n";
    }
    for (const Transition& t : net.transitions()) {
        std::string label = t.label;
        if (alignment) {
            for (const AlignedPair& pair : alignment->pairs) {
                if (pair.business_id == t.id || pair.reference_id == t.id) {
                    std::ostringstream score;
                    score.precision(3);
                    score << std::fixed << pair.score;
                    label += " (" + score.str() + ")";
                    break;
                }
            }
        }
        out << "  \"" << detail::dot_escape(t.id) << "\" [shape=box";
        if (is_silent_label(t.label)) {
            out << ", style=filled, fillcolor=lightgray";
        }
        out << ", label=\"" << detail::dot_escape(label) << "\"];\n";
    }
    for (const Arc& arc : net.arcs()) {
        out << "  \"" << detail::dot_escape(arc.from) << "\" -> \""
            << detail::dot_escape(arc.to) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace procmatch
