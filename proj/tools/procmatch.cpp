// procmatch: translate plain-text process descriptions into workflow Petri
// nets and match them against ERP reference models.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 inconclusive
// soundness verdict.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "procmatch/procmatch.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain_error = 1;
constexpr int exit_usage_error = 2;
constexpr int exit_inconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw procmatch::error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw procmatch::error("cannot open file for writing: " + path);
    }
    out << content;
    if (!out) {
        throw procmatch::error("failed to write file: " + path);
    }
}

std::string stem_of(const std::string& path) {
    std::string name = std::filesystem::path(path).filename().string();
    for (std::string_view suffix : {".net.json", ".txt"}) {
        if (name.size() > suffix.size() && name.ends_with(suffix)) {
            return name.substr(0, name.size() - suffix.size());
        }
    }
    std::string stem = std::filesystem::path(name).stem().string();
    return stem.empty() ? name : stem;
}

std::string fmt(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << value;
    return out.str();
}

struct EmbeddingsOption {
    std::string path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--embeddings", path,
                        "Embeddings text file (word f1 ... fd per line); "
                        "defaults to $PROCMATCH_EMBEDDINGS")
            ->envname("PROCMATCH_EMBEDDINGS");
    }

    procmatch::EmbeddingTable load() const {
        if (path.empty()) {
            throw CLI::ValidationError(
                "--embeddings",
                "no embeddings file given and PROCMATCH_EMBEDDINGS is unset");
        }
        return procmatch::load_embeddings(path);
    }
};

nlohmann::ordered_json report_to_json(const procmatch::MatchReport& report,
                                      double weight) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = "1";
    doc["business"] = report.business_name;
    doc["reference"] = report.reference_name;
    doc["embedding_similarity"] = report.embedding_similarity;
    doc["structure_similarity"] = report.structure_similarity;
    doc["combined"] = report.combined;
    doc["weight"] = weight;
    doc["threshold"] = report.alignment.threshold;
    doc["pairs"] = nlohmann::ordered_json::array();
    for (const procmatch::AlignedPair& pair : report.alignment.pairs) {
        doc["pairs"].push_back({{"business", pair.business_id},
                                {"reference", pair.reference_id},
                                {"score", pair.score}});
    }
    doc["unmatched_business"] = report.alignment.unmatched_business;
    doc["unmatched_reference"] = report.alignment.unmatched_reference;
    return doc;
}

void print_report_human(const procmatch::MatchReport& report,
                        const procmatch::PetriNet& business,
                        const procmatch::PetriNet& reference) {
    std::cout << "business:             " << report.business_name << "\n";
    std::cout << "reference:            " << report.reference_name << "\n";
    std::cout << "embedding similarity: " << fmt(report.embedding_similarity)
              << "\n";
    std::cout << "structure similarity: " << fmt(report.structure_similarity)
              << "\n";
    std::cout << "combined:             " << fmt(report.combined) << "\n";
    std::cout << "pairs (threshold " << fmt(report.alignment.threshold)
              << "):\n";
    if (report.alignment.pairs.empty()) {
        std::cout << "  (none)\n";
    }
    for (const procmatch::AlignedPair& pair : report.alignment.pairs) {
        std::cout << "  " << pair.business_id << " \""
                  << business.label_of(pair.business_id) << "\" ~ "
                  << pair.reference_id << " \""
                  << reference.label_of(pair.reference_id) << "\"  "
                  << fmt(pair.score) << "\n";
    }
    auto print_unmatched = [](const char* side,
                              const std::vector<std::string>& ids) {
        std::cout << "unmatched " << side << ":";
        if (ids.empty()) {
            std::cout << " (none)";
        }
        for (const std::string& id : ids) std::cout << " " << id;
        std::cout << "\n";
    };
    print_unmatched("business", report.alignment.unmatched_business);
    print_unmatched("reference", report.alignment.unmatched_reference);
}

int run_translate(const std::string& input, const std::string& out_path,
                  const std::string& dot_path, const std::string& name) {
    std::string text = read_file(input);
    procmatch::TranslationResult result = procmatch::translate(text);
    result.net.set_name(name.empty() ? stem_of(input) : name);

    for (const std::string& warning : result.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    std::cerr << result.net.transitions().size() << " transitions ("
              << result.net.non_silent_transition_count() << " labeled), "
              << result.net.places().size() << " places\n";
    for (const auto& [tid, guard] : result.branch_guards) {
        std::cerr << "branch " << tid << " \"" << result.net.label_of(tid)
                  << "\" guarded by: " << guard << "\n";
    }

    std::string document = procmatch::to_json_string(result.net);
    if (out_path.empty()) {
        std::cout << document;
    } else {
        write_file(out_path, document);
        std::cout << "wrote " << out_path << "\n";
    }
    if (!dot_path.empty()) {
        write_file(dot_path, procmatch::export_dot(result.net));
        std::cout << "wrote " << dot_path << "\n";
    }
    return exit_ok;
}

int run_match(const std::string& business_path,
              const std::string& reference_path,
              const EmbeddingsOption& embeddings, double weight,
              double threshold, bool as_json) {
    procmatch::EmbeddingTable table = embeddings.load();
    if (table.duplicate_count() > 0) {
        std::cerr << "note: " << table.duplicate_count()
                  << " duplicate embedding entries (last occurrence kept)\n";
    }
    auto [business, business_marking] = procmatch::load_net(business_path);
    if (business.name().empty()) business.set_name(stem_of(business_path));
    auto [reference, reference_marking] = procmatch::load_net(reference_path);
    if (reference.name().empty()) reference.set_name(stem_of(reference_path));

    procmatch::MatchReport report =
        procmatch::match(business, reference, table, weight, threshold);
    if (as_json) {
        std::cout << report_to_json(report, weight).dump(2) << "\n";
    } else {
        print_report_human(report, business, reference);
    }
    return exit_ok;
}

int run_rank(const std::string& business_path, const std::string& refs_dir,
             const EmbeddingsOption& embeddings, double weight,
             double threshold, std::size_t top, bool as_json) {
    procmatch::EmbeddingTable table = embeddings.load();
    auto [business, marking] = procmatch::load_net(business_path);
    if (business.name().empty()) business.set_name(stem_of(business_path));

    procmatch::ReferenceLibrary library =
        procmatch::load_reference_library(refs_dir);
    for (const std::string& problem : library.errors) {
        std::cerr << "warning: skipped reference " << problem << "\n";
    }
    if (library.nets.empty()) {
        std::cerr << "error: no reference models loaded from " << refs_dir
                  << "\n";
        return exit_domain_error;
    }

    std::vector<procmatch::MatchReport> reports = procmatch::rank_references(
        business, library.nets, table, weight, threshold);
    if (top > 0 && top < reports.size()) reports.resize(top);

    if (as_json) {
        nlohmann::ordered_json doc;
        doc["schema_version"] = "1";
        doc["business"] = business.name();
        doc["weight"] = weight;
        doc["threshold"] = threshold;
        doc["reports"] = nlohmann::ordered_json::array();
        for (const procmatch::MatchReport& report : reports) {
            doc["reports"].push_back(
                {{"reference", report.reference_name},
                 {"embedding_similarity", report.embedding_similarity},
                 {"structure_similarity", report.structure_similarity},
                 {"combined", report.combined}});
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "rank  combined  embedding  structure  reference\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const procmatch::MatchReport& report = reports[i];
            std::cout << std::left << std::setw(6) << (i + 1) << std::setw(10)
                      << fmt(report.combined) << std::setw(11)
                      << fmt(report.embedding_similarity) << std::setw(11)
                      << fmt(report.structure_similarity)
                      << report.reference_name << "\n";
        }
    }
    return exit_ok;
}

int run_check(const std::string& net_path, std::size_t bound) {
    auto [net, marking] = procmatch::load_net(net_path);
    if (net.name().empty()) net.set_name(stem_of(net_path));

    procmatch::WorkflowDiagnostics diag = procmatch::validate_workflow(net);
    if (!diag.is_workflow_net) {
        std::cout << "workflow net: no\n";
        for (const std::string& violation : diag.violations) {
            std::cout << "  violation: " << violation << "\n";
        }
        return exit_domain_error;
    }
    std::cout << "workflow net: yes (source " << *diag.source << ", sink "
              << *diag.sink << ")\n";

    procmatch::SoundnessReport report = procmatch::check_soundness(net, bound);
    std::cout << "explored markings: " << report.explored_markings << "\n";
    switch (report.verdict) {
        case procmatch::Soundness::Sound:
            std::cout << "soundness: sound\n";
            return exit_ok;
        case procmatch::Soundness::Inconclusive:
            std::cout << "soundness: inconclusive (bound " << bound
                      << " hit)\n";
            return exit_inconclusive;
        case procmatch::Soundness::Unsound:
            std::cout << "soundness: unsound\n";
            if (!report.option_to_complete) {
                std::cout << "  completion is not always reachable\n";
            }
            if (!report.proper_completion) {
                std::cout << "  improper completion: tokens can remain when "
                             "the sink is marked\n";
            }
            for (const std::string& t : report.dead_transitions) {
                std::cout << "  dead transition: " << t << " \""
                          << net.label_of(t) << "\"\n";
            }
            return exit_domain_error;
    }
    return exit_domain_error;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Translate plain-text business-process descriptions into workflow "
        "Petri nets and match them against ERP reference models"};
    app.require_subcommand(1);

    // translate
    auto* translate = app.add_subcommand(
        "translate", "Build a workflow net from a process description");
    std::string translate_input;
    std::string translate_out;
    std::string translate_dot;
    std::string translate_name;
    translate->add_option("input", translate_input, "Process description text file")
        ->required()
        ->check(CLI::ExistingFile);
    translate->add_option("--out", translate_out,
                          "Write the net document here instead of stdout");
    translate->add_option("--dot", translate_dot, "Also write a DOT rendering");
    translate->add_option("--name", translate_name,
                          "Net name (default: input filename stem)");

    // match
    auto* match = app.add_subcommand(
        "match", "Compare a business net with one reference net");
    std::string match_business;
    std::string match_reference;
    EmbeddingsOption match_embeddings;
    double match_weight = 0.5;
    double match_threshold = 0.7;
    bool match_json = false;
    match->add_option("business", match_business, "Business net document")
        ->required()
        ->check(CLI::ExistingFile);
    match->add_option("reference", match_reference, "Reference net document")
        ->required()
        ->check(CLI::ExistingFile);
    match_embeddings.attach(match);
    match->add_option("--weight", match_weight,
                      "Weight of embedding similarity in the combined score")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    match->add_option("--threshold", match_threshold,
                      "Minimum cosine for a task pairing")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    match->add_flag("--json", match_json, "Machine-readable output");

    // rank
    auto* rank = app.add_subcommand(
        "rank", "Rank a directory of reference nets against a business net");
    std::string rank_business;
    std::string rank_refs;
    EmbeddingsOption rank_embeddings;
    double rank_weight = 0.5;
    double rank_threshold = 0.7;
    std::size_t rank_top = 0;
    bool rank_json = false;
    rank->add_option("business", rank_business, "Business net document")
        ->required()
        ->check(CLI::ExistingFile);
    rank->add_option("--refs", rank_refs,
                     "Directory holding *.net.json reference models")
        ->required()
        ->check(CLI::ExistingDirectory);
    rank_embeddings.attach(rank);
    rank->add_option("--weight", rank_weight,
                     "Weight of embedding similarity in the combined score")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    rank->add_option("--threshold", rank_threshold,
                     "Minimum cosine for a task pairing")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    rank->add_option("--top", rank_top, "Print only the best k references");
    rank->add_flag("--json", rank_json, "Machine-readable output");

    // check
    auto* check = app.add_subcommand(
        "check", "Validate a net document and analyze soundness");
    std::string check_net;
    std::size_t check_bound = 10000;
    check->add_option("net", check_net, "Net document to check")
        ->required()
        ->check(CLI::ExistingFile);
    check->add_option("--bound", check_bound,
                      "Maximum number of markings to explore")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (translate->parsed()) {
            return run_translate(translate_input, translate_out, translate_dot,
                                 translate_name);
        }
        if (match->parsed()) {
            return run_match(match_business, match_reference, match_embeddings,
                             match_weight, match_threshold, match_json);
        }
        if (rank->parsed()) {
            return run_rank(rank_business, rank_refs, rank_embeddings,
                            rank_weight, rank_threshold, rank_top, rank_json);
        }
        if (check->parsed()) {
            return run_check(check_net, check_bound);
        }
        std::cerr << app.help();
        return exit_usage_error;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage_error;
    } catch (const procmatch::schema_violation_error& e) {
        std::cerr << "error: " << e.what();
        if (!e.location.empty()) std::cerr << " (at " << e.location << ")";
        std::cerr << "\n";
        return exit_domain_error;
    } catch (const procmatch::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    }
}
