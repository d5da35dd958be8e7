#pragma once

// Shared fixtures: the order-fulfillment sample, its expected net, the toy
// embedding table, and constants frozen from hand calculations over the
// committed data files.

#include <fstream>
#include <sstream>
#include <string>

#include "procmatch/embeddings.hpp"
#include "procmatch/petri.hpp"

namespace fixtures {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string samples_dir() { return PROCMATCH_SAMPLES_DIR; }
inline std::string data_dir() { return PROCMATCH_DATA_DIR; }

inline std::string order_fulfillment_path() {
    return samples_dir() + "/order_fulfillment.txt";
}

inline std::string order_fulfillment_text() {
    return read_file(order_fulfillment_path());
}

inline const procmatch::EmbeddingTable& toy_table() {
    static const procmatch::EmbeddingTable table =
        procmatch::load_embeddings(data_dir() + "/toy_embeddings.txt");
    return table;
}

// The net the translator must produce for the order-fulfillment sample:
// sequential prefix Place, Check; one decision place (p2) with an
// available-branch [Confirm, Pack] and a not-available-branch
// [Create, Receive, Ship]; both merge into the sink p3.
inline procmatch::PetriNet expected_order_net(const std::string& name = "") {
    procmatch::PetriNet net(name);
    for (int i = 0; i <= 6; ++i) net.add_place("p" + std::to_string(i));
    const char* labels[] = {"Place", "Check",   "Confirm", "Pack",
                            "Create", "Receive", "Ship"};
    for (int i = 0; i <= 6; ++i) {
        net.add_transition("t" + std::to_string(i), labels[i]);
    }
    net.add_arc("p0", "t0");
    net.add_arc("t0", "p1");
    net.add_arc("p1", "t1");
    net.add_arc("t1", "p2");
    net.add_arc("p2", "t2");
    net.add_arc("t2", "p4");
    net.add_arc("p4", "t3");
    net.add_arc("t3", "p3");
    net.add_arc("p2", "t4");
    net.add_arc("t4", "p5");
    net.add_arc("p5", "t5");
    net.add_arc("t5", "p6");
    net.add_arc("p6", "t6");
    net.add_arc("t6", "p3");
    return net;
}

// Frozen from an independent hand calculation over data/toy_embeddings.txt
// (exact arithmetic on the file's decimal values).
inline constexpr double cos_check_verify = 0.9636068973324697;
inline constexpr double cos_pack_audit = 0.011225319558868485;

// Expected scores for the three reference models in samples/references,
// matched against the order-fulfillment net at weight 0.5, threshold 0.7:
//   standard:  emb = (6 + cos_check_verify) / 7, structure 1
//   audit:     emb = 6/7,  structure = (6/7 + 1) / 2
//   parallel:  emb = 7/9,  structure = (7/9 + 1) / 2
inline constexpr double standard_embedding = 0.99480098533321;
inline constexpr double standard_structure = 1.0;
inline constexpr double standard_combined = 0.997400492666605;
inline constexpr double audit_embedding = 0.8571428571428571;
inline constexpr double audit_structure = 0.9285714285714286;
inline constexpr double audit_combined = 0.8928571428571428;
inline constexpr double parallel_embedding = 0.7777777777777778;
inline constexpr double parallel_structure = 0.8888888888888888;
inline constexpr double parallel_combined = 0.8333333333333333;

}  // namespace fixtures
