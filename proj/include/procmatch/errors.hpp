#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace procmatch {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- NLP pipeline ---

// A text contains no verb token at all.
struct empty_actions_error : error {
    using error::error;
};

// A conditional sentence has no guard text after its "if".
struct malformed_condition_error : error {
    using error::error;
};

// --- Petri net construction and analysis ---

// An arc would connect two places or two transitions.
struct bipartite_violation_error : error {
    using error::error;
};

// A place or transition id is already taken.
struct duplicate_id_error : error {
    using error::error;
};

// fire() called on a transition that is not enabled.
struct not_enabled_error : error {
    using error::error;
};

// Soundness analysis requested for a net that is not a workflow net.
struct not_workflow_net_error : error {
    using error::error;
};

// --- Embeddings ---

// Vector length disagrees with the established dimension.
struct dimension_mismatch_error : error {
    explicit dimension_mismatch_error(const std::string& what,
                                      std::size_t line = 0)
        : error(what), line(line) {}
    std::size_t line;  // 1-based line number, 0 when not file-related
};

// A vector component is not a number.
struct parse_error : error {
    explicit parse_error(const std::string& what, std::size_t line = 0)
        : error(what), line(line) {}
    std::size_t line;
};

// An embedding file holds no entries.
struct empty_file_error : error {
    using error::error;
};

// --- Serialization ---

// Net document declares a schema version this build does not read.
struct schema_version_unsupported_error : error {
    using error::error;
};

// Net document violates the schema; `location` is a JSON-pointer-style path.
struct schema_violation_error : error {
    explicit schema_violation_error(const std::string& what,
                                    std::string location = {})
        : error(what), location(std::move(location)) {}
    std::string location;
};

}  // namespace procmatch
