#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "procmatch/errors.hpp"
#include "procmatch/nlp.hpp"

namespace procmatch {

// Word-vector table loaded from a text file, one `word f1 ... fd` entry per
// line.  Words are stored lowercase; duplicate words keep the last vector.
class EmbeddingTable {
public:
    static EmbeddingTable parse(std::string_view content,
                                std::string_view origin = "<string>") {
        EmbeddingTable table;
        std::size_t line_number = 0;
        std::size_t pos = 0;
        while (pos <= content.size()) {
            std::size_t eol = content.find('\n', pos);
            std::string_view line = content.substr(
                pos, eol == std::string_view::npos ? content.size() - pos
                                                   : eol - pos);
            bool last = eol == std::string_view::npos;
            pos = last ? content.size() + 1 : eol + 1;
            ++line_number;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

            std::vector<std::string_view> fields = split_fields(line);
            if (fields.empty()) continue;
            if (fields.size() < 2) {
                throw dimension_mismatch_error(
                    std::string(origin) + ":" + std::to_string(line_number) +
                        ": entry has no vector components",
                    line_number);
            }
            if (table.vectors_.empty() && fields.size() == 2 &&
                is_integer(fields[0]) && is_integer(fields[1])) {
                throw dimension_mismatch_error(
                    std::string(origin) + ":" + std::to_string(line_number) +
                        ": line looks like a count/dimension header; this "
                        "format has no header line",
                    line_number);
            }
            std::size_t components = fields.size() - 1;
            if (table.dimension_ == 0) {
                table.dimension_ = components;
            } else if (components != table.dimension_) {
                throw dimension_mismatch_error(
                    std::string(origin) + ":" + std::to_string(line_number) +
                        ": expected " + std::to_string(table.dimension_) +
                        " components, found " + std::to_string(components),
                    line_number);
            }
            std::vector<double> vec(components);
            for (std::size_t i = 0; i < components; ++i) {
                std::string_view field = fields[i + 1];
                auto [end, ec] = std::from_chars(
                    field.data(), field.data() + field.size(), vec[i]);
                if (ec != std::errc{} || end != field.data() + field.size()) {
                    throw parse_error(
                        std::string(origin) + ":" + std::to_string(line_number) +
                            ": component \"" + std::string(field) +
                            "\" is not a number",
                        line_number);
                }
            }
            std::string word = detail::lower(fields[0]);
            if (!table.vectors_.emplace(word, vec).second) {
                table.vectors_[word] = std::move(vec);
                ++table.duplicate_count_;
            }
        }
        if (table.vectors_.empty()) {
            throw empty_file_error(std::string(origin) +
                                   ": no embedding entries found");
        }
        return table;
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return vectors_.size(); }
    // Number of lines that overwrote an earlier entry for the same word.
    std::size_t duplicate_count() const { return duplicate_count_; }

    const std::vector<double>* find(std::string_view word) const {
        auto it = vectors_.find(std::string(word));
        return it == vectors_.end() ? nullptr : &it->second;
    }

private:
    static std::vector<std::string_view> split_fields(std::string_view line) {
        std::vector<std::string_view> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            fields.push_back(line.substr(start, i - start));
        }
        return fields;
    }

    static bool is_integer(std::string_view field) {
        if (field.empty()) return false;
        std::size_t start = field[0] == '-' || field[0] == '+' ? 1 : 0;
        if (start == field.size()) return false;
        for (std::size_t i = start; i < field.size(); ++i) {
            if (field[i] < '0' || field[i] > '9') return false;
        }
        return true;
    }

    std::size_t dimension_ = 0;
    std::unordered_map<std::string, std::vector<double>> vectors_;
    std::size_t duplicate_count_ = 0;
};

inline EmbeddingTable load_embeddings(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw error("cannot open embeddings file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return EmbeddingTable::parse(buffer.str(), path);
}

// Mean vector of a label's in-vocabulary tokens.
struct LabelVector {
    std::string label;
    std::vector<double> vector;
    double coverage = 0.0;  // fraction of label tokens found in vocabulary
};

// Lowercase the label, split it into word tokens, and average the vectors of
// the tokens present in the table.  All-OOV labels embed as the zero vector
// with coverage 0.
inline LabelVector embed_label(std::string_view label,
                               const EmbeddingTable& table) {
    LabelVector out;
    out.label = std::string(label);
    out.vector.assign(table.dimension(), 0.0);

    std::size_t total = 0;
    std::size_t found = 0;
    std::size_t i = 0;
    while (i < label.size()) {
        if (!detail::is_word_char(static_cast<unsigned char>(label[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < label.size() &&
               detail::is_word_char(static_cast<unsigned char>(label[i]))) {
            ++i;
        }
        ++total;
        std::string word = detail::lower(label.substr(start, i - start));
        if (const std::vector<double>* vec = table.find(word)) {
            ++found;
            for (std::size_t d = 0; d < vec->size(); ++d) {
                out.vector[d] += (*vec)[d];
            }
        }
    }
    if (found > 0) {
        for (double& component : out.vector) {
            component /= static_cast<double>(found);
        }
    }
    out.coverage = total == 0 ? 0.0
                              : static_cast<double>(found) /
                                    static_cast<double>(total);
    if (found == 0) out.coverage = 0.0;
    return out;
}

// Normalized dot product in [-1, 1]; 0 when either vector has zero norm.
inline double cosine(const std::vector<double>& v,
                     const std::vector<double>& w) {
    if (v.size() != w.size()) {
        throw dimension_mismatch_error(
            "cosine of vectors with dimensions " + std::to_string(v.size()) +
            " and " + std::to_string(w.size()));
    }
    double dot = 0.0;
    double norm_v = 0.0;
    double norm_w = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        dot += v[i] * w[i];
        norm_v += v[i] * v[i];
        norm_w += w[i] * w[i];
    }
    if (norm_v == 0.0 || norm_w == 0.0) return 0.0;
    double value = dot / (std::sqrt(norm_v) * std::sqrt(norm_w));
    if (value > 1.0) value = 1.0;
    if (value < -1.0) value = -1.0;
    return value;
}

inline double cosine(const LabelVector& v, const LabelVector& w) {
    return cosine(v.vector, w.vector);
}

}  // namespace procmatch
