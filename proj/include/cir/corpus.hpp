#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cir/types.hpp"

namespace cir {

// Raw words of one sentence-like unit, pre-pipeline.
struct Phrase {
    std::vector<std::string> words;
};

struct Document {
    DocId id = 0;
    std::string text;
    std::vector<Phrase> phrases;
};

struct Collection {
    std::vector<Document> docs;
    int n_docs() const { return static_cast<int>(docs.size()); }
};

// Splits on sentence-final punctuation {. ! ? ؟ ۔ newline}, then each phrase
// into words on whitespace and remaining punctuation. Empty phrases dropped.
std::vector<Phrase> segment_phrases(std::string_view text);

// JSON-lines corpus: one object per line with integer `id` and string `text`.
Collection load_collection(const std::string& path);

// Builds a collection in memory (ids must be unique and positive).
Collection make_collection(const std::vector<std::pair<DocId, std::string>>& docs);

}  // namespace cir
