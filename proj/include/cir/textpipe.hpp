#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cir {

namespace utf8 {

// Decodes the codepoint starting at s[i] and advances i. Malformed bytes are
// returned as-is (one byte, one codepoint) so no input is ever dropped.
char32_t decode(std::string_view s, size_t& i);
void encode(char32_t cp, std::string& out);
std::u32string to_u32(std::string_view s);
std::string to_u8(const std::u32string& s);

}  // namespace utf8

// One stop-word set for both scripts; membership is exact match on the
// normalized (pre-stem) form, so Latin and Arabic entries never collide.
struct StopWords {
    std::unordered_set<std::string> words;

    bool contains(const std::string& w) const { return words.count(w) != 0; }

    static StopWords defaults();
    // One word per line, '#' starts a comment, blank lines ignored.
    static StopWords from_file(const std::string& path);
    static StopWords from_files(const std::vector<std::string>& paths);
    // Resolution order: explicit paths > stopwords[.en|.ar].txt under
    // $CONCEPT_IR_STOPWORDS_DIR > built-in defaults.
    static StopWords resolve(const std::vector<std::string>& explicit_paths);
};

bool is_arabic_word(std::string_view word);

// Lowercases Latin letters; folds hamza variants, strips tatweel and harakat.
std::string normalize_word(std::string_view raw);

// Rule-based endings stemmers. Inputs must already be normalized.
std::string stem_english(std::string_view word);
std::string stem_arabic(std::string_view word);

// Normalize then stem by the word's own script.
std::string normalize_and_stem(std::string_view raw);

// Order-preserving filter; membership is tested on the normalized form but
// surviving words keep their original surface.
std::vector<std::string> remove_stop_words(const std::vector<std::string>& words,
                                           const StopWords& stops);

// normalize -> drop stop words -> stem. Empty output is allowed.
std::vector<std::string> pipeline(const std::vector<std::string>& words,
                                  const StopWords& stops);

}  // namespace cir
