#include "cir/corpus.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "cir/textpipe.hpp"

namespace cir {

namespace {

// Sentence-final delimiters, including the Arabic question mark and full stop.
bool is_phrase_delimiter(char32_t cp) {
    return cp == '.' || cp == '!' || cp == '?' || cp == '\n' ||
           cp == 0x061F    // ؟
           || cp == 0x06D4;  // ۔
}

bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
               (cp >= 'A' && cp <= 'Z');
    }
    switch (cp) {
        case 0x060C:  // ،
        case 0x061B:  // ؛
        case 0x00AB:  // «
        case 0x00BB:  // »
        case 0x2013:
        case 0x2014:
        case 0x2018:
        case 0x2019:
        case 0x201C:
        case 0x201D:
        case 0x2026: return false;
        default: return true;
    }
}

}  // namespace

std::vector<Phrase> segment_phrases(std::string_view text) {
    std::vector<Phrase> phrases;
    Phrase cur;
    std::string word;
    auto flush_word = [&] {
        if (!word.empty()) {
            cur.words.push_back(std::move(word));
            word.clear();
        }
    };
    auto flush_phrase = [&] {
        flush_word();
        if (!cur.words.empty()) {
            phrases.push_back(std::move(cur));
            cur = Phrase{};
        }
    };
    for (size_t i = 0; i < text.size();) {
        size_t start = i;
        char32_t cp = utf8::decode(text, i);
        if (is_phrase_delimiter(cp)) {
            flush_phrase();
        } else if (is_word_char(cp)) {
            word.append(text.substr(start, i - start));
        } else {
            flush_word();
        }
    }
    flush_phrase();
    return phrases;
}

Collection load_collection(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open corpus file: " + path);
    Collection c;
    std::unordered_set<DocId> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("bad corpus line: ") + e.what(), line_no);
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text") ||
            !j["id"].is_number_integer() || !j["text"].is_string()) {
            throw parse_error("corpus line must be {\"id\": int, \"text\": string}", line_no);
        }
        Document d;
        d.id = j["id"].get<DocId>();
        d.text = j["text"].get<std::string>();
        if (d.id <= 0) throw parse_error("doc id must be positive", line_no);
        if (!seen.insert(d.id).second) throw duplicate_doc_id(d.id);
        d.phrases = segment_phrases(d.text);
        c.docs.push_back(std::move(d));
    }
    if (c.docs.empty()) throw empty_collection();
    return c;
}

Collection make_collection(const std::vector<std::pair<DocId, std::string>>& docs) {
    Collection c;
    std::unordered_set<DocId> seen;
    for (const auto& [id, text] : docs) {
        if (id <= 0) throw invariant_violation("doc id must be positive");
        if (!seen.insert(id).second) throw duplicate_doc_id(id);
        Document d;
        d.id = id;
        d.text = text;
        d.phrases = segment_phrases(d.text);
        c.docs.push_back(std::move(d));
    }
    return c;
}

}  // namespace cir
