#include "cir/textpipe.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>

#include "cir/types.hpp"

namespace cir {

namespace utf8 {

char32_t decode(std::string_view s, size_t& i) {
    unsigned char b0 = s[i];
    if (b0 < 0x80) {
        i += 1;
        return b0;
    }
    auto cont = [&](size_t k) {
        return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        char32_t cp = (b0 & 0x1F) << 6 | (s[i + 1] & 0x3F);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        char32_t cp = (b0 & 0x0F) << 12 | (s[i + 1] & 0x3F) << 6 | (s[i + 2] & 0x3F);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        char32_t cp = (b0 & 0x07) << 18 | (s[i + 1] & 0x3F) << 12 |
                      (s[i + 2] & 0x3F) << 6 | (s[i + 3] & 0x3F);
        i += 4;
        return cp;
    }
    i += 1;  // malformed byte, pass through
    return b0;
}

void encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::u32string to_u32(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size();) out.push_back(decode(s, i));
    return out;
}

std::string to_u8(const std::u32string& s) {
    std::string out;
    out.reserve(s.size() * 2);
    for (char32_t cp : s) encode(cp, out);
    return out;
}

}  // namespace utf8

namespace {

constexpr char32_t kAlefHamzaAbove = 0x0623, kAlefHamzaBelow = 0x0625,
                   kAlefMadda = 0x0622, kAlef = 0x0627, kAlefMaqsura = 0x0649,
                   kYa = 0x064A, kWawHamza = 0x0624, kWaw = 0x0648,
                   kYaHamza = 0x0626, kTatweel = 0x0640;

bool is_haraka(char32_t cp) {
    return (cp >= 0x064B && cp <= 0x065F) || cp == 0x0670;
}

bool in_arabic_block(char32_t cp) {
    return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
           (cp >= 0xFB50 && cp <= 0xFEFF);
}

bool is_vowel(char32_t c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(const std::u32string& w, std::u32string_view suf) {
    return w.size() >= suf.size() &&
           std::equal(suf.rbegin(), suf.rend(), w.rbegin());
}

}  // namespace

bool is_arabic_word(std::string_view word) {
    for (size_t i = 0; i < word.size();) {
        if (in_arabic_block(utf8::decode(word, i))) return true;
    }
    return false;
}

std::string normalize_word(std::string_view raw) {
    std::u32string out;
    for (size_t i = 0; i < raw.size();) {
        char32_t cp = utf8::decode(raw, i);
        if (cp == kTatweel || is_haraka(cp)) continue;
        switch (cp) {
            case kAlefHamzaAbove:
            case kAlefHamzaBelow:
            case kAlefMadda: cp = kAlef; break;
            case kAlefMaqsura: cp = kYa; break;
            case kWawHamza: cp = kWaw; break;
            case kYaHamza: cp = kYa; break;
            default:
                if (cp < 0x80) cp = static_cast<char32_t>(std::tolower(static_cast<int>(cp)));
        }
        out.push_back(cp);
    }
    return utf8::to_u8(out);
}

std::string stem_english(std::string_view word) {
    std::string w(word);
    size_t n = w.size();
    auto ends = [&](std::string_view suf) {
        return n >= suf.size() && w.compare(n - suf.size(), suf.size(), suf) == 0;
    };
    // Endings are tried in order; at most one rule fires. A rule that would
    // leave fewer than two letters does not fire.
    if (ends("ies") && !ends("eies") && !ends("aies") && n >= 4) {
        w.replace(n - 3, 3, "y");
    } else if (ends("es") && n >= 3) {
        w.pop_back();
    } else if (ends("s") && n >= 3 && !is_vowel(w[n - 2]) && w[n - 2] != 's') {
        w.pop_back();
    } else if (ends("ing") && n >= 5 && w.substr(0, n - 3) != "th") {
        w.resize(n - 3);
    } else if (ends("ed") && n >= 4 && !is_vowel(w[n - 3])) {
        w.resize(n - 2);
    }
    return w;
}

std::string stem_arabic(std::string_view word) {
    std::u32string w = utf8::to_u32(word);

    // Irregular form kept in step with the city/place vocabulary: the
    // singular collapses onto the plural stem.
    static const std::u32string kMadina = U"مدينة";  // مدينة
    static const std::u32string kMadin = U"مدين";         // مدين
    static const std::u32string kMudun = U"مدن";               // مدن
    if (w == kMadina || w == kMadin) return utf8::to_u8(kMudun);

    static const std::array<std::u32string, 6> kArticlePrefixes = {
        U"وال",  // وال
        U"بال",  // بال
        U"كال",  // كال
        U"فال",  // فال
        U"لل",        // لل
        U"ال",        // ال
    };
    for (const auto& p : kArticlePrefixes) {
        if (w.size() >= p.size() + 2 && w.compare(0, p.size(), p) == 0) {
            w.erase(0, p.size());
            break;
        }
    }
    if (w.size() >= 4 && w[0] == kWaw) w.erase(0, 1);  // conjunction و

    static const std::array<std::u32string, 6> kSuffixes = {
        U"ات",  // ات
        U"ون",  // ون
        U"ين",  // ين
        U"ها",  // ها
        U"ان",  // ان
        U"ة",        // ة
    };
    for (const auto& s : kSuffixes) {
        if (w.size() >= s.size() + 3 && ends_with(w, s)) {
            w.resize(w.size() - s.size());
            break;
        }
    }
    return utf8::to_u8(w);
}

std::string normalize_and_stem(std::string_view raw) {
    std::string norm = normalize_word(raw);
    if (norm.empty()) return norm;
    return is_arabic_word(norm) ? stem_arabic(norm) : stem_english(norm);
}

std::vector<std::string> remove_stop_words(const std::vector<std::string>& words,
                                           const StopWords& stops) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& w : words) {
        if (!stops.contains(normalize_word(w))) out.push_back(w);
    }
    return out;
}

std::vector<std::string> pipeline(const std::vector<std::string>& words,
                                  const StopWords& stops) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& raw : words) {
        std::string norm = normalize_word(raw);
        if (norm.empty() || stops.contains(norm)) continue;
        std::string term = is_arabic_word(norm) ? stem_arabic(norm) : stem_english(norm);
        if (!term.empty()) out.push_back(std::move(term));
    }
    return out;
}

namespace {

const char* kDefaultStopWords[] = {
    // English
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "as", "at", "be", "because", "been", "before",
    "being", "below", "between", "both", "but", "by", "can", "could", "did",
    "do", "does", "doing", "down", "during", "each", "few", "for", "from",
    "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "him", "his", "how", "i", "if", "in", "into", "is", "it", "its", "itself",
    "just", "me", "more", "most", "my", "no", "nor", "not", "of", "off", "on",
    "once", "only", "or", "other", "our", "ours", "out", "over", "own",
    "same", "she", "should", "so", "some", "such", "than", "that", "the",
    "their", "theirs", "them", "then", "there", "these", "they", "this",
    "those", "through", "to", "too", "under", "until", "up", "very", "was",
    "we", "were", "what", "when", "where", "which", "while", "who", "whom",
    "why", "will", "with", "you", "your", "yours",
    // Arabic (hamza-folded forms)
    "في",              // في
    "عن",              // عن
    "على",        // على (normalizes to علي below; keep both)
    "علي",
    "من",              // من
    "الى",        // إلى normalized
    "الي",
    "ان",              // أن/إن
    "لا",              // لا
    "ما",              // ما
    "هذا",        // هذا
    "هذه",        // هذه
    "ذلك",        // ذلك
    "التي",  // التي
    "الذي",  // الذي
    "هو",              // هو
    "هي",              // هي
    "هم",              // هم
    "كان",        // كان
    "كانت",  // كانت
    "قد",              // قد
    "لم",              // لم
    "لن",              // لن
    "ثم",              // ثم
    "حتى",        // حتى
    "حتي",
    "كل",              // كل
    "بعض",        // بعض
    "عند",        // عند
    "و",                    // standalone و
    "اذا",        // إذا normalized
    "بين",        // بين
    "بعد",        // بعد
    "قبل",        // قبل
    "غير",        // غير
};

}  // namespace

StopWords StopWords::defaults() {
    StopWords s;
    for (const char* w : kDefaultStopWords) s.words.insert(w);
    return s;
}

StopWords StopWords::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open stop-word file: " + path);
    StopWords s;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        // trim
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        s.words.insert(normalize_word(std::string_view(line).substr(b, e - b + 1)));
    }
    return s;
}

StopWords StopWords::from_files(const std::vector<std::string>& paths) {
    StopWords merged;
    for (const auto& p : paths) {
        StopWords one = from_file(p);
        merged.words.insert(one.words.begin(), one.words.end());
    }
    return merged;
}

StopWords StopWords::resolve(const std::vector<std::string>& explicit_paths) {
    if (!explicit_paths.empty()) return from_files(explicit_paths);
    if (const char* dir = std::getenv("CONCEPT_IR_STOPWORDS_DIR")) {
        std::vector<std::string> found;
        for (const char* name : {"stopwords.txt", "stopwords.en.txt", "stopwords.ar.txt"}) {
            std::string p = std::string(dir) + "/" + name;
            if (std::ifstream probe(p); probe) found.push_back(p);
        }
        if (!found.empty()) return from_files(found);
    }
    return defaults();
}

}  // namespace cir
