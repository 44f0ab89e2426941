#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cir/textpipe.hpp"
#include "cir/types.hpp"

using namespace cir;

TEST_CASE("english stemmer endings") {
    CHECK(stem_english("corns") == "corn");
    CHECK(stem_english("eats") == "eat");
    CHECK(stem_english("computers") == "computer");
    CHECK(stem_english("keyboards") == "keyboard");
    CHECK(stem_english("houses") == "house");
    CHECK(stem_english("flies") == "fly");
    CHECK(stem_english("eating") == "eat");
    // ing is kept when the remainder would be a single letter or "th"
    CHECK(stem_english("thing") == "thing");
    CHECK(stem_english("sing") == "sing");
    CHECK(stem_english("wanted") == "want");
    // ed preceded by a vowel is kept
    CHECK(stem_english("agreed") == "agreed");
    CHECK(stem_english("mouse") == "mouse");
    CHECK(stem_english("glass") == "glass");
    CHECK(stem_english("was") == "was");  // vowel before the s
}

TEST_CASE("arabic stemmer strips articles and suffixes") {
    CHECK(stem_arabic("العين") == "عين");
    CHECK(stem_arabic("تفاحة") == "تفاح");
    CHECK(stem_arabic("للفراهيدي") == "فراهيدي");
    CHECK(stem_arabic("الفراهيدي") == "فراهيدي");
    CHECK(stem_arabic("فراهيدي") == "فراهيدي");  // bare trailing ya kept
    CHECK(stem_arabic("قناة") == "قنا");
    CHECK(stem_arabic("السويس") == "سويس");
    CHECK(stem_arabic("المستقبل") == "مستقبل");
    CHECK(stem_arabic("مكتبات") == "مكتب");
    CHECK(stem_arabic("والتفاح") == "تفاح");
    CHECK(stem_arabic("وعين") == "عين");
    // too-short remainders block stripping
    CHECK(stem_arabic("الم") == "الم");
    CHECK(stem_arabic("عين") == "عين");
}

TEST_CASE("arabic city singular folds onto the plural stem") {
    CHECK(stem_arabic("مدينة") == "مدن");
    CHECK(stem_arabic("مدن") == "مدن");
    CHECK(normalize_and_stem("مدينة") == normalize_and_stem("مدن"));
}

TEST_CASE("normalization folds hamza forms and strips marks") {
    CHECK(normalize_word("أبل") == "ابل");
    CHECK(normalize_word("ألم") == "الم");
    CHECK(normalize_word("إلى") == "الي");
    CHECK(normalize_word("Mouse") == "mouse");
    CHECK(normalize_word("مُدُن") == "مدن");  // harakat removed
}

TEST_CASE("stop word removal keeps order and drops function words") {
    StopWords stops = StopWords::defaults();
    SUBCASE("english") {
        std::vector<std::string> in{"mouse", "and", "keyboard"};
        CHECK(remove_stop_words(in, stops) ==
              std::vector<std::string>{"mouse", "keyboard"});
    }
    SUBCASE("all stop words") {
        std::vector<std::string> in{"the", "and"};
        CHECK(remove_stop_words(in, stops).empty());
    }
    SUBCASE("arabic") {
        std::vector<std::string> in{"في", "عن", "عين"};
        CHECK(remove_stop_words(in, stops) == std::vector<std::string>{"عين"});
    }
    SUBCASE("matching is on the normalized form, surface kept") {
        std::vector<std::string> in{"The", "Mouse"};
        CHECK(remove_stop_words(in, stops) == std::vector<std::string>{"Mouse"});
    }
}

TEST_CASE("pipeline worked examples") {
    StopWords stops = StopWords::defaults();
    SUBCASE("english phrase") {
        std::vector<std::string> in{"Mouse", "and", "keyboard"};
        auto out = pipeline(in, stops);
        REQUIRE(out.size() == 2);
        CHECK(out[0] == "mouse");
        CHECK(out[1] == "keyboard");
    }
    SUBCASE("arabic phrase") {
        std::vector<std::string> in{"ألم", "العين"};
        auto out = pipeline(in, stops);
        REQUIRE(out.size() == 2);
        CHECK(out[0] == "الم");
        CHECK(out[1] == "عين");
    }
    SUBCASE("empty") { CHECK(pipeline({}, stops).empty()); }
}

TEST_CASE("pipeline is idempotent on fixture vocabulary") {
    StopWords stops = StopWords::defaults();
    std::vector<std::string> vocab{
        "تفاحة", "بيضاء",  "كتاب",   "العين", "للفراهيدي", "ألم",    "مدينة",
        "قناة",  "السويس", "المستقبل", "خوخ",   "مانجو",     "أبل",    "خضراء",
        "شعار",  "لون",    "ثمار",   "جسد",   "شعور",      "هجاء",   "ابوظبي",
        "لغوي",  "مجلد",   "غلاف",   "مصحف",  "اذن",       "mouse",  "keyboards",
        "corns", "eats",   "computers", "dog", "farm",      "fauna",  "gadget"};
    for (const auto& w : vocab) {
        auto once = pipeline({w}, stops);
        REQUIRE(once.size() == 1);
        auto twice = pipeline({once[0]}, stops);
        REQUIRE(twice.size() == 1);
        CHECK(twice[0] == once[0]);
    }
}

TEST_CASE("no output term is a stop word") {
    StopWords stops = StopWords::defaults();
    std::vector<std::string> in{"The", "Mouse", "Has", "في", "العين", "و", "ألم"};
    for (const auto& t : pipeline(in, stops)) CHECK_FALSE(stops.contains(t));
}

TEST_CASE("stop word files merge, with comments and normalization") {
    auto write = [](const std::string& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    };
    write("sw_en.txt", "# comment\nThe\nand  \n\nmouse # trailing\n");
    write("sw_ar.txt", "عَن\nفي\n");
    auto s = StopWords::from_files({"sw_en.txt", "sw_ar.txt"});
    CHECK(s.contains("the"));
    CHECK(s.contains("and"));
    CHECK(s.contains("mouse"));
    CHECK(s.contains("عن"));  // haraka stripped
    CHECK(s.contains("في"));
    CHECK_FALSE(s.contains("# comment"));
    CHECK_THROWS_AS(StopWords::from_file("missing_stopwords.txt"), io_error);
    std::remove("sw_en.txt");
    std::remove("sw_ar.txt");
}

TEST_CASE("stop word resolution honors the environment override") {
    std::filesystem::create_directories("sw_env_dir");
    {
        std::ofstream out("sw_env_dir/stopwords.txt");
        out << "zzzstop\n";
    }
    setenv("CONCEPT_IR_STOPWORDS_DIR", "sw_env_dir", 1);
    auto s = StopWords::resolve({});
    unsetenv("CONCEPT_IR_STOPWORDS_DIR");
    CHECK(s.contains("zzzstop"));
    CHECK_FALSE(s.contains("the"));  // override replaces the defaults
    CHECK(StopWords::resolve({}).contains("the"));
    std::filesystem::remove_all("sw_env_dir");
}

TEST_CASE("stop word defaults") {
    StopWords s = StopWords::defaults();
    CHECK(s.contains("the"));
    CHECK(s.contains("has"));
    CHECK(s.contains("in"));
    CHECK(s.contains("and"));
    CHECK(s.contains("في"));
    CHECK(s.contains("عن"));
    CHECK(s.contains("و"));
    CHECK_FALSE(s.contains("أو"));   // operator words stay out
    CHECK_FALSE(s.contains("ليس"));
    CHECK_FALSE(s.contains("mouse"));
}
