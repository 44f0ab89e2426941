#include "cir/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

namespace cir::fixtures {

namespace {

// ---------------------------------------------------------------------------
// Arabic concept graph. Clusters: logo/color, fruit, medicine, letters and
// books, geography, media, religion. Node ids are stable identifiers; sense
// lines are keyed by normalized index terms.
// ---------------------------------------------------------------------------
const char* kArabicOntology = R"(# Arabic concept graph
node	شعار	شعار	concept
node	لون	لون	concept
node	فاكهة	فاكهة	concept
node	طب	الطب	concept
node	عضو	عضو جسم	concept
node	احساس	إحساس	concept
node	فن	الفنون والآداب	concept
node	كتاب	كتاب	concept
node	حرف	حرف أبجدي	concept
node	عالم	عالم لغة	concept
node	عنوان	عنوان مؤلف	concept
node	دين	دين	concept
node	geography	جغرافيا	concept
node	مدن	مدن	concept
node	اعلام	إعلام	concept
node	تفاح_ابل	تفاحة أبل	instance
node	تفاح_ثمرة	ثمرة التفاح	instance
node	ابيض	اللون الأبيض	instance
node	اخضر	اللون الأخضر	instance
node	ابل_شركة	شركة أبل	instance
node	مانجو_ثمرة	ثمرة المانجو	instance
node	خوخ_ثمرة	ثمرة الخوخ	instance
node	عين_عضو	العين عضو البصر	instance
node	عين_حرف	حرف العين	instance
node	عين_العين	مدينة العين	instance
node	عين_قانا	عين قانا	instance
node	الم_احساس	الألم	instance
node	فراهيدي_عالم	الخليل الفراهيدي	instance
node	كتاب_مجلد	الكتاب المجلد	instance
node	كتاب_عنوان	كتاب في عنوان	instance
node	كتاب_ديني	الكتاب الديني	instance
node	مدن_عامة	المدن	instance
node	قناة_مائية	القناة المائية	instance
node	قناة_تلفزيون	القناة التلفزيونية	instance
node	قناة_اذن	قناة الأذن	instance
node	سويس_مدينة	مدينة السويس	instance
node	مستقبل_قناة	قناة المستقبل	instance
node	اذن_عضو	الأذن	instance
edge	تفاح_ابل	is-a	شعار
edge	تفاح_ابل	has-color	ابيض
edge	ابيض	is-a	لون
edge	ابيض	colors	شعار
edge	اخضر	is-a	لون
edge	ابل_شركة	has-logo	شعار
edge	لون	property-of	شعار
edge	تفاح_ثمرة	is-a	فاكهة
edge	مانجو_ثمرة	is-a	فاكهة
edge	خوخ_ثمرة	is-a	فاكهة
edge	عين_عضو	is-a	عضو
edge	عضو	studied-by	طب
edge	الم_احساس	is-a	احساس
edge	احساس	studied-by	طب
edge	عين_حرف	is-a	حرف
edge	حرف	part-of	فن
edge	كتاب	part-of	فن
edge	عالم	part-of	فن
edge	عنوان	names	كتاب
edge	كتاب_مجلد	is-a	كتاب
edge	كتاب_عنوان	is-a	عنوان
edge	كتاب_ديني	is-a	دين
edge	فراهيدي_عالم	is-a	عالم
edge	عين_العين	is-a	مدن
edge	عين_قانا	located-in	geography
edge	مدن	part-of	geography
edge	مدن_عامة	part-of	geography
edge	قناة_مائية	located-in	geography
edge	سويس_مدينة	located-in	geography
edge	قناة_تلفزيون	is-a	اعلام
edge	مستقبل_قناة	is-a	اعلام
edge	قناة_اذن	part-of	عضو
edge	اذن_عضو	is-a	عضو
sense	تفاح	تفاح_ابل
sense	تفاح	تفاح_ثمرة
sense	بيضاء	ابيض
sense	خضراء	اخضر
sense	ابل	ابل_شركة
sense	مانجو	مانجو_ثمرة
sense	خوخ	خوخ_ثمرة
sense	عين	عين_عضو
sense	عين	عين_حرف
sense	عين	عين_العين
sense	عين	عين_قانا
sense	الم	الم_احساس
sense	فراهيدي	فراهيدي_عالم
sense	كتاب	كتاب_مجلد
sense	كتاب	كتاب_عنوان
sense	كتاب	كتاب_ديني
sense	مدن	مدن_عامة
sense	قنا	قناة_مائية
sense	قنا	قناة_تلفزيون
sense	قنا	قناة_اذن
sense	سويس	سويس_مدينة
sense	مستقبل	مستقبل_قناة
sense	اذن	اذن_عضو
sense	شعار	شعار
sense	لون	لون
sense	ثمار	فاكهة
sense	جسد	عضو
sense	شعور	احساس
sense	هجاء	حرف
sense	ابوظبي	مدن
sense	لغوي	عالم
sense	مجلد	كتاب
sense	غلاف	عنوان
sense	مصحف	دين
)";

// ---------------------------------------------------------------------------
// English concept graph: device cluster, nature cluster (with an instance
// node bridging animals and agriculture), and two isolated mouse senses.
// ---------------------------------------------------------------------------
const char* kEnglishOntology = R"(# English concept graph
node	computer	Computer	concept
node	electronic	Electronic	concept
node	animal	Animal	concept
node	agriculture	Agriculture	concept
node	fictional	Fictional	concept
node	person	Person	concept
node	ecosystem	Ecosystem	instance
node	mouse_device	Computer mouse	instance
node	keyboard_device	Keyboard	instance
node	monitor_device	Monitor	instance
node	system_software	Operating system	instance
node	mouse_rodent	Mouse (rodent)	instance
node	dog_pet	Dog	instance
node	cat_pet	Cat	instance
node	corn_crop	Corn	instance
node	eat_feeding	Feeding	instance
node	mouse_alice	Mouse (story character)	instance
node	mouse_timid	Timid person	instance
edge	mouse_device	part-of	computer
edge	mouse_device	is-a	electronic
edge	keyboard_device	part-of	computer
edge	monitor_device	part-of	computer
edge	system_software	runs-on	computer
edge	computer	is-a	electronic
edge	mouse_rodent	is-a	animal
edge	dog_pet	is-a	animal
edge	cat_pet	is-a	animal
edge	corn_crop	grown-by	agriculture
edge	eat_feeding	part-of	agriculture
edge	animal	lives-in	ecosystem
edge	ecosystem	feeds	agriculture
edge	mouse_alice	is-a	fictional
edge	mouse_timid	is-a	person
sense	mouse	mouse_device
sense	mouse	mouse_rodent
sense	mouse	mouse_alice
sense	mouse	mouse_timid
sense	keyboard	keyboard_device
sense	monitor	monitor_device
sense	system	system_software
sense	dog	dog_pet
sense	cat	cat_pet
sense	corn	corn_crop
sense	eat	eat_feeding
sense	computer	computer
sense	animal	animal
sense	farm	agriculture
sense	fauna	animal
sense	gadget	electronic
sense	fable	fictional
sense	shy	person
)";

std::vector<PostingEntry> entries(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<PostingEntry> out;
    for (auto [d, tf] : xs) out.push_back({d, tf});
    return out;
}

Fixture build_arabic_vsm() {
    Fixture f;
    f.name = "arabic_vsm";
    f.ontology_tsv = kArabicOntology;
    f.graph = parse_ontology(f.ontology_tsv);

    std::vector<FixtureRow> rows = {
        {"بيضاء", "لون",          // بيضاء @ لون
         entries({{1, 1}, {3, 1}, {8, 2}, {9, 1}})},
        {"تفاح", "شعار",          // تفاح @ شعار
         entries({{1, 2}, {8, 2}})},
        {"تفاح", "فاكهة",    // تفاح @ فاكهة
         entries({{2, 2}, {3, 10}, {6, 3}, {9, 1}, {10, 1}})},
        {"عين", "عضو",                      // عين @ عضو
         entries({{1, 1}, {2, 1}, {5, 16}, {6, 1}})},
        {"عين", "حرف",                      // عين @ حرف
         entries({{7, 1}, {10, 6}, {11, 1}})},
        {"عين", "مدن",                      // عين @ مدن
         entries({{9, 2}})},
        {"الم", "احساس",          // الم @ احساس
         entries({{2, 1}, {5, 2}})},
        {"فراهيدي", "عالم",  // فراهيدي @ عالم
         entries({{7, 4}, {10, 2}, {11, 1}})},
        {"كتاب", "كتاب",          // كتاب @ كتاب
         entries({{7, 1}, {9, 2}, {10, 2}})},
        {"كتاب", "عنوان",    // كتاب @ عنوان
         entries({{11, 2}})},
    };
    std::map<std::string, std::string> anchors = {
        {"شعار", "شعار"},          // شعار
        {"لون", "لون"},                      // لون
        {"فاكهة", "ثمار"},    // فاكهة -> ثمار
        {"عضو", "جسد"},                      // عضو -> جسد
        {"احساس", "شعور"},    // احساس -> شعور
        {"حرف", "هجاء"},                // حرف -> هجاء
        {"مدن", "ابوظبي"},    // مدن -> ابوظبي
        {"عالم", "لغوي"},          // عالم -> لغوي
        {"كتاب", "مجلد"},          // كتاب -> مجلد
        {"عنوان", "غلاف"},    // عنوان -> غلاف
    };
    std::vector<std::pair<DocId, std::string>> extra = {
        {4, "سفينة بحر."},  // سفينة بحر
    };
    f.collection = synthesize_fixture(rows, f.graph, anchors, StopWords::defaults(), extra);

    f.queries = {
        {"q1", "vsm", "تفاحة بيضاء"},  // تفاحة بيضاء
        {"q2", "vsm",
         "كتاب العين "
         "للفراهيدي"},  // كتاب العين للفراهيدي
        {"q3", "vsm", "ألم العين"},  // ألم العين
    };
    f.qrels.relevant = {
        {"q1", {1, 8, 9}},
        {"q2", {7, 9, 10, 11}},
        {"q3", {1, 2, 5, 6}},
    };
    return f;
}

Fixture build_arabic_boolean() {
    Fixture f;
    f.name = "arabic_boolean";
    f.ontology_tsv = kArabicOntology;
    f.graph = parse_ontology(f.ontology_tsv);

    // Logo docs, fruit docs, mixed docs, an eye/letter/city cluster, a
    // canal/media cluster and a books cluster; phrasing pins each concept.
    const char* texts[] = {
        /* 1*/ "تفاح ابل بيضاء.",
        /* 2*/ "تفاح ابل بيضاء. خضراء لون.",
        /* 3*/ "تفاح ابل بيضاء. خضراء لون.",
        /* 4*/ "ابل شعار. تفاح ثمار.",
        /* 5*/ "تفاح ثمار. بيضاء لون.",
        /* 6*/ "تفاح ثمار.",
        /* 7*/ "تفاح مانجو ثمار.",
        /* 8*/ "تفاح مانجو ثمار.",
        /* 9*/ "مانجو ثمار.",
        /*10*/ "خوخ ثمار.",
        /*11*/ "تفاح خوخ ثمار.",
        /*12*/ "تفاح ثمار. ابل شعار. بيضاء لون.",
        /*13*/ "تفاح ثمار. ابل شعار. بيضاء لون.",
        /*14*/ "تفاح ثمار.",
        /*15*/ "تفاح ثمار.",
        /*16*/ "تفاح ثمار.",
        /*17*/ "تفاح ثمار.",
        /*18*/ "عين جسد.",
        /*19*/ "عين جسد.",
        /*20*/ "عين هجاء. فراهيدي لغوي.",
        /*21*/ "فراهيدي لغوي.",
        /*22*/ "عين ابوظبي.",
        /*23*/ "عين ابوظبي.",
        /*24*/ "عين ابوظبي.",
        /*25*/ "عين ابوظبي.",
        /*26*/ "عين ابوظبي.",
        /*27*/ "عين جسد. الم شعور.",
        /*28*/ "عين ابوظبي. الم شعور.",
        /*29*/ "قناة سويس.",
        /*30*/ "قناة سويس.",
        /*31*/ "قناة مستقبل.",
        /*32*/ "قناة مستقبل.",
        /*33*/ "قناة اذن.",
        /*34*/ "كتاب مصحف.",
        /*35*/ "كتاب مصحف.",
        /*36*/ "كتاب مجلد.",
        /*37*/ "كتاب مجلد.",
        /*38*/ "كتاب مجلد.",
        /*39*/ "كتاب مجلد.",
    };
    std::vector<std::pair<DocId, std::string>> docs;
    DocId id = 1;
    for (const char* t : texts) docs.emplace_back(id++, t);
    f.collection = make_collection(docs);

    f.queries = {
        {"bo1", "boolean", "أبل أو تفاحة"},
        {"bo2", "boolean", "مانجو أو تفاحة"},
        {"bo3", "boolean", "خوخ أو تفاح"},
        {"bo4", "boolean", "العين أو الفراهيدي"},
        {"bo5", "boolean", "العين أو ألم"},
        {"bo6", "boolean", "السويس أو قناة"},
        {"bo7", "boolean", "قناة أو المستقبل"},
        {"ba1", "boolean", "تفاحة و أبل"},
        {"ba2", "boolean", "تفاحة و بيضاء"},
        {"ba3", "boolean", "تفاح و مانجو"},
        {"ba4", "boolean", "العين و للفراهيدي"},
        {"ba5", "boolean", "ألم و العين"},
        {"ba6", "boolean", "قناة و السويس"},
        {"ba7", "boolean", "قناة و المستقبل"},
        {"bn1", "boolean", "تفاحة أبل بيضاء ليس خضراء"},
        {"bn2", "boolean", "العين ليس الفراهيدي"},
        {"bn3", "boolean", "تفاح ليس قناة"},
        {"bn4", "boolean", "كتاب ليس العين"},
    };
    f.qrels.relevant = {
        {"bo1", {1, 2, 3, 4, 12, 13}},
        {"bo2", {4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17}},
        {"bo3", {4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17}},
        {"bo4", {20, 21}},
        {"bo5", {18, 19, 27, 28}},
        {"bo6", {29, 30}},
        {"bo7", {31, 32}},
        {"ba1", {1, 2, 3}},
        {"ba2", {1, 2, 3}},
        {"ba3", {7, 8}},
        {"ba4", {20}},
        {"ba5", {27}},
        {"ba6", {29, 30}},
        {"ba7", {31, 32}},
        {"bn1", {1}},
        {"bn2", {22, 23, 24, 25, 26, 28}},
        {"bn3", {1, 2, 3}},
        {"bn4", {34, 35}},
    };
    return f;
}

Fixture build_english_vsm() {
    Fixture f;
    f.name = "english_vsm";
    f.ontology_tsv = kEnglishOntology;
    f.graph = parse_ontology(f.ontology_tsv);

    std::vector<FixtureRow> rows = {
        {"mouse", "animal",
         entries({{7, 2},   {8, 18},  {12, 2},  {24, 18}, {27, 17}, {28, 12},
                  {36, 17}, {37, 17}, {38, 17}, {39, 15}, {40, 9},  {41, 15},
                  {50, 14}, {51, 12}, {61, 11}, {62, 15}, {63, 5},  {74, 8},
                  {75, 16}, {82, 18}, {83, 20}, {87, 4},  {90, 9},  {100, 17}})},
        {"mouse", "electronic",
         entries({{3, 10},  {4, 4},   {6, 1},   {25, 5},  {26, 2},  {42, 7},
                  {43, 10}, {44, 13}, {45, 14}, {46, 10}, {47, 15}, {48, 6},
                  {49, 12}, {76, 3},  {77, 9},  {78, 14}, {79, 5},  {80, 1},
                  {81, 4}})},
        {"mouse", "fictional",
         entries({{13, 3}, {14, 2}, {15, 20}, {16, 13}, {17, 19}})},
        {"mouse", "person",
         entries({{18, 18}, {29, 13}, {30, 17}, {31, 13}, {32, 1},  {33, 18},
                  {34, 14}, {35, 8},  {52, 3},  {53, 12}, {54, 15}, {55, 4},
                  {56, 16}, {57, 16}, {58, 3},  {59, 11}, {60, 15}, {64, 12},
                  {65, 4},  {88, 7}})},
    };
    std::map<std::string, std::string> anchors = {
        {"animal", "fauna"},
        {"electronic", "gadget"},
        {"fictional", "fable"},
        {"person", "shy"},
    };
    std::set<DocId> used;
    for (const auto& r : rows)
        for (const auto& e : r.entries) used.insert(e.doc);
    std::vector<std::pair<DocId, std::string>> extra;
    for (DocId d = 1; d <= 100; ++d) {
        if (!used.count(d)) extra.emplace_back(d, "orchard harvest notes.");
    }
    f.collection = synthesize_fixture(rows, f.graph, anchors, StopWords::defaults(), extra);
    return f;
}

Fixture build_english_boolean() {
    Fixture f;
    f.name = "english_boolean";
    f.ontology_tsv = kEnglishOntology;
    f.graph = parse_ontology(f.ontology_tsv);

    const char* texts[] = {
        /* 1*/ "mouse keyboard computer.",
        /* 2*/ "mouse keyboard computer.",
        /* 3*/ "keyboard computer system.",
        /* 4*/ "computer system.",
        /* 5*/ "mouse dog animal.",
        /* 6*/ "mouse dog animal.",
        /* 7*/ "mouse dog animal.",
        /* 8*/ "mouse dog animal.",
        /* 9*/ "dog cat animal.",
        /*10*/ "dog animal.",
        /*11*/ "mouse eats corn farm.",
        /*12*/ "mouse eats corn farm.",
        /*13*/ "corn farm.",
        /*14*/ "keyboard computer. mouse animal.",
        /*15*/ "keyboard computer. mouse animal.",
        /*16*/ "mouse dog animal.",
        /*17*/ "mouse dog animal.",
        /*18*/ "mouse corn farm. dog animal.",
        /*19*/ "mouse corn farm. dog animal.",
        /*20*/ "mouse corn farm. dog animal.",
        /*21*/ "mouse corn farm. dog animal.",
        /*22*/ "mouse animal. corn farm.",
        /*23*/ "mouse animal. corn farm.",
    };
    std::vector<std::pair<DocId, std::string>> docs;
    DocId id = 1;
    for (const char* t : texts) docs.emplace_back(id++, t);
    f.collection = make_collection(docs);

    f.queries = {
        {"eo1", "boolean", "Keyboard or mouse"},
        {"eo2", "boolean", "Mouse or dog"},
        {"eo3", "boolean", "Computers or mouse"},
        {"eo4", "boolean", "Mouse or corn"},
        {"ea1", "boolean", "Keyboard mouse"},
        {"ea2", "boolean", "Mouse dog"},
        {"ea3", "boolean", "Computers mouse"},
        {"ea4", "boolean", "Mouse corn"},
    };
    f.qrels.relevant = {
        {"eo1", {1, 2, 3, 14, 15}},
        {"eo2", {5, 6, 7, 8, 9, 10, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23}},
        {"eo3", {1, 2, 3, 4, 14, 15}},
        {"eo4", {11, 12, 13, 18, 19, 20, 21, 22, 23}},
        {"ea1", {1, 2}},
        {"ea2", {5, 6, 7, 8, 16, 17}},
        {"ea3", {1, 2}},
        {"ea4", {11, 12, 18, 19, 20, 21}},
    };
    return f;
}

}  // namespace

const Fixture& arabic_vsm() {
    static const Fixture f = build_arabic_vsm();
    return f;
}

const Fixture& arabic_boolean() {
    static const Fixture f = build_arabic_boolean();
    return f;
}

const Fixture& english_vsm() {
    static const Fixture f = build_english_vsm();
    return f;
}

const Fixture& english_boolean() {
    static const Fixture f = build_english_boolean();
    return f;
}

std::string corpus_to_jsonl(const Collection& c) {
    std::string out;
    for (const auto& d : c.docs) {
        nlohmann::json j;
        j["id"] = d.id;
        j["text"] = d.text;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string queries_to_tsv(const std::vector<FixtureQuery>& qs) {
    std::string out = "# id\tmodel\tmode\ttext\n";
    for (const auto& q : qs) out += q.id + "\t" + q.model + "\tboth\t" + q.text + "\n";
    return out;
}

void write_files(const Fixture& f, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto write = [&](const std::string& suffix, const std::string& content) {
        std::ofstream out(fs::path(dir) / (f.name + suffix), std::ios::binary);
        if (!out) throw io_error("cannot write fixture file in " + dir);
        out << content;
    };
    write(".corpus.jsonl", corpus_to_jsonl(f.collection));
    write(".ontology.tsv", f.ontology_tsv);
    if (!f.queries.empty()) write(".queries.tsv", queries_to_tsv(f.queries));
    if (!f.qrels.relevant.empty()) write(".qrels.tsv", f.qrels.to_tsv());
}

}  // namespace cir::fixtures
