#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <map>
#include <thread>

#include "cir/boolean.hpp"
#include "cir/fixtures.hpp"
#include "cir/vsm.hpp"

using namespace cir;
using namespace cir::fixtures;

namespace {

struct QueryOutcome {
    DocSet traditional;
    DocSet semantic;
};

std::map<std::string, QueryOutcome> run_boolean_suite(const Fixture& f) {
    auto stops = StopWords::defaults();
    auto ix = build_index(f.collection, f.graph, stops);
    std::map<std::string, QueryOutcome> out;
    for (const auto& q : f.queries) {
        auto parsed = parse_boolean(q.text, stops);
        out[q.id] = {eval_boolean(ix, parsed), eval_semantic(ix, f.graph, parsed, 1)};
    }
    return out;
}

double trad_precision(const QueryOutcome& o, const std::set<DocId>& rel) {
    return precision(o.traditional, rel);
}

}  // namespace

TEST_CASE("arabic boolean fixture: per-query retrieval sets") {
    const auto& f = arabic_boolean();
    auto res = run_boolean_suite(f);
    REQUIRE(res.size() == 18);

    // A handful of frozen result sets; hand-derived from the corpus layout.
    CHECK(res.at("ba1").semantic == DocSet{1, 2, 3});
    CHECK(res.at("ba1").traditional == DocSet{1, 2, 3, 4, 12, 13});
    CHECK(res.at("ba3").traditional == DocSet{7, 8});
    CHECK(res.at("ba5").semantic == DocSet{27});
    CHECK(res.at("ba5").traditional == DocSet{27, 28});
    CHECK(res.at("bn1").semantic == DocSet{1});
    CHECK(res.at("bn1").traditional == DocSet{1, 12, 13});
    CHECK(res.at("bo6").semantic == DocSet{29, 30});
    CHECK(res.at("bn4").semantic == DocSet{34, 35});
}

TEST_CASE("arabic boolean fixture: semantic precision is perfect, traditional is not") {
    const auto& f = arabic_boolean();
    auto res = run_boolean_suite(f);

    for (const auto& q : f.queries) {
        const auto& rel = f.qrels.relevant.at(q.id);
        CAPTURE(q.id);
        REQUIRE_FALSE(res.at(q.id).semantic.empty());
        CHECK(precision(res.at(q.id).semantic, rel) == doctest::Approx(1.0));
    }

    // Frozen traditional per-query precisions (percent).
    std::map<std::string, double> expected = {
        {"bo1", 40.0},      {"bo2", 81.25}, {"bo3", 81.25}, {"bo4", 100.0 * 2 / 11},
        {"bo5", 40.0},      {"bo6", 40.0},  {"bo7", 40.0},  {"ba1", 50.0},
        {"ba2", 50.0},      {"ba3", 100.0}, {"ba4", 100.0}, {"ba5", 50.0},
        {"ba6", 100.0},     {"ba7", 100.0}, {"bn1", 100.0 / 3}, {"bn2", 100.0 * 6 / 9},
        {"bn3", 20.0},      {"bn4", 100.0 / 3},
    };
    for (const auto& [qid, want] : expected) {
        CAPTURE(qid);
        CHECK(100.0 * trad_precision(res.at(qid), f.qrels.relevant.at(qid)) ==
              doctest::Approx(want).epsilon(1e-9));
    }

    auto avg = [&](std::initializer_list<const char*> ids) {
        double s = 0;
        for (const char* id : ids) s += trad_precision(res.at(id), f.qrels.relevant.at(id));
        return 100.0 * s / static_cast<double>(ids.size());
    };
    // Table-level traditional averages land near the reference values.
    CHECK(avg({"bo1", "bo2", "bo3", "bo4", "bo5", "bo6", "bo7"}) ==
          doctest::Approx(43.0).epsilon(0.25));
    CHECK(avg({"ba1", "ba2", "ba3", "ba4", "ba5", "ba6", "ba7"}) ==
          doctest::Approx(79.0).epsilon(0.13));
    CHECK(avg({"bn1", "bn2", "bn3", "bn4"}) == doctest::Approx(44.0).epsilon(0.25));
}

TEST_CASE("english boolean fixture: semantic precision is perfect, averages in range") {
    const auto& f = english_boolean();
    auto res = run_boolean_suite(f);
    REQUIRE(res.size() == 8);

    for (const auto& q : f.queries) {
        const auto& rel = f.qrels.relevant.at(q.id);
        CAPTURE(q.id);
        REQUIRE_FALSE(res.at(q.id).semantic.empty());
        CHECK(precision(res.at(q.id).semantic, rel) == doctest::Approx(1.0));
    }

    std::map<std::string, double> expected = {
        {"eo1", 100.0 * 5 / 19}, {"eo2", 80.0},          {"eo3", 30.0},
        {"eo4", 100.0 * 9 / 19}, {"ea1", 50.0},          {"ea2", 60.0},
        {"ea3", 50.0},           {"ea4", 75.0},
    };
    for (const auto& [qid, want] : expected) {
        CAPTURE(qid);
        CHECK(100.0 * trad_precision(res.at(qid), f.qrels.relevant.at(qid)) ==
              doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("arabic vsm fixture: qrels give the golden top-4 metrics") {
    const auto& f = arabic_vsm();
    auto ix = build_index(f.collection, f.graph, StopWords::defaults());
    auto stops = StopWords::defaults();

    double sem_p = 0, sem_r = 0, trad_full_p = 0;
    for (const auto& q : f.queries) {
        auto phrases = segment_phrases(q.text);
        std::vector<std::string> raw;
        for (const auto& ph : phrases) raw.insert(raw.end(), ph.words.begin(), ph.words.end());
        auto terms = pipeline(raw, stops);
        RankOptions opts;
        opts.topk = 0;

        RunResult sem_run{q.id, "semantic", {}, 0};
        for (const auto& h : rank_semantic(ix, f.graph, terms, opts))
            sem_run.retrieved.push_back(h.doc);
        RunResult trad_run{q.id, "traditional", {}, 0};
        for (const auto& h : rank_traditional(ix, terms, opts))
            trad_run.retrieved.push_back(h.doc);

        const auto& rel = f.qrels.relevant.at(q.id);
        auto [sp, sr] = pr_at_k(sem_run, rel, 4);
        sem_p += sp;
        sem_r += sr;
        trad_full_p += precision(trad_run.retrieved, rel);
    }
    CHECK(100.0 * sem_p / 3 == doctest::Approx(91.67).epsilon(0.001));
    CHECK(sem_r / 3 == doctest::Approx(1.0));
    CHECK(100.0 * trad_full_p / 3 == doctest::Approx(47.6).epsilon(0.01));
}

TEST_CASE("compare_report over the arabic boolean fixture mirrors the tables") {
    const auto& f = arabic_boolean();
    auto stops = StopWords::defaults();
    auto ix = build_index(f.collection, f.graph, stops);

    std::vector<RunResult> runs;
    for (const auto& q : f.queries) {
        auto parsed = parse_boolean(q.text, stops);
        runs.push_back({q.id, "traditional", eval_boolean(ix, parsed), 0.1});
        runs.push_back({q.id, "semantic", eval_semantic(ix, f.graph, parsed, 1), 0.2});
    }
    auto rep = compare_report(runs, f.qrels);
    CHECK(rep.rows.size() == 36);
    REQUIRE(rep.averages.size() == 2);
    for (const auto& a : rep.averages) {
        CHECK(a.n_queries == 18);
        if (a.mode == "semantic") {
            CHECK(*a.precision == doctest::Approx(1.0));
            CHECK(a.recall == doctest::Approx(1.0));
        } else {
            // mean over all 18 queries, spanning the three operator tables
            CHECK(*a.precision == doctest::Approx(0.5800).epsilon(0.001));
        }
    }
}

TEST_CASE("a built index serves concurrent readers") {
    const auto& f = arabic_vsm();
    auto stops = StopWords::defaults();
    auto ix = build_index(f.collection, f.graph, stops);

    RankOptions opts;
    opts.topk = 0;
    std::vector<std::string> q{"تفاح", "بيضاء"};
    auto expected = rank_semantic(ix, f.graph, q, opts);

    std::atomic<int> mismatches{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&] {
            for (int i = 0; i < 200; ++i) {
                if (rank_semantic(ix, f.graph, q, opts) != expected) ++mismatches;
                auto parsed = parse_boolean("تفاحة و بيضاء", stops);
                if (eval_semantic(ix, f.graph, parsed, 1) != DocSet{1, 8}) ++mismatches;
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(mismatches == 0);
}

TEST_CASE("fixture files are written and reloadable") {
    namespace fs = std::filesystem;
    std::string dir = "fixture_write_test";
    const auto& f = arabic_vsm();
    write_files(f, dir);

    auto c = load_collection(dir + "/arabic_vsm.corpus.jsonl");
    CHECK(c.n_docs() == f.collection.n_docs());
    auto g = load_ontology(dir + "/arabic_vsm.ontology.tsv");
    CHECK(g.nodes().size() == f.graph.nodes().size());
    auto q = Qrels::load(dir + "/arabic_vsm.qrels.tsv");
    CHECK(q.relevant == f.qrels.relevant);

    fs::remove_all(dir);
}
