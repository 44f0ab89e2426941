// Command-line entry point: index construction, Boolean/VSM search with
// traditional and semantic modes, concept-resolution debugging, batch
// evaluation, and fixture materialization.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cir/boolean.hpp"
#include "cir/eval.hpp"
#include "cir/fixtures.hpp"
#include "cir/index.hpp"
#include "cir/vsm.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct SearchArgs {
    std::string index_path;
    std::string ontology_path;
    std::string model = "vsm";
    std::string mode = "traditional";
    std::string query;
    std::vector<std::string> stopwords_paths;
    int topk = 10;
    int hops = cir::kDefaultHopLimit;
    std::string query_weighting = "binary";
    std::string norm = "query-subspace";
};

int run_index(const std::string& corpus, const std::string& ontology,
              const std::string& out, const std::vector<std::string>& stopwords) {
    auto stops = cir::StopWords::resolve(stopwords);
    auto collection = cir::load_collection(corpus);
    auto graph = cir::load_ontology(ontology);
    auto ix = cir::build_index(collection, graph, stops);
    cir::save_index(ix, out);
    std::cerr << "indexed " << ix.n_docs << " documents, " << ix.traditional.size()
              << " terms\n";
    return 0;
}

int run_search(const SearchArgs& a) {
    auto stops = cir::StopWords::resolve(a.stopwords_paths);
    auto ix = cir::load_index(a.index_path);
    cir::ConceptGraph graph;
    if (!a.ontology_path.empty()) graph = cir::load_ontology(a.ontology_path);
    bool semantic = a.mode == "semantic";
    if (semantic && a.ontology_path.empty()) {
        std::cerr << "semantic mode needs --ontology\n";
        return 1;
    }

    auto t0 = Clock::now();
    if (a.model == "boolean") {
        auto q = cir::parse_boolean(a.query, stops);
        cir::DocSet docs = semantic ? cir::eval_semantic(ix, graph, q, a.hops)
                                    : cir::eval_boolean(ix, q);
        double elapsed = ms_since(t0);
        for (size_t i = 0; i < docs.size(); ++i) std::cout << (i ? " " : "") << docs[i];
        std::cout << "\n";
        std::cerr << std::fixed << std::setprecision(3) << "elapsed_ms " << elapsed
                  << "  hits " << docs.size() << "\n";
    } else {
        auto words = cir::segment_phrases(a.query);
        std::vector<std::string> raw;
        for (const auto& ph : words) raw.insert(raw.end(), ph.words.begin(), ph.words.end());
        auto terms = cir::pipeline(raw, stops);
        cir::RankOptions opts;
        opts.topk = a.topk;
        opts.hop_limit = a.hops;
        opts.idf_query_weights = a.query_weighting == "idf";
        opts.full_document_norm = a.norm == "full";
        auto hits = semantic ? cir::rank_semantic(ix, graph, terms, opts)
                             : cir::rank_traditional(ix, terms, opts);
        double elapsed = ms_since(t0);
        for (size_t i = 0; i < hits.size(); ++i) {
            std::cout << (i + 1) << "\t" << hits[i].doc << "\t" << std::fixed
                      << std::setprecision(5) << hits[i].score << "\n";
        }
        std::cerr << std::fixed << std::setprecision(3) << "elapsed_ms " << elapsed
                  << "  hits " << hits.size() << "\n";
    }
    return 0;
}

int run_rc(const std::string& ontology, const std::vector<std::string>& words,
           const std::vector<std::string>& stopwords) {
    auto stops = cir::StopWords::resolve(stopwords);
    auto graph = cir::load_ontology(ontology);
    auto terms = cir::pipeline(words, stops);
    auto rc = cir::resolve_rc(graph, terms);
    std::cout << (rc.is_unknown() ? "UNKNOWN" : rc.id) << "\n";
    auto cands = cir::rc_candidates(graph, terms);
    for (const auto& c : cands)
        std::cerr << c.id << "\tcost " << c.total_cost << "\tmax " << c.max_term_dist << "\n";
    return 0;
}

int run_eval(const std::string& index_path, const std::string& ontology_path,
             const std::string& queries_path, const std::string& qrels_path, int topk,
             int hops, int repeat, const std::vector<std::string>& stopwords) {
    auto stops = cir::StopWords::resolve(stopwords);
    auto ix = cir::load_index(index_path);
    auto graph = cir::load_ontology(ontology_path);
    auto qrels = cir::Qrels::load(qrels_path);

    std::ifstream in(queries_path);
    if (!in) throw cir::io_error("cannot open queries file: " + queries_path);
    std::vector<cir::RunResult> runs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::istringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '\t')) f.push_back(field);
        if (f.size() != 4) throw cir::parse_error("queries line needs id, model, mode, text", line_no);
        const auto& [qid, model, mode, text] = std::tie(f[0], f[1], f[2], f[3]);

        std::vector<std::string> modes;
        if (mode == "both") modes = {"traditional", "semantic"};
        else modes = {mode};
        for (const auto& m : modes) {
            cir::RunResult run;
            run.query_id = qid;
            run.mode = m;
            auto t0 = Clock::now();
            for (int r = 0; r < repeat; ++r) {
                if (model == "boolean") {
                    auto q = cir::parse_boolean(text, stops);
                    run.retrieved = m == "semantic" ? cir::eval_semantic(ix, graph, q, hops)
                                                    : cir::eval_boolean(ix, q);
                } else {
                    auto phrases = cir::segment_phrases(text);
                    std::vector<std::string> raw;
                    for (const auto& ph : phrases)
                        raw.insert(raw.end(), ph.words.begin(), ph.words.end());
                    auto terms = cir::pipeline(raw, stops);
                    cir::RankOptions opts;
                    opts.topk = topk;
                    opts.hop_limit = hops;
                    auto hits = m == "semantic" ? cir::rank_semantic(ix, graph, terms, opts)
                                                : cir::rank_traditional(ix, terms, opts);
                    run.retrieved.clear();
                    for (const auto& h : hits) run.retrieved.push_back(h.doc);
                }
            }
            run.elapsed_ms = ms_since(t0) / repeat;
            runs.push_back(std::move(run));
        }
    }
    auto report = cir::compare_report(runs, qrels);
    std::cout << report.to_tsv();
    std::cerr << report.to_text();
    return 0;
}

int run_fixtures(const std::string& out_dir) {
    using namespace cir::fixtures;
    for (const auto* f : {&arabic_vsm(), &arabic_boolean(), &english_vsm(), &english_boolean()})
        write_files(*f, out_dir);
    std::cerr << "fixtures written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concept-aware text retrieval engine"};
    app.require_subcommand(1);

    std::string corpus, ontology, out = "idx";
    std::vector<std::string> stopwords;
    auto* cmd_index = app.add_subcommand("index", "build an index from a corpus");
    cmd_index->add_option("--corpus", corpus, "JSON-lines corpus")->required();
    cmd_index->add_option("--ontology", ontology, "concept graph TSV")->required();
    cmd_index->add_option("--out", out, "output index path");
    cmd_index->add_option("--stopwords", stopwords, "stop-word file");

    SearchArgs sa;
    auto* cmd_search = app.add_subcommand("search", "run one query");
    cmd_search->add_option("--index", sa.index_path, "index file")->required();
    cmd_search->add_option("--ontology", sa.ontology_path, "concept graph TSV");
    cmd_search->add_option("--model", sa.model, "boolean|vsm")
        ->check(CLI::IsMember({"boolean", "vsm"}));
    cmd_search->add_option("--mode", sa.mode, "traditional|semantic")
        ->check(CLI::IsMember({"traditional", "semantic"}));
    cmd_search->add_option("--query", sa.query, "query text")->required();
    cmd_search->add_option("--topk", sa.topk, "result cutoff");
    cmd_search->add_option("--hops", sa.hops, "concept relatedness radius");
    cmd_search->add_option("--query-weighting", sa.query_weighting, "binary|idf")
        ->check(CLI::IsMember({"binary", "idf"}));
    cmd_search->add_option("--norm", sa.norm, "query-subspace|full")
        ->check(CLI::IsMember({"query-subspace", "full"}));
    cmd_search->add_option("--stopwords", sa.stopwords_paths, "stop-word file");

    std::string rc_ontology;
    std::vector<std::string> rc_stopwords;
    std::vector<std::string> rc_terms;
    auto* cmd_rc = app.add_subcommand("rc", "resolve the reference concept of terms");
    cmd_rc->add_option("--ontology", rc_ontology, "concept graph TSV")->required();
    cmd_rc->add_option("--stopwords", rc_stopwords, "stop-word file");
    cmd_rc->add_option("terms", rc_terms, "words")->required();

    std::string ev_index, ev_ontology, ev_queries, ev_qrels;
    std::vector<std::string> ev_stopwords;
    int ev_topk = 10, ev_hops = cir::kDefaultHopLimit, ev_repeat = 1;
    auto* cmd_eval = app.add_subcommand("eval", "batch evaluation with qrels");
    cmd_eval->add_option("--index", ev_index)->required();
    cmd_eval->add_option("--ontology", ev_ontology)->required();
    cmd_eval->add_option("--queries", ev_queries, "TSV: id, model, mode, text")->required();
    cmd_eval->add_option("--qrels", ev_qrels, "TSV: query-id, doc-id")->required();
    cmd_eval->add_option("--topk", ev_topk);
    cmd_eval->add_option("--hops", ev_hops);
    cmd_eval->add_option("--repeat", ev_repeat, "timing repetitions per query");
    cmd_eval->add_option("--stopwords", ev_stopwords);

    std::string fx_out = "fixtures";
    auto* cmd_fixtures = app.add_subcommand("fixtures", "materialize built-in fixtures");
    cmd_fixtures->add_option("--out", fx_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_index->parsed()) return run_index(corpus, ontology, out, stopwords);
        if (cmd_search->parsed()) return run_search(sa);
        if (cmd_rc->parsed()) return run_rc(rc_ontology, rc_terms, rc_stopwords);
        if (cmd_eval->parsed())
            return run_eval(ev_index, ev_ontology, ev_queries, ev_qrels, ev_topk, ev_hops,
                            ev_repeat, ev_stopwords);
        if (cmd_fixtures->parsed()) return run_fixtures(fx_out);
    } catch (const cir::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
