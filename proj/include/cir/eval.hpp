#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cir/types.hpp"

namespace cir {

// Relevance judgments: query id -> relevant doc ids. TSV `query-id<TAB>doc-id`.
struct Qrels {
    std::map<std::string, std::set<DocId>> relevant;

    static Qrels load(const std::string& path);
    static Qrels parse(const std::string& tsv_content);
    std::string to_tsv() const;
};

struct RunResult {
    std::string query_id;
    std::string mode;  // "traditional" | "semantic"
    std::vector<DocId> retrieved;
    double elapsed_ms = 0.0;
};

// |retrieved ∩ relevant| / |retrieved|; throws empty_retrieved on empty input.
double precision(const std::vector<DocId>& retrieved, const std::set<DocId>& relevant);

// |retrieved ∩ relevant| / |relevant|; throws empty_relevant on empty judgment.
double recall(const std::vector<DocId>& retrieved, const std::set<DocId>& relevant);

// Metrics over the first min(k, |retrieved|) hits.
std::pair<double, double> pr_at_k(const RunResult& run, const std::set<DocId>& relevant,
                                  int k);

struct ReportRow {
    std::string query_id;
    std::string mode;
    std::optional<double> precision;  // empty retrieved -> undefined, flagged
    double recall = 0.0;
    double elapsed_ms = 0.0;
    int n_retrieved = 0;
};

struct ReportAverage {
    std::string mode;
    std::optional<double> precision;  // undefined rows excluded from the mean
    double recall = 0.0;
    double elapsed_ms = 0.0;
    int n_queries = 0;
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<ReportAverage> averages;
    std::string to_tsv() const;
    std::string to_text() const;
};

// Per-query and per-mode averaged precision/recall/latency. Every run's query
// id must be present in the qrels.
Report compare_report(const std::vector<RunResult>& runs, const Qrels& qrels);

}  // namespace cir
