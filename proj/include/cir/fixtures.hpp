#pragma once

#include <string>
#include <vector>

#include "cir/corpus.hpp"
#include "cir/eval.hpp"
#include "cir/index.hpp"
#include "cir/ontology.hpp"

namespace cir::fixtures {

struct FixtureQuery {
    std::string id;
    std::string model;  // "boolean" | "vsm"
    std::string text;
};

// A self-contained demo/regression data set: corpus, concept graph, queries
// and relevance judgments.
struct Fixture {
    std::string name;
    Collection collection;
    std::string ontology_tsv;
    ConceptGraph graph;
    std::vector<FixtureQuery> queries;
    Qrels qrels;
};

// Eleven Arabic documents with known posting structure plus three ranked
// queries; drives the VSM golden numbers.
const Fixture& arabic_vsm();

// Thirty-nine Arabic documents and the 18 OR/AND/NOT queries with judgments.
const Fixture& arabic_boolean();

// One hundred English documents; the polysemous "mouse" splits into four
// concept groups.
const Fixture& english_vsm();

// Twenty-three English documents and the 8 OR/AND queries with judgments.
const Fixture& english_boolean();

std::string corpus_to_jsonl(const Collection& c);
std::string queries_to_tsv(const std::vector<FixtureQuery>& qs);

// Writes <name>.corpus.jsonl / .ontology.tsv / .queries.tsv / .qrels.tsv.
void write_files(const Fixture& f, const std::string& dir);

}  // namespace cir::fixtures
