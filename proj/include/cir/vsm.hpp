#pragma once

#include <span>
#include <string>
#include <vector>

#include "cir/index.hpp"
#include "cir/ontology.hpp"

namespace cir {

// Sublinear term-frequency weight: 0 when tf = 0, else 1 + log10(tf).
double wtf(int tf);

// Inverse document frequency, base-10: log10(N / df).
double idf(int n_docs, int df);

// Normalized dot product; 0 when either vector has zero norm.
double cosine(std::span<const double> d, std::span<const double> q);

struct RankedHit {
    DocId doc = 0;
    double score = 0.0;
    bool operator==(const RankedHit&) const = default;
};

struct RankOptions {
    int topk = 10;            // <= 0 means no cutoff
    int hop_limit = kDefaultHopLimit;
    bool idf_query_weights = false;   // default: binary (all-ones) query vector
    bool full_document_norm = false;  // default: query-subspace document norm
};

// Candidates are the union of the query terms' postings; each document is
// scored with cosine over the query-term dimensions, d_t = wtf(tf)*idf(N, df).
// Results sorted by score descending, ties by doc id ascending.
std::vector<RankedHit> rank_traditional(const IndexPair& ix,
                                        std::span<const std::string> terms,
                                        const RankOptions& opts = {});

// Resolves the query concept, keeps for every term only the posting groups
// whose concept is related to it, and ranks over those. A group's idf pools
// the document counts of the term's groups within hop_limit of the group's
// own concept, so near-sense occurrences still count toward rarity. Falls
// back to rank_traditional when the query concept is unknown.
std::vector<RankedHit> rank_semantic(const IndexPair& ix, const ConceptGraph& g,
                                     std::span<const std::string> terms,
                                     const RankOptions& opts = {});

}  // namespace cir
