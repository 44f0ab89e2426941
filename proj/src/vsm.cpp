#include "cir/vsm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cir {

double wtf(int tf) {
    if (tf < 0) throw invariant_violation("negative term frequency");
    return tf == 0 ? 0.0 : 1.0 + std::log10(static_cast<double>(tf));
}

double idf(int n_docs, int df) {
    if (df == 0) throw division_by_zero_df();
    if (df > n_docs) throw invariant_violation("df exceeds collection size");
    return std::log10(static_cast<double>(n_docs) / static_cast<double>(df));
}

double cosine(std::span<const double> d, std::span<const double> q) {
    if (d.size() != q.size()) throw invariant_violation("cosine dimension mismatch");
    double dot = 0, dn = 0, qn = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        dot += d[i] * q[i];
        dn += d[i] * d[i];
        qn += q[i] * q[i];
    }
    if (dn == 0.0 || qn == 0.0) return 0.0;
    return dot / (std::sqrt(dn) * std::sqrt(qn));
}

namespace {

std::vector<std::string> distinct_terms(std::span<const std::string> terms) {
    std::vector<std::string> out;
    for (const auto& t : terms) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

std::vector<RankedHit> finalize(std::map<DocId, std::vector<double>>&& vectors,
                                const std::vector<double>& query_weights,
                                const std::map<DocId, double>& full_norms,
                                const RankOptions& opts) {
    double qn = 0;
    for (double w : query_weights) qn += w * w;
    qn = std::sqrt(qn);

    std::vector<RankedHit> hits;
    hits.reserve(vectors.size());
    for (auto& [doc, vec] : vectors) {
        double score = 0;
        if (opts.full_document_norm) {
            double dot = 0;
            for (size_t i = 0; i < vec.size(); ++i) dot += vec[i] * query_weights[i];
            double dn = full_norms.count(doc) ? full_norms.at(doc) : 0.0;
            score = (dn == 0.0 || qn == 0.0) ? 0.0 : dot / (dn * qn);
        } else {
            score = cosine(vec, query_weights);
        }
        hits.push_back({doc, score});
    }
    std::sort(hits.begin(), hits.end(), [](const RankedHit& a, const RankedHit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc < b.doc;
    });
    if (opts.topk > 0 && hits.size() > static_cast<size_t>(opts.topk))
        hits.resize(static_cast<size_t>(opts.topk));
    return hits;
}

}  // namespace

std::vector<RankedHit> rank_traditional(const IndexPair& ix,
                                        std::span<const std::string> terms,
                                        const RankOptions& opts) {
    auto dims = distinct_terms(terms);
    if (dims.empty()) throw empty_query();

    std::vector<double> dim_idf(dims.size(), 0.0);
    std::vector<const Posting*> postings(dims.size(), nullptr);
    for (size_t k = 0; k < dims.size(); ++k) {
        if (const Posting* p = ix.find_traditional(dims[k])) {
            postings[k] = p;
            dim_idf[k] = idf(ix.n_docs, p->df());
        }
    }

    std::map<DocId, std::vector<double>> vectors;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (!postings[k]) continue;
        for (const auto& e : postings[k]->entries) {
            auto it = vectors.try_emplace(e.doc, dims.size(), 0.0).first;
            it->second[k] = wtf(e.tf) * dim_idf[k];
        }
    }

    std::vector<double> qw(dims.size(), 1.0);
    if (opts.idf_query_weights) qw = dim_idf;

    std::map<DocId, double> full_norms;
    if (opts.full_document_norm) {
        std::map<DocId, double> sq;
        for (const auto& [term, posting] : ix.traditional) {
            double term_idf = idf(ix.n_docs, posting.df());
            for (const auto& e : posting.entries) {
                double w = wtf(e.tf) * term_idf;
                sq[e.doc] += w * w;
            }
        }
        for (auto [doc, s] : sq) full_norms[doc] = std::sqrt(s);
    }
    return finalize(std::move(vectors), qw, full_norms, opts);
}

namespace {

// Document count of the term's groups whose concept lies within hop_limit of
// this group's own concept (the unknown group never pools).
int pooled_df(const ConceptGraph& g, const std::map<std::string, Posting>& by_rc,
              const std::string& group_rc, int hop_limit) {
    std::set<DocId> docs;
    for (const auto& [other_rc, posting] : by_rc) {
        if (other_rc.empty()) continue;
        if (!related(g, ReferenceConcept{other_rc}, ReferenceConcept{group_rc}, hop_limit))
            continue;
        for (const auto& e : posting.entries) docs.insert(e.doc);
    }
    return static_cast<int>(docs.size());
}

}  // namespace

std::vector<RankedHit> rank_semantic(const IndexPair& ix, const ConceptGraph& g,
                                     std::span<const std::string> terms,
                                     const RankOptions& opts) {
    auto dims = distinct_terms(terms);
    if (dims.empty()) throw empty_query();

    ReferenceConcept rc = resolve_rc(g, dims);
    if (rc.is_unknown()) return rank_traditional(ix, terms, opts);

    // Per dimension: related groups and their pooled idf.
    struct Group {
        const Posting* posting;
        double idf_value;
    };
    std::vector<std::vector<Group>> dim_groups(dims.size());
    std::vector<double> dim_union_idf(dims.size(), 0.0);
    for (size_t k = 0; k < dims.size(); ++k) {
        const auto* by_rc = ix.groups(dims[k]);
        if (!by_rc) continue;
        std::set<DocId> union_docs;
        for (const auto& [group_rc, posting] : *by_rc) {
            if (group_rc.empty()) continue;
            if (!related(g, ReferenceConcept{group_rc}, rc, opts.hop_limit)) continue;
            int pdf = pooled_df(g, *by_rc, group_rc, opts.hop_limit);
            dim_groups[k].push_back({&posting, idf(ix.n_docs, pdf)});
            for (const auto& e : posting.entries) union_docs.insert(e.doc);
        }
        if (!union_docs.empty())
            dim_union_idf[k] = idf(ix.n_docs, static_cast<int>(union_docs.size()));
    }

    std::map<DocId, std::vector<double>> vectors;
    for (size_t k = 0; k < dims.size(); ++k) {
        for (const auto& grp : dim_groups[k]) {
            for (const auto& e : grp.posting->entries) {
                auto it = vectors.try_emplace(e.doc, dims.size(), 0.0).first;
                it->second[k] += wtf(e.tf) * grp.idf_value;
            }
        }
    }

    std::vector<double> qw(dims.size(), 1.0);
    if (opts.idf_query_weights) qw = dim_union_idf;

    std::map<DocId, double> full_norms;
    if (opts.full_document_norm) {
        std::map<DocId, double> sq;
        for (const auto& [term, by_rc] : ix.semantic) {
            for (const auto& [group_rc, posting] : by_rc) {
                if (group_rc.empty()) continue;
                if (!related(g, ReferenceConcept{group_rc}, rc, opts.hop_limit)) continue;
                double w_idf = idf(ix.n_docs, pooled_df(g, by_rc, group_rc, opts.hop_limit));
                for (const auto& e : posting.entries) {
                    double w = wtf(e.tf) * w_idf;
                    sq[e.doc] += w * w;
                }
            }
        }
        for (auto [doc, s] : sq) full_norms[doc] = std::sqrt(s);
    }
    return finalize(std::move(vectors), qw, full_norms, opts);
}

}  // namespace cir
