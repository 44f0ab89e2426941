#include "cir/boolean.hpp"

#include <algorithm>
#include <set>

namespace cir {

namespace {

bool is_operator_word(const std::string& norm, BoolOp& op) {
    if (norm == "and" || norm == "و") {  // و
        op = BoolOp::And;
        return true;
    }
    if (norm == "or" || norm == "او") {  // أو normalized
        op = BoolOp::Or;
        return true;
    }
    if (norm == "not" || norm == "ليس") {  // ليس
        op = BoolOp::Not;
        return true;
    }
    return false;
}

DocSet docs_of(const IndexPair& ix, const std::string& term) {
    DocSet out;
    if (const Posting* p = ix.find_traditional(term)) {
        out.reserve(p->entries.size());
        for (const auto& e : p->entries) out.push_back(e.doc);
    }
    return out;
}

DocSet set_union(const DocSet& a, const DocSet& b) {
    DocSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

DocSet intersect_all(std::vector<DocSet> sets) {
    if (sets.empty()) return {};
    // Rarest-first merge: start from the smallest list, drop candidates
    // missing from each remaining list, stop once the candidate set is empty.
    std::sort(sets.begin(), sets.end(),
              [](const DocSet& a, const DocSet& b) { return a.size() < b.size(); });
    DocSet cands = sets.front();
    for (size_t i = 1; i < sets.size() && !cands.empty(); ++i) {
        DocSet next;
        std::set_intersection(cands.begin(), cands.end(), sets[i].begin(), sets[i].end(),
                              std::back_inserter(next));
        cands = std::move(next);
    }
    return cands;
}

}  // namespace

BooleanQuery parse_boolean(std::string_view raw, const StopWords& stops) {
    std::vector<Phrase> phrases = segment_phrases(raw);
    std::vector<std::string> tokens;
    for (const auto& ph : phrases)
        tokens.insert(tokens.end(), ph.words.begin(), ph.words.end());

    bool saw_or = false, saw_not = false;
    std::vector<std::string> before_not, after_not;
    bool past_not = false;
    for (const auto& tok : tokens) {
        std::string norm = normalize_word(tok);
        BoolOp op;
        if (is_operator_word(norm, op)) {
            if (op == BoolOp::Not) {
                saw_not = true;
                past_not = true;
            } else if (op == BoolOp::Or) {
                saw_or = true;
            }
            continue;
        }
        (past_not ? after_not : before_not).push_back(tok);
    }

    BooleanQuery q;
    if (saw_not) {
        q.op = BoolOp::Not;
        q.terms = pipeline(before_not, stops);
        q.negated = pipeline(after_not, stops);
        if (q.terms.empty()) throw empty_query();
    } else {
        q.op = saw_or ? BoolOp::Or : BoolOp::And;
        q.terms = pipeline(before_not, stops);
        if (q.terms.empty()) throw empty_query();
    }
    return q;
}

DocSet eval_and(const IndexPair& ix, std::span<const std::string> terms) {
    std::vector<DocSet> sets;
    sets.reserve(terms.size());
    for (const auto& t : terms) sets.push_back(docs_of(ix, t));
    return intersect_all(std::move(sets));
}

DocSet eval_or(const IndexPair& ix, std::span<const std::string> terms) {
    DocSet out;
    for (const auto& t : terms) out = set_union(out, docs_of(ix, t));
    return out;
}

DocSet eval_not(const IndexPair& ix, std::span<const std::string> base,
                std::span<const std::string> negated) {
    DocSet keep = eval_and(ix, base);
    DocSet drop = eval_or(ix, negated);
    DocSet out;
    std::set_difference(keep.begin(), keep.end(), drop.begin(), drop.end(),
                        std::back_inserter(out));
    return out;
}

DocSet eval_boolean(const IndexPair& ix, const BooleanQuery& q) {
    switch (q.op) {
        case BoolOp::And: return eval_and(ix, q.terms);
        case BoolOp::Or: return eval_or(ix, q.terms);
        case BoolOp::Not: return eval_not(ix, q.terms, q.negated);
    }
    return {};
}

namespace {

// Union of the term's posting groups whose concept is related to rc.
DocSet filtered_docs(const IndexPair& ix, const ConceptGraph& g, const std::string& term,
                     const ReferenceConcept& rc, int hop_limit) {
    std::set<DocId> docs;
    if (const auto* by_rc = ix.groups(term)) {
        for (const auto& [group_rc, posting] : *by_rc) {
            if (group_rc.empty()) continue;
            if (!related(g, ReferenceConcept{group_rc}, rc, hop_limit)) continue;
            for (const auto& e : posting.entries) docs.insert(e.doc);
        }
    }
    return DocSet(docs.begin(), docs.end());
}

}  // namespace

DocSet eval_semantic(const IndexPair& ix, const ConceptGraph& g, const BooleanQuery& q,
                     int hop_limit) {
    ReferenceConcept rc = resolve_rc(g, q.terms);
    if (rc.is_unknown()) return eval_boolean(ix, q);

    std::vector<DocSet> sets;
    sets.reserve(q.terms.size());
    for (const auto& t : q.terms) sets.push_back(filtered_docs(ix, g, t, rc, hop_limit));

    DocSet result;
    if (q.op == BoolOp::Or) {
        for (const auto& s : sets) result = set_union(result, s);
    } else {
        result = intersect_all(std::move(sets));
    }
    if (q.op == BoolOp::Not) {
        DocSet drop = eval_or(ix, q.negated);
        DocSet out;
        std::set_difference(result.begin(), result.end(), drop.begin(), drop.end(),
                            std::back_inserter(out));
        result = std::move(out);
    }
    return result;
}

}  // namespace cir
