#include "cir/index.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cir {

const Posting* IndexPair::find_traditional(const std::string& term) const {
    auto it = traditional.find(term);
    return it == traditional.end() ? nullptr : &it->second;
}

const std::map<std::string, Posting>* IndexPair::groups(const std::string& term) const {
    auto it = semantic.find(term);
    return it == semantic.end() ? nullptr : &it->second;
}

IndexPair build_index(const Collection& c, const ConceptGraph& g, const StopWords& stops) {
    // term -> doc -> tf and term -> rc -> doc -> tf accumulators.
    std::map<std::string, std::map<DocId, int>> trad;
    std::map<std::string, std::map<std::string, std::map<DocId, int>>> sem;

    for (const auto& doc : c.docs) {
        for (const auto& phrase : doc.phrases) {
            auto terms = pipeline(phrase.words, stops);
            if (terms.empty()) continue;
            ReferenceConcept rc = resolve_rc(g, terms);
            for (const auto& t : terms) {
                trad[t][doc.id] += 1;
                sem[t][rc.id][doc.id] += 1;
            }
        }
    }

    IndexPair ix;
    ix.n_docs = c.n_docs();
    auto materialize = [](const std::map<DocId, int>& m) {
        Posting p;
        p.entries.reserve(m.size());
        for (auto [doc, tf] : m) p.entries.push_back({doc, tf});
        return p;
    };
    for (const auto& [term, docs] : trad) ix.traditional[term] = materialize(docs);
    for (const auto& [term, by_rc] : sem)
        for (const auto& [rc, docs] : by_rc) ix.semantic[term][rc] = materialize(docs);
    return ix;
}

void save_index(const IndexPair& ix, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open index file for writing: " + path);
    out << "CIRIDX v1 N=" << ix.n_docs << "\n";
    for (const auto& [term, by_rc] : ix.semantic) {
        for (const auto& [rc, posting] : by_rc) {
            out << term << '\t' << (rc.empty() ? kUnknownRcToken : rc.c_str()) << '\t';
            for (size_t i = 0; i < posting.entries.size(); ++i) {
                if (i) out << ',';
                out << posting.entries[i].doc << ':' << posting.entries[i].tf;
            }
            out << '\n';
        }
    }
    if (!out) throw io_error("write failed: " + path);
}

IndexPair load_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open index file: " + path);
    std::string header;
    if (!std::getline(in, header) || header.rfind("CIRIDX v1 N=", 0) != 0)
        throw version_mismatch("not a CIRIDX v1 file: " + path);
    IndexPair ix;
    try {
        ix.n_docs = std::stoi(header.substr(12));
    } catch (const std::exception&) {
        throw version_mismatch("bad document count in header");
    }

    std::map<std::string, std::map<DocId, int>> trad;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string term, rc, rest;
        if (!std::getline(ss, term, '\t') || !std::getline(ss, rc, '\t') ||
            !std::getline(ss, rest))
            throw parse_error("bad posting line", line_no);
        if (rc == kUnknownRcToken) rc.clear();
        Posting p;
        std::istringstream es(rest);
        std::string pair;
        DocId prev = 0;
        while (std::getline(es, pair, ',')) {
            auto colon = pair.find(':');
            if (colon == std::string::npos) throw parse_error("bad doc:tf pair", line_no);
            DocId doc;
            int tf;
            try {
                doc = std::stoi(pair.substr(0, colon));
                tf = std::stoi(pair.substr(colon + 1));
            } catch (const std::exception&) {
                throw parse_error("bad doc:tf pair", line_no);
            }
            if (doc <= prev || tf < 1)
                throw parse_error("entries must be doc-ascending with tf >= 1", line_no);
            prev = doc;
            p.entries.push_back({doc, tf});
            trad[term][doc] += tf;
        }
        if (p.entries.empty()) throw parse_error("posting without entries", line_no);
        if (!ix.semantic[term].emplace(rc, std::move(p)).second)
            throw parse_error("duplicate (term, rc) posting", line_no);
    }
    for (const auto& [term, docs] : trad) {
        Posting p;
        for (auto [doc, tf] : docs) p.entries.push_back({doc, tf});
        ix.traditional[term] = std::move(p);
    }
    return ix;
}

Collection synthesize_fixture(const std::vector<FixtureRow>& rows,
                              const ConceptGraph& g,
                              const std::map<std::string, std::string>& rc_anchors,
                              const StopWords& stops,
                              const std::vector<std::pair<DocId, std::string>>& extra_docs) {
    // doc -> rc -> term -> tf
    std::map<DocId, std::map<std::string, std::map<std::string, int>>> cells;
    for (const auto& row : rows) {
        DocId prev = 0;
        for (const auto& e : row.entries) {
            if (e.doc <= prev || e.tf < 1)
                throw infeasible_spec("entries must be doc-ascending with tf >= 1: " + row.term);
            prev = e.doc;
            int& tf = cells[e.doc][row.rc][row.term];
            if (tf != 0)
                throw infeasible_spec("duplicate (term, rc, doc) cell: " + row.term);
            tf = e.tf;
        }
    }

    std::vector<std::pair<DocId, std::string>> docs;
    for (const auto& [doc, by_rc] : cells) {
        std::string text;
        for (const auto& [rc, terms] : by_rc) {
            if (!text.empty()) text += ". ";
            std::string phrase;
            for (const auto& [term, tf] : terms) {
                for (int i = 0; i < tf; ++i) {
                    if (!phrase.empty()) phrase += ' ';
                    phrase += term;
                }
            }
            if (auto it = rc_anchors.find(rc); it != rc_anchors.end() && !it->second.empty()) {
                phrase += ' ';
                phrase += it->second;
            }
            text += phrase;
        }
        text += '.';
        docs.emplace_back(doc, std::move(text));
    }
    for (const auto& [doc, text] : extra_docs) {
        if (cells.count(doc)) throw infeasible_spec("extra doc id collides with spec rows");
        docs.emplace_back(doc, text);
    }
    std::sort(docs.begin(), docs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Collection c = make_collection(docs);

    // Re-index and require the prescribed rows to come back exactly.
    IndexPair ix = build_index(c, g, stops);
    std::map<std::string, size_t> groups_per_term;
    for (const auto& row : rows) {
        auto* by_rc = ix.groups(row.term);
        if (!by_rc)
            throw infeasible_spec("term vanished in the pipeline: " + row.term);
        auto it = by_rc->find(row.rc);
        if (it == by_rc->end())
            throw infeasible_spec("phrase for term '" + row.term +
                                  "' did not resolve to rc '" + row.rc + "'");
        Posting want;
        want.entries = row.entries;
        if (!(it->second == want))
            throw infeasible_spec("posting mismatch for term '" + row.term + "' rc '" +
                                  row.rc + "'");
        groups_per_term[row.term]++;
    }
    for (const auto& [term, n] : groups_per_term) {
        if (ix.groups(term)->size() != n)
            throw infeasible_spec("term '" + term + "' acquired extra concept groups");
    }
    return c;
}

}  // namespace cir
