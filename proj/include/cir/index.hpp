#pragma once

#include <map>
#include <string>
#include <vector>

#include "cir/corpus.hpp"
#include "cir/ontology.hpp"
#include "cir/textpipe.hpp"
#include "cir/types.hpp"

namespace cir {

struct PostingEntry {
    DocId doc = 0;
    int tf = 0;
    bool operator==(const PostingEntry&) const = default;
};

// Entries sorted by doc id, doc ids distinct, every tf >= 1.
struct Posting {
    std::vector<PostingEntry> entries;
    int df() const { return static_cast<int>(entries.size()); }
    bool operator==(const Posting&) const = default;
};

// Serialized marker for postings whose phrase had no resolvable concept.
inline const std::string kUnknownRc{};
inline const char* kUnknownRcToken = "-";

struct IndexPair {
    int n_docs = 0;
    std::map<std::string, Posting> traditional;
    // term -> rc -> posting; rc == kUnknownRc groups unresolved phrases.
    std::map<std::string, std::map<std::string, Posting>> semantic;

    const Posting* find_traditional(const std::string& term) const;
    const std::map<std::string, Posting>* groups(const std::string& term) const;
    bool operator==(const IndexPair&) const = default;
};

IndexPair build_index(const Collection& c, const ConceptGraph& g, const StopWords& stops);

// Versioned line format: "CIRIDX v1 N=<n>" then one semantic posting per
// line, `term<TAB>rc<TAB>doc:tf,doc:tf,...`. The traditional side is the
// per-term merge of the semantic groups and is rebuilt on load.
void save_index(const IndexPair& ix, const std::string& path);
IndexPair load_index(const std::string& path);

// One semantic posting row of a fixture specification.
struct FixtureRow {
    std::string term;
    std::string rc;
    std::vector<PostingEntry> entries;
};

// Emits a synthetic collection whose build_index output reproduces the given
// rows exactly. Terms of one (doc, rc) cell share a phrase; each rc may map
// to an anchor word whose sense pins the phrase's resolved concept. Throws
// infeasible_spec when re-indexing the result does not reproduce the rows.
Collection synthesize_fixture(const std::vector<FixtureRow>& rows,
                              const ConceptGraph& g,
                              const std::map<std::string, std::string>& rc_anchors,
                              const StopWords& stops,
                              const std::vector<std::pair<DocId, std::string>>& extra_docs = {});

}  // namespace cir
