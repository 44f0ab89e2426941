#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cir/types.hpp"

namespace cir {

enum class NodeKind { concept_class, instance };

struct ConceptNode {
    std::string id;
    std::string label;
    NodeKind kind = NodeKind::concept_class;
};

struct OntEdge {
    std::string src;
    std::string label;
    std::string dst;
};

// Labeled directed multigraph of concepts/instances plus a term -> sense-node
// association. Hop counting treats every edge as undirected, unit cost.
class ConceptGraph {
public:
    void add_node(ConceptNode n);
    void add_edge(const std::string& src, const std::string& label, const std::string& dst);
    void add_sense(const std::string& term, const std::string& node_id);

    bool has_node(const std::string& id) const { return nodes_.count(id) != 0; }
    const ConceptNode& node(const std::string& id) const { return nodes_.at(id); }
    const std::map<std::string, ConceptNode>& nodes() const { return nodes_; }
    const std::vector<OntEdge>& edges() const { return edges_; }
    const std::map<std::string, std::vector<std::string>>& senses() const { return senses_; }
    const std::vector<std::string>* senses_of(const std::string& term) const;
    const std::vector<std::string>& neighbors(const std::string& id) const;

private:
    std::map<std::string, ConceptNode> nodes_;
    std::vector<OntEdge> edges_;
    std::map<std::string, std::vector<std::string>> senses_;
    std::map<std::string, std::vector<std::string>> adj_;
};

// TSV lines: node<TAB>id<TAB>label<TAB>kind | edge<TAB>src<TAB>label<TAB>dst |
// sense<TAB>term<TAB>node-id. '#' comment lines and blank lines are skipped.
ConceptGraph load_ontology(const std::string& path);
ConceptGraph parse_ontology(const std::string& tsv_content);

inline constexpr int kUnreachable = -1;

// Shortest undirected path length; kUnreachable when disconnected.
int hop_distance(const ConceptGraph& g, const std::string& a, const std::string& b);

struct ReferenceConcept {
    std::string id;  // empty = UNKNOWN
    bool is_unknown() const { return id.empty(); }
    static ReferenceConcept unknown() { return {}; }
    bool operator==(const ReferenceConcept&) const = default;
};

struct RcCandidate {
    std::string id;
    int total_cost = 0;
    int max_term_dist = 0;
};

// Per-candidate costs for a term set: for each concept node c reachable from
// every sensed term, cost = sum over terms of min over senses of hop(s, c).
// Sorted by (cost, max per-term distance, id).
std::vector<RcCandidate> rc_candidates(const ConceptGraph& g,
                                       std::span<const std::string> terms);

ReferenceConcept resolve_rc(const ConceptGraph& g, std::span<const std::string> terms);

// True iff neither side is UNKNOWN and hop_distance(a, b) <= hop_limit.
bool related(const ConceptGraph& g, const ReferenceConcept& a,
             const ReferenceConcept& b, int hop_limit);

// Engine-wide default relatedness radius; one hop keeps sibling senses of the
// query concept retrievable while everything farther is filtered out.
inline constexpr int kDefaultHopLimit = 1;

}  // namespace cir
