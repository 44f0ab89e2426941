#include "cir/ontology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace cir {

void ConceptGraph::add_node(ConceptNode n) {
    if (n.id.empty() || n.label.empty())
        throw invariant_violation("ontology node needs non-empty id and label");
    adj_.try_emplace(n.id);
    nodes_[n.id] = std::move(n);
}

void ConceptGraph::add_edge(const std::string& src, const std::string& label,
                            const std::string& dst) {
    if (!has_node(src)) throw dangling_reference(src, 0);
    if (!has_node(dst)) throw dangling_reference(dst, 0);
    edges_.push_back({src, label, dst});
    adj_[src].push_back(dst);
    adj_[dst].push_back(src);
}

void ConceptGraph::add_sense(const std::string& term, const std::string& node_id) {
    if (!has_node(node_id)) throw dangling_reference(node_id, 0);
    auto& v = senses_[term];
    if (std::find(v.begin(), v.end(), node_id) == v.end()) v.push_back(node_id);
}

const std::vector<std::string>* ConceptGraph::senses_of(const std::string& term) const {
    auto it = senses_.find(term);
    return it == senses_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& ConceptGraph::neighbors(const std::string& id) const {
    static const std::vector<std::string> kEmpty;
    auto it = adj_.find(id);
    return it == adj_.end() ? kEmpty : it->second;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, '\t')) out.push_back(field);
    return out;
}

ConceptGraph parse_lines(std::istream& in) {
    ConceptGraph g;
    std::string line;
    int line_no = 0;
    // Two passes so edge/sense lines may appear before their nodes.
    std::vector<std::pair<int, std::vector<std::string>>> deferred;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto f = split_tabs(line);
        if (f[0] == "node") {
            if (f.size() != 4) throw parse_error("node line needs id, label, kind", line_no);
            NodeKind kind;
            if (f[3] == "concept") kind = NodeKind::concept_class;
            else if (f[3] == "instance") kind = NodeKind::instance;
            else throw parse_error("kind must be 'concept' or 'instance'", line_no);
            if (f[1] == "-") throw parse_error("node id '-' is reserved", line_no);
            g.add_node({f[1], f[2], kind});
        } else if (f[0] == "edge" || f[0] == "sense") {
            deferred.emplace_back(line_no, std::move(f));
        } else {
            throw parse_error("unknown record type '" + f[0] + "'", line_no);
        }
    }
    for (auto& [no, f] : deferred) {
        if (f[0] == "edge") {
            if (f.size() != 4) throw parse_error("edge line needs src, label, dst", no);
            if (!g.has_node(f[1])) throw dangling_reference(f[1], no);
            if (!g.has_node(f[3])) throw dangling_reference(f[3], no);
            g.add_edge(f[1], f[2], f[3]);
        } else {
            if (f.size() != 3) throw parse_error("sense line needs term, node-id", no);
            if (!g.has_node(f[2])) throw dangling_reference(f[2], no);
            g.add_sense(f[1], f[2]);
        }
    }
    return g;
}

}  // namespace

ConceptGraph load_ontology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open ontology file: " + path);
    return parse_lines(in);
}

ConceptGraph parse_ontology(const std::string& tsv_content) {
    std::istringstream in(tsv_content);
    return parse_lines(in);
}

namespace {

// Single-source BFS distances over the undirected view.
std::map<std::string, int> bfs(const ConceptGraph& g, const std::string& from) {
    std::map<std::string, int> dist;
    std::deque<std::string> q;
    dist[from] = 0;
    q.push_back(from);
    while (!q.empty()) {
        std::string cur = std::move(q.front());
        q.pop_front();
        int d = dist[cur];
        for (const auto& nb : g.neighbors(cur)) {
            if (dist.try_emplace(nb, d + 1).second) q.push_back(nb);
        }
    }
    return dist;
}

}  // namespace

int hop_distance(const ConceptGraph& g, const std::string& a, const std::string& b) {
    if (!g.has_node(a) || !g.has_node(b))
        throw invariant_violation("hop_distance on unknown node");
    if (a == b) return 0;
    auto dist = bfs(g, a);
    auto it = dist.find(b);
    return it == dist.end() ? kUnreachable : it->second;
}

std::vector<RcCandidate> rc_candidates(const ConceptGraph& g,
                                       std::span<const std::string> terms) {
    // Distinct terms that have at least one sense.
    std::set<std::string> sensed;
    for (const auto& t : terms) {
        if (g.senses_of(t)) sensed.insert(t);
    }
    if (sensed.empty()) return {};

    // One BFS per distinct sense node.
    std::map<std::string, std::map<std::string, int>> sense_dist;
    for (const auto& t : sensed) {
        for (const auto& s : *g.senses_of(t)) {
            if (!sense_dist.count(s)) sense_dist[s] = bfs(g, s);
        }
    }

    std::vector<RcCandidate> out;
    for (const auto& [id, node] : g.nodes()) {
        if (node.kind != NodeKind::concept_class) continue;
        int total = 0, max_d = 0;
        bool reachable = true;
        for (const auto& t : sensed) {
            int best = kUnreachable;
            for (const auto& s : *g.senses_of(t)) {
                auto it = sense_dist[s].find(id);
                if (it != sense_dist[s].end() && (best == kUnreachable || it->second < best))
                    best = it->second;
            }
            if (best == kUnreachable) {
                reachable = false;
                break;
            }
            total += best;
            max_d = std::max(max_d, best);
        }
        if (reachable) out.push_back({id, total, max_d});
    }
    std::sort(out.begin(), out.end(), [](const RcCandidate& a, const RcCandidate& b) {
        if (a.total_cost != b.total_cost) return a.total_cost < b.total_cost;
        if (a.max_term_dist != b.max_term_dist) return a.max_term_dist < b.max_term_dist;
        return a.id < b.id;
    });
    return out;
}

ReferenceConcept resolve_rc(const ConceptGraph& g, std::span<const std::string> terms) {
    std::set<std::string> sensed;
    for (const auto& t : terms) {
        if (g.senses_of(t)) sensed.insert(t);
    }
    if (sensed.empty()) return ReferenceConcept::unknown();

    // Single term with a single sense: take the nearest concept-kind node
    // (the sense itself when it already is one).
    if (sensed.size() == 1) {
        const auto& senses = *g.senses_of(*sensed.begin());
        if (senses.size() == 1) {
            const std::string& s = senses.front();
            if (g.node(s).kind == NodeKind::concept_class) return {s};
            auto dist = bfs(g, s);
            std::string best;
            int best_d = kUnreachable;
            for (const auto& [id, d] : dist) {
                if (g.node(id).kind != NodeKind::concept_class) continue;
                if (best_d == kUnreachable || d < best_d || (d == best_d && id < best)) {
                    best = id;
                    best_d = d;
                }
            }
            return best.empty() ? ReferenceConcept::unknown() : ReferenceConcept{best};
        }
    }

    auto cands = rc_candidates(g, terms);
    if (cands.empty()) return ReferenceConcept::unknown();
    return {cands.front().id};
}

bool related(const ConceptGraph& g, const ReferenceConcept& a,
             const ReferenceConcept& b, int hop_limit) {
    if (a.is_unknown() || b.is_unknown()) return false;
    int d = hop_distance(g, a.id, b.id);
    return d != kUnreachable && d <= hop_limit;
}

}  // namespace cir
