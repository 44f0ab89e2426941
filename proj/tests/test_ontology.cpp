#include <doctest.h>

#include <map>
#include <random>

#include "cir/fixtures.hpp"
#include "cir/ontology.hpp"

using namespace cir;

namespace {

const char* kDeviceGraph = R"(node	computer	Computer	concept
node	electronic	Electronic	concept
node	animal	Animal	concept
node	mouse_device	Computer mouse	instance
node	mouse_rodent	Mouse	instance
node	keyboard_device	Keyboard	instance
edge	mouse_device	part-of	computer
edge	keyboard_device	part-of	computer
edge	computer	is-a	electronic
edge	mouse_rodent	is-a	animal
sense	mouse	mouse_device
sense	mouse	mouse_rodent
sense	keyboard	keyboard_device
)";

// Brute-force all-pairs shortest paths over the undirected view.
std::map<std::pair<std::string, std::string>, int> floyd(const ConceptGraph& g) {
    std::vector<std::string> ids;
    for (const auto& [id, n] : g.nodes()) ids.push_back(id);
    const int INF = 1 << 20;
    std::map<std::pair<std::string, std::string>, int> d;
    for (const auto& a : ids)
        for (const auto& b : ids) d[{a, b}] = a == b ? 0 : INF;
    for (const auto& e : g.edges()) {
        if (e.src == e.dst) continue;  // self loops do not shorten anything
        d[{e.src, e.dst}] = 1;
        d[{e.dst, e.src}] = 1;
    }
    for (const auto& k : ids)
        for (const auto& a : ids)
            for (const auto& b : ids)
                d[{a, b}] = std::min(d[{a, b}], d[{a, k}] + d[{k, b}]);
    for (auto& [k, v] : d)
        if (v >= INF) v = kUnreachable;
    return d;
}

ConceptGraph random_graph(std::mt19937& rng, int max_nodes = 12) {
    ConceptGraph g;
    int n = 2 + static_cast<int>(rng() % (max_nodes - 1));
    for (int i = 0; i < n; ++i) {
        g.add_node({"n" + std::to_string(i), "node",
                    rng() % 2 ? NodeKind::concept_class : NodeKind::instance});
    }
    int edges = static_cast<int>(rng() % (2 * n));
    for (int i = 0; i < edges; ++i) {
        g.add_edge("n" + std::to_string(rng() % n), "e", "n" + std::to_string(rng() % n));
    }
    return g;
}

}  // namespace

TEST_CASE("ontology TSV parsing") {
    auto g = parse_ontology(kDeviceGraph);
    CHECK(g.nodes().size() == 6);
    CHECK(g.senses_of("mouse")->size() == 2);
    CHECK(g.senses_of("keyboard")->size() == 1);
    CHECK(g.senses_of("zzz") == nullptr);
}

TEST_CASE("empty ontology loads as empty graph") {
    auto g = parse_ontology("");
    CHECK(g.nodes().empty());
    CHECK(g.edges().empty());
}

TEST_CASE("dangling references are rejected with the line number") {
    try {
        parse_ontology("node\ta\tA\tconcept\nedge\ta\tr\tmissing\n");
        FAIL("expected dangling_reference");
    } catch (const dangling_reference& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_ontology("sense\tw\tnowhere\n"), dangling_reference);
}

TEST_CASE("hop_distance basics") {
    auto g = parse_ontology(kDeviceGraph);
    CHECK(hop_distance(g, "computer", "computer") == 0);
    CHECK(hop_distance(g, "mouse_device", "computer") == 1);
    CHECK(hop_distance(g, "mouse_device", "keyboard_device") == 2);
    CHECK(hop_distance(g, "mouse_device", "animal") == kUnreachable);
}

TEST_CASE("hop_distance matches a brute-force oracle and is a metric") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng);
        auto oracle = floyd(g);
        std::vector<std::string> ids;
        for (const auto& [id, n] : g.nodes()) ids.push_back(id);
        for (const auto& a : ids) {
            for (const auto& b : ids) {
                int got = hop_distance(g, a, b);
                CHECK(got == oracle.at({a, b}));
                CHECK(got == hop_distance(g, b, a));  // symmetry
                CHECK((a != b || got == 0));
                if (got != kUnreachable) {
                    for (const auto& c : ids) {  // triangle inequality
                        int ac = oracle.at({a, c});
                        int cb = oracle.at({c, b});
                        if (ac != kUnreachable && cb != kUnreachable)
                            CHECK(got <= ac + cb);
                    }
                }
            }
        }
    }
}

TEST_CASE("resolve_rc worked scenarios") {
    const auto& en = fixtures::english_vsm().graph;
    const auto& ar = fixtures::arabic_vsm().graph;

    std::vector<std::string> q1{"mouse", "keyboard"};
    CHECK(resolve_rc(en, q1).id == "computer");

    std::vector<std::string> q2{"mouse", "eat", "corn"};
    CHECK(resolve_rc(en, q2).id == "agriculture");

    std::vector<std::string> q3{"مدن", "عين"};
    CHECK(resolve_rc(ar, q3).id == "geography");

    std::vector<std::string> q4{"تفاح", "بيضاء"};
    CHECK(resolve_rc(ar, q4).id == "شعار");

    std::vector<std::string> unknown{"zzz-unknown"};
    CHECK(resolve_rc(en, unknown).is_unknown());
}

TEST_CASE("resolve_rc single term") {
    auto g = parse_ontology(kDeviceGraph);
    // single sense -> nearest concept-kind node
    std::vector<std::string> kb{"keyboard"};
    CHECK(resolve_rc(g, kb).id == "computer");
    // unknown word
    std::vector<std::string> none{"corn"};
    CHECK(resolve_rc(g, none).is_unknown());
}

TEST_CASE("resolve_rc ignores words without senses") {
    const auto& en = fixtures::english_vsm().graph;
    std::vector<std::string> padded{"mouse", "qqq", "keyboard", "zzz"};
    CHECK(resolve_rc(en, padded).id == "computer");
}

TEST_CASE("resolve_rc is permutation invariant") {
    const auto& ar = fixtures::arabic_vsm().graph;
    std::vector<std::string> a{"كتاب", "عين", "فراهيدي"};
    std::vector<std::string> b{"فراهيدي", "كتاب", "عين"};
    std::vector<std::string> c{"عين", "فراهيدي", "كتاب"};
    auto rc = resolve_rc(ar, a);
    CHECK(rc == resolve_rc(ar, b));
    CHECK(rc == resolve_rc(ar, c));
    CHECK(rc.id == "فن");
}

TEST_CASE("adding a disconnected node never changes resolve_rc") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng);
        std::vector<std::string> terms;
        int t = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < t; ++i) {
            std::string term = "w" + std::to_string(i);
            std::string node = "n" + std::to_string(rng() % g.nodes().size());
            g.add_sense(term, node);
            terms.push_back(term);
        }
        auto before = resolve_rc(g, terms);
        g.add_node({"isolated", "x", NodeKind::concept_class});
        auto after = resolve_rc(g, terms);
        CHECK(before == after);
    }
}

TEST_CASE("related is equality at h=0 and adjacency at h=1") {
    auto g = parse_ontology(kDeviceGraph);
    ReferenceConcept comp{"computer"}, elec{"electronic"}, animal{"animal"};
    CHECK(related(g, comp, comp, 0));
    CHECK_FALSE(related(g, comp, elec, 0));
    CHECK(related(g, comp, elec, 1));
    CHECK_FALSE(related(g, comp, animal, 5));
    CHECK_FALSE(related(g, ReferenceConcept::unknown(), comp, 1));
    CHECK_FALSE(related(g, comp, ReferenceConcept::unknown(), 1));
}
