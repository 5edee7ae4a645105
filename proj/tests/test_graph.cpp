#include <algorithm>
#include <filesystem>
#include <set>

#include "cdgeo/graph.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace cdgeo;
using testing::builtin;
using testing::member;

namespace {

Scalar rat(long p, long q = 1) { return Scalar(Rational(p, q)); }

Algebra named(Algebra a, const std::string& name) {
    a.set_name(name);
    return a;
}

Catalog small_catalog() {
    Catalog c;
    c.add(named(member(builtin("N3"), {{"alpha", rat(1)}}), "N3_1"));
    c.add(named(member(builtin("N2"), {{"alpha", rat(1)}}), "N2_1"));
    c.add(zero_algebra(4));
    return c;
}

DegenerationGraph abstract_graph(const std::vector<std::string>& names, const std::vector<std::pair<std::string, std::string>>& edges) {
    DegenerationGraph g;
    for (const auto& n : names) {
        GraphNode node;
        node.name = n;
        node.algebra = zero_algebra(1, n);
        g.nodes.push_back(node);
    }
    for (const auto& [s, t] : edges) g.edges.push_back({s, t, Evidence::Certificate, s + t, ""});
    return g;
}

std::set<std::pair<std::string, std::string>> edge_set(const DegenerationGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges) out.insert({e.source, e.target});
    return out;
}

std::filesystem::path data_dir() { return std::filesystem::path(CDGEO_TEST_DATA); }

// Reachability by depth-first search from every node.
std::set<std::pair<std::string, std::string>> reachability(const DegenerationGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& start : g.nodes) {
        std::vector<std::string> stack = {start.name};
        std::set<std::string> seen;
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            for (const auto& e : g.edges)
                if (e.source == cur && !seen.count(e.target)) {
                    seen.insert(e.target);
                    stack.push_back(e.target);
                }
        }
        for (const auto& s : seen)
            if (s != start.name) out.insert({start.name, s});
    }
    return out;
}

}  // namespace

TEST_CASE("build_graph blocks the square-dimension pair") {
    DegenerationGraph g = build_graph(small_catalog(), {});
    CHECK(g.nodes.size() == 3);
    const GraphBlock* b = g.find_block("N3_1", "N2_1");
    REQUIRE(b);
    CHECK(std::find(b->reasons.begin(), b->reasons.end(), "square dimension") != b->reasons.end());
    CHECK(g.edges.size() == 2);
    for (const auto& e : g.edges) {
        CHECK(e.evidence == Evidence::TrivialScaling);
        CHECK(e.target == "zero4");
    }
    for (const auto& e : g.edges) CHECK_FALSE(g.find_block(e.source, e.target));
}

TEST_CASE("single algebra graph") {
    Catalog c;
    c.add(builtin("N2"));
    DegenerationGraph g = saturate(build_graph(c, {}));
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
    CHECK(g.blocks.empty());
    auto report = components_report(g);
    REQUIRE(report.candidates.size() == 1);
    CHECK(report.candidates[0].name == "N2");
    CHECK(report.candidates[0].family);
}

TEST_CASE("malformed files report the file name") {
    Catalog resolve(builtin_catalog());
    try {
        load_certificate_directory(data_dir() / "malformed", resolve);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.file() == "missing_row.cert");
        CHECK(std::string(e.what()) == "missing_row.cert, line 7: basis row missing: E3");
    }
    CHECK_THROWS_AS(load_catalog_directory(data_dir() / "malformed"), ParseError);
}

TEST_CASE("rejected certificates abort the build") {
    Catalog resolve(builtin_catalog());
    auto certs = load_certificate_directory(data_dir() / "bad_certs", resolve);
    REQUIRE(certs.size() == 1);
    try {
        build_graph(small_catalog(), certs);
        FAIL("expected a verification failure");
    } catch (const VerificationFailure& e) {
        REQUIRE(e.verdict().witness);
        CHECK(e.verdict().witness->i == 1);
        CHECK(e.verdict().witness->k == 2);
    }
}

TEST_CASE("saturate examples") {
    auto g = saturate(abstract_graph({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}}));
    const GraphEdge* e = g.find_edge("A", "C");
    REQUIRE(e);
    CHECK(e->evidence == Evidence::Transitive);
    CHECK(e->via == "B");

    auto blocked = abstract_graph({"A", "B"}, {{"A", "B"}});
    blocked.blocks.push_back({"A", "B", {"square dimension"}});
    CHECK_THROWS_AS(saturate(blocked), GraphInconsistency);

    auto derived = abstract_graph({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
    derived.blocks.push_back({"A", "C", {"orbit dimension"}});
    try {
        saturate(derived);
        FAIL("expected an inconsistency");
    } catch (const GraphInconsistency& x) {
        CHECK(x.source() == "A");
        CHECK(x.target() == "C");
    }

    CHECK(edge_set(saturate(g)) == edge_set(g));
    CHECK(saturate(g).edges.size() == g.edges.size());
}

TEST_CASE("saturate is the transitive closure, idempotent and monotone (property)") {
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 2 + iter % 6;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        std::bernoulli_distribution keep(0.25);
        for (const auto& a : names)
            for (const auto& b : names)
                if (a != b && keep(rng)) edges.push_back({a, b});
        auto g = abstract_graph(names, edges);
        auto s = saturate(g);
        auto before = edge_set(g), after = edge_set(s);
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
        CHECK(after == reachability(g));
        CHECK(edge_set(saturate(s)) == after);
        for (const auto& e : s.edges)
            if (e.evidence == Evidence::Transitive) {
                CHECK(after.count({e.source, e.via}));
                CHECK(before.count({e.via, e.target}) + after.count({e.via, e.target}) > 0);
            }

        auto report = components_report(s);
        std::set<std::string> expected;
        for (const auto& v : names) {
            bool maximal = true;
            for (const auto& u : names)
                if (u != v && after.count({u, v}) && !after.count({v, u})) maximal = false;
            if (maximal) expected.insert(v);
        }
        std::set<std::string> got;
        for (const auto& c : report.candidates) got.insert(c.name);
        CHECK(got == expected);
    }
}

TEST_CASE("components of a chain") {
    auto g = saturate(abstract_graph({"A", "B", "zero"}, {{"A", "B"}, {"B", "zero"}}));
    auto report = components_report(g);
    REQUIRE(report.candidates.size() == 1);
    CHECK(report.candidates[0].name == "A");
    CHECK(report.candidates[0].dominates.size() == 2);
    REQUIRE_FALSE(report.warnings.empty());
    CHECK(report.warnings[0].find("not a proof of non-degeneration") != std::string::npos);
}

TEST_CASE("corpus graph is monotone along every edge (property)") {
    Catalog catalog = load_catalog_directory(data_dir() / "catalog");
    Catalog resolve(builtin_catalog());
    for (const auto& a : catalog.algebras()) resolve.add(a);
    auto certs = load_certificate_directory(data_dir() / "certs", resolve);
    DegenerationGraph g = saturate(build_graph(catalog, certs));
    CHECK(g.find_edge("N2_1", "M"));
    CHECK(g.find_edge("D401", "B"));
    CHECK(g.find_edge("N2", "N2(alpha=1)"));
    const GraphEdge* chain = g.find_edge("N2_1", "M1");
    REQUIRE(chain);
    CHECK(chain->evidence == Evidence::Transitive);
    CHECK(chain->via == "M");
    for (const auto& e : g.edges) {
        const GraphNode* a = g.find_node(e.source);
        const GraphNode* b = g.find_node(e.target);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(b->profile.square <= a->profile.square);
        CHECK(b->closure.estimate <= a->closure.estimate);
        if (b->closure.estimate == a->closure.estimate) CHECK_FALSE(check_necessary_conditions(a->algebra, b->algebra).reasons.size());
        CHECK_FALSE(g.find_block(e.source, e.target));
    }

    std::string dot = to_dot(g);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);

    auto report = components_report(g);
    auto json = nlohmann::json::parse(to_json(g, report));
    for (const char* key : {"nodes", "edges", "blocks", "components"}) CHECK(json.contains(key));
    CHECK(json["nodes"].size() == g.nodes.size());
    CHECK(json["edges"].size() == g.edges.size());
    CHECK(json["blocks"].size() == g.blocks.size());
    CHECK(json["components"]["candidates"].size() == report.candidates.size());
}
