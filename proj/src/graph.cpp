#include "cdgeo/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cdgeo {

namespace {

std::string describe(const Verdict& v) {
    std::string s = v.reason;
    if (v.witness) {
        const auto& w = *v.witness;
        s += " at (" + std::to_string(w.i) + "," + std::to_string(w.j) + "," + std::to_string(w.k) + ")";
    }
    return s;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

GraphNode make_node(std::string name, Algebra a, const GraphOptions& options, bool derived) {
    GraphNode n;
    n.name = std::move(name);
    n.profile = invariant_profile(a);
    n.closure = family_closure_dimension_estimate(a, options.closure_samples, options.verify.seed);
    n.algebra = std::move(a);
    n.derived = derived;
    return n;
}

}  // namespace

VerificationFailure::VerificationFailure(const std::string& certificate, Verdict verdict)
    : Error("certificate " + certificate + " rejected: " + describe(verdict)), verdict_(std::move(verdict)) {}

const GraphNode* DegenerationGraph::find_node(const std::string& name) const {
    for (const auto& n : nodes)
        if (n.name == name) return &n;
    return nullptr;
}

const GraphEdge* DegenerationGraph::find_edge(const std::string& source, const std::string& target) const {
    for (const auto& e : edges)
        if (e.source == source && e.target == target) return &e;
    return nullptr;
}

const GraphBlock* DegenerationGraph::find_block(const std::string& source, const std::string& target) const {
    for (const auto& b : blocks)
        if (b.source == source && b.target == target) return &b;
    return nullptr;
}

DegenerationGraph build_graph(const Catalog& catalog, const std::vector<Certificate>& certificates,
                              const GraphOptions& options) {
    DegenerationGraph g;
    for (const auto& a : catalog.algebras()) g.nodes.push_back(make_node(a.name(), a, options, false));

    for (const auto& c : certificates) {
        VerifyOptions vo = options.verify;
        if (c.has_sqrt()) vo.mode = VerifyMode::Sampled;
        Verdict v = verify_certificate(c, vo);
        if (!v.accepted) throw VerificationFailure(c.name, v);

        std::string source = c.source.name();
        if (!g.find_node(source)) g.nodes.push_back(make_node(source, c.source, options, true));
        std::string target = c.target_label();
        if (!g.find_node(target)) g.nodes.push_back(make_node(target, resolved_target(c), options, true));
        if (source == target || g.find_edge(source, target)) continue;
        g.edges.push_back({source, target, Evidence::Certificate, c.name, ""});
    }

    for (const auto& n : std::vector<GraphNode>(g.nodes)) {
        std::string zero = "zero" + std::to_string(n.algebra.dim());
        const GraphNode* z = g.find_node(zero);
        if (!z || n.name == zero || !z->algebra.is_zero() || g.find_edge(n.name, zero)) continue;
        Verdict v = verify_certificate(trivial_scaling_certificate(n.algebra));
        if (!v.accepted) throw VerificationFailure("scaling_" + n.name, v);
        g.edges.push_back({n.name, zero, Evidence::TrivialScaling, "", ""});
    }

    for (const auto& a : g.nodes)
        for (const auto& b : g.nodes) {
            if (a.name == b.name || a.algebra.dim() != b.algebra.dim()) continue;
            NecessaryConditions nc = check_necessary_conditions(a.algebra, b.algebra, ProfileMode::Paper);
            if (nc.possible) continue;
            if (g.find_edge(a.name, b.name))
                throw GraphInconsistency(a.name, b.name, "is certified but blocked by " + join(nc.reasons, ", "));
            g.blocks.push_back({a.name, b.name, nc.reasons});
        }
    return g;
}

DegenerationGraph saturate(DegenerationGraph g) {
    std::map<std::pair<std::string, std::string>, bool> edge;
    for (const auto& e : g.edges) {
        if (const GraphBlock* block = g.find_block(e.source, e.target))
            throw GraphInconsistency(e.source, e.target, "is recorded but blocked by " + join(block->reasons, ", "));
        edge[{e.source, e.target}] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : g.nodes)
            for (const auto& b : g.nodes) {
                if (!edge.count({a.name, b.name})) continue;
                for (const auto& c : g.nodes) {
                    if (c.name == a.name || edge.count({a.name, c.name}) || !edge.count({b.name, c.name})) continue;
                    if (const GraphBlock* block = g.find_block(a.name, c.name))
                        throw GraphInconsistency(a.name, c.name,
                                                 "is derived via " + b.name + " but blocked by " + join(block->reasons, ", "));
                    g.edges.push_back({a.name, c.name, Evidence::Transitive, "", b.name});
                    edge[{a.name, c.name}] = true;
                    changed = true;
                }
            }
    }
    return g;
}

ComponentsReport components_report(const DegenerationGraph& g) {
    ComponentsReport r;
    for (const auto& n : g.nodes) {
        bool maximal = true;
        for (const auto& e : g.edges)
            if (e.target == n.name && e.source != n.name && !g.find_edge(n.name, e.source)) maximal = false;
        if (!maximal) continue;
        ComponentCandidate c;
        c.name = n.name;
        c.family = n.algebra.is_family();
        c.closure_dimension = n.closure.estimate;
        for (const auto& e : g.edges)
            if (e.source == n.name) c.dominates.push_back(e.target);
        r.candidates.push_back(std::move(c));
    }
    r.warnings.push_back("candidates are maximal in the recorded graph; a missing edge is not a proof of non-degeneration unless a block is recorded");
    for (const auto& a : r.candidates)
        for (const auto& b : r.candidates) {
            if (a.name == b.name) continue;
            const GraphNode* na = g.find_node(a.name);
            const GraphNode* nb = g.find_node(b.name);
            if (na->algebra.dim() != nb->algebra.dim() || g.find_block(a.name, b.name)) continue;
            r.warnings.push_back("no edge and no block recorded for " + a.name + " -> " + b.name);
        }
    for (const auto& n : g.nodes)
        if (!n.closure.constant)
            r.warnings.push_back("sampled orbit dimension of " + n.name + " is not constant");
    return r;
}

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::Certificate: return "certificate";
        case Evidence::TrivialScaling: return "trivial-scaling";
        case Evidence::Transitive: return "transitive";
    }
    return "";
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const DegenerationGraph& g) {
    std::ostringstream os;
    os << "digraph degenerations {\n";
    os << "  rankdir=TB;\n  node [shape=box];\n";
    for (const auto& n : g.nodes) {
        std::string label = quoted(n.name);
        label.insert(label.size() - 1, "\\nclosure " + std::to_string(n.closure.estimate));
        os << "  " << quoted(n.name) << " [label=" << label << "];\n";
    }
    for (const auto& e : g.edges) {
        os << "  " << quoted(e.source) << " -> " << quoted(e.target) << " [";
        if (e.evidence == Evidence::Transitive)
            os << "style=dashed, label=" << quoted("via " + e.via);
        else
            os << "style=solid, label=" << quoted(e.evidence == Evidence::Certificate ? e.certificate : "scaling");
        os << "];\n";
    }
    for (const auto& b : g.blocks)
        os << "  " << quoted(b.source) << " -> " << quoted(b.target) << " [color=red, fontcolor=red, style=dotted, constraint=false, label="
           << quoted("blocked: " + join(b.reasons, ", ")) << "];\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const DegenerationGraph& g, const ComponentsReport& report) {
    using nlohmann::json;
    json nodes = json::array();
    for (const auto& n : g.nodes) {
        json orbits = json::array();
        for (auto d : n.closure.orbit_dims) orbits.push_back(d);
        nodes.push_back({{"name", n.name},
                         {"dim", n.algebra.dim()},
                         {"params", n.algebra.params()},
                         {"derived", n.derived},
                         {"invariants", {{"square", n.profile.square}, {"derivations", n.profile.derivations}, {"orbit", n.profile.orbit}}},
                         {"closure_estimate", n.closure.estimate},
                         {"sampled_orbit_dims", orbits}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        json item = {{"source", e.source}, {"target", e.target}, {"evidence", to_string(e.evidence)}};
        if (e.evidence == Evidence::Certificate) item["certificate"] = e.certificate;
        if (e.evidence == Evidence::Transitive) item["via"] = e.via;
        edges.push_back(item);
    }
    json blocks = json::array();
    for (const auto& b : g.blocks) blocks.push_back({{"source", b.source}, {"target", b.target}, {"reasons", b.reasons}});
    json candidates = json::array();
    for (const auto& c : report.candidates)
        candidates.push_back({{"name", c.name},
                              {"kind", c.family ? "family" : "single algebra"},
                              {"closure_dimension_estimate", c.closure_dimension},
                              {"dominates", c.dominates}});
    json out = {{"nodes", nodes},
                {"edges", edges},
                {"blocks", blocks},
                {"components", {{"candidates", candidates}, {"warnings", report.warnings}}}};
    return out.dump(2) + "\n";
}

}  // namespace cdgeo
