#pragma once

#include <string>
#include <vector>

#include "cdgeo/catalog.hpp"
#include "cdgeo/error.hpp"

namespace cdgeo {

enum class Evidence { Certificate, TrivialScaling, Transitive };

struct GraphNode {
    std::string name;
    Algebra algebra;
    InvariantProfile profile;
    ClosureEstimate closure;
    bool derived = false;  // created from a certificate target such as N2(alpha=1)
};

struct GraphEdge {
    std::string source;
    std::string target;
    Evidence evidence = Evidence::Certificate;
    std::string certificate;  // certificate name, for Evidence::Certificate
    std::string via;          // middle node, for Evidence::Transitive
};

struct GraphBlock {
    std::string source;
    std::string target;
    std::vector<std::string> reasons;
};

struct DegenerationGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<GraphBlock> blocks;

    const GraphNode* find_node(const std::string& name) const;
    const GraphEdge* find_edge(const std::string& source, const std::string& target) const;
    const GraphBlock* find_block(const std::string& source, const std::string& target) const;
};

// A certificate in the batch was rejected.
class VerificationFailure : public Error {
public:
    VerificationFailure(const std::string& certificate, Verdict verdict);
    const Verdict& verdict() const { return verdict_; }

private:
    Verdict verdict_;
};

struct GraphOptions {
    VerifyOptions verify;  // certificates with sqrt always run sampled
    int closure_samples = 5;
};

// Nodes for the catalog, edges for verified certificates and for the scaling
// degeneration to zero<n> when that node exists, paper-mode blocks for every
// ordered pair of distinct nodes of equal dimension without an edge.
// Throws VerificationFailure for a rejected certificate and GraphInconsistency
// when invariants block a certified edge.
DegenerationGraph build_graph(const Catalog& catalog, const std::vector<Certificate>& certificates,
                              const GraphOptions& options = {});

// Transitive closure. Throws GraphInconsistency if a derived edge meets a block.
DegenerationGraph saturate(DegenerationGraph g);

struct ComponentCandidate {
    std::string name;
    bool family = false;
    std::size_t closure_dimension = 0;
    std::vector<std::string> dominates;
};

struct ComponentsReport {
    std::vector<ComponentCandidate> candidates;
    std::vector<std::string> warnings;
};

// Candidates are the maximal elements of the reachability preorder.
ComponentsReport components_report(const DegenerationGraph& g);

std::string to_dot(const DegenerationGraph& g);
std::string to_json(const DegenerationGraph& g, const ComponentsReport& report);

std::string to_string(Evidence e);

}  // namespace cdgeo
