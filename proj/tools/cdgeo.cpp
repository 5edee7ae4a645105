#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdgeo/catalog.hpp"
#include "cdgeo/graph.hpp"
#include "cdgeo/identities.hpp"

using namespace cdgeo;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

// A path to an algebra file, or the name of a built-in algebra.
Algebra load_algebra(const std::string& spec) {
    if (std::filesystem::exists(spec)) return parse_algebra_file(read_file(spec));
    for (auto& a : builtin_catalog())
        if (a.name() == spec) return a;
    throw Error("cannot read " + spec);
}

Catalog lookup_catalog(const std::string& dir) {
    Catalog catalog(builtin_catalog());
    if (dir.empty()) return catalog;
    Catalog extra = load_catalog_directory(dir);
    for (const auto& a : extra.algebras()) catalog.add(a);
    return catalog;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string chain_text(const std::vector<std::size_t>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? ", " : "") + std::to_string(dims[i]);
    return s + "]";
}

void print_header(const Algebra& a) {
    std::cout << "algebra " << a.name() << " (dim " << a.dim();
    if (!a.params().empty()) {
        std::cout << ", params";
        for (const auto& p : a.params()) std::cout << " " << p;
    }
    std::cout << ")\n";
}

int run_check(const std::string& file) {
    Algebra a = load_algebra(file);
    print_header(a);
    CdReport cd = check_cd(a);
    std::cout << "[L,L] derivations: " << yes_no(cd.ll) << "\n";
    std::cout << "[L,R] derivations: " << yes_no(cd.lr) << "\n";
    std::cout << "[R,R] derivations: " << yes_no(cd.rr) << "\n";
    std::cout << "CD-algebra: " << yes_no(cd.is_cd()) << "\n";
    SymmetryReport sym = check_symmetry(a);
    std::cout << "symmetry: " << to_string(sym.kind) << (sym.also_anticommutative ? " (also anticommutative)" : "") << "\n";
    PowerSeries ps = power_series_dims(a);
    std::cout << "power series dims: " << chain_text(ps.dims) << "\n";
    std::cout << "nilpotent: " << yes_no(ps.nilpotent) << "\n";
    std::cout << "2-step nilpotent: " << yes_no(ps.two_step) << "\n";
    return kOk;
}

Assignment parse_sample(const std::string& text, const Algebra& a) {
    Assignment out;
    std::set<std::string> allowed(a.params().begin(), a.params().end());
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("expected name=value in --sample, got '" + item + "'");
        std::string name = item.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (!allowed.count(name)) throw Error("'" + name + "' is not a parameter of " + a.name());
        out[name] = parse_scalar(item.substr(eq + 1), allowed);
    }
    return out;
}

int run_invariants(const std::string& file, bool extended, const std::string& sample) {
    Algebra a = load_algebra(file);
    if (!sample.empty()) a = substitute_algebra_params(a, parse_sample(sample, a));
    print_header(a);
    InvariantProfile p = invariant_profile(a, extended ? ProfileMode::Extended : ProfileMode::Paper);
    for (const auto& e : p.entries())
        std::cout << e.name << ": " << e.value << "  (" << to_string(e.direction) << " along degenerations)\n";
    if (extended) {
        std::cout << "nilpotent: " << yes_no(p.powers.nilpotent) << "\n";
        std::cout << "2-step nilpotent: " << yes_no(p.powers.two_step) << "\n";
    }
    if (a.is_family()) std::cout << "note: ranks are generic in the parameters\n";
    std::cout << "note: " << kDerivationDirectionNote << "\n";
    return kOk;
}

void print_point(const Assignment& point) {
    bool first = true;
    for (const auto& [name, value] : point) {
        std::cout << (first ? "" : ", ") << name << " = " << value;
        first = false;
    }
}

int run_verify(const std::string& file, const std::string& mode, int samples, std::uint64_t seed, const std::string& catalog_dir) {
    Catalog catalog = lookup_catalog(catalog_dir);
    Certificate c = parse_certificate_file(read_file(file), catalog);
    VerifyOptions options;
    if (mode == "sampled" || (mode == "auto" && c.has_sqrt()))
        options.mode = VerifyMode::Sampled;
    else if (mode != "exact" && mode != "auto")
        throw Error("unknown mode '" + mode + "'");
    options.samples = samples;
    options.seed = seed;
    Verdict v = verify_certificate(c, options);
    std::cout << "certificate " << c.name << ": " << c.source.name() << " -> " << c.target_label() << "\n";
    if (options.mode == VerifyMode::Sampled)
        for (std::size_t s = 0; s < v.samples.size(); ++s) {
            std::cout << "sample " << s + 1 << ": ";
            print_point(v.samples[s]);
            std::cout << "\n";
        }
    if (v.accepted) {
        std::cout << "verdict: accepted\n";
        std::cout << "limit constants:\n";
        std::istringstream table(serialize(v.limits));
        std::string line;
        while (std::getline(table, line))
            if (line.rfind("e", 0) == 0) std::cout << "  " << line << "\n";
        return kOk;
    }
    std::cout << "verdict: rejected (" << v.reason << ")\n";
    if (v.witness) {
        const Witness& w = *v.witness;
        std::cout << "witness: (i,j,k) = (" << w.i << "," << w.j << "," << w.k << ")\n";
        std::cout << "  constant in parametric basis: " << w.value << "\n";
        if (w.reason != "limit diverges") std::cout << "  limit: " << w.limit << "\n";
        std::cout << "  expected: " << w.expected << "\n";
    }
    return kVerificationFailure;
}

int run_nondeg(const std::string& first, const std::string& second, bool extended) {
    Algebra a = load_algebra(first), b = load_algebra(second);
    NecessaryConditions nc = check_necessary_conditions(a, b, extended ? ProfileMode::Extended : ProfileMode::Paper);
    std::cout << a.name() << " -> " << b.name() << "\n";
    std::cout << "square: " << nc.source.square << " vs " << nc.target.square << "\n";
    std::cout << "closure dimension: " << nc.source_closure << " vs " << nc.target_closure << "\n";
    if (extended) {
        std::cout << "power series: " << chain_text(nc.source.powers.dims) << " vs " << chain_text(nc.target.powers.dims) << "\n";
        std::cout << "annihilator: " << nc.source.annihilator << " vs " << nc.target.annihilator << "\n";
    }
    if (nc.possible) {
        std::cout << "result: possible\n";
    } else {
        std::cout << "result: blocked (";
        for (std::size_t i = 0; i < nc.reasons.size(); ++i) std::cout << (i ? ", " : "") << nc.reasons[i];
        std::cout << ")\n";
    }
    return kOk;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

int run_graph(const std::string& catalog_dir, const std::string& certs_dir, const std::string& dot, const std::string& json,
              int samples, std::uint64_t seed) {
    Catalog catalog = load_catalog_directory(catalog_dir);
    Catalog resolve(builtin_catalog());
    for (const auto& a : catalog.algebras()) resolve.add(a);
    auto certificates = load_certificate_directory(certs_dir, resolve);
    GraphOptions options;
    options.verify.samples = samples;
    options.verify.seed = seed;
    options.closure_samples = samples;
    DegenerationGraph g = saturate(build_graph(catalog, certificates, options));
    ComponentsReport report = components_report(g);

    std::cout << "nodes: " << g.nodes.size() << "\n";
    for (const auto& n : g.nodes)
        std::cout << "  " << n.name << "  square " << n.profile.square << ", orbit " << n.profile.orbit << ", closure estimate "
                  << n.closure.estimate << (n.derived ? "  (from certificate)" : "") << "\n";
    std::cout << "edges: " << g.edges.size() << "\n";
    for (const auto& e : g.edges) {
        std::cout << "  " << e.source << " -> " << e.target << "  [" << to_string(e.evidence);
        if (e.evidence == Evidence::Certificate) std::cout << " " << e.certificate;
        if (e.evidence == Evidence::Transitive) std::cout << " via " << e.via;
        std::cout << "]\n";
    }
    std::cout << "blocks: " << g.blocks.size() << "\n";
    for (const auto& b : g.blocks) {
        std::cout << "  " << b.source << " -/-> " << b.target << "  [";
        for (std::size_t i = 0; i < b.reasons.size(); ++i) std::cout << (i ? ", " : "") << b.reasons[i];
        std::cout << "]\n";
    }
    std::cout << "component candidates: " << report.candidates.size() << "\n";
    for (const auto& c : report.candidates) {
        std::cout << "  " << c.name << "  (" << (c.family ? "family" : "single algebra") << ", closure dimension estimate "
                  << c.closure_dimension << ", dominates " << c.dominates.size() << ")\n";
    }
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    if (!dot.empty()) write_text(dot, to_dot(g));
    if (!json.empty()) write_text(json, to_json(g, report));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degeneration toolkit for algebras given by structure constants"};
    app.require_subcommand(1);

    std::string file, second, mode = "auto", sample, catalog_dir, certs_dir, dot, json;
    bool extended = false;
    int samples = 5;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "identity report: CD flags, symmetry, nilpotency chain");
    check->add_option("algebra", file, "algebra file or built-in name")->required();

    auto* inv = app.add_subcommand("invariants", "invariant profile");
    inv->add_option("algebra", file, "algebra file or built-in name")->required();
    inv->add_flag("--extended", extended, "add power series and annihilator");
    inv->add_option("--sample", sample, "parameter values, e.g. alpha=1,beta=-2");

    auto* verify = app.add_subcommand("verify", "verify a degeneration certificate");
    verify->add_option("certificate", file, "certificate file")->required();
    verify->add_option("--mode", mode, "exact, sampled, or auto (sampled only when sqrt occurs)")
        ->check(CLI::IsMember({"auto", "exact", "sampled"}));
    verify->add_option("--samples", samples, "number of parameter samples")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--catalog", catalog_dir, "directory of .alg files to resolve names");

    auto* nondeg = app.add_subcommand("nondeg", "invariant-based non-degeneration test");
    nondeg->add_option("source", file, "algebra file or built-in name")->required();
    nondeg->add_option("target", second, "algebra file or built-in name")->required();
    nondeg->add_flag("--extended", extended, "add power series and annihilator comparisons");

    auto* graph = app.add_subcommand("graph", "degeneration graph and component candidates");
    graph->add_option("catalog", catalog_dir, "directory of .alg files")->required();
    graph->add_option("certificates", certs_dir, "directory of .cert files")->required();
    graph->add_option("--dot", dot, "write DOT output");
    graph->add_option("--json", json, "write JSON report");
    graph->add_option("--samples", samples, "samples for closure estimates and sampled certificates")->check(CLI::PositiveNumber);
    graph->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return run_check(file);
        if (*inv) return run_invariants(file, extended, sample);
        if (*verify) return run_verify(file, mode, samples, seed, catalog_dir);
        if (*nondeg) return run_nondeg(file, second, extended);
        if (*graph) return run_graph(catalog_dir, certs_dir, dot, json, samples, seed);
    } catch (const VerificationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const GraphInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
