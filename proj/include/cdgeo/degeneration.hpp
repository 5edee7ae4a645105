#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgeo/algebra.hpp"
#include "cdgeo/expression.hpp"
#include "cdgeo/invariants.hpp"

namespace cdgeo {

using NamedExpressions = std::vector<std::pair<std::string, Expression>>;

// A parametric basis E_i = sum_j a_i^j(t) e_j for a source algebra (or family)
// together with a parametric index assigning source parameters, and the
// algebra the constants are claimed to converge to.
struct Certificate {
    std::string name;
    Algebra source;
    NamedExpressions index;
    std::vector<Expression> basis;  // basis[i] defines E_{i+1}
    Algebra target;                 // as catalogued, before target_assignment
    NamedExpressions target_assignment;
    std::vector<std::string> extra_params;

    // Label such as "N2(alpha=1)"; the bare target name when nothing is assigned.
    std::string target_label() const;
    bool has_sqrt() const;
    // Names other than t that stay symbolic in exact mode.
    std::vector<std::string> free_parameters() const;
    // Names allowed in index, basis and target expressions.
    std::set<std::string> allowed_variables() const;
};

enum class VerifyMode { Exact, Sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Exact;
    int samples = 5;
    std::uint64_t seed = 1;
};

// First failing structure constant, 1-based indices.
struct Witness {
    std::size_t i = 0, j = 0, k = 0;
    std::string reason;  // "limit diverges" or "limit mismatch"
    Scalar value;        // constant in the parametric basis
    Scalar limit;        // its limit, when it exists
    Scalar expected;     // target constant
};

struct Verdict {
    bool accepted = false;
    std::string reason;              // empty when accepted
    std::optional<Witness> witness;  // per-entry failures only
    Algebra limits;                  // limit constants of the first checked point
    std::vector<Assignment> samples; // sampled mode only
};

// Throws Error("sqrt not allowed in exact mode") if an exact run meets a sqrt,
// and Error when sampled mode cannot make the radicands rational squares.
Verdict verify_certificate(const Certificate& c, const VerifyOptions& options = {});

Certificate trivial_scaling_certificate(const Algebra& a);

struct NecessaryConditions {
    bool possible = true;
    std::vector<std::string> reasons;
    InvariantProfile source;
    InvariantProfile target;
    std::size_t source_closure = 0;  // parameters + generic orbit dimension
    std::size_t target_closure = 0;
};

// Blocks A -> B when dim A^2 < dim B^2, when the closure dimension of B
// exceeds that of A, or when they are equal and some isomorphism invariant
// separates A and B. Extended mode also
// compares the power series chain and the annihilator.
NecessaryConditions check_necessary_conditions(const Algebra& a, const Algebra& b,
                                               ProfileMode mode = ProfileMode::Paper);

struct ClosureEstimate {
    std::size_t estimate = 0;
    std::size_t parameters = 0;
    std::vector<Assignment> points;
    std::vector<std::size_t> orbit_dims;
    bool constant = true;
};

// parameters + max sampled orbit dimension. An upper estimate, not a proof.
ClosureEstimate family_closure_dimension_estimate(const Algebra& family, int samples = 5, std::uint64_t seed = 1);

// Paper-mode monotonicity along an accepted certificate. Parameters whose index
// value depends on t stay free and are counted as k extra dimensions.
struct MonotonicityReport {
    std::vector<std::string> violations;
    InvariantProfile source;
    InvariantProfile target;
    std::size_t family_parameters = 0;
    bool ok() const { return violations.empty(); }
};

MonotonicityReport check_monotonicity(const Certificate& c, const VerifyOptions& options = {});

// The algebra the certificate claims, with target_assignment applied.
Algebra resolved_target(const Certificate& c, const Assignment& point = {});

}  // namespace cdgeo
