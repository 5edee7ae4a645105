#include "cdgeo/degeneration.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cdgeo/error.hpp"
#include "cdgeo/identities.hpp"

namespace cdgeo {

namespace {

constexpr long kSampleBound = 1000000;
constexpr int kSampleAttempts = 200;

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-kSampleBound, kSampleBound), den(1, kSampleBound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

std::vector<Expression> all_expressions(const Certificate& c) {
    std::vector<Expression> out;
    for (const auto& [name, e] : c.index) out.push_back(e);
    for (const auto& e : c.basis) out.push_back(e);
    for (const auto& [name, e] : c.target_assignment) out.push_back(e);
    return out;
}

std::vector<Expression> all_radicands(const Certificate& c) {
    std::vector<Expression> out;
    for (const auto& e : all_expressions(c))
        for (auto& r : e.radicands()) out.push_back(std::move(r));
    return out;
}

// Picks, for each radicand, a free variable occurring linearly in it, so that
// the radicand can be forced to a square by solving for that variable.
std::vector<std::string> designate_variables(const std::vector<Expression>& radicands,
                                             const std::vector<std::string>& free) {
    std::vector<std::string> designated(radicands.size());
    std::set<std::string> used;
    for (std::size_t r = 0; r < radicands.size(); ++r) {
        Scalar symbolic;
        try {
            symbolic = radicands[r].evaluate();
        } catch (const ArithmeticError&) {
            continue;
        }
        if (!symbolic.is_polynomial()) continue;
        for (const auto& v : free) {
            if (used.count(v) || symbolic.numerator().degree_in(v) != 1) continue;
            designated[r] = v;
            used.insert(v);
            break;
        }
    }
    return designated;
}

bool is_rational_square(const Scalar& s) {
    if (!s.is_rational()) return false;
    try {
        rational_sqrt(s.to_rational());
        return true;
    } catch (const ArithmeticError&) {
        return false;
    }
}

std::optional<Assignment> try_sample(const std::vector<std::string>& free, const std::vector<Expression>& radicands,
                                     const std::vector<std::string>& designated, std::mt19937_64& rng) {
    Assignment point;
    std::set<std::string> later(designated.begin(), designated.end());
    for (const auto& v : free)
        if (!later.count(v)) point[v] = Scalar(random_rational(rng));
    for (std::size_t r = 0; r < radicands.size(); ++r) {
        try {
            if (!designated[r].empty()) {
                const std::string& v = designated[r];
                Scalar value = radicands[r].evaluate(point);
                if (!value.is_polynomial() || value.variables() != std::vector<std::string>{v}) return std::nullopt;
                auto coeffs = value.numerator().coefficients_in(v);
                if (coeffs.size() > 2 || !coeffs.count(1)) return std::nullopt;
                Rational a = coeffs[1].constant_value();
                Rational b = coeffs.count(0) ? coeffs[0].constant_value() : Rational(0);
                Rational root = random_rational(rng);
                point[v] = Scalar(Rational((root * root - b) / a));
            }
            if (!is_rational_square(radicands[r].evaluate(point))) return std::nullopt;
        } catch (const ArithmeticError&) {
            return std::nullopt;
        }
    }
    return point;
}

Assignment sample_point(const Certificate& c, std::mt19937_64& rng) {
    std::vector<std::string> free = c.free_parameters();
    std::vector<Expression> radicands = all_radicands(c);
    std::vector<std::string> designated = designate_variables(radicands, free);
    for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
        // After a few failures, fall back to plain resampling of every variable.
        auto point = try_sample(free, radicands, attempt < kSampleAttempts / 2 ? designated
                                                                               : std::vector<std::string>(radicands.size()),
                                rng);
        if (point) return *point;
    }
    throw Error("could not sample parameters making every radicand a rational square");
}

Verdict verify_at(const Certificate& c, const Assignment& point) {
    Verdict verdict;
    std::size_t n = c.source.dim();

    Assignment full = point;
    Algebra source;
    try {
        for (const auto& [name, e] : c.index) full[name] = e.evaluate(point);
        source = substitute_algebra_params(c.source, full);
    } catch (const ArithmeticError&) {
        verdict.reason = "index substitution pole";
        return verdict;
    }

    Matrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        LinearForm row = c.basis[i].evaluate_linear(point);
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = row[j];
    }
    if (rank(basis) < n) {
        verdict.reason = "degenerate parametric basis";
        return verdict;
    }

    Algebra moved = constants_in_basis(source, basis);
    Algebra target = resolved_target(c, point);
    verdict.limits = Algebra(c.target.name(), n, target.params());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Witness w{i + 1, j + 1, k + 1, "", moved.constant(i, j, k), Scalar(), target.constant(i, j, k)};
                try {
                    w.limit = limit_at_zero(w.value);
                } catch (const ArithmeticError&) {
                    w.reason = "limit diverges";
                }
                if (w.reason.empty() && !(w.limit == w.expected)) w.reason = "limit mismatch";
                if (!w.reason.empty()) {
                    verdict.reason = w.reason;
                    verdict.witness = std::move(w);
                    return verdict;
                }
                verdict.limits.set_constant(i, j, k, w.limit);
            }
    verdict.accepted = true;
    return verdict;
}

}  // namespace

std::string Certificate::target_label() const {
    if (target_assignment.empty()) return target.name();
    std::string label = target.name() + "(";
    for (std::size_t i = 0; i < target_assignment.size(); ++i) {
        if (i) label += ",";
        std::string value = target_assignment[i].second.text();
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t") + 1);
        label += target_assignment[i].first + "=" + value;
    }
    return label + ")";
}

bool Certificate::has_sqrt() const {
    auto exprs = all_expressions(*this);
    return std::any_of(exprs.begin(), exprs.end(), [](const Expression& e) { return e.has_sqrt(); });
}

std::vector<std::string> Certificate::free_parameters() const {
    std::set<std::string> names(extra_params.begin(), extra_params.end());
    for (const auto& e : all_expressions(*this))
        for (const auto& v : e.variables()) names.insert(v);
    auto assigned = [](const NamedExpressions& list, const std::string& p) {
        return std::any_of(list.begin(), list.end(), [&](const auto& entry) { return entry.first == p; });
    };
    for (const auto& p : source.params())
        if (!assigned(index, p)) names.insert(p);
    for (const auto& p : target.params())
        if (!assigned(target_assignment, p)) names.insert(p);
    names.erase(std::string(kDeformationVariable));
    return {names.begin(), names.end()};
}

std::set<std::string> Certificate::allowed_variables() const {
    std::set<std::string> names(extra_params.begin(), extra_params.end());
    names.insert(source.params().begin(), source.params().end());
    names.insert(target.params().begin(), target.params().end());
    names.insert(std::string(kDeformationVariable));
    return names;
}

Algebra resolved_target(const Certificate& c, const Assignment& point) {
    Assignment values = point;
    for (const auto& [name, e] : c.target_assignment) values[name] = e.evaluate(point);
    Algebra out = substitute_algebra_params(c.target, values);
    out.set_name(c.target_label());
    return out;
}

Verdict verify_certificate(const Certificate& c, const VerifyOptions& options) {
    if (c.basis.size() != c.source.dim() || c.target.dim() != c.source.dim())
        throw DimensionError("certificate dimensions do not match");
    if (options.mode == VerifyMode::Exact) {
        if (c.has_sqrt()) throw Error("sqrt not allowed in exact mode");
        return verify_at(c, {});
    }
    if (options.samples < 1) throw Error("samples must be positive");
    std::mt19937_64 rng(options.seed);
    Verdict first;
    for (int s = 0; s < options.samples; ++s) {
        Assignment point = sample_point(c, rng);
        Verdict v = verify_at(c, point);
        if (s == 0) first = v;
        first.samples.push_back(point);
        if (!v.accepted) {
            v.samples = first.samples;
            return v;
        }
    }
    return first;
}

Certificate trivial_scaling_certificate(const Algebra& a) {
    Certificate c;
    c.name = "scaling_" + a.name();
    c.source = a;
    c.target = zero_algebra(a.dim());
    std::set<std::string> allowed = c.allowed_variables();
    for (const auto& p : a.params()) c.index.emplace_back(p, parse_expression(p, allowed));
    ParseOptions options;
    options.basis_dim = static_cast<int>(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        c.basis.push_back(parse_expression("t*e" + std::to_string(i + 1), allowed, options));
    return c;
}

namespace {

// An isomorphism invariant separates a and b.
bool distinguishable(const Algebra& a, const Algebra& b) {
    if (a.params().size() != b.params().size()) return true;
    InvariantProfile x = invariant_profile(a, ProfileMode::Extended), y = invariant_profile(b, ProfileMode::Extended);
    if (x.square != y.square || x.derivations != y.derivations || x.powers.dims != y.powers.dims ||
        x.annihilator != y.annihilator)
        return true;
    SymmetryReport sa = check_symmetry(a), sb = check_symmetry(b);
    return sa.kind != sb.kind || sa.also_anticommutative != sb.also_anticommutative;
}

}  // namespace

NecessaryConditions check_necessary_conditions(const Algebra& a, const Algebra& b, ProfileMode mode) {
    if (a.dim() != b.dim()) throw DimensionError("algebras have different dimensions");
    NecessaryConditions r;
    r.source = invariant_profile(a, mode);
    r.target = invariant_profile(b, mode);
    r.source_closure = a.params().size() + r.source.orbit;
    r.target_closure = b.params().size() + r.target.orbit;
    if (r.source.square < r.target.square) r.reasons.push_back("square dimension");
    if (r.target_closure > r.source_closure ||
        (r.target_closure == r.source_closure && !structurally_equal(a, b) && distinguishable(a, b)))
        r.reasons.push_back("orbit dimension");
    if (mode == ProfileMode::Extended) {
        const auto& x = r.source.powers.dims;
        const auto& y = r.target.powers.dims;
        for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
            std::size_t dx = x[std::min(i, x.size() - 1)], dy = y[std::min(i, y.size() - 1)];
            if (dx < dy) {
                r.reasons.push_back("power series");
                break;
            }
        }
        if (r.source.annihilator > r.target.annihilator) r.reasons.push_back("annihilator");
    }
    r.possible = r.reasons.empty();
    return r;
}

ClosureEstimate family_closure_dimension_estimate(const Algebra& family, int samples, std::uint64_t seed) {
    ClosureEstimate e;
    e.parameters = family.params().size();
    if (family.params().empty()) {
        e.orbit_dims.push_back(orbit_dimension(family));
        e.points.emplace_back();
        e.estimate = e.orbit_dims.back();
        return e;
    }
    std::mt19937_64 rng(seed);
    int attempts = 0;
    while (static_cast<int>(e.points.size()) < samples && attempts < 20 * std::max(samples, 1)) {
        ++attempts;
        Assignment point;
        for (const auto& p : family.params()) point[p] = Scalar(random_rational(rng));
        Algebra member;
        try {
            member = substitute_algebra_params(family, point);
        } catch (const ArithmeticError&) {
            continue;
        }
        e.points.push_back(point);
        e.orbit_dims.push_back(orbit_dimension(member));
    }
    if (e.points.empty()) throw Error("every sample hit a substitution pole");
    auto [lo, hi] = std::minmax_element(e.orbit_dims.begin(), e.orbit_dims.end());
    e.constant = *lo == *hi;
    e.estimate = e.parameters + *hi;
    return e;
}

MonotonicityReport check_monotonicity(const Certificate& c, const VerifyOptions& options) {
    Assignment point;
    if (c.has_sqrt() || options.mode == VerifyMode::Sampled) {
        std::mt19937_64 rng(options.seed);
        point = sample_point(c, rng);
    }
    Assignment fixed = point;
    MonotonicityReport report;
    for (const auto& [name, e] : c.index) {
        Scalar v = e.evaluate(point);
        if (v.uses(kDeformationVariable))
            ++report.family_parameters;
        else
            fixed[name] = v;
    }
    // Parameters with t-dependent index values are left free.
    Assignment source_values;
    for (const auto& [name, v] : fixed)
        if (std::find(c.source.params().begin(), c.source.params().end(), name) != c.source.params().end())
            source_values[name] = v;
    Algebra source = substitute_algebra_params(c.source, source_values);
    Algebra target = resolved_target(c, point);
    report.source = invariant_profile(source);
    report.target = invariant_profile(target);
    std::size_t k = report.family_parameters;
    if (report.target.square > report.source.square) report.violations.push_back("square dimension increased");
    if (report.target.derivations + k < report.source.derivations) report.violations.push_back("derivation dimension decreased");
    std::size_t bound = report.source.orbit + k;
    if (report.target.orbit > bound ||
        (report.target.orbit == bound && !structurally_equal(source, target) && distinguishable(source, target)))
        report.violations.push_back("orbit dimension did not drop");
    return report;
}

}  // namespace cdgeo
