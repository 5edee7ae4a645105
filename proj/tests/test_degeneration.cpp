#include <algorithm>
#include <chrono>

#include "cdgeo/degeneration.hpp"
#include "cdgeo/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdgeo;
using testing::builtin;
using testing::member;

namespace {

Scalar rat(long p, long q = 1) { return Scalar(Rational(p, q)); }

Catalog catalog() { return Catalog(builtin_catalog()); }

Certificate cert(const std::string& text) { return parse_certificate_file(text, catalog()); }

const char* kDiagonal = R"(degeneration diagonal
algebra S
dim 3
e1*e1 = e2
e1*e2 = e3
end
algebra T
dim 3
e1*e1 = e2
end
source S
target T
E1 = t*e1
E2 = t^2*e2
E3 = t^2*e3
)";

std::string diagonal_certificate(const Algebra& source, const std::vector<int>& exps, const Algebra& target) {
    std::string text = "degeneration random\n" + serialize(source) + "end\n";
    Algebra t = target;
    t.set_name("Target");
    text += serialize(t) + "end\nsource " + source.name() + "\ntarget Target\n";
    for (std::size_t i = 0; i < exps.size(); ++i)
        text += "E" + std::to_string(i + 1) + " = t^" + std::to_string(exps[i]) + "*e" + std::to_string(i + 1) + "\n";
    return text;
}

}  // namespace

TEST_CASE("diagonal worked example is accepted") {
    Certificate c = cert(kDiagonal);
    Verdict v = verify_certificate(c);
    CHECK(v.accepted);
    CHECK(v.reason.empty());
    CHECK(structurally_equal(v.limits, c.target));
}

TEST_CASE("perturbed exponent yields the first failing entry") {
    std::string text = kDiagonal;
    text.replace(text.find("E2 = t^2"), 8, "E2 = t^3");
    Verdict v = verify_certificate(cert(text));
    CHECK_FALSE(v.accepted);
    REQUIRE(v.witness);
    CHECK(v.witness->i == 1);
    CHECK(v.witness->j == 1);
    CHECK(v.witness->k == 2);
    CHECK(v.witness->reason == "limit diverges");
}

TEST_CASE("trivial scaling is accepted for every catalog algebra") {
    for (const auto& a : builtin_catalog()) {
        Certificate c = trivial_scaling_certificate(a);
        CHECK(c.index.size() == a.params().size());
        Verdict v = verify_certificate(c);
        CHECK(v.accepted);
        CHECK(v.limits.is_zero());
        auto params = a.params();
        std::sort(params.begin(), params.end());
        CHECK(c.free_parameters() == params);
    }
}

TEST_CASE("altered target is rejected at (2,1,3)") {
    Certificate c = cert(R"(degeneration altered
source N2
index alpha = 1
target N2 with alpha = 2
E1 = e1
E2 = e2
E3 = e3
E4 = e4
)");
    CHECK(c.target_label() == "N2(alpha=2)");
    Verdict v = verify_certificate(c);
    CHECK_FALSE(v.accepted);
    REQUIRE(v.witness);
    CHECK(v.witness->i == 2);
    CHECK(v.witness->j == 1);
    CHECK(v.witness->k == 3);
    CHECK(v.witness->reason == "limit mismatch");
    CHECK(v.witness->limit == rat(-1));
    CHECK(v.witness->expected == rat(-2));
}

TEST_CASE("D401 at the origin degenerates by weights") {
    Certificate c = cert(R"(degeneration weights
algebra B
dim 4
e2*e1 = e3
e2*e2 = e3
end
source D401
index lambda = 0, alpha = 0, beta = 0
target B
E1 = t*e1
E2 = t*e2
E3 = t^2*e3
E4 = t*e4
)");
    Verdict v = verify_certificate(c);
    CHECK(v.accepted);
    auto mono = check_monotonicity(c);
    CHECK(mono.ok());
}

TEST_CASE("degenerate basis and index poles") {
    Certificate c = cert(R"(degeneration flat
source N2
index alpha = 1
target zero4
E1 = t*e1
E2 = t*e1
E3 = t*e3
E4 = t*e4
)");
    CHECK(verify_certificate(c).reason == "degenerate parametric basis");

    Certificate pole = cert(R"(degeneration pole
algebra F
dim 2
params a
e1*e1 = 1/a*e2
end
source F
index a = 0
target zero2
E1 = t*e1
E2 = t*e2
)");
    CHECK(verify_certificate(pole).reason == "index substitution pole");
}

TEST_CASE("family targets are verified symbolically") {
    Certificate c = cert(R"(degeneration family
source N2
target N2
E1 = t*e1
E2 = t*e2
E3 = t^2*e3
E4 = t^2*e4
)");
    Verdict v = verify_certificate(c);
    CHECK(v.accepted);
    CHECK(c.free_parameters() == std::vector<std::string>{"alpha"});
}

TEST_CASE("sampled mode with Theta") {
    const char* text = R"(degeneration theta
algebra S
dim 2
params lam
e1*e1 = e2
end
source S
target S
E1 = Theta(lam)*e1
E2 = Theta(lam)^2*e2
)";
    Certificate c = cert(text);
    CHECK(c.has_sqrt());
    CHECK_THROWS_WITH_AS(verify_certificate(c), "sqrt not allowed in exact mode", Error);
    Verdict v = verify_certificate(c, {VerifyMode::Sampled, 5, 7});
    CHECK(v.accepted);
    CHECK(v.samples.size() == 5);
    for (const auto& s : v.samples) {
        Rational radicand = 1 - 4 * s.at("lam").to_rational();
        CHECK_NOTHROW(rational_sqrt(radicand));
    }

    std::string wrong = text;
    wrong.replace(wrong.find("Theta(lam)^2"), 12, "Theta(lam)*Psi(lam)");
    Verdict w = verify_certificate(cert(wrong), {VerifyMode::Sampled, 5, 7});
    CHECK_FALSE(w.accepted);
    REQUIRE(w.witness);
    CHECK(w.witness->i == 1);
    CHECK(w.witness->j == 1);
    CHECK(w.witness->k == 2);

    Verdict again = verify_certificate(c, {VerifyMode::Sampled, 5, 7});
    CHECK(again.samples.size() == v.samples.size());
    for (std::size_t i = 0; i < v.samples.size(); ++i) CHECK(again.samples[i].at("lam") == v.samples[i].at("lam"));
}

TEST_CASE("witnesses are lexicographically first (property)") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> exponent(0, 3);
    std::bernoulli_distribution flip(0.5);
    int rejected = 0;
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 2 + iter % 3;
        Algebra a = testing::random_algebra(rng, n, 0.3);
        a.set_name("Src");
        std::vector<int> exps(n);
        for (auto& e : exps) e = exponent(rng);
        Algebra target("T", n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (exps[i] + exps[j] == exps[k]) target.set_constant(i, j, k, a.constant(i, j, k));
        if (flip(rng)) {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            target.set_constant(pick(rng), pick(rng), pick(rng), Scalar(testing::small_rational(rng)));
        }
        Verdict v = verify_certificate(cert(diagonal_certificate(a, exps, target)));
        auto expected = testing::diagonal_first_failure(a, exps, target);
        CHECK(v.accepted == !expected);
        if (expected) {
            ++rejected;
            REQUIRE(v.witness);
            CHECK(v.witness->i == (*expected)[0]);
            CHECK(v.witness->j == (*expected)[1]);
            CHECK(v.witness->k == (*expected)[2]);
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("conjugating the target keeps certificates valid (property)") {
    std::mt19937_64 rng(52);
    Certificate base = cert(kDiagonal);
    for (int iter = 0; iter < 5; ++iter) {
        Matrix m = testing::random_invertible(rng, 3);
        std::string text = "degeneration conj\n" + serialize(base.source) + "end\n";
        Algebra target = constants_in_basis(base.target, m);
        target.set_name("T2");
        text += serialize(target) + "end\nsource S\ntarget T2\n";
        const char* rows[] = {"t*e1", "t^2*e2", "t^2*e3"};
        for (std::size_t i = 0; i < 3; ++i) {
            text += "E" + std::to_string(i + 1) + " = 0";
            for (std::size_t j = 0; j < 3; ++j) text += " + (" + m(i, j).to_string() + ")*(" + rows[j] + ")";
            text += "\n";
        }
        CHECK(verify_certificate(cert(text)).accepted);
    }
}

TEST_CASE("necessary conditions examples") {
    auto nc = check_necessary_conditions(member(builtin("N3"), {{"alpha", rat(1)}}), member(builtin("N2"), {{"alpha", rat(1)}}));
    CHECK_FALSE(nc.possible);
    CHECK(std::find(nc.reasons.begin(), nc.reasons.end(), "square dimension") != nc.reasons.end());
    CHECK(check_necessary_conditions(zero_algebra(4), zero_algebra(4)).possible);
    CHECK(check_necessary_conditions(builtin("N2"), zero_algebra(4)).possible);
    CHECK_FALSE(check_necessary_conditions(zero_algebra(4), builtin("N2")).possible);
    CHECK_THROWS_AS(check_necessary_conditions(zero_algebra(3), zero_algebra(4)), DimensionError);

    auto ext = check_necessary_conditions(zero_algebra(4), builtin("D401"), ProfileMode::Extended);
    CHECK(std::find(ext.reasons.begin(), ext.reasons.end(), "annihilator") != ext.reasons.end());
}

TEST_CASE("closure estimates") {
    Algebra n2 = builtin("N2");
    auto single = family_closure_dimension_estimate(member(n2, {{"alpha", rat(1)}}));
    CHECK(single.parameters == 0);
    CHECK(single.estimate == orbit_dimension(member(n2, {{"alpha", rat(1)}})));

    auto fam = family_closure_dimension_estimate(builtin("D401"), 5, 3);
    CHECK(fam.parameters == 3);
    CHECK(fam.orbit_dims.size() == 5);
    CHECK(fam.estimate == 3 + *std::max_element(fam.orbit_dims.begin(), fam.orbit_dims.end()));
    for (std::size_t i = 0; i < fam.points.size(); ++i)
        CHECK(fam.orbit_dims[i] == 16 - testing::oracle_derivation_dimension(member(builtin("D401"), fam.points[i])));
}

TEST_CASE("accepted certificates pass the necessary conditions (property)") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t n = 2 + iter % 3;
        Algebra a = testing::random_algebra(rng, n, 0.3);
        a.set_name("Src");
        std::vector<int> exps(n);
        std::uniform_int_distribution<int> exponent(0, 3);
        for (auto& e : exps) e = exponent(rng);
        Algebra target("T", n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (exps[i] + exps[j] == exps[k]) target.set_constant(i, j, k, a.constant(i, j, k));
        Certificate c = cert(diagonal_certificate(a, exps, target));
        Verdict v = verify_certificate(c);
        if (!v.accepted) continue;
        CHECK(check_necessary_conditions(c.source, v.limits).possible);
        CHECK(check_monotonicity(c).ok());
    }
}

TEST_CASE("certificate engine runs within budget") {
    auto start = std::chrono::steady_clock::now();
    for (const auto& a : builtin_catalog()) CHECK(verify_certificate(trivial_scaling_certificate(a)).accepted);
    CHECK(verify_certificate(cert(kDiagonal)).accepted);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
}
