#include "cdgeo/identities.hpp"
#include "cdgeo/invariants.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdgeo;
using testing::builtin;
using testing::member;

namespace {

Scalar rat(long p, long q = 1) { return Scalar(Rational(p, q)); }

Algebra square_to_second() {
    Algebra a("A", 2);
    a.set_constant(0, 0, 1, rat(1));
    return a;
}

// Product table evaluated at a rational point, for the oracle.
Algebra at_point(const Algebra& a, std::mt19937_64& rng) {
    Assignment values;
    for (const auto& p : a.params()) values.emplace(p, Scalar(testing::small_rational(rng, 7)));
    return member(a, values);
}

}  // namespace

TEST_CASE("square_dimension examples") {
    CHECK(square_dimension(builtin("N3")) == 1);
    CHECK(square_dimension(builtin("N2")) == 2);
    CHECK(square_dimension(builtin("D401")) == 2);
    CHECK(square_dimension(zero_algebra(4)) == 0);
}

TEST_CASE("power_series_dims examples") {
    auto n2 = power_series_dims(builtin("N2"));
    CHECK(n2.dims == std::vector<std::size_t>{4, 2, 0});
    CHECK(n2.nilpotent);
    CHECK(n2.two_step);
    auto d = power_series_dims(builtin("D401"));
    CHECK(d.dims == std::vector<std::size_t>{4, 2, 1, 0});
    CHECK(d.nilpotent);
    CHECK_FALSE(d.two_step);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(power_series_dims(zero_algebra(n)).dims == std::vector<std::size_t>{n, 0});

    Algebra idem("I", 1);
    idem.set_constant(0, 0, 0, rat(1));
    auto i = power_series_dims(idem);
    CHECK_FALSE(i.nilpotent);
    CHECK(i.dims == std::vector<std::size_t>{1, 1});
}

TEST_CASE("annihilator_dimension examples") {
    CHECK(annihilator_dimension(zero_algebra(3)) == 3);
    CHECK(annihilator_dimension(member(builtin("N3"), {{"alpha", rat(1)}})) == 1);
    CHECK(annihilator_dimension(square_to_second()) == 1);
}

TEST_CASE("derivation_algebra and orbit_dimension examples") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(derivation_algebra(zero_algebra(n)).dimension == n * n);
        CHECK(orbit_dimension(zero_algebra(n)) == 0);
    }
    auto der = derivation_algebra(square_to_second());
    CHECK(der.dimension == 2);
    for (const auto& d : der.basis) {
        CHECK(d(0, 1).is_zero());
        CHECK(d(1, 1) == rat(2) * d(0, 0));
    }
    CHECK(orbit_dimension(square_to_second()) == 2);
    Algebra idem("I", 1);
    idem.set_constant(0, 0, 0, rat(1));
    CHECK(derivation_algebra(idem).dimension == 0);
}

TEST_CASE("invariant_profile examples against the oracle") {
    Algebra n31 = member(builtin("N3"), {{"alpha", rat(1)}});
    auto p = invariant_profile(n31);
    std::size_t d3 = testing::oracle_derivation_dimension(n31);
    CHECK(p.square == 1);
    CHECK(p.derivations == d3);
    CHECK(p.orbit == 16 - d3);

    auto z = invariant_profile(zero_algebra(4));
    CHECK(z.square == 0);
    CHECK(z.derivations == 16);
    CHECK(z.orbit == 0);

    // Generic D401: oracle at several random points; the generic rank is the maximum.
    std::mt19937_64 rng(41);
    std::size_t generic = 16;
    for (int i = 0; i < 5; ++i) generic = std::min(generic, testing::oracle_derivation_dimension(at_point(builtin("D401"), rng)));
    auto d = invariant_profile(builtin("D401"));
    CHECK(d.square == 2);
    CHECK(d.derivations == generic);
    CHECK(d.orbit == 16 - generic);

    auto entries = invariant_profile(builtin("N2"), ProfileMode::Extended).entries();
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].direction == Direction::NonIncreasing);
    CHECK(entries[1].direction == Direction::NonDecreasing);
    CHECK(entries[2].direction == Direction::StrictlyDecreasing);
}

TEST_CASE("derivation dimension matches the oracle (property)") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 1 + iter % 4;
        Algebra a = iter % 3 == 0 ? testing::random_two_step(rng, std::max<std::size_t>(n, 2)) : testing::random_algebra(rng, n, 0.2);
        CHECK(derivation_algebra(a).dimension == testing::oracle_derivation_dimension(a));
    }
}

TEST_CASE("invariants are isomorphism-invariant (property)") {
    std::mt19937_64 rng(43);
    std::vector<Algebra> algebras = {builtin("N2"), builtin("N3"), member(builtin("D401"), {{"lambda", rat(2)}, {"alpha", rat(-1)}, {"beta", rat(1, 3)}})};
    for (int i = 0; i < 3; ++i) algebras.push_back(testing::random_algebra(rng, 3, 0.25));
    for (const auto& a : algebras) {
        auto before = invariant_profile(a, ProfileMode::Extended);
        for (int iter = 0; iter < 20; ++iter) {
            Algebra b = base_change(a, testing::random_invertible(rng, a.dim()));
            auto after = invariant_profile(b, ProfileMode::Extended);
            CHECK(before.square == after.square);
            CHECK(before.derivations == after.derivations);
            CHECK(before.orbit == after.orbit);
            CHECK(before.powers.dims == after.powers.dims);
            CHECK(before.annihilator == after.annihilator);
        }
    }
}

TEST_CASE("square_dimension is the second power dimension (property)") {
    std::mt19937_64 rng(44);
    for (int iter = 0; iter < 30; ++iter) {
        Algebra a = testing::random_algebra(rng, 2 + iter % 3, 0.2);
        auto dims = power_series_dims(a).dims;
        REQUIRE(dims.size() >= 2);
        CHECK(square_dimension(a) == dims[1]);
    }
}
