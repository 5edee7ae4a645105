#pragma once

#include <string>
#include <vector>

#include "cdgeo/algebra.hpp"

namespace cdgeo {

// Ranks are taken over the field of rational functions in the parameters, so
// every value below is the generic one for a family.

std::size_t square_dimension(const Algebra& a);

struct PowerSeries {
    std::vector<std::size_t> dims;  // dim A^1, dim A^2, ... up to stabilization
    bool nilpotent = false;
    bool two_step = false;  // A A^2 = A^2 A = 0
};

// A^1 = A, A^(k+1) = sum over i + j = k + 1 of A^i A^j.
PowerSeries power_series_dims(const Algebra& a);

std::size_t annihilator_dimension(const Algebra& a);

struct DerivationSpace {
    std::size_t dimension = 0;
    std::vector<Matrix> basis;
};

// The n^3 x n^2 system of D(e_i e_j) = D(e_i) e_j + e_i D(e_j); unknown
// a * n + b is the entry D(a, b).
Matrix derivation_system(const Algebra& a);

DerivationSpace derivation_algebra(const Algebra& a);

// n^2 - dim Der(A).
std::size_t orbit_dimension(const Algebra& a);

enum class ProfileMode { Paper, Extended };

// Behaviour of an invariant along a degeneration A -> B.
enum class Direction { NonIncreasing, NonDecreasing, StrictlyDecreasing };

struct ProfileEntry {
    std::string name;
    std::string value;
    Direction direction;
};

struct InvariantProfile {
    ProfileMode mode = ProfileMode::Paper;
    std::size_t square = 0;
    std::size_t derivations = 0;
    std::size_t orbit = 0;
    PowerSeries powers;             // extended mode only
    std::size_t annihilator = 0;    // extended mode only

    std::vector<ProfileEntry> entries() const;
};

InvariantProfile invariant_profile(const Algebra& a, ProfileMode mode = ProfileMode::Paper);

// Remark printed with profiles about the direction of dim Der.
extern const char* const kDerivationDirectionNote;

std::string to_string(Direction d);

}  // namespace cdgeo
