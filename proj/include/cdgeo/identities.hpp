#pragma once

#include <string>

#include "cdgeo/algebra.hpp"

namespace cdgeo {

// D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for all basis pairs. Column b of D is D(e_b).
bool is_derivation(const Algebra& a, const Matrix& d);

// [L_a, L_b], [L_a, R_b] and [R_a, R_b] are derivations for all basis a, b.
struct CdReport {
    bool ll = false;
    bool lr = false;
    bool rr = false;
    bool is_cd() const { return ll && lr && rr; }
};

CdReport check_cd(const Algebra& a);

enum class Symmetry { Commutative, Anticommutative, Neither };

struct SymmetryReport {
    Symmetry kind = Symmetry::Neither;
    // Set when the algebra is both commutative and anticommutative (the zero product).
    bool also_anticommutative = false;
};

SymmetryReport check_symmetry(const Algebra& a);

std::string to_string(Symmetry s);

}  // namespace cdgeo
