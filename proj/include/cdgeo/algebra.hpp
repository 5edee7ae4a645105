#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdgeo/matrix.hpp"

namespace cdgeo {

// An n-dimensional algebra given by structure constants
// e_i e_j = sum_k c(i, j, k) e_k, indices 0-based.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string name, std::size_t dim, std::vector<std::string> params = {});

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& params() const { return params_; }
    bool is_family() const { return !params_.empty(); }

    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
    void set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) { c_[index(i, j, k)] = std::move(value); }

    // Coordinates of e_i e_j.
    Vector basis_product(std::size_t i, std::size_t j) const;
    bool is_zero() const;

    // Entrywise equality of canonical constants (and equal dimension).
    friend bool structurally_equal(const Algebra& a, const Algebra& b);

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    std::string name_;
    std::size_t dim_ = 0;
    std::vector<std::string> params_;
    std::vector<Scalar> c_;
};

Algebra zero_algebra(std::size_t dim, std::string name = "");

Vector basis_vector(std::size_t dim, std::size_t i);

// Bilinear product of coordinate vectors.
Vector product(const Algebra& a, const Vector& x, const Vector& y);

struct MultiplicationOperators {
    Matrix left;   // L_a y = a y
    Matrix right;  // R_a y = y a
};

MultiplicationOperators mul_operators(const Algebra& a, const Vector& x);

// Constants of g * mu, where (g * mu)(x, y) = g mu(g^-1 x, g^-1 y).
// Throws ArithmeticError("not invertible") for singular g.
Algebra base_change(const Algebra& a, const Matrix& g);

// Constants in the basis E_i = sum_j rows(i, j) e_j.
Algebra constants_in_basis(const Algebra& a, const Matrix& rows);

// Substitutes values for parameters. The parameter list drops assigned names
// and gains the non-t variables of the values. Assigning t is rejected.
Algebra substitute_algebra_params(const Algebra& a, const Assignment& assignment);

// Sorted union of the variables used by the constants.
std::vector<std::string> used_variables(const Algebra& a);

}  // namespace cdgeo
