#pragma once

#include <string>
#include <vector>

#include "cdgeo/scalar.hpp"

namespace cdgeo {

using Vector = std::vector<Scalar>;

// Dense row-major matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& entries);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transposed() const;
    bool is_zero() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& x);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// Square matrices share the representation; the name marks intent.
using SquareMatrix = Matrix;

Matrix commutator(const Matrix& a, const Matrix& b);

// Row echelon form from fraction-free (Bareiss) elimination. Each row is first
// scaled to polynomial entries; pivots are chosen by least polynomial size.
struct Echelon {
    std::vector<std::vector<Polynomial>> rows;  // nonzero rows only
    std::vector<std::size_t> pivot_columns;
    std::size_t cols = 0;
    int sign = 1;  // parity of the row permutation, for square inputs
};

Echelon echelon(const Matrix& m);

// Rank over the field of rational functions in all occurring variables.
std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

// Independent subset spanning the same space as `vectors`, in echelon form.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t length);

Scalar determinant(const Matrix& m);

// Throws ArithmeticError("not invertible") when the determinant is zero.
Matrix inverse(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace cdgeo
