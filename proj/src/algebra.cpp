#include "cdgeo/algebra.hpp"

#include <algorithm>
#include <set>

#include "cdgeo/error.hpp"

namespace cdgeo {

Algebra::Algebra(std::string name, std::size_t dim, std::vector<std::string> params)
    : name_(std::move(name)), dim_(dim), params_(std::move(params)), c_(dim * dim * dim) {
    if (dim == 0) throw DimensionError("dimension must be positive");
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
    auto first = c_.begin() + static_cast<std::ptrdiff_t>(index(i, j, 0));
    return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

bool Algebra::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool structurally_equal(const Algebra& a, const Algebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

Algebra zero_algebra(std::size_t dim, std::string name) {
    if (name.empty()) name = "zero" + std::to_string(dim);
    return Algebra(std::move(name), dim);
}

Vector basis_vector(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.at(i) = Scalar(1);
    return v;
}

Vector product(const Algebra& a, const Vector& x, const Vector& y) {
    std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("vector length does not match algebra dimension");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = a.constant(i, j, k);
                if (c.is_zero()) continue;
                if (xy.is_zero()) xy = x[i] * y[j];
                out[k] += xy * c;
            }
        }
    }
    return out;
}

MultiplicationOperators mul_operators(const Algebra& a, const Vector& x) {
    std::size_t n = a.dim();
    if (x.size() != n) throw DimensionError("vector length does not match algebra dimension");
    MultiplicationOperators ops{Matrix(n, n), Matrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        Vector e = basis_vector(n, j);
        Vector l = product(a, x, e), r = product(a, e, x);
        for (std::size_t k = 0; k < n; ++k) {
            ops.left(k, j) = l[k];
            ops.right(k, j) = r[k];
        }
    }
    return ops;
}

Algebra base_change(const Algebra& a, const Matrix& g) {
    std::size_t n = a.dim();
    if (g.rows() != n || !g.is_square()) throw DimensionError("matrix size does not match algebra dimension");
    Matrix h = inverse(g);
    Algebra out(a.name(), n, a.params());
    std::vector<Vector> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = h.column(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = g * product(a, cols[i], cols[j]);
            for (std::size_t k = 0; k < n; ++k) out.set_constant(i, j, k, std::move(v[k]));
        }
    return out;
}

Algebra constants_in_basis(const Algebra& a, const Matrix& rows) {
    std::size_t n = a.dim();
    if (rows.rows() != n || !rows.is_square()) throw DimensionError("basis size does not match algebra dimension");
    // E_i E_j = sum_k w_k E_k with v = M^T w.
    Matrix to_new = inverse(rows.transposed());
    Algebra out(a.name(), n, a.params());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector w = to_new * product(a, rows.row(i), rows.row(j));
            for (std::size_t k = 0; k < n; ++k) out.set_constant(i, j, k, std::move(w[k]));
        }
    return out;
}

Algebra substitute_algebra_params(const Algebra& a, const Assignment& assignment) {
    if (assignment.count(std::string(kDeformationVariable))) throw Error("t is reserved");
    std::vector<std::string> params;
    for (const auto& p : a.params())
        if (!assignment.count(p)) params.push_back(p);
    std::set<std::string> seen(params.begin(), params.end());
    for (const auto& [name, value] : assignment) {
        if (std::find(a.params().begin(), a.params().end(), name) == a.params().end()) continue;
        for (const auto& v : value.variables())
            if (v != kDeformationVariable && seen.insert(v).second) params.push_back(v);
    }
    std::size_t n = a.dim();
    Algebra out(a.name(), n, params);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = a.constant(i, j, k);
                out.set_constant(i, j, k, c.is_rational() ? c : substitute(c, assignment));
            }
    return out;
}

std::vector<std::string> used_variables(const Algebra& a) {
    std::set<std::string> names;
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (auto& v : a.constant(i, j, k).variables()) names.insert(std::move(v));
    return {names.begin(), names.end()};
}

}  // namespace cdgeo
