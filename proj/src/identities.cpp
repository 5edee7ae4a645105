#include "cdgeo/identities.hpp"

#include "cdgeo/error.hpp"

namespace cdgeo {

bool is_derivation(const Algebra& a, const Matrix& d) {
    std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionError("derivation size does not match algebra dimension");
    std::vector<Vector> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = d.column(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = d * a.basis_product(i, j);
            Vector left = product(a, images[i], basis_vector(n, j));
            Vector right = product(a, basis_vector(n, i), images[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (!(lhs[k] == left[k] + right[k])) return false;
        }
    return true;
}

CdReport check_cd(const Algebra& a) {
    std::size_t n = a.dim();
    std::vector<Matrix> left(n), right(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto ops = mul_operators(a, basis_vector(n, i));
        left[i] = std::move(ops.left);
        right[i] = std::move(ops.right);
    }
    CdReport report{true, true, true};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (report.ll && !is_derivation(a, commutator(left[x], left[y]))) report.ll = false;
            if (report.lr && !is_derivation(a, commutator(left[x], right[y]))) report.lr = false;
            if (report.rr && !is_derivation(a, commutator(right[x], right[y]))) report.rr = false;
        }
    return report;
}

SymmetryReport check_symmetry(const Algebra& a) {
    std::size_t n = a.dim();
    bool commutative = true, anticommutative = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& x = a.constant(i, j, k);
                const Scalar& y = a.constant(j, i, k);
                if (!(x == y)) commutative = false;
                if (!(x == -y)) anticommutative = false;
            }
    SymmetryReport r;
    if (commutative) {
        r.kind = Symmetry::Commutative;
        r.also_anticommutative = anticommutative;
    } else if (anticommutative) {
        r.kind = Symmetry::Anticommutative;
    }
    return r;
}

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::Commutative: return "commutative";
        case Symmetry::Anticommutative: return "anticommutative";
        case Symmetry::Neither: break;
    }
    return "neither";
}

}  // namespace cdgeo
