#pragma once

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "cdgeo/algebra.hpp"
#include "cdgeo/catalog.hpp"
#include "cdgeo/error.hpp"

namespace testing {

using cdgeo::Algebra;
using cdgeo::Matrix;
using cdgeo::Rational;
using cdgeo::Scalar;

inline Rational small_rational(std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, 2);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// Constants are small rationals; each entry is nonzero with probability `density`.
inline Algebra random_algebra(std::mt19937_64& rng, std::size_t n, double density = 0.3) {
    std::bernoulli_distribution keep(density);
    Algebra a("R", n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (keep(rng)) a.set_constant(i, j, k, Scalar(small_rational(rng)));
    return a;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(small_rational(rng));
    return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        Matrix m = random_matrix(rng, n);
        if (!cdgeo::determinant(m).is_zero()) return m;
    }
}

// Generators e1..ek multiply into the span of the remaining basis vectors,
// which annihilate everything; then a random change of basis hides the split.
inline Algebra random_two_step(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> split(1, n - 1);
    std::size_t k = split(rng);
    Algebra a("T", n);
    std::bernoulli_distribution keep(0.6);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = k; c < n; ++c)
                if (keep(rng)) a.set_constant(i, j, c, Scalar(small_rational(rng)));
    return cdgeo::base_change(a, random_invertible(rng, n));
}

inline Algebra builtin(const std::string& name) {
    for (auto& a : cdgeo::builtin_catalog())
        if (a.name() == name) return a;
    throw cdgeo::Error("no builtin " + name);
}

inline Algebra member(const Algebra& family, const cdgeo::Assignment& values) {
    return cdgeo::substitute_algebra_params(family, values);
}

// Rank of a rational matrix by plain Gauss-Jordan over mpq, independent of
// the library's elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Brute-force derivation dimension: writes D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0
// for a generic D with n^2 unknown entries, one equation per output coordinate.
inline std::size_t oracle_derivation_dimension(const Algebra& a) {
    std::size_t n = a.dim();
    auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return a.constant(i, j, k).to_rational(); };
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t out = 0; out < n; ++out) {
                std::vector<Rational> row(n * n);
                // unknown (r, s) is the coefficient of e_r in D(e_s)
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = 0; s < n; ++s) {
                        Rational v = 0;
                        if (r == out) v += c(i, j, s);
                        if (s == i) v -= c(r, j, out);
                        if (s == j) v -= c(i, r, out);
                        row[r * n + s] = v;
                    }
                rows.push_back(std::move(row));
            }
    return n * n - rational_rank(rows);
}

// Constants in the basis E_i = t^(a_i) e_i are c(i,j,k) t^(a_i + a_j - a_k);
// returns the lexicographically first 1-based entry whose limit is missing or
// differs from the target.
inline std::optional<std::array<std::size_t, 3>> diagonal_first_failure(const Algebra& a, const std::vector<int>& exps,
                                                                        const Algebra& target) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = a.constant(i, j, k).to_rational();
                Rational want = target.constant(i, j, k).to_rational();
                int e = exps[i] + exps[j] - exps[k];
                Rational limit = e > 0 ? Rational(0) : c;
                if ((e < 0 && c != 0) || limit != want) return std::array<std::size_t, 3>{i + 1, j + 1, k + 1};
            }
    return std::nullopt;
}

}  // namespace testing
