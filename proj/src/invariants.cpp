#include "cdgeo/invariants.hpp"

namespace cdgeo {

const char* const kDerivationDirectionNote =
    "dim Der is non-decreasing along degenerations and strictly increasing along proper ones, "
    "as forced by orbit dim = n^2 - dim Der; the opposite strict inequality is not used";

std::size_t square_dimension(const Algebra& a) {
    std::size_t n = a.dim();
    std::vector<Vector> products;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) products.push_back(a.basis_product(i, j));
    return span_basis(products, n).size();
}

PowerSeries power_series_dims(const Algebra& a) {
    std::size_t n = a.dim();
    // spans[k] is a basis of A^k; spans[0] is unused.
    std::vector<std::vector<Vector>> spans(2);
    for (std::size_t i = 0; i < n; ++i) spans[1].push_back(basis_vector(n, i));
    PowerSeries out;
    out.dims.push_back(n);
    while (true) {
        std::size_t k = spans.size();
        std::vector<Vector> products;
        for (std::size_t i = 1; i < k; ++i)
            for (const auto& x : spans[i])
                for (const auto& y : spans[k - i]) products.push_back(product(a, x, y));
        spans.push_back(span_basis(products, n));
        std::size_t d = spans.back().size();
        std::size_t previous = out.dims.back();
        out.dims.push_back(d);
        if (d == 0 || d == previous) break;
    }
    out.nilpotent = out.dims.back() == 0;
    out.two_step = out.dims[1] == 0 || (out.dims.size() > 2 && out.dims[2] == 0);
    return out;
}

std::size_t annihilator_dimension(const Algebra& a) {
    std::size_t n = a.dim();
    Matrix stacked(2 * n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto ops = mul_operators(a, basis_vector(n, i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                // x annihilates e_i from both sides: e_i x = 0 and x e_i = 0.
                stacked(2 * i * n + r, c) = ops.left(r, c);
                stacked((2 * i + 1) * n + r, c) = ops.right(r, c);
            }
    }
    return n - rank(stacked);
}

Matrix derivation_system(const Algebra& a) {
    std::size_t n = a.dim();
    Matrix m(n * n * n, n * n);
    auto unknown = [n](std::size_t row, std::size_t col) { return row * n + col; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                std::size_t eq = (i * n + j) * n + t;
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& c = a.constant(i, j, k);
                    if (!c.is_zero()) m(eq, unknown(t, k)) += c;
                }
                for (std::size_t p = 0; p < n; ++p) {
                    const Scalar& c = a.constant(p, j, t);
                    if (!c.is_zero()) m(eq, unknown(p, i)) -= c;
                }
                for (std::size_t q = 0; q < n; ++q) {
                    const Scalar& c = a.constant(i, q, t);
                    if (!c.is_zero()) m(eq, unknown(q, j)) -= c;
                }
            }
    return m;
}

DerivationSpace derivation_algebra(const Algebra& a) {
    std::size_t n = a.dim();
    DerivationSpace space;
    for (const auto& v : nullspace(derivation_system(a))) {
        Matrix d(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
        space.basis.push_back(std::move(d));
    }
    space.dimension = space.basis.size();
    return space;
}

std::size_t orbit_dimension(const Algebra& a) {
    std::size_t n = a.dim();
    return n * n - derivation_algebra(a).dimension;
}

InvariantProfile invariant_profile(const Algebra& a, ProfileMode mode) {
    InvariantProfile p;
    p.mode = mode;
    std::size_t n = a.dim();
    p.square = square_dimension(a);
    p.orbit = rank(derivation_system(a));
    p.derivations = n * n - p.orbit;
    if (mode == ProfileMode::Extended) {
        p.powers = power_series_dims(a);
        p.annihilator = annihilator_dimension(a);
    }
    return p;
}

std::vector<ProfileEntry> InvariantProfile::entries() const {
    std::vector<ProfileEntry> out{
        {"square", std::to_string(square), Direction::NonIncreasing},
        {"derivations", std::to_string(derivations), Direction::NonDecreasing},
        {"orbit", std::to_string(orbit), Direction::StrictlyDecreasing},
    };
    if (mode == ProfileMode::Extended) {
        std::string chain;
        for (std::size_t i = 0; i < powers.dims.size(); ++i) chain += (i ? "," : "") + std::to_string(powers.dims[i]);
        out.push_back({"powers", chain, Direction::NonIncreasing});
        out.push_back({"annihilator", std::to_string(annihilator), Direction::NonDecreasing});
    }
    return out;
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::NonIncreasing: return "non-increasing";
        case Direction::NonDecreasing: return "non-decreasing";
        case Direction::StrictlyDecreasing: return "strictly decreasing";
    }
    return "";
}

}  // namespace cdgeo
