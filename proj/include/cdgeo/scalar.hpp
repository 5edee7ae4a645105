#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cdgeo/polynomial.hpp"

namespace cdgeo {

// Element of Q(t, parameters): a reduced quotient of polynomials whose
// denominator has leading coefficient 1 in graded-lex order. Two Scalars are
// equal iff their canonical forms coincide.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(Polynomial numerator) : num_(std::move(numerator)) {}  // NOLINT(google-explicit-constructor)
    // Throws ArithmeticError("zero divisor") when the denominator is zero.
    Scalar(Polynomial numerator, Polynomial denominator);

    static Scalar variable(std::string_view name) { return Scalar(Polynomial::variable(name)); }
    static Scalar t() { return variable(kDeformationVariable); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Requires is_rational().
    Rational to_rational() const;

    std::vector<std::string> variables() const;
    bool uses(std::string_view name) const { return num_.uses(name) || den_.uses(name); }
    // Number of stored terms in numerator and denominator; a size measure for pivoting.
    std::size_t size() const { return num_.size() + den_.size(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
    Scalar& operator/=(const Scalar& other) { return *this = *this / other; }
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Scalar inverse() const;
    Scalar pow(int exponent) const;

    std::string to_string() const;

private:
    struct Canonical {};
    Scalar(Polynomial numerator, Polynomial denominator, Canonical)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}
    static Scalar make_reduced(Polynomial numerator, Polynomial denominator);

    Polynomial num_;
    Polynomial den_{1};
};

enum class ArithmeticOp { Add, Sub, Mul, Div };

// Exact field arithmetic; Div by zero throws ArithmeticError("zero divisor").
Scalar arithmetic(const Scalar& f, const Scalar& g, ArithmeticOp op);

// Lowest t-degree of the numerator minus lowest t-degree of the denominator.
// Parameter coefficients count as generically nonzero.
int valuation_at_t(const Scalar& f);

// Limit t -> 0 for a Scalar whose valuation is non-negative; the result no
// longer involves t. Throws ArithmeticError("limit diverges") otherwise.
Scalar limit_at_zero(const Scalar& f);

using Assignment = std::map<std::string, Scalar, std::less<>>;

// Simultaneous substitution. Names not occurring in f are ignored. Throws
// ArithmeticError("substitution pole") if the denominator vanishes.
Scalar substitute(const Scalar& f, const Assignment& assignment);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cdgeo
