#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cdgeo {

using Integer = mpz_class;
using Rational = mpq_class;

// The deformation variable. It always sorts before every parameter.
inline constexpr std::string_view kDeformationVariable = "t";

// Canonical variable order: t first, then the remaining names in byte order.
bool variable_less(std::string_view a, std::string_view b);

inline constexpr std::size_t kMaxVariables = 16;
using Exponents = std::array<std::uint16_t, kMaxVariables>;

struct Term {
    Exponents exponents{};
    Rational coefficient;
};

// Interned, canonically ordered list of variable names. Identical lists share
// one allocation so that pointer comparison decides equality.
using VariableList = std::shared_ptr<const std::vector<std::string>>;

VariableList intern_variables(std::vector<std::string> names);

// Sparse multivariate polynomial over the rationals.
//
// Terms are kept sorted by decreasing graded-lexicographic order with the
// variable order of vars(); no stored coefficient is zero. Exponent slots past
// vars().size() are always zero.
class Polynomial {
public:
    Polynomial();
    Polynomial(long value);  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& value);  // NOLINT(google-explicit-constructor)

    static Polynomial variable(std::string_view name);
    static Polynomial monomial(const Rational& coefficient, const VariableList& vars, const Exponents& exponents);
    static Polynomial from_terms(const VariableList& vars, std::vector<Term> terms);

    const std::vector<std::string>& vars() const { return *vars_; }
    const VariableList& variable_list() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // Requires is_constant().
    Rational constant_value() const;
    std::size_t size() const { return terms_.size(); }

    // Variables that occur with a positive exponent in some term.
    std::vector<std::string> used_variables() const;
    bool uses(std::string_view name) const;
    int degree_in(std::string_view name) const;
    // Smallest exponent of `name` over all terms; 0 for the zero polynomial.
    int min_degree_in(std::string_view name) const;
    int total_degree() const;

    const Term& leading_term() const { return terms_.front(); }
    const Rational& leading_coefficient() const { return terms_.front().coefficient; }

    // Sum of the terms whose exponent of `name` equals min_degree_in(name),
    // with that power of `name` divided out.
    Polynomial lowest_part_in(std::string_view name) const;
    // Coefficients c_k with this = sum_k c_k * name^k; keys are the exponents present.
    std::map<int, Polynomial> coefficients_in(std::string_view name) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& factor) const;
    Polynomial pow(unsigned exponent) const;

    // Divides out the leading coefficient; zero stays zero.
    Polynomial monic() const;
    // Same polynomial with unused variables dropped from vars().
    Polynomial trimmed() const;
    // Re-expresses this polynomial over `vars`, which must contain vars().
    Polynomial embedded(const VariableList& vars) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    Polynomial(VariableList vars, std::vector<Term> terms);

    void add_scaled(const Polynomial& other, const Rational& factor);
    int index_of(std::string_view name) const;

    VariableList vars_;
    std::vector<Term> terms_;
};

// Brings both operands onto a common variable list.
void unify(Polynomial& a, Polynomial& b);

// Exact quotient a / b. Throws ArithmeticError("inexact division") if b does
// not divide a, and "zero divisor" if b is zero.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Greatest common divisor, normalized to leading coefficient 1.
// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Graded-lexicographic comparison of exponent vectors: true when a > b.
bool grlex_greater(const Exponents& a, const Exponents& b);

std::string to_string(const Rational& value);

}  // namespace cdgeo
