#include "cdgeo/scalar.hpp"

#include <algorithm>
#include <ostream>

#include "cdgeo/error.hpp"

namespace cdgeo {

Scalar::Scalar(Polynomial numerator, Polynomial denominator) {
    *this = make_reduced(std::move(numerator), std::move(denominator));
}

Scalar Scalar::make_reduced(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw ArithmeticError("zero divisor");
    if (num.is_zero()) return Scalar();
    if (!den.is_constant()) {
        Polynomial g = gcd(num, den);
        if (!g.is_constant()) {
            num = exact_divide(num, g);
            den = exact_divide(den, g);
        }
    }
    Rational lc = den.leading_coefficient();
    if (den.is_constant()) return Scalar(num.scaled(1 / lc), Polynomial(1), Canonical{});
    if (lc != 1) {
        Rational inv = 1 / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return Scalar(std::move(num), std::move(den), Canonical{});
}

Rational Scalar::to_rational() const {
    if (!is_rational()) throw Error("scalar " + to_string() + " is not a rational constant");
    return num_.constant_value() / den_.constant_value();
}

std::vector<std::string> Scalar::variables() const {
    std::vector<std::string> out = num_.used_variables();
    for (auto& v : den_.used_variables()) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return variable_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Canonical{}); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) return Scalar(a.num_ + b.num_, Polynomial(1), Scalar::Canonical{});
    if (a.den_ == b.den_) return Scalar::make_reduced(a.num_ + b.num_, a.den_);
    if (b.is_polynomial()) return Scalar(a.num_ + b.num_ * a.den_, a.den_, Scalar::Canonical{});
    if (a.is_polynomial()) return Scalar(b.num_ + a.num_ * b.den_, b.den_, Scalar::Canonical{});
    Polynomial g = gcd(a.den_, b.den_);
    Polynomial bd = exact_divide(b.den_, g);
    Polynomial ad = exact_divide(a.den_, g);
    return Scalar::make_reduced(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.is_polynomial() && b.is_polynomial()) return Scalar(a.num_ * b.num_, Polynomial(1), Scalar::Canonical{});
    // Cross-cancel so the product of reduced fractions stays reduced.
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial num = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
    Polynomial den = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
    Rational lc = den.leading_coefficient();
    if (lc != 1) {
        num = num.scaled(1 / lc);
        den = den.scaled(1 / lc);
    }
    return Scalar(std::move(num), std::move(den), Scalar::Canonical{});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("zero divisor");
    Rational lc = num_.leading_coefficient();
    return Scalar(den_.scaled(1 / lc), num_.scaled(1 / lc), Canonical{});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw ArithmeticError("zero divisor");
    return a * b.inverse();
}

Scalar Scalar::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    // Powers of a reduced fraction stay reduced.
    return Scalar(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)), Canonical{});
}

std::string Scalar::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    bool bare = den_.is_monomial() && den_.leading_coefficient() == 1 && den_.used_variables().size() == 1;
    return n + "/" + (bare ? den_.to_string() : "(" + den_.to_string() + ")");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar arithmetic(const Scalar& f, const Scalar& g, ArithmeticOp op) {
    switch (op) {
        case ArithmeticOp::Add: return f + g;
        case ArithmeticOp::Sub: return f - g;
        case ArithmeticOp::Mul: return f * g;
        case ArithmeticOp::Div: return f / g;
    }
    return {};
}

int valuation_at_t(const Scalar& f) {
    if (f.is_zero()) throw ArithmeticError("valuation of zero undefined");
    return f.numerator().min_degree_in(kDeformationVariable) - f.denominator().min_degree_in(kDeformationVariable);
}

Scalar limit_at_zero(const Scalar& f) {
    if (f.is_zero()) return Scalar();
    int v = valuation_at_t(f);
    if (v > 0) return Scalar();
    if (v < 0) throw ArithmeticError("limit diverges");
    Polynomial n = f.numerator().lowest_part_in(kDeformationVariable).trimmed();
    Polynomial d = f.denominator().lowest_part_in(kDeformationVariable).trimmed();
    return Scalar(std::move(n), std::move(d));
}

namespace {

Scalar substitute_polynomial(const Polynomial& p, const Assignment& assignment) {
    const auto& vars = p.vars();
    std::vector<const Scalar*> value(vars.size(), nullptr);
    bool any = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = assignment.find(vars[i]);
        if (it != assignment.end()) {
            value[i] = &it->second;
            any = true;
        }
    }
    if (!any) return Scalar(p);

    // Split each term into the part over unassigned variables (kept as a
    // polynomial) and the assigned part, grouping terms that share the latter.
    std::map<Exponents, std::vector<Term>> groups;
    for (const auto& t : p.terms()) {
        Exponents assigned{};
        Term rest = t;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (value[i] == nullptr) continue;
            assigned[i] = t.exponents[i];
            rest.exponents[i] = 0;
        }
        groups[assigned].push_back(std::move(rest));
    }
    std::map<std::pair<std::size_t, int>, Scalar> powers;
    auto power = [&](std::size_t i, int e) -> const Scalar& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, value[i]->pow(e)).first;
        return it->second;
    };
    Scalar sum;
    for (auto& [assigned, rest] : groups) {
        Scalar factor(Polynomial::from_terms(p.variable_list(), std::move(rest)).trimmed());
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (value[i] != nullptr && assigned[i] > 0) factor *= power(i, assigned[i]);
        sum += factor;
    }
    return sum;
}

}  // namespace

Scalar substitute(const Scalar& f, const Assignment& assignment) {
    Scalar num = substitute_polynomial(f.numerator(), assignment);
    Scalar den = substitute_polynomial(f.denominator(), assignment);
    if (den.is_zero()) throw ArithmeticError("substitution pole");
    Scalar r = num / den;
    return Scalar(r.numerator().trimmed(), r.denominator().trimmed());
}

}  // namespace cdgeo
