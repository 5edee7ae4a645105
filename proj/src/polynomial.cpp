#include "cdgeo/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "cdgeo/error.hpp"

namespace cdgeo {

bool variable_less(std::string_view a, std::string_view b) {
    if (a == b) return false;
    if (a == kDeformationVariable) return true;
    if (b == kDeformationVariable) return false;
    return a < b;
}

VariableList intern_variables(std::vector<std::string> names) {
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) { return variable_less(a, b); });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > kMaxVariables)
        throw Error("too many variables in one expression (limit " + std::to_string(kMaxVariables) + ")");

    static std::mutex mutex;
    static std::map<std::vector<std::string>, VariableList> table;
    std::lock_guard lock(mutex);
    auto it = table.find(names);
    if (it != table.end()) return it->second;
    auto list = std::make_shared<const std::vector<std::string>>(names);
    table.emplace(std::move(names), list);
    return list;
}

namespace {

const VariableList& empty_variables() {
    static const VariableList empty = intern_variables({});
    return empty;
}

std::uint32_t degree_of(const Exponents& e) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool divides(const Exponents& small, const Exponents& big) {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (small[i] > big[i]) return false;
    return true;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        std::uint32_t s = std::uint32_t(a[i]) + b[i];
        if (s > 0xFFFF) throw ArithmeticError("exponent overflow");
        r[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

Exponents sub_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

void sort_and_combine(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.exponents, b.exponents); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = terms[i].coefficient;
        while (j < terms.size() && terms[j].exponents == terms[i].exponents) sum += terms[j++].coefficient;
        if (sgn(sum) != 0) {
            terms[out].exponents = terms[i].exponents;
            terms[out].coefficient = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

bool grlex_greater(const Exponents& a, const Exponents& b) {
    auto da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Polynomial::Polynomial() : vars_(empty_variables()) {}

Polynomial::Polynomial(long value) : Polynomial(Rational(value)) {}

Polynomial::Polynomial(const Rational& value) : vars_(empty_variables()) {
    if (sgn(value) != 0) {
        terms_.push_back(Term{Exponents{}, value});
        terms_.back().coefficient.canonicalize();
    }
}

Polynomial::Polynomial(VariableList vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

Polynomial Polynomial::variable(std::string_view name) {
    Term term{Exponents{}, Rational(1)};
    term.exponents[0] = 1;
    return Polynomial(intern_variables({std::string(name)}), {term});
}

Polynomial Polynomial::monomial(const Rational& coefficient, const VariableList& vars, const Exponents& exponents) {
    if (sgn(coefficient) == 0) return Polynomial(vars, {});
    return Polynomial(vars, {Term{exponents, coefficient}});
}

Polynomial Polynomial::from_terms(const VariableList& vars, std::vector<Term> terms) {
    sort_and_combine(terms);
    return Polynomial(vars, std::move(terms));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0);
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coefficient;
}

int Polynomial::index_of(std::string_view name) const {
    const auto& v = *vars_;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> Polynomial::used_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        bool used = std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.exponents[i] > 0; });
        if (used) out.push_back((*vars_)[i]);
    }
    return out;
}

bool Polynomial::uses(std::string_view name) const { return degree_in(name) > 0; }

int Polynomial::degree_in(std::string_view name) const {
    int idx = index_of(name);
    if (idx < 0) return 0;
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.exponents[idx]);
    return d;
}

int Polynomial::min_degree_in(std::string_view name) const {
    int idx = index_of(name);
    if (idx < 0 || terms_.empty()) return 0;
    int d = terms_[0].exponents[idx];
    for (const auto& t : terms_) d = std::min<int>(d, t.exponents[idx]);
    return d;
}

int Polynomial::total_degree() const { return terms_.empty() ? 0 : static_cast<int>(degree_of(terms_[0].exponents)); }

Polynomial Polynomial::lowest_part_in(std::string_view name) const {
    int idx = index_of(name);
    if (idx < 0) return *this;
    int low = min_degree_in(name);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exponents[idx] != low) continue;
        Term copy = t;
        copy.exponents[idx] = 0;
        out.push_back(std::move(copy));
    }
    return from_terms(vars_, std::move(out));
}

std::map<int, Polynomial> Polynomial::coefficients_in(std::string_view name) const {
    std::map<int, Polynomial> out;
    int idx = index_of(name);
    if (idx < 0) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
        Term copy = t;
        int e = copy.exponents[idx];
        copy.exponents[idx] = 0;
        buckets[e].push_back(std::move(copy));
    }
    // Removing one variable preserves the relative grlex order inside a bucket.
    for (auto& [e, terms] : buckets) out.emplace(e, Polynomial(vars_, std::move(terms)));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
}

void Polynomial::add_scaled(const Polynomial& other_in, const Rational& factor) {
    if (other_in.is_zero() || sgn(factor) == 0) return;
    Polynomial other = other_in;
    unify(*this, other);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && grlex_greater(a->exponents, b->exponents))) {
            out.push_back(std::move(*a++));
        } else if (a == ae || grlex_greater(b->exponents, a->exponents)) {
            out.push_back(Term{b->exponents, b->coefficient * factor});
            ++b;
        } else {
            Rational sum = a->coefficient + b->coefficient * factor;
            if (sgn(sum) != 0) out.push_back(Term{a->exponents, std::move(sum)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    add_scaled(other, Rational(1));
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    add_scaled(other, Rational(-1));
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a_in, const Polynomial& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return Polynomial();
    if (a_in.is_constant()) return b_in.scaled(a_in.constant_value());
    if (b_in.is_constant()) return a_in.scaled(b_in.constant_value());
    Polynomial a = a_in, b = b_in;
    unify(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    if (a.is_monomial() || b.is_monomial()) {
        // Multiplying by a monomial preserves the term order.
        const Polynomial& m = a.is_monomial() ? a : b;
        const Polynomial& p = a.is_monomial() ? b : a;
        const Term& mt = m.terms_[0];
        for (const auto& t : p.terms_) out.push_back(Term{add_exponents(t.exponents, mt.exponents), t.coefficient * mt.coefficient});
        return Polynomial(a.vars_, std::move(out));
    }
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) out.push_back(Term{add_exponents(x.exponents, y.exponents), x.coefficient * y.coefficient});
    sort_and_combine(out);
    return Polynomial(a.vars_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (sgn(factor) == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient *= factor;
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(1), base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational lc = leading_coefficient();
    if (lc == 1) return *this;
    return scaled(1 / lc);
}

Polynomial Polynomial::trimmed() const {
    std::vector<std::string> used = used_variables();
    if (used.size() == vars_->size()) return *this;
    VariableList target = intern_variables(used);
    std::vector<int> from;
    for (const auto& name : *target) from.push_back(index_of(name));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term r{Exponents{}, t.coefficient};
        for (std::size_t i = 0; i < from.size(); ++i) r.exponents[i] = t.exponents[from[i]];
        out.push_back(std::move(r));
    }
    return Polynomial(target, std::move(out));
}

Polynomial Polynomial::embedded(const VariableList& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> to;
    for (const auto& name : *vars_) {
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it == vars->end()) throw Error("cannot embed polynomial: variable " + name + " missing");
        to.push_back(static_cast<int>(it - vars->begin()));
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term r{Exponents{}, t.coefficient};
        for (std::size_t i = 0; i < to.size(); ++i) r.exponents[to[i]] = t.exponents[i];
        out.push_back(std::move(r));
    }
    return Polynomial(vars, std::move(out));
}

void unify(Polynomial& a, Polynomial& b) {
    if (a.variable_list() == b.variable_list()) return;
    // Constants have all-zero exponents, which are valid in any list.
    if (a.vars().empty() || a.is_constant()) {
        a = Polynomial::from_terms(b.variable_list(), std::vector<Term>(a.terms()));
        return;
    }
    if (b.vars().empty() || b.is_constant()) {
        b = Polynomial::from_terms(a.variable_list(), std::vector<Term>(b.terms()));
        return;
    }
    std::vector<std::string> names = a.vars();
    names.insert(names.end(), b.vars().begin(), b.vars().end());
    VariableList merged = intern_variables(std::move(names));
    a = a.embedded(merged);
    b = b.embedded(merged);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.vars_ == b.vars_) {
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coefficient != b.terms_[i].coefficient)
                return false;
        return true;
    }
    Polynomial x = a, y = b;
    unify(x, y);
    return x == y;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool has_vars = degree_of(t.exponents) > 0;
        bool need_star = false;
        if (!has_vars || c != 1) {
            os << c.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if (t.exponents[i] == 0) continue;
            if (need_star) os << "*";
            os << (*vars_)[i];
            if (t.exponents[i] > 1) os << "^" << t.exponents[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

std::optional<Polynomial> try_divide(const Polynomial& a_in, const Polynomial& b_in) {
    if (a_in.is_zero()) return Polynomial();
    if (b_in.is_constant()) return a_in.scaled(1 / b_in.constant_value());
    Polynomial r = a_in, b = b_in;
    unify(r, b);
    const Term& lb = b.leading_term();
    std::vector<Term> quotient;
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!divides(lb.exponents, lr.exponents)) return std::nullopt;
        Term q{sub_exponents(lr.exponents, lb.exponents), lr.coefficient / lb.coefficient};
        r -= Polynomial::monomial(q.coefficient, b.variable_list(), q.exponents) * b;
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(b.variable_list(), std::move(quotient));
}

}  // namespace

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ArithmeticError("zero divisor");
    auto q = try_divide(a, b);
    if (!q) throw ArithmeticError("inexact division");
    return *q;
}

namespace {

// Both arguments share one variable list and involve only variables with index
// >= level. Returns the monic gcd.
Polynomial gcd_from(const Polynomial& f, const Polynomial& g, std::size_t level);

int degree_at(const Polynomial& p, std::size_t idx) {
    int d = 0;
    for (const auto& t : p.terms()) d = std::max<int>(d, t.exponents[idx]);
    return d;
}

// Coefficients of p viewed as a polynomial in variable idx.
std::vector<Polynomial> coefficients_at(const Polynomial& p, std::size_t idx) {
    return [&] {
        std::map<int, std::vector<Term>> buckets;
        for (const auto& t : p.terms()) {
            Term c = t;
            int e = c.exponents[idx];
            c.exponents[idx] = 0;
            buckets[e].push_back(std::move(c));
        }
        std::vector<Polynomial> out;
        for (auto& [e, terms] : buckets) out.push_back(Polynomial::from_terms(p.variable_list(), std::move(terms)));
        return out;
    }();
}

Polynomial leading_coefficient_at(const Polynomial& p, std::size_t idx) {
    int d = degree_at(p, idx);
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.exponents[idx] != d) continue;
        Term c = t;
        c.exponents[idx] = 0;
        out.push_back(std::move(c));
    }
    return Polynomial::from_terms(p.variable_list(), std::move(out));
}

Polynomial content_at(const Polynomial& p, std::size_t idx) {
    auto coeffs = coefficients_at(p, idx);
    // Smallest first: gcds collapse to constants sooner.
    std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
    Polynomial acc;
    for (const auto& c : coeffs) {
        acc = gcd_from(acc, c, idx + 1);
        if (acc.is_constant()) return Polynomial(1).embedded(p.variable_list());
    }
    return acc;
}

Polynomial x_power(const VariableList& vars, std::size_t idx, int power) {
    Exponents e{};
    e[idx] = static_cast<std::uint16_t>(power);
    return Polynomial::monomial(Rational(1), vars, e);
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& g, std::size_t idx) {
    int dg = degree_at(g, idx);
    Polynomial lc = leading_coefficient_at(g, idx);
    bool constant_lc = lc.is_constant();
    Rational lc_value = constant_lc ? lc.constant_value() : Rational(0);
    while (!r.is_zero()) {
        int dr = degree_at(r, idx);
        if (dr < dg) break;
        Polynomial lr = leading_coefficient_at(r, idx);
        Polynomial shift = x_power(r.variable_list(), idx, dr - dg);
        if (constant_lc) {
            r -= (lr * shift * g).scaled(1 / lc_value);
        } else {
            r = lc * r - lr * shift * g;
        }
    }
    return r;
}

// Scales p to integer coefficients with gcd 1, which keeps pseudo-remainder
// sequences from blowing up their rational coefficients.
Polynomial integer_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den = 1, num = 0;
    for (const auto& t : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coefficient.get_num_mpz_t());
    }
    Rational factor(den, num);
    factor.canonicalize();
    if (sgn(p.leading_coefficient()) < 0) factor = -factor;
    return p.scaled(factor);
}

// Heuristic gcd over the integers: evaluate the main variable at a large
// integer xi, recurse, and read the gcd back from its xi-adic digits. The
// candidate is accepted only when it divides both inputs.
Integer integer_content(const Polynomial& p) {
    Integer c = 0;
    for (const auto& t : p.terms()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coefficient.get_num_mpz_t());
    return c;
}

Integer max_norm(const Polynomial& p) {
    Integer m = 0;
    for (const auto& t : p.terms()) {
        Integer a = abs(t.coefficient.get_num());
        if (a > m) m = a;
    }
    return m;
}

Polynomial evaluate_at(const Polynomial& p, std::size_t idx, const Integer& xi) {
    std::vector<Integer> powers{Integer(1)};
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::size_t e = t.exponents[idx];
        while (powers.size() <= e) powers.push_back(powers.back() * xi);
        Term r{t.exponents, t.coefficient * powers[e]};
        r.exponents[idx] = 0;
        out.push_back(std::move(r));
    }
    return Polynomial::from_terms(p.variable_list(), std::move(out));
}

Polynomial interpolate_at(const Polynomial& h, std::size_t idx, const Integer& xi) {
    Integer half = xi / 2;
    std::vector<Term> out;
    for (const auto& t : h.terms()) {
        Integer c = t.coefficient.get_num();
        for (std::uint16_t i = 0; c != 0; ++i) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            if (r != 0) {
                Term d{t.exponents, Rational(r)};
                d.exponents[idx] = i;
                out.push_back(std::move(d));
            }
            c = (c - r) / xi;
        }
    }
    return Polynomial::from_terms(h.variable_list(), std::move(out));
}

Polynomial with_integer_content(const Polynomial& p, const Integer& content) {
    Polynomial q = p.scaled(Rational(Integer(1)) / Rational(integer_content(p)));
    if (sgn(q.leading_coefficient()) < 0) q = -q;
    return q.scaled(Rational(content));
}

// Inputs have integer coefficients, are nonzero, and involve only variables
// with index >= level. Returns the gcd over the integers with positive leading
// coefficient, or nothing when every evaluation point was unlucky.
std::optional<Polynomial> heuristic_gcd(const Polynomial& f_in, const Polynomial& g_in, std::size_t level) {
    Integer cf = integer_content(f_in), cg = integer_content(g_in), c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    std::size_t n = f_in.vars().size(), idx = level;
    while (idx < n && degree_at(f_in, idx) == 0 && degree_at(g_in, idx) == 0) ++idx;
    if (idx >= n) return Polynomial(Rational(c)).embedded(f_in.variable_list());
    Polynomial f = f_in.scaled(Rational(Integer(1)) / Rational(cf)), g = g_in.scaled(Rational(Integer(1)) / Rational(cg));

    Integer nf = max_norm(f), ng = max_norm(g);
    Integer bound = 2 * std::min(nf, ng) + 29;
    Integer xi = std::min(bound, Integer(99 * sqrt(bound)));
    Integer lf = abs(f.leading_coefficient().get_num()), lg = abs(g.leading_coefficient().get_num());
    Integer ratio = 2 * std::min(Integer(nf / lf), Integer(ng / lg)) + 2;
    if (ratio > xi) xi = ratio;

    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial ff = evaluate_at(f, idx, xi), gg = evaluate_at(g, idx, xi);
        if (!ff.is_zero() && !gg.is_zero()) {
            if (auto h = heuristic_gcd(ff, gg, idx + 1)) {
                Polynomial candidate = with_integer_content(interpolate_at(*h, idx, xi), 1);
                if (try_divide(f, candidate) && try_divide(g, candidate)) return candidate.scaled(Rational(c));
            }
        }
        xi = xi * 73794 * sqrt(sqrt(xi)) / 27011;
    }
    return std::nullopt;
}

Polynomial monomial_gcd(const Polynomial& m, const Polynomial& p) {
    Exponents e = m.leading_term().exponents;
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = std::min(e[i], t.exponents[i]);
    return Polynomial::monomial(Rational(1), m.variable_list(), e);
}

Polynomial gcd_from(const Polynomial& f, const Polynomial& g, std::size_t level) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    const auto& vars = f.variable_list();
    if (f.is_constant() || g.is_constant()) return Polynomial(1).embedded(vars);
    if (f.is_monomial()) return monomial_gcd(f, g);
    if (g.is_monomial()) return monomial_gcd(g, f);
    if (f == g) return f.monic();
    if (auto h = heuristic_gcd(integer_primitive(f), integer_primitive(g), level)) return h->monic();

    std::size_t n = f.vars().size();
    std::size_t idx = level;
    while (idx < n && degree_at(f, idx) == 0 && degree_at(g, idx) == 0) ++idx;
    if (idx >= n) return Polynomial(1).embedded(vars);

    int df = degree_at(f, idx), dg = degree_at(g, idx);
    if (df == 0) return gcd_from(f, content_at(g, idx), idx + 1);
    if (dg == 0) return gcd_from(content_at(f, idx), g, idx + 1);

    Polynomial cf = content_at(f, idx), cg = content_at(g, idx);
    Polynomial content = gcd_from(cf, cg, idx + 1);
    Polynomial a = integer_primitive(exact_divide(f, cf)), b = integer_primitive(exact_divide(g, cg));
    if (degree_at(a, idx) < degree_at(b, idx)) std::swap(a, b);
    while (true) {
        Polynomial r = pseudo_remainder(a, b, idx);
        if (r.is_zero()) break;
        if (degree_at(r, idx) == 0) {
            b = Polynomial(1).embedded(vars);
            break;
        }
        a = std::move(b);
        b = integer_primitive(exact_divide(r, content_at(r, idx)));
    }
    return (content * b).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
    Polynomial a = a_in, b = b_in;
    unify(a, b);
    return gcd_from(a, b, 0);
}

}  // namespace cdgeo
