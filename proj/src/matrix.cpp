#include "cdgeo/matrix.hpp"

#include <sstream>

#include "cdgeo/error.hpp"

namespace cdgeo {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vector Matrix::column(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sizes differ");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sizes differ");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix sizes do not chain");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw DimensionError("vector length does not match matrix");
    Vector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!x[j].is_zero() && !a(i, j).is_zero()) r[i] += a(i, j) * x[j];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant()) return b;
    if (b.is_constant()) return a;
    return exact_divide(a * b, gcd(a, b));
}

// Multiplies a row by the lcm of its denominators.
std::vector<Polynomial> clear_denominators(const Vector& row) {
    Polynomial common(1);
    for (const auto& x : row)
        if (!x.is_zero()) common = lcm(common, x.denominator());
    std::vector<Polynomial> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        const Polynomial& d = row[j].denominator();
        out[j] = row[j].numerator() * (d.is_constant() ? common.scaled(1 / d.constant_value()) : exact_divide(common, d));
    }
    return out;
}

}  // namespace

Echelon echelon(const Matrix& m) {
    Echelon e;
    e.cols = m.cols();
    std::vector<std::vector<Polynomial>> a;
    a.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        a.push_back(clear_denominators(m.row(i)));
    }

    Polynomial previous(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols && r < a.size(); ++c) {
        std::size_t best = a.size();
        for (std::size_t i = r; i < a.size(); ++i) {
            if (a[i][c].is_zero()) continue;
            if (best == a.size() || a[i][c].size() < a[best][c].size()) best = i;
        }
        if (best == a.size()) continue;
        if (best != r) {
            std::swap(a[best], a[r]);
            e.sign = -e.sign;
        }
        const Polynomial& pivot = a[r][c];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            Polynomial factor = a[i][c];
            for (std::size_t j = c + 1; j < e.cols; ++j) {
                Polynomial value = pivot * a[i][j];
                if (!factor.is_zero() && !a[r][j].is_zero()) value -= factor * a[r][j];
                a[i][j] = previous.is_constant() ? value.scaled(1 / previous.constant_value()) : exact_divide(value, previous);
            }
            a[i][c] = Polynomial();
        }
        previous = pivot;
        e.pivot_columns.push_back(c);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivot_columns.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = echelon(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector x(n);
        x[f] = Scalar(1);
        for (std::size_t k = e.rows.size(); k-- > 0;) {
            std::size_t c = e.pivot_columns[k];
            Scalar sum;
            for (std::size_t j = c + 1; j < n; ++j)
                if (!x[j].is_zero() && !e.rows[k][j].is_zero()) sum += Scalar(e.rows[k][j]) * x[j];
            x[c] = -sum / Scalar(e.rows[k][c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t length) {
    if (vectors.empty()) return {};
    Matrix m(vectors.size(), length);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != length) throw DimensionError("vector length mismatch");
        for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
    }
    Echelon e = echelon(m);
    std::vector<Vector> out;
    for (const auto& row : e.rows) {
        Vector v(length);
        for (std::size_t j = 0; j < length; ++j) v[j] = Scalar(row[j]);
        out.push_back(std::move(v));
    }
    return out;
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    Echelon e = echelon(m);
    if (e.pivot_columns.size() < n) return Scalar();
    // The last Bareiss pivot is the determinant of the row-scaled matrix.
    Polynomial scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial common(1);
        for (std::size_t j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) common = lcm(common, m(i, j).denominator());
        scale *= common;
    }
    return Scalar(e.rows[n - 1][n - 1].scaled(Rational(e.sign)), scale);
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix a = m, inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        for (std::size_t i = c; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            if (best == n || a(i, c).size() < a(best, c).size()) best = i;
        }
        if (best == n) throw ArithmeticError("not invertible");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(best, j), a(c, j));
            std::swap(inv(best, j), inv(c, j));
        }
        Scalar p = a(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(c, j).is_zero()) a(c, j) *= p;
            if (!inv(c, j).is_zero()) inv(c, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace cdgeo
