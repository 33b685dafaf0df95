#include "milrec/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace milrec {

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.at(i, j).is_zero() && !x[j].is_zero()) y[i] += a.at(i, j) * x[j];
        }
    }
    return y;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix difference shape mismatch");
    }
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j ? " " : "") << m.at(i, j);
        }
    }
    return os << "]";
}

RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        }
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m.at(i, j) -= f * m.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank();
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        x[rr.pivots[i]] = rr.reduced.at(i, a.cols());
    }
    return x;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m.at(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rational inv = Rational(1) / m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

Rational trace(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

bool nilpotency_check(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("nilpotency check on non-square matrix");
    Matrix power = m;
    std::size_t r = rank(power);
    while (r > 0) {
        power = power * m;
        std::size_t next = rank(power);
        if (next >= r) return false;
        r = next;
    }
    return true;
}

}  // namespace milrec
