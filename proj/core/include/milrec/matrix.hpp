#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "milrec/rational.hpp"

namespace milrec {

using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);

// Dense matrix over the rationals, row major. All elimination routines are
// fraction-exact and deterministic: pivot selection always takes the first
// nonzero entry, never a size heuristic.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);

    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& x);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of row i, strictly increasing

    std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form by Gauss-Jordan elimination. The result is the
// unique RREF of the row space, so equal row spaces give equal outputs.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

// Solves a x = b. Returns std::nullopt when inconsistent. With free
// variables the returned solution sets all of them to zero, so the answer
// is deterministic; when the solution is unique this is the solution.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Determinant of a square matrix by fraction-exact Gaussian elimination.
Rational determinant(Matrix m);

Rational trace(const Matrix& m);

// True iff the square matrix is nilpotent, certified by rank descent: for a
// nilpotent matrix rank(m^{k+1}) < rank(m^k) strictly until the power is
// zero, so the walk returns false as soon as the rank stalls and true when
// it reaches zero. At most n steps, no eigenvalue computation.
bool nilpotency_check(const Matrix& m);

}  // namespace milrec
