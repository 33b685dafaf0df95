#include "milrec/subspace.hpp"

#include <stdexcept>

#include "milrec/errors.hpp"

namespace milrec {

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
    RrefResult rr = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.pivots_ = rr.pivots;
    Matrix b(rr.pivots.size(), rows.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        for (std::size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = rr.reduced.at(i, j);
    }
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    return span_of_rows(Matrix::from_rows(vectors, ambient));
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: ambient dimension mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Rational f = c;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
            if (!basis_.at(i, j).is_zero()) v[j] -= f * basis_.at(i, j);
        }
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("intersect: ambient dimension mismatch");
    // x is in U iff x is orthogonal to the null space of U's basis matrix
    // (valid over Q, where the dot product is nondegenerate on rational
    // subspaces). Stacking both orthogonal complements cuts out exactly the
    // intersection.
    Subspace perp_a = kernel_basis(basis_);
    Subspace perp_b = kernel_basis(other.basis_);
    Matrix stacked(perp_a.dim() + perp_b.dim(), ambient_);
    for (std::size_t i = 0; i < perp_a.dim(); ++i) stacked.set_row(i, perp_a.basis().row(i));
    for (std::size_t i = 0; i < perp_b.dim(); ++i) {
        stacked.set_row(perp_a.dim() + i, perp_b.basis().row(i));
    }
    return kernel_basis(stacked);
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<Vec> gens;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next_pivot < rr.pivots.size() && rr.pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        Vec v(m.cols());
        v[c] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            v[rr.pivots[i]] = -rr.reduced.at(i, c);
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), gens);
}

std::vector<Vec> complement_basis(const Subspace& inner, const Subspace& outer) {
    if (inner.ambient_dim() != outer.ambient_dim()) {
        throw std::invalid_argument("complement_basis: ambient dimension mismatch");
    }
    if (!outer.contains(inner)) {
        throw std::invalid_argument("complement_basis: inner space not contained in outer space");
    }
    std::vector<Vec> kept;
    std::vector<Vec> acc;
    for (std::size_t i = 0; i < outer.dim(); ++i) {
        acc.reserve(inner.dim() + kept.size() + 1);
        acc.clear();
        for (std::size_t k = 0; k < inner.dim(); ++k) acc.push_back(inner.basis().row(k));
        for (const Vec& v : kept) acc.push_back(v);
        Vec candidate = outer.basis().row(i);
        acc.push_back(candidate);
        if (Subspace::span(outer.ambient_dim(), acc).dim() == inner.dim() + kept.size() + 1) {
            kept.push_back(std::move(candidate));
        }
        if (inner.dim() + kept.size() == outer.dim()) break;
    }
    return kept;
}

Vec project_coords(const Vec& x, const std::vector<Vec>& s_basis, const Subspace& kernel) {
    const std::size_t n = kernel.ambient_dim();
    if (x.size() != n) throw std::invalid_argument("project_coords: ambient dimension mismatch");
    const std::size_t s = s_basis.size();
    Matrix a(n, s + kernel.dim());
    for (std::size_t j = 0; j < s; ++j) {
        if (s_basis[j].size() != n) throw std::invalid_argument("project_coords: basis vector length mismatch");
        for (std::size_t i = 0; i < n; ++i) a.at(i, j) = s_basis[j][i];
    }
    for (std::size_t j = 0; j < kernel.dim(); ++j) {
        for (std::size_t i = 0; i < n; ++i) a.at(i, s + j) = kernel.basis().at(j, i);
    }
    if (rank(a) != s + kernel.dim()) {
        throw std::invalid_argument("project_coords: the two spaces do not form a direct sum");
    }
    std::optional<Vec> c = solve(a, x);
    if (!c) throw RejectError(Reject::NotInSpan, "vector lies outside the direct sum");
    return Vec(c->begin(), c->begin() + static_cast<std::ptrdiff_t>(s));
}

}  // namespace milrec
