#pragma once

#include <cstddef>
#include <vector>

#include "milrec/matrix.hpp"

namespace milrec {

// Linear subspace of Q^n, stored as the unique RREF basis of its row space.
// Because the representation is canonical, two Subspace values are equal as
// C++ objects exactly when they are equal as subspaces.
class Subspace {
  public:
    Subspace() : ambient_(0) {}

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span_of_rows(const Matrix& rows);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Remainder of v after eliminating against the basis rows; zero iff the
    // vector lies in the subspace. The remainder vanishes on all pivot
    // columns, so it is the canonical representative of v modulo this space.
    Vec reduce(Vec v) const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

  private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Canonical basis of the right null space {x : m x = 0}, assembled from the
// RREF free columns and then re-reduced so the result is RREF itself.
Subspace kernel_basis(const Matrix& m);

// Greedy complement: walks the RREF basis rows of `outer` in order and keeps
// each one that is independent of `inner` plus the rows already kept. The
// kept rows project to a basis of outer/inner. Throws std::invalid_argument
// unless inner is contained in outer.
std::vector<Vec> complement_basis(const Subspace& inner, const Subspace& outer);

// Coordinates of x in the direct sum span(s_basis) (+) kernel, keeping only
// the span(s_basis) part. Throws std::invalid_argument when the sum is not
// direct, and RejectError(NotInSpan) when x lies outside the sum.
Vec project_coords(const Vec& x, const std::vector<Vec>& s_basis, const Subspace& kernel);

}  // namespace milrec
