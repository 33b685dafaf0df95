#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "milrec/polynomial.hpp"
#include "milrec/subspace.hpp"

namespace milrec {

// Sparse coordinate vector: (index, coefficient) pairs with strictly
// increasing indices and no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t dim);

// Multiplication table of a commutative finite-dimensional Q-algebra on an
// abstract basis e_0, ..., e_{N-1}. Only products e_k e_l with k <= l are
// stored; commutativity is a property of the storage, associativity is not
// and must be checked with validate_table.
class AlgebraTable {
  public:
    explicit AlgebraTable(std::size_t dim);

    std::size_t dim() const { return dim_; }

    // Stores e_k e_l = e_l e_k. Accepts indices in either order and any
    // coefficient list; duplicates are merged and zeros dropped.
    void set_product(std::size_t k, std::size_t l, const SparseVec& coeffs);
    const SparseVec& product(std::size_t k, std::size_t l) const;

    // Bilinear extension of the table to arbitrary coordinate vectors.
    Vec multiply(const Vec& a, const Vec& b) const;

    friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) = default;

  private:
    std::size_t pair_index(std::size_t k, std::size_t l) const;

    std::size_t dim_;
    std::vector<SparseVec> products_;
};

struct TableValidation {
    // Ordered triples (a, b, c) with (e_a e_b) e_c != e_a (e_b e_c), in
    // lexicographic order.
    std::vector<std::array<std::size_t, 3>> violations;

    bool ok() const { return violations.empty(); }
};

// Exhaustive associativity check over all basis triples.
TableValidation validate_table(const AlgebraTable& t);

// Coordinates of the multiplicative unit, found as the solution of the
// stacked linear system u e_k = e_k for all k. Throws RejectError(NoUnit)
// when the system is inconsistent.
Vec unit(const AlgebraTable& t);

// Matrix of x -> a x in the table basis (column k is a e_k).
Matrix mult_matrix(const AlgebraTable& t, const Vec& a);

// The unique maximal ideal of a local table. Each basis vector e_k must be
// beta_k + nilpotent for the scalar beta_k = trace(mult_matrix(e_k)) / N;
// the ideal is spanned by the differences e_k - beta_k * unit. Any failed
// nilpotency certificate proves the algebra is not local and throws
// RejectError(NotLocal).
Subspace maximal_ideal(const AlgebraTable& t);

// Span of all pairwise products of the two subspaces.
Subspace subspace_product(const AlgebraTable& t, const Subspace& u, const Subspace& v);

// Largest j with m^j != 0 for a descending chain of powers; 0 for the zero
// subspace. Throws std::invalid_argument if a power fails to shrink before
// vanishing, which cannot happen for the maximal ideal of a local table.
std::size_t nil_index(const AlgebraTable& t, const Subspace& m);

// Annihilator {x : x y = 0 for all y in m}.
Subspace annihilator(const AlgebraTable& t, const Subspace& m);

// Local table with one-dimensional socle.
bool is_gorenstein(const AlgebraTable& t);

// Evaluates a polynomial at algebra elements: variable i is substituted by
// args[i], the constant term by its multiple of the unit.
Vec eval_poly_in_algebra(const AlgebraTable& t, const Polynomial& q, const std::vector<Vec>& args);

// Dimensions (dim m^i / m^{i+1}) for i = 0, ..., nil index; the entries sum
// to the algebra dimension.
std::vector<std::size_t> loewy_dims(const AlgebraTable& t);

}  // namespace milrec
