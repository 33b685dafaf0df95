#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milrec/matrix.hpp"
#include "milrec/rational.hpp"

namespace milrec {

// Monomial in a fixed number of variables, identified by its exponent
// vector. Comparison is lexicographic on the exponent vector, so "greater"
// means lexicographically larger; the canonical enumeration of a degree
// block lists monomials in decreasing order.
class Monomial {
  public:
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }

    std::size_t num_vars() const { return exps_.size(); }
    unsigned exp(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exps() const { return exps_; }

    unsigned degree() const;
    Monomial times(const Monomial& other) const;

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

  private:
    std::vector<unsigned> exps_;
};

// All monomials of the given degree, in decreasing lexicographic order.
// For n = 3, d = 2 this is z1^2, z1 z2, z1 z3, z2^2, z2 z3, z3^2; every
// coefficient vector in the library is indexed against this enumeration.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

// Polynomial over Q with a fixed variable count. Terms are kept in
// decreasing monomial order and zero coefficients are never stored, so the
// representation is canonical.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}
    static Polynomial constant(std::size_t num_vars, const Rational& c);
    static Polynomial term(Monomial m, const Rational& c);
    static Polynomial variable(std::size_t num_vars, std::size_t index);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    // Largest term degree; zero for the zero polynomial.
    unsigned degree() const;
    // True when all stored terms share one degree; the zero polynomial
    // counts as homogeneous.
    bool is_homogeneous() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

  private:
    std::size_t num_vars_;
    TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

// Degree-d homogeneous piece of p as a coefficient vector indexed by
// monomials_of_degree(p.num_vars(), d); terms of other degrees are ignored.
Vec coeff_vector(const Polynomial& p, unsigned degree);
Polynomial poly_from_coeff_vector(std::size_t num_vars, unsigned degree, const Vec& coords);

// Polynomial map: a tuple of polynomials in a shared variable set.
struct PolyMap {
    std::size_t num_vars = 0;
    std::vector<Polynomial> components;

    friend bool operator==(const PolyMap& a, const PolyMap& b) = default;
};

// Throws std::invalid_argument when a component disagrees with num_vars.
void validate_polymap(const PolyMap& p);

// Common degree of the nonzero components when they are all homogeneous of
// one degree; nullopt for the zero map or any mismatch.
std::optional<unsigned> common_homogeneous_degree(const PolyMap& p);

// Determinant of the Jacobian matrix of a square map, expanded exactly.
Polynomial jacobian_det(const PolyMap& p);

// Component recombination (d * p as a column of polynomials). d must have
// p.components.size() columns.
PolyMap apply_matrix(const Matrix& d, const PolyMap& p);

// Substitutes z_i -> sum_j l(i, j) z_j into p. l must be n x n.
Polynomial compose_linear(const Polynomial& p, const Matrix& l);

// Inverts the gradient on homogeneous maps: for components of common degree
// m >= 1 returns q = (1/(m+1)) sum_r z_r psi_r and verifies grad q = psi
// exactly, throwing RejectError(NotClosed) when psi is not a gradient.
Polynomial euler_integrate(const PolyMap& psi);

}  // namespace milrec
