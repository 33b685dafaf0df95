#pragma once

#include <cstddef>

#include "milrec/matrix.hpp"
#include "milrec/polynomial.hpp"
#include "milrec/rational.hpp"

namespace milrec {

inline constexpr std::size_t kDefaultSearchBound = 10000;

// Linear system cutting out the matrices D for which the components of
// D * phi are the partial derivatives of a single form: one equation per
// variable pair r < s and per monomial of degree m - 1, in the n^2 unknowns
// d_{rs} laid out row major. Row order is (r, s) lexicographic, then the
// canonical monomial order, so the system is deterministic.
struct ClosednessSystem {
    std::size_t num_vars = 0;
    unsigned map_degree = 0;
    Matrix equations;
};

ClosednessSystem closedness_system(const PolyMap& phi);

// First solution of the system with nonzero determinant, in a pinned
// enumeration: the kernel basis vectors in order, then integer combinations
// with coefficients cycling through 0, 1, -1, 2, -2 per slot (odometer
// order, last slot fastest, the all-zero tuple skipped). Each candidate
// counts against search_bound; exhaustion or an empty kernel throws
// RejectError(NoNondegenerateSolution).
Matrix nondegenerate_solution(const ClosednessSystem& sys, std::size_t search_bound = kDefaultSearchBound);

struct FormRecovery {
    Matrix d0;
    Polynomial form{1};
};

// Whole chain: closedness system, nondegenerate solution D0, then exact
// Euler integration of D0 * phi. Components of degree 1 are refused unless
// allow_linear is set, since a linear map carries no singularity data.
FormRecovery recover_form(const PolyMap& phi, std::size_t search_bound = kDefaultSearchBound,
                          bool allow_linear = false);

// Same integration with a caller-supplied nondegenerate D0; throws
// RejectError(NotClosed) when D0 does not solve the closedness system.
FormRecovery recover_form_with(const PolyMap& phi, const Matrix& d0);

// Values of the two fundamental invariants of a ternary cubic, the
// discriminant combination Delta = T^2 + 64 S^3, and the absolute invariant
// J = c S^3 / Delta. The constant c is calibrated at runtime on the Hesse
// family (fit at t = 1 and 2, consistency check at t = 3).
struct CubicInvariants {
    Rational s;
    Rational t;
    Rational discriminant;
    Rational j;
};

// Throws RejectError(DegenerateCubic) when Delta = 0 (singular cubic) and
// std::invalid_argument unless the input is a nonzero ternary cubic form.
CubicInvariants cubic_invariants(const Polynomial& cubic);

// Closed form of J on the family z1^3 + z2^3 + z3^3 + t z1 z2 z3:
// J(t) = -t^3 (t^3 - 216)^3 / (110592 (t^3 + 27)^3). The pencil member is
// singular exactly at t^3 = -27, where RejectError(HessePencilDegenerate)
// is thrown.
Rational j_of_qt(const Rational& t);

}  // namespace milrec
