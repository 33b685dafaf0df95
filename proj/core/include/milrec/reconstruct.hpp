#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "milrec/algebra_table.hpp"
#include "milrec/errors.hpp"
#include "milrec/polynomial.hpp"

namespace milrec {

// Dimensions recovered from an abstract table: the number of variables n,
// the degree m of the defining forms, and the nil index nu, linked by
// m = nu / n + 1. Each certificate failure throws RejectError with the
// first failed reason: NotLocal, NotGorenstein, BadAmbientDim (n < 2), or
// NuNotDivisible.
struct RecoveredDims {
    std::size_t num_vars = 0;
    unsigned form_degree = 0;
    std::size_t nil_index = 0;
};

RecoveredDims recover_dims(const AlgebraTable& t);

// Images of the degree-m monomials under a chosen tuple f of degree-one
// elements, projected to a complement of m^{m+1} inside m^m.
struct MonomialImages {
    std::vector<Monomial> monomials;  // K monomials of degree m, canonical order
    std::vector<Vec> images;          // q_rho(f), algebra coordinates
    std::vector<Vec> s_basis;         // complement basis of m^{m+1} in m^m
    Matrix pi_coords;                 // K x (K - n), row rho = coordinates of the projection
};

// Throws RejectError(DimensionMismatch) when dim(m^m / m^{m+1}) != K - n.
MonomialImages monomial_images(const AlgebraTable& t, const std::vector<Vec>& f, unsigned form_degree);

// Canonical RREF basis of the left kernel of pi_coords; throws
// RejectError(KernelDimMismatch) unless it has exactly expected_rows rows.
Matrix relation_matrix(const Matrix& pi_coords, std::size_t expected_rows);

struct ReconstructionReport {
    std::size_t algebra_dim = 0;
    std::size_t nil_index = 0;
    std::size_t num_vars = 0;
    unsigned form_degree = 0;
    std::vector<Vec> f;  // chosen degree-one tuple, algebra coordinates
    Matrix gamma;        // n x K relation matrix
    PolyMap phi;         // recovered homogeneous map, phi = gamma applied to the degree-m monomials
    std::vector<std::string> diagnostics;
};

// Full pipeline from an abstract table to the polynomial map phi, ending
// with the finiteness certificate on phi (RejectError(NotFiniteAtOrigin) on
// failure). Precondition: the table passes validate_table; a violation
// throws std::invalid_argument.
ReconstructionReport reconstruct_map(const AlgebraTable& t);

// Isomorphism invariants of the rebuilt algebra, recorded as the acceptance
// certificate of recognize.
struct RecognitionCertificate {
    std::size_t dim = 0;
    std::size_t nil_index = 0;
    std::vector<std::size_t> loewy;
    std::size_t socle_dim = 0;
};

struct RecognitionVerdict {
    bool accepted = false;
    std::optional<Reject> reason;  // set when rejected
    std::string detail;
    std::optional<ReconstructionReport> report;          // set when accepted
    std::optional<RecognitionCertificate> certificate;   // set when accepted
};

// Decision procedure: runs reconstruct_map, rebuilds the quotient algebra
// of phi, and compares computable invariants (dimension, nil index, Loewy
// dimensions, socle dimension) against the input. "Accepted" certifies all
// necessary conditions, not isomorphism.
RecognitionVerdict recognize(const AlgebraTable& t);

}  // namespace milrec
