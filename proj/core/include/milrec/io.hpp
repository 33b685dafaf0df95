#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "milrec/algebra_table.hpp"
#include "milrec/form_recovery.hpp"
#include "milrec/milnor.hpp"
#include "milrec/polynomial.hpp"
#include "milrec/reconstruct.hpp"

namespace milrec {

// JSON formats. Rationals are strings "p/q" in lowest terms ("p" when the
// denominator is 1). Tables are {"dim": N, "table": [[k, l, [[j, "c"],
// ...]], ...]} with 0-based indices, k <= l, and only nonzero products.
// Polynomials are {"vars": n, "terms": [{"c": "p/q", "e": [exponents]},
// ...]}, maps {"vars": n, "components": [polynomial, ...]}. Parsers accept
// JSON keys in any order but reject structural slop: duplicate table pairs
// or monomials, zero coefficients, indices out of range. Emitters produce
// sorted keys and fixed ordering, so equal values serialize identically.

nlohmann::json table_to_json(const AlgebraTable& t);
AlgebraTable table_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const PolyMap& p);
PolyMap map_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

// Quotient basis file: {"vars": n, "elements": [{"degree": d, "poly":
// polynomial}, ...]}.
std::vector<BasisElement> basis_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ReconstructionReport& r);
nlohmann::json verdict_to_json(const RecognitionVerdict& v);
nlohmann::json invariants_to_json(const CubicInvariants& inv);

// Canonical rendering: two-space indent, sorted object keys (the default
// map-backed json), trailing newline. Identical values give identical
// bytes.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace milrec
