#include "milrec/milnor.hpp"

#include <random>
#include <stdexcept>

#include "milrec/errors.hpp"
#include "milrec/matrix.hpp"

namespace milrec {

namespace {

// Shared precondition for the quotient routines: a square map of nonzero
// equal-degree forms. Returns the common degree.
unsigned square_map_degree(const PolyMap& p) {
    validate_polymap(p);
    if (p.num_vars == 0 || p.components.size() != p.num_vars) {
        throw std::invalid_argument("expected one generator per variable");
    }
    std::optional<unsigned> d = common_homogeneous_degree(p);
    if (!d || *d < 1) {
        throw std::invalid_argument("generators must be nonzero homogeneous forms of one positive degree");
    }
    for (const Polynomial& c : p.components) {
        if (c.is_zero()) throw std::invalid_argument("generators must be nonzero forms");
    }
    return *d;
}

}  // namespace

PolyMap gradient_map(const Polynomial& q) {
    if (q.is_zero() || !q.is_homogeneous()) {
        throw RejectError(Reject::NotHomogeneous, "gradient source must be a nonzero homogeneous form");
    }
    if (q.degree() < 3) {
        throw std::invalid_argument("gradient source must have degree at least 3");
    }
    PolyMap p;
    p.num_vars = q.num_vars();
    p.components.reserve(q.num_vars());
    for (std::size_t i = 0; i < q.num_vars(); ++i) {
        p.components.push_back(partial_derivative(q, i));
    }
    return p;
}

Subspace graded_ideal_piece(const PolyMap& p, unsigned i) {
    validate_polymap(p);
    std::optional<unsigned> d = common_homogeneous_degree(p);
    if (!d || *d < 1) {
        throw std::invalid_argument("generators must be nonzero homogeneous forms of one positive degree");
    }
    const unsigned m = *d;
    const std::size_t n = p.num_vars;
    const std::size_t cols = monomials_of_degree(n, i).size();
    if (i < m) return Subspace::zero(cols);
    std::vector<Monomial> shifts = monomials_of_degree(n, i - m);
    std::vector<Vec> rows;
    rows.reserve(p.components.size() * shifts.size());
    for (const Polynomial& gen : p.components) {
        for (const Monomial& mu : shifts) {
            rows.push_back(coeff_vector(gen * Polynomial::term(mu, Rational(1)), i));
        }
    }
    return Subspace::span(cols, rows);
}

bool is_finite_at_origin(const PolyMap& p) {
    validate_polymap(p);
    std::optional<unsigned> d = common_homogeneous_degree(p);
    if (!d || *d < 1) {
        throw std::invalid_argument("generators must be nonzero homogeneous forms of one positive degree");
    }
    const unsigned m = *d;
    const unsigned critical = static_cast<unsigned>(p.num_vars) * (m - 1) + 1;
    Subspace piece = graded_ideal_piece(p, critical);
    return piece.dim() == piece.ambient_dim();
}

GradedQuotient GradedQuotient::build(const PolyMap& p) {
    const unsigned m = square_map_degree(p);
    if (!is_finite_at_origin(p)) {
        throw RejectError(Reject::NotFinite, "the ideal has positive-dimensional zero locus");
    }
    GradedQuotient q;
    q.generators = p;
    q.gen_degree = m;
    q.top_degree = static_cast<unsigned>(p.num_vars) * (m - 1);
    q.ideal_pieces.reserve(q.top_degree + 1);
    q.quotient_bases.reserve(q.top_degree + 1);
    q.offsets.reserve(q.top_degree + 1);
    std::size_t total = 0;
    for (unsigned i = 0; i <= q.top_degree; ++i) {
        Subspace piece = graded_ideal_piece(p, i);
        std::vector<Monomial> monos = monomials_of_degree(p.num_vars, i);
        std::vector<Monomial> basis;
        std::size_t next_pivot = 0;
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (next_pivot < piece.pivots().size() && piece.pivots()[next_pivot] == c) {
                ++next_pivot;
                continue;
            }
            basis.push_back(monos[c]);
        }
        q.offsets.push_back(total);
        total += basis.size();
        q.ideal_pieces.push_back(std::move(piece));
        q.quotient_bases.push_back(std::move(basis));
    }
    q.dimension = total;
    return q;
}

Vec GradedQuotient::normal_form(const Polynomial& poly) const {
    if (poly.num_vars() != generators.num_vars) {
        throw std::invalid_argument("variable count mismatch");
    }
    Vec out(dimension);
    for (unsigned i = 0; i <= top_degree; ++i) {
        Vec piece = coeff_vector(poly, i);
        if (is_zero_vec(piece)) continue;
        Vec rem = ideal_pieces[i].reduce(std::move(piece));
        // The remainder is supported on the non-pivot columns, which are
        // exactly the degree-i quotient basis monomials.
        std::vector<Monomial> monos = monomials_of_degree(generators.num_vars, i);
        std::size_t local = 0;
        std::size_t next_pivot = 0;
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (next_pivot < ideal_pieces[i].pivots().size() &&
                ideal_pieces[i].pivots()[next_pivot] == c) {
                ++next_pivot;
                continue;
            }
            out[offsets[i] + local] = rem[c];
            ++local;
        }
    }
    return out;
}

namespace {

GradedTable canonical_table(const GradedQuotient& q) {
    GradedTable g;
    const std::size_t n_total = q.dimension;
    g.table = AlgebraTable(n_total);
    g.degree_of.reserve(n_total);
    for (unsigned i = 0; i <= q.top_degree; ++i) {
        for (const Monomial& mono : q.quotient_bases[i]) {
            g.degree_of.push_back(i);
            g.monomial_of.push_back(mono);
        }
    }
    for (std::size_t a = 0; a < n_total; ++a) {
        for (std::size_t b = a; b < n_total; ++b) {
            unsigned deg = g.degree_of[a] + g.degree_of[b];
            if (deg > q.top_degree) continue;  // zero product
            Polynomial prod = Polynomial::term(g.monomial_of[a].times(g.monomial_of[b]), Rational(1));
            g.table.set_product(a, b, to_sparse(q.normal_form(prod)));
        }
    }
    g.basis_in_canonical = Matrix::identity(n_total);
    return g;
}

}  // namespace

GradedTable build_milnor_table(const PolyMap& p) {
    return canonical_table(GradedQuotient::build(p));
}

GradedTable build_milnor_table(const PolyMap& p, const std::vector<BasisElement>& basis) {
    GradedQuotient q = GradedQuotient::build(p);
    GradedTable canon = canonical_table(q);
    const std::size_t n_total = q.dimension;
    if (basis.size() != n_total) {
        throw std::invalid_argument("basis size differs from quotient dimension");
    }
    Matrix s(n_total, n_total);
    for (std::size_t j = 0; j < n_total; ++j) {
        Vec cls = q.normal_form(basis[j].poly);
        for (std::size_t i = 0; i < n_total; ++i) s.at(i, j) = cls[i];
        // Filtration degree of the class: the lowest degree block with a
        // nonzero coordinate must match the declared degree.
        std::optional<unsigned> lowest;
        for (unsigned deg = 0; deg <= q.top_degree && !lowest; ++deg) {
            std::size_t begin = q.offsets[deg];
            std::size_t end = begin + q.quotient_bases[deg].size();
            for (std::size_t i = begin; i < end; ++i) {
                if (!cls[i].is_zero()) {
                    lowest = deg;
                    break;
                }
            }
        }
        if (!lowest) throw std::invalid_argument("basis element is zero in the quotient");
        if (*lowest != basis[j].degree) {
            throw std::invalid_argument("basis element degree tag disagrees with its class");
        }
    }
    if (determinant(s).is_zero()) {
        throw std::invalid_argument("candidate basis is not a basis of the quotient");
    }
    if (!(basis[0].degree == 0 && s.col(0) == to_dense({{0, Rational(1)}}, n_total))) {
        throw std::invalid_argument("basis vector 0 must be the unit class");
    }
    GradedTable g;
    g.table = AlgebraTable(n_total);
    g.degree_of.reserve(n_total);
    for (const BasisElement& e : basis) g.degree_of.push_back(e.degree);
    for (std::size_t a = 0; a < n_total; ++a) {
        for (std::size_t b = a; b < n_total; ++b) {
            Vec prod = canon.table.multiply(s.col(a), s.col(b));
            std::optional<Vec> coords = solve(s, prod);
            if (!coords) throw std::logic_error("basis change failed to express a product");
            g.table.set_product(a, b, to_sparse(*coords));
        }
    }
    g.basis_in_canonical = std::move(s);
    return g;
}

std::vector<std::size_t> hilbert_function(const PolyMap& p) {
    GradedQuotient q = GradedQuotient::build(p);
    std::vector<std::size_t> dims;
    dims.reserve(q.top_degree + 1);
    for (const auto& basis : q.quotient_bases) dims.push_back(basis.size());
    return dims;
}

bool socle_jacobian_check(const PolyMap& p, const GradedTable& g) {
    GradedQuotient q = GradedQuotient::build(p);
    if (q.dimension != g.table.dim()) {
        throw std::invalid_argument("table dimension disagrees with the quotient of p");
    }
    Polynomial jac = jacobian_det(p);
    Vec canon_class = q.normal_form(jac);
    std::optional<Vec> cls = solve(g.basis_in_canonical, canon_class);
    if (!cls) throw std::invalid_argument("table basis does not span the quotient");
    if (is_zero_vec(*cls)) return false;
    Subspace socle = annihilator(g.table, maximal_ideal(g.table));
    return Subspace::span(g.table.dim(), {*cls}) == socle;
}

AlgebraTable scramble_table(const AlgebraTable& t, std::uint64_t seed) {
    if (seed == 0) return t;
    const std::size_t n = t.dim();
    std::mt19937_64 rng(seed);
    Matrix s(n, n);
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                // Entries in [-3, 3]; rng() % 7 keeps the draw sequence
                // identical across platforms, unlike the distribution
                // adaptors, whose output is implementation defined.
                s.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
            }
        }
        found = !determinant(s).is_zero();
    }
    if (!found) throw std::runtime_error("could not draw an invertible basis change");
    AlgebraTable out(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            Vec prod = t.multiply(s.col(a), s.col(b));
            std::optional<Vec> coords = solve(s, prod);
            if (!coords) throw std::logic_error("basis change failed to express a product");
            out.set_product(a, b, to_sparse(*coords));
        }
    }
    return out;
}

Polynomial hesse_cubic(const Rational& t) {
    Polynomial q(3);
    q.add_term(Monomial({3, 0, 0}), Rational(1));
    q.add_term(Monomial({0, 3, 0}), Rational(1));
    q.add_term(Monomial({0, 0, 3}), Rational(1));
    q.add_term(Monomial({1, 1, 1}), t);
    return q;
}

}  // namespace milrec
