#include "milrec/form_recovery.hpp"

#include <array>
#include <stdexcept>

#include "milrec/errors.hpp"
#include "milrec/milnor.hpp"
#include "ternary_cubic_terms.hpp"

namespace milrec {

ClosednessSystem closedness_system(const PolyMap& phi) {
    validate_polymap(phi);
    const std::size_t n = phi.num_vars;
    if (n == 0 || phi.components.size() != n) {
        throw std::invalid_argument("closedness system needs one component per variable");
    }
    std::optional<unsigned> d = common_homogeneous_degree(phi);
    if (!d || *d < 1) {
        throw std::invalid_argument("components must be nonzero homogeneous of one positive degree");
    }
    ClosednessSystem sys;
    sys.num_vars = n;
    sys.map_degree = *d;
    const std::size_t block = monomials_of_degree(n, *d - 1).size();
    // partials[b][s] = coefficient vector of d(phi_b)/d(z_s) in degree m-1.
    std::vector<std::vector<Vec>> partials(n, std::vector<Vec>(n));
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t s = 0; s < n; ++s) {
            partials[b][s] = coeff_vector(partial_derivative(phi.components[b], s), *d - 1);
        }
    }
    sys.equations = Matrix(n * (n - 1) / 2 * block, n * n);
    std::size_t row = 0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = r + 1; s < n; ++s) {
            for (std::size_t mu = 0; mu < block; ++mu, ++row) {
                for (std::size_t b = 0; b < n; ++b) {
                    sys.equations.at(row, r * n + b) += partials[b][s][mu];
                    sys.equations.at(row, s * n + b) -= partials[b][r][mu];
                }
            }
        }
    }
    return sys;
}

namespace {

Matrix reshape_square(const Vec& flat, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = flat[i * n + j];
    }
    return m;
}

}  // namespace

Matrix nondegenerate_solution(const ClosednessSystem& sys, std::size_t search_bound) {
    const std::size_t n = sys.num_vars;
    Subspace kernel = kernel_basis(sys.equations);
    const std::size_t s = kernel.dim();
    if (s == 0) {
        throw RejectError(Reject::NoNondegenerateSolution, "the closedness system has only the zero solution");
    }
    std::size_t examined = 0;
    auto consider = [&](const Vec& flat) -> std::optional<Matrix> {
        ++examined;
        Matrix candidate = reshape_square(flat, n);
        if (!determinant(candidate).is_zero()) return candidate;
        return std::nullopt;
    };
    for (std::size_t i = 0; i < s && examined < search_bound; ++i) {
        if (auto hit = consider(kernel.basis().row(i))) return *hit;
    }
    static const std::array<Rational, 5> cycle = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
    std::vector<std::size_t> digits(s, 0);
    while (examined < search_bound) {
        // Advance the odometer, last slot fastest.
        std::size_t pos = s;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < cycle.size()) break;
            digits[pos] = 0;
            if (pos == 0) {
                throw RejectError(Reject::NoNondegenerateSolution,
                                  "candidate enumeration exhausted without a nondegenerate solution");
            }
        }
        Vec flat(n * n);
        for (std::size_t i = 0; i < s; ++i) {
            const Rational& c = cycle[digits[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n * n; ++j) flat[j] += c * kernel.basis().at(i, j);
        }
        if (auto hit = consider(flat)) return *hit;
    }
    throw RejectError(Reject::NoNondegenerateSolution,
                      "no nondegenerate solution within the search bound");
}

FormRecovery recover_form(const PolyMap& phi, std::size_t search_bound, bool allow_linear) {
    ClosednessSystem sys = closedness_system(phi);
    if (sys.map_degree < 2 && !allow_linear) {
        throw std::invalid_argument("components have degree 1; a defining form needs degree at least 2");
    }
    FormRecovery out;
    out.d0 = nondegenerate_solution(sys, search_bound);
    out.form = euler_integrate(apply_matrix(out.d0, phi));
    return out;
}

FormRecovery recover_form_with(const PolyMap& phi, const Matrix& d0) {
    validate_polymap(phi);
    const std::size_t n = phi.num_vars;
    if (d0.rows() != n || d0.cols() != n) throw std::invalid_argument("matrix shape mismatch");
    if (determinant(d0).is_zero()) throw std::invalid_argument("supplied matrix is degenerate");
    FormRecovery out;
    out.d0 = d0;
    out.form = euler_integrate(apply_matrix(d0, phi));
    return out;
}

namespace {

struct RawCubicValues {
    Rational s;
    Rational t;
    Rational discriminant;
};

RawCubicValues raw_cubic_values(const Polynomial& cubic) {
    if (cubic.num_vars() != 3) throw std::invalid_argument("invariants are defined for three variables");
    if (cubic.is_zero() || !cubic.is_homogeneous() || cubic.degree() != 3) {
        throw std::invalid_argument("invariants are defined for nonzero cubic forms");
    }
    Vec c = coeff_vector(cubic, 3);
    RawCubicValues out;
    for (const auto& term : detail::kAronholdSTerms) {
        Rational prod(term.num, term.den);
        for (int i = 0; i < 4; ++i) prod *= c[static_cast<std::size_t>(term.idx[i])];
        out.s += prod;
    }
    for (const auto& term : detail::kAronholdTTerms) {
        Rational prod(term.num, term.den);
        for (int i = 0; i < 6; ++i) prod *= c[static_cast<std::size_t>(term.idx[i])];
        out.t += prod;
    }
    out.discriminant = out.t * out.t + Rational(64) * out.s.pow(3);
    return out;
}

// Calibrates the constant in J = c S^3 / Delta against the closed form on
// the Hesse family: fit at t = 1 and t = 2, then verify at t = 3. All
// three members are smooth and have S != 0, so the quotients are defined.
const Rational& calibration_constant() {
    static const Rational c = [] {
        auto fit = [](long t) {
            RawCubicValues v = raw_cubic_values(hesse_cubic(Rational(t)));
            return j_of_qt(Rational(t)) * v.discriminant / v.s.pow(3);
        };
        Rational c1 = fit(1);
        if (c1 != fit(2)) throw std::logic_error("invariant calibration is inconsistent at t = 2");
        RawCubicValues probe = raw_cubic_values(hesse_cubic(Rational(3)));
        if (c1 * probe.s.pow(3) / probe.discriminant != j_of_qt(Rational(3))) {
            throw std::logic_error("invariant calibration fails the t = 3 check");
        }
        return c1;
    }();
    return c;
}

}  // namespace

CubicInvariants cubic_invariants(const Polynomial& cubic) {
    RawCubicValues raw = raw_cubic_values(cubic);
    CubicInvariants out;
    out.s = raw.s;
    out.t = raw.t;
    out.discriminant = raw.discriminant;
    if (out.discriminant.is_zero()) {
        throw RejectError(Reject::DegenerateCubic, "the cubic is singular (zero discriminant)");
    }
    out.j = calibration_constant() * raw.s.pow(3) / raw.discriminant;
    return out;
}

Rational j_of_qt(const Rational& t) {
    Rational t3 = t.pow(3);
    Rational denom = t3 + Rational(27);
    if (denom.is_zero()) {
        throw RejectError(Reject::HessePencilDegenerate, "pencil member is singular at t^3 = -27");
    }
    Rational num = -(t3 * (t3 - Rational(216)).pow(3));
    return num / (Rational(110592) * denom.pow(3));
}

}  // namespace milrec
