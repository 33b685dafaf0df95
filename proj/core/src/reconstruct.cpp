#include "milrec/reconstruct.hpp"

#include <sstream>
#include <stdexcept>

#include "milrec/milnor.hpp"
#include "milrec/subspace.hpp"

namespace milrec {

RecoveredDims recover_dims(const AlgebraTable& t) {
    Subspace m = maximal_ideal(t);
    if (annihilator(t, m).dim() != 1) {
        throw RejectError(Reject::NotGorenstein, "socle dimension is not 1");
    }
    Subspace m2 = subspace_product(t, m, m);
    const std::size_t n = m.dim() - m2.dim();
    if (n < 2) {
        throw RejectError(Reject::BadAmbientDim,
                          "embedding dimension " + std::to_string(n) + " is below 2");
    }
    const std::size_t nu = nil_index(t, m);
    if (nu % n != 0) {
        throw RejectError(Reject::NuNotDivisible,
                          "nil index " + std::to_string(nu) + " is not divisible by " + std::to_string(n));
    }
    RecoveredDims dims;
    dims.num_vars = n;
    dims.nil_index = nu;
    dims.form_degree = static_cast<unsigned>(nu / n) + 1;
    return dims;
}

MonomialImages monomial_images(const AlgebraTable& t, const std::vector<Vec>& f, unsigned form_degree) {
    const std::size_t n = f.size();
    if (n == 0) throw std::invalid_argument("empty generator tuple");
    Subspace m = maximal_ideal(t);
    Subspace power = m;  // m^1
    for (unsigned i = 1; i < form_degree; ++i) power = subspace_product(t, power, m);
    Subspace power_next = subspace_product(t, power, m);

    MonomialImages out;
    out.monomials = monomials_of_degree(n, form_degree);
    const std::size_t k_count = out.monomials.size();
    out.s_basis = complement_basis(power_next, power);
    if (out.s_basis.size() != k_count - n) {
        throw RejectError(Reject::DimensionMismatch,
                          "dim m^m/m^{m+1} is " + std::to_string(out.s_basis.size()) +
                              ", expected " + std::to_string(k_count - n));
    }
    out.images.reserve(k_count);
    out.pi_coords = Matrix(k_count, k_count - n);
    for (std::size_t rho = 0; rho < k_count; ++rho) {
        Vec image = eval_poly_in_algebra(t, Polynomial::term(out.monomials[rho], Rational(1)), f);
        Vec coords = project_coords(image, out.s_basis, power_next);
        out.pi_coords.set_row(rho, coords);
        out.images.push_back(std::move(image));
    }
    return out;
}

Matrix relation_matrix(const Matrix& pi_coords, std::size_t expected_rows) {
    Subspace left = kernel_basis(pi_coords.transpose());
    if (left.dim() != expected_rows) {
        throw RejectError(Reject::KernelDimMismatch,
                          "relation space has dimension " + std::to_string(left.dim()) +
                              ", expected " + std::to_string(expected_rows));
    }
    return left.basis();
}

ReconstructionReport reconstruct_map(const AlgebraTable& t) {
    TableValidation validation = validate_table(t);
    if (!validation.ok()) {
        const auto& v = validation.violations.front();
        throw std::invalid_argument("table is not associative, first violation at triple (" +
                                    std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " +
                                    std::to_string(v[2]) + ")");
    }
    ReconstructionReport report;
    report.algebra_dim = t.dim();
    report.diagnostics.push_back("table validated: commutative and associative, dimension " +
                                 std::to_string(t.dim()));
    unit(t);
    report.diagnostics.push_back("unit found");
    Subspace m = maximal_ideal(t);
    report.diagnostics.push_back("local: maximal ideal has dimension " + std::to_string(m.dim()));
    RecoveredDims dims = recover_dims(t);
    report.num_vars = dims.num_vars;
    report.form_degree = dims.form_degree;
    report.nil_index = dims.nil_index;
    report.diagnostics.push_back("gorenstein with embedding dimension " + std::to_string(dims.num_vars) +
                                 ", nil index " + std::to_string(dims.nil_index) + ", form degree " +
                                 std::to_string(dims.form_degree));
    Subspace m2 = subspace_product(t, m, m);
    report.f = complement_basis(m2, m);
    report.diagnostics.push_back("degree-one tuple chosen greedily, " + std::to_string(report.f.size()) +
                                 " elements");
    MonomialImages images = monomial_images(t, report.f, dims.form_degree);
    report.diagnostics.push_back("projected " + std::to_string(images.monomials.size()) +
                                 " monomial images to a complement of dimension " +
                                 std::to_string(images.s_basis.size()));
    report.gamma = relation_matrix(images.pi_coords, dims.num_vars);
    report.diagnostics.push_back("relation matrix has " + std::to_string(report.gamma.rows()) +
                                 " rows");
    report.phi.num_vars = dims.num_vars;
    report.phi.components.reserve(dims.num_vars);
    for (std::size_t sigma = 0; sigma < report.gamma.rows(); ++sigma) {
        report.phi.components.push_back(
            poly_from_coeff_vector(dims.num_vars, dims.form_degree, report.gamma.row(sigma)));
    }
    if (!is_finite_at_origin(report.phi)) {
        throw RejectError(Reject::NotFiniteAtOrigin,
                          "recovered map has a positive-dimensional zero locus");
    }
    report.diagnostics.push_back("recovered map is finite at the origin");
    return report;
}

RecognitionVerdict recognize(const AlgebraTable& t) {
    RecognitionVerdict verdict;
    ReconstructionReport report;
    try {
        report = reconstruct_map(t);
    } catch (const RejectError& e) {
        verdict.accepted = false;
        verdict.reason = e.reason();
        verdict.detail = e.detail();
        return verdict;
    }
    GradedTable rebuilt = build_milnor_table(report.phi);

    Subspace m_in = maximal_ideal(t);
    Subspace m_re = maximal_ideal(rebuilt.table);
    RecognitionCertificate cert;
    cert.dim = rebuilt.table.dim();
    cert.nil_index = nil_index(rebuilt.table, m_re);
    cert.loewy = loewy_dims(rebuilt.table);
    cert.socle_dim = annihilator(rebuilt.table, m_re).dim();

    std::ostringstream mismatch;
    if (t.dim() != cert.dim) {
        mismatch << "dimension " << t.dim() << " vs " << cert.dim;
    } else if (nil_index(t, m_in) != cert.nil_index) {
        mismatch << "nil index " << nil_index(t, m_in) << " vs " << cert.nil_index;
    } else if (loewy_dims(t) != cert.loewy) {
        mismatch << "loewy dimensions differ";
    } else if (annihilator(t, m_in).dim() != cert.socle_dim) {
        mismatch << "socle dimension differs";
    }
    if (!mismatch.str().empty()) {
        verdict.accepted = false;
        verdict.reason = Reject::InvariantMismatch;
        verdict.detail = mismatch.str();
        return verdict;
    }
    verdict.accepted = true;
    verdict.report = std::move(report);
    verdict.certificate = std::move(cert);
    return verdict;
}

}  // namespace milrec
