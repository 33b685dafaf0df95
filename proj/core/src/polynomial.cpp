#include "milrec/polynomial.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "milrec/errors.hpp"

namespace milrec {

unsigned Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::times(const Monomial& other) const {
    if (other.num_vars() != num_vars()) throw std::invalid_argument("monomial product across variable sets");
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

namespace {

void enumerate_monomials(std::size_t remaining_vars, unsigned degree,
                         std::vector<unsigned>& prefix, std::vector<Monomial>& out) {
    if (remaining_vars == 1) {
        prefix.push_back(degree);
        out.push_back(Monomial(prefix));
        prefix.pop_back();
        return;
    }
    for (unsigned e = degree; e + 1 > 0; --e) {
        prefix.push_back(e);
        enumerate_monomials(remaining_vars - 1, degree - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
    if (num_vars == 0) throw std::invalid_argument("monomials_of_degree needs at least one variable");
    std::vector<Monomial> out;
    std::vector<unsigned> prefix;
    enumerate_monomials(num_vars, degree, prefix, out);
    return out;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial::one(num_vars), c);
    return p;
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
    Polynomial p(m.num_vars());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::invalid_argument("variable index out of range");
    std::vector<unsigned> e(num_vars, 0);
    e[index] = 1;
    return term(Monomial(std::move(e)), Rational(1));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.num_vars() != num_vars_) throw std::invalid_argument("term variable count mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) return false;
    }
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("polynomial sum across variable sets");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("polynomial difference across variable sets");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomial product across variable sets");
    Polynomial out(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out(p.num_vars());
    for (const auto& [m, pc] : p.terms()) out.add_term(m, c * pc);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (!mag.is_one() || m.degree() == 0) {
            os << mag.str();
            printed = true;
        }
        for (std::size_t i = 0; i < m.num_vars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (printed) os << "*";
            os << "z" << (i + 1);
            if (m.exp(i) > 1) os << "^" << m.exp(i);
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.num_vars()) throw std::invalid_argument("derivative variable out of range");
    Polynomial out(p.num_vars());
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exp(var);
        if (e == 0) continue;
        std::vector<unsigned> exps = m.exps();
        exps[var] = e - 1;
        out.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
    }
    return out;
}

Vec coeff_vector(const Polynomial& p, unsigned degree) {
    std::vector<Monomial> monos = monomials_of_degree(p.num_vars(), degree);
    Vec v(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) v[i] = p.coeff(monos[i]);
    return v;
}

Polynomial poly_from_coeff_vector(std::size_t num_vars, unsigned degree, const Vec& coords) {
    std::vector<Monomial> monos = monomials_of_degree(num_vars, degree);
    if (coords.size() != monos.size()) throw std::invalid_argument("coefficient vector length mismatch");
    Polynomial p(num_vars);
    for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], coords[i]);
    return p;
}

void validate_polymap(const PolyMap& p) {
    for (const Polynomial& c : p.components) {
        if (c.num_vars() != p.num_vars) {
            throw std::invalid_argument("map component variable count mismatch");
        }
    }
}

std::optional<unsigned> common_homogeneous_degree(const PolyMap& p) {
    validate_polymap(p);
    std::optional<unsigned> d;
    for (const Polynomial& c : p.components) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) return std::nullopt;
        if (d && *d != c.degree()) return std::nullopt;
        d = c.degree();
    }
    return d;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t> cols,
                    std::size_t row, std::size_t num_vars) {
    if (cols.size() == 1) return m[row][cols[0]];
    Polynomial acc(num_vars);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m[row][cols[k]].is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j != k) rest.push_back(cols[j]);
        }
        Polynomial minor = poly_det(m, std::move(rest), row + 1, num_vars);
        Polynomial piece = m[row][cols[k]] * minor;
        if (k % 2 == 0) {
            acc += piece;
        } else {
            acc -= piece;
        }
    }
    return acc;
}

}  // namespace

Polynomial jacobian_det(const PolyMap& p) {
    validate_polymap(p);
    const std::size_t n = p.num_vars;
    if (p.components.size() != n) throw std::invalid_argument("jacobian determinant needs a square map");
    if (n == 0) throw std::invalid_argument("jacobian determinant needs at least one variable");
    std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) jac[i][j] = partial_derivative(p.components[i], j);
    }
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return poly_det(jac, std::move(cols), 0, n);
}

PolyMap apply_matrix(const Matrix& d, const PolyMap& p) {
    validate_polymap(p);
    if (d.cols() != p.components.size()) throw std::invalid_argument("matrix-map shape mismatch");
    PolyMap out;
    out.num_vars = p.num_vars;
    out.components.reserve(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        Polynomial c(p.num_vars);
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (!d.at(i, j).is_zero()) c += d.at(i, j) * p.components[j];
        }
        out.components.push_back(std::move(c));
    }
    return out;
}

Polynomial compose_linear(const Polynomial& p, const Matrix& l) {
    const std::size_t n = p.num_vars();
    if (l.rows() != n || l.cols() != n) throw std::invalid_argument("substitution matrix must be square of the variable count");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial li(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!l.at(i, j).is_zero()) li += l.at(i, j) * Polynomial::variable(n, j);
        }
        images.push_back(std::move(li));
    }
    Polynomial out(n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial piece = Polynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            for (unsigned e = 0; e < m.exp(i); ++e) piece = piece * images[i];
        }
        out += piece;
    }
    return out;
}

Polynomial euler_integrate(const PolyMap& psi) {
    validate_polymap(psi);
    const std::size_t n = psi.num_vars;
    if (psi.components.size() != n) {
        throw std::invalid_argument("euler integration needs one component per variable");
    }
    std::optional<unsigned> d = common_homogeneous_degree(psi);
    if (!d) throw std::invalid_argument("euler integration needs nonzero homogeneous components of one degree");
    if (*d < 1) throw std::invalid_argument("euler integration needs degree at least 1");
    Polynomial q(n);
    for (std::size_t r = 0; r < n; ++r) {
        q += Polynomial::variable(n, r) * psi.components[r];
    }
    q = Rational(1, static_cast<long>(*d) + 1) * q;
    for (std::size_t r = 0; r < n; ++r) {
        if (partial_derivative(q, r) != psi.components[r]) {
            throw RejectError(Reject::NotClosed, "components are not the gradient of a single form");
        }
    }
    return q;
}

}  // namespace milrec
