#include "milrec/algebra_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "milrec/errors.hpp"

namespace milrec {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    }
    return s;
}

Vec to_dense(const SparseVec& s, std::size_t dim) {
    Vec v(dim);
    for (const auto& [i, c] : s) {
        if (i >= dim) throw std::invalid_argument("sparse index out of range");
        v[i] = c;
    }
    return v;
}

AlgebraTable::AlgebraTable(std::size_t dim)
    : dim_(dim), products_(dim * (dim + 1) / 2) {
    if (dim == 0) throw std::invalid_argument("algebra dimension must be positive");
}

std::size_t AlgebraTable::pair_index(std::size_t k, std::size_t l) const {
    // Row-of-triangle offset for k <= l.
    return k * dim_ - k * (k - 1) / 2 + (l - k);
}

void AlgebraTable::set_product(std::size_t k, std::size_t l, const SparseVec& coeffs) {
    if (k >= dim_ || l >= dim_) throw std::invalid_argument("basis index out of range");
    if (k > l) std::swap(k, l);
    std::map<std::size_t, Rational> merged;
    for (const auto& [j, c] : coeffs) {
        if (j >= dim_) throw std::invalid_argument("product coefficient index out of range");
        merged[j] += c;
    }
    SparseVec clean;
    for (const auto& [j, c] : merged) {
        if (!c.is_zero()) clean.emplace_back(j, c);
    }
    products_[pair_index(k, l)] = std::move(clean);
}

const SparseVec& AlgebraTable::product(std::size_t k, std::size_t l) const {
    if (k >= dim_ || l >= dim_) throw std::invalid_argument("basis index out of range");
    if (k > l) std::swap(k, l);
    return products_[pair_index(k, l)];
}

Vec AlgebraTable::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("element dimension mismatch");
    Vec out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        if (a[k].is_zero()) continue;
        for (std::size_t l = 0; l < dim_; ++l) {
            if (b[l].is_zero()) continue;
            Rational f = a[k] * b[l];
            for (const auto& [j, c] : product(k, l)) out[j] += f * c;
        }
    }
    return out;
}

TableValidation validate_table(const AlgebraTable& t) {
    const std::size_t n = t.dim();
    TableValidation report;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Vec ab = to_dense(t.product(a, b), n);
            for (std::size_t c = 0; c < n; ++c) {
                Vec bc = to_dense(t.product(b, c), n);
                // (e_a e_b) e_c versus e_a (e_b e_c), both expanded through
                // stored pair products.
                Vec lhs(n), rhs(n);
                for (std::size_t j = 0; j < n; ++j) {
                    if (!ab[j].is_zero()) {
                        for (const auto& [i, coef] : t.product(j, c)) lhs[i] += ab[j] * coef;
                    }
                    if (!bc[j].is_zero()) {
                        for (const auto& [i, coef] : t.product(a, j)) rhs[i] += bc[j] * coef;
                    }
                }
                if (lhs != rhs) report.violations.push_back({a, b, c});
            }
        }
    }
    return report;
}

Vec unit(const AlgebraTable& t) {
    const std::size_t n = t.dim();
    // u is the unit iff u e_k = e_k for every k; stacking those N systems
    // gives N^2 equations in the N coordinates of u.
    Matrix a(n * n, n);
    Vec b(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            for (const auto& [i, c] : t.product(l, k)) a.at(k * n + i, l) = c;
        }
        b[k * n + k] = 1;
    }
    std::optional<Vec> u = solve(a, b);
    if (!u) throw RejectError(Reject::NoUnit, "the table has no multiplicative unit");
    return *u;
}

Matrix mult_matrix(const AlgebraTable& t, const Vec& a) {
    const std::size_t n = t.dim();
    if (a.size() != n) throw std::invalid_argument("element dimension mismatch");
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (a[l].is_zero()) continue;
            for (const auto& [i, c] : t.product(l, k)) m.at(i, k) += a[l] * c;
        }
    }
    return m;
}

Subspace maximal_ideal(const AlgebraTable& t) {
    const std::size_t n = t.dim();
    Vec one = unit(t);
    std::vector<Vec> gens;
    gens.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec ek(n);
        ek[k] = 1;
        Matrix ck = mult_matrix(t, ek);
        Rational beta = trace(ck) / Rational(static_cast<long>(n));
        Matrix shifted = ck;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= beta;
        if (!nilpotency_check(shifted)) {
            throw RejectError(Reject::NotLocal,
                              "basis vector " + std::to_string(k) + " is not scalar plus nilpotent");
        }
        Vec gen = ek;
        for (std::size_t i = 0; i < n; ++i) gen[i] -= beta * one[i];
        gens.push_back(std::move(gen));
    }
    Subspace m = Subspace::span(n, gens);
    if (m.dim() != n - 1) {
        throw std::logic_error("maximal ideal has unexpected dimension");
    }
    return m;
}

Subspace subspace_product(const AlgebraTable& t, const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != t.dim() || v.ambient_dim() != t.dim()) {
        throw std::invalid_argument("subspace ambient dimension mismatch");
    }
    std::vector<Vec> gens;
    gens.reserve(u.dim() * v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            gens.push_back(t.multiply(u.basis().row(i), v.basis().row(j)));
        }
    }
    return Subspace::span(t.dim(), gens);
}

std::size_t nil_index(const AlgebraTable& t, const Subspace& m) {
    if (m.dim() == 0) return 0;
    Subspace power = m;
    std::size_t j = 1;
    while (true) {
        Subspace next = subspace_product(t, power, m);
        if (next.dim() == 0) return j;
        if (next.dim() >= power.dim()) {
            throw std::invalid_argument("subspace powers do not descend to zero");
        }
        power = std::move(next);
        ++j;
    }
}

Subspace annihilator(const AlgebraTable& t, const Subspace& m) {
    const std::size_t n = t.dim();
    if (m.ambient_dim() != n) throw std::invalid_argument("subspace ambient dimension mismatch");
    Matrix stacked(m.dim() * n, n);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Matrix ci = mult_matrix(t, m.basis().row(i));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = ci.at(r, c);
        }
    }
    return kernel_basis(stacked);
}

bool is_gorenstein(const AlgebraTable& t) {
    Subspace m = maximal_ideal(t);
    return annihilator(t, m).dim() == 1;
}

Vec eval_poly_in_algebra(const AlgebraTable& t, const Polynomial& q, const std::vector<Vec>& args) {
    const std::size_t n = t.dim();
    if (args.size() != q.num_vars()) throw std::invalid_argument("argument count mismatch");
    for (const Vec& a : args) {
        if (a.size() != n) throw std::invalid_argument("argument dimension mismatch");
    }
    Vec one = unit(t);
    // pows[i][e] = args[i]^e, filled on demand; pows[i][0] is the unit.
    std::vector<std::vector<Vec>> pows(args.size());
    auto power = [&](std::size_t i, unsigned e) -> const Vec& {
        auto& ladder = pows[i];
        if (ladder.empty()) ladder.push_back(one);
        while (ladder.size() <= e) ladder.push_back(t.multiply(ladder.back(), args[i]));
        return ladder[e];
    };
    Vec out(n);
    for (const auto& [mono, coef] : q.terms()) {
        Vec term = one;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (mono.exp(i) > 0) term = t.multiply(term, power(i, mono.exp(i)));
        }
        for (std::size_t j = 0; j < n; ++j) out[j] += coef * term[j];
    }
    return out;
}

std::vector<std::size_t> loewy_dims(const AlgebraTable& t) {
    Subspace m = maximal_ideal(t);
    std::vector<std::size_t> dims;
    Subspace power = Subspace::full(t.dim());
    while (power.dim() > 0) {
        Subspace next = power.dim() == t.dim() ? m : subspace_product(t, power, m);
        dims.push_back(power.dim() - next.dim());
        if (next.dim() >= power.dim()) {
            throw std::invalid_argument("subspace powers do not descend to zero");
        }
        power = std::move(next);
    }
    return dims;
}

}  // namespace milrec
