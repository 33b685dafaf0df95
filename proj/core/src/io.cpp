#include "milrec/io.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace milrec {

using nlohmann::json;

namespace {

std::size_t require_index(const json& j, const char* what, std::size_t limit) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= limit) {
        throw std::invalid_argument(std::string(what) + " must be an integer below " + std::to_string(limit));
    }
    return j.get<std::size_t>();
}

Rational rational_from_json(const json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a rational string");
    return Rational::parse(j.get<std::string>());
}

const json& require_key(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string(what) + " must be an object with a \"" + key + "\" key");
    }
    return j.at(key);
}

}  // namespace

json table_to_json(const AlgebraTable& t) {
    json entries = json::array();
    for (std::size_t k = 0; k < t.dim(); ++k) {
        for (std::size_t l = k; l < t.dim(); ++l) {
            const SparseVec& prod = t.product(k, l);
            if (prod.empty()) continue;
            json coeffs = json::array();
            for (const auto& [j, c] : prod) coeffs.push_back(json::array({j, c.str()}));
            entries.push_back(json::array({k, l, std::move(coeffs)}));
        }
    }
    return json{{"dim", t.dim()}, {"table", std::move(entries)}};
}

AlgebraTable table_from_json(const json& j) {
    const json& jdim = require_key(j, "dim", "table");
    if (!jdim.is_number_unsigned() || jdim.get<std::uint64_t>() == 0) {
        throw std::invalid_argument("table \"dim\" must be a positive integer");
    }
    const std::size_t dim = jdim.get<std::size_t>();
    const json& jtab = require_key(j, "table", "table");
    if (!jtab.is_array()) throw std::invalid_argument("table \"table\" must be an array");
    AlgebraTable t(dim);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const json& entry : jtab) {
        if (!entry.is_array() || entry.size() != 3) {
            throw std::invalid_argument("table entry must be [k, l, coefficients]");
        }
        std::size_t k = require_index(entry[0], "table entry index", dim);
        std::size_t l = require_index(entry[1], "table entry index", dim);
        if (k > l) throw std::invalid_argument("table entries must have k <= l");
        if (!seen.insert({k, l}).second) {
            throw std::invalid_argument("duplicate table entry for pair (" + std::to_string(k) + ", " +
                                        std::to_string(l) + ")");
        }
        if (!entry[2].is_array()) throw std::invalid_argument("table entry coefficients must be an array");
        SparseVec prod;
        std::set<std::size_t> seen_idx;
        for (const json& pair : entry[2]) {
            if (!pair.is_array() || pair.size() != 2) {
                throw std::invalid_argument("table coefficient must be [index, rational]");
            }
            std::size_t idx = require_index(pair[0], "table coefficient index", dim);
            if (!seen_idx.insert(idx).second) {
                throw std::invalid_argument("duplicate coefficient index in a table entry");
            }
            Rational c = rational_from_json(pair[1], "table coefficient");
            if (c.is_zero()) throw std::invalid_argument("zero coefficients must be omitted");
            prod.emplace_back(idx, std::move(c));
        }
        t.set_product(k, l, prod);
    }
    return t;
}

json poly_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) {
        terms.push_back(json{{"c", c.str()}, {"e", mono.exps()}});
    }
    return json{{"terms", std::move(terms)}, {"vars", p.num_vars()}};
}

Polynomial poly_from_json(const json& j) {
    const json& jvars = require_key(j, "vars", "polynomial");
    if (!jvars.is_number_unsigned() || jvars.get<std::uint64_t>() == 0) {
        throw std::invalid_argument("polynomial \"vars\" must be a positive integer");
    }
    const std::size_t vars = jvars.get<std::size_t>();
    const json& jterms = require_key(j, "terms", "polynomial");
    if (!jterms.is_array()) throw std::invalid_argument("polynomial \"terms\" must be an array");
    Polynomial p(vars);
    std::set<std::vector<unsigned>> seen;
    for (const json& term : jterms) {
        const json& je = require_key(term, "e", "polynomial term");
        if (!je.is_array() || je.size() != vars) {
            throw std::invalid_argument("term exponent vector must have one entry per variable");
        }
        std::vector<unsigned> exps;
        exps.reserve(vars);
        for (const json& e : je) {
            exps.push_back(static_cast<unsigned>(require_index(e, "term exponent", 1u << 20)));
        }
        if (!seen.insert(exps).second) {
            throw std::invalid_argument("duplicate monomial in polynomial terms");
        }
        Rational c = rational_from_json(require_key(term, "c", "polynomial term"), "term coefficient");
        if (c.is_zero()) throw std::invalid_argument("zero coefficients must be omitted");
        p.add_term(Monomial(std::move(exps)), c);
    }
    return p;
}

json map_to_json(const PolyMap& p) {
    json comps = json::array();
    for (const Polynomial& c : p.components) comps.push_back(poly_to_json(c));
    return json{{"components", std::move(comps)}, {"vars", p.num_vars}};
}

PolyMap map_from_json(const json& j) {
    const json& jvars = require_key(j, "vars", "map");
    if (!jvars.is_number_unsigned() || jvars.get<std::uint64_t>() == 0) {
        throw std::invalid_argument("map \"vars\" must be a positive integer");
    }
    PolyMap p;
    p.num_vars = jvars.get<std::size_t>();
    const json& jcomps = require_key(j, "components", "map");
    if (!jcomps.is_array()) throw std::invalid_argument("map \"components\" must be an array");
    for (const json& c : jcomps) {
        Polynomial comp = poly_from_json(c);
        if (comp.num_vars() != p.num_vars) {
            throw std::invalid_argument("map component variable count disagrees with the map");
        }
        p.components.push_back(std::move(comp));
    }
    return p;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (const json& jrow : j) {
        if (!jrow.is_array()) throw std::invalid_argument("matrix row must be an array");
        Vec row;
        for (const json& je : jrow) row.push_back(rational_from_json(je, "matrix entry"));
        if (!rows.empty() && row.size() != cols) throw std::invalid_argument("ragged matrix rows");
        cols = row.size();
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows, cols);
}

std::vector<BasisElement> basis_from_json(const json& j) {
    const json& jvars = require_key(j, "vars", "basis");
    if (!jvars.is_number_unsigned() || jvars.get<std::uint64_t>() == 0) {
        throw std::invalid_argument("basis \"vars\" must be a positive integer");
    }
    const std::size_t vars = jvars.get<std::size_t>();
    const json& jelems = require_key(j, "elements", "basis");
    if (!jelems.is_array()) throw std::invalid_argument("basis \"elements\" must be an array");
    std::vector<BasisElement> out;
    for (const json& je : jelems) {
        BasisElement elem;
        elem.degree = static_cast<unsigned>(require_index(require_key(je, "degree", "basis element"),
                                                          "basis element degree", 1u << 20));
        elem.poly = poly_from_json(require_key(je, "poly", "basis element"));
        if (elem.poly.num_vars() != vars) {
            throw std::invalid_argument("basis element variable count disagrees with the basis");
        }
        out.push_back(std::move(elem));
    }
    return out;
}

namespace {

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const Rational& c : v) out.push_back(c.str());
    return out;
}

}  // namespace

json report_to_json(const ReconstructionReport& r) {
    json f = json::array();
    for (const Vec& v : r.f) f.push_back(vec_to_json(v));
    return json{
        {"algebra_dim", r.algebra_dim},
        {"diagnostics", r.diagnostics},
        {"f", std::move(f)},
        {"form_degree", r.form_degree},
        {"gamma", matrix_to_json(r.gamma)},
        {"nil_index", r.nil_index},
        {"num_vars", r.num_vars},
        {"phi", map_to_json(r.phi)},
    };
}

json verdict_to_json(const RecognitionVerdict& v) {
    if (!v.accepted) {
        return json{
            {"verdict", "rejected"},
            {"reason", std::string(to_string(*v.reason))},
            {"detail", v.detail},
        };
    }
    json cert{
        {"dim", v.certificate->dim},
        {"loewy", v.certificate->loewy},
        {"nil_index", v.certificate->nil_index},
        {"socle_dim", v.certificate->socle_dim},
    };
    return json{
        {"verdict", "candidate"},
        {"certificate", std::move(cert)},
        {"report", report_to_json(*v.report)},
    };
}

json invariants_to_json(const CubicInvariants& inv) {
    return json{
        {"Delta", inv.discriminant.str()},
        {"J", inv.j.str()},
        {"S", inv.s.str()},
        {"T", inv.t.str()},
    };
}

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace milrec
