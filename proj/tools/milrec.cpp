// Command-line driver: forward quotient build, basis scrambling,
// reconstruction, form recovery, recognition, ternary-cubic invariants, and
// an end-to-end round-trip verifier. All output is canonical JSON, so
// identical inputs and flags give identical bytes.
//
// Exit codes: 0 success, 2 structural rejection (reason in the output
// JSON), 3 malformed input.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "milrec/algebra_table.hpp"
#include "milrec/errors.hpp"
#include "milrec/form_recovery.hpp"
#include "milrec/io.hpp"
#include "milrec/milnor.hpp"
#include "milrec/reconstruct.hpp"

namespace {

using nlohmann::json;

constexpr int kExitSuccess = 0;
constexpr int kExitRejected = 2;
constexpr int kExitMalformed = 3;

struct Options {
    std::string input;
    std::string output;
    std::string basis_file;
    std::string qt;
    std::uint64_t seed = 1;
    std::size_t search_bound = milrec::kDefaultSearchBound;
};

void write_output(const Options& opt, const json& j) {
    std::string text = milrec::dump_canonical(j);
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << text;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return json::parse(in);
}

// A defining form is accepted either as a polynomial file or via the
// --qt family generator.
milrec::Polynomial load_form(const Options& opt) {
    if (!opt.qt.empty()) {
        return milrec::hesse_cubic(milrec::Rational::parse(opt.qt));
    }
    return milrec::poly_from_json(read_json_file(opt.input));
}

// milnor accepts either a form (differentiated first) or a ready map.
milrec::PolyMap load_generators(const Options& opt) {
    if (!opt.qt.empty()) {
        return milrec::gradient_map(milrec::hesse_cubic(milrec::Rational::parse(opt.qt)));
    }
    json j = read_json_file(opt.input);
    if (j.is_object() && j.contains("components")) {
        return milrec::map_from_json(j);
    }
    return milrec::gradient_map(milrec::poly_from_json(j));
}

int run_milnor(const Options& opt) {
    milrec::PolyMap p = load_generators(opt);
    milrec::GradedTable g =
        opt.basis_file.empty()
            ? milrec::build_milnor_table(p)
            : milrec::build_milnor_table(p, milrec::basis_from_json(read_json_file(opt.basis_file)));
    write_output(opt, milrec::table_to_json(g.table));
    return kExitSuccess;
}

int run_scramble(const Options& opt) {
    milrec::AlgebraTable t = milrec::table_from_json(read_json_file(opt.input));
    write_output(opt, milrec::table_to_json(milrec::scramble_table(t, opt.seed)));
    return kExitSuccess;
}

int run_reconstruct(const Options& opt) {
    milrec::AlgebraTable t = milrec::table_from_json(read_json_file(opt.input));
    milrec::ReconstructionReport report = milrec::reconstruct_map(t);
    write_output(opt, milrec::report_to_json(report));
    return kExitSuccess;
}

int run_recover(const Options& opt) {
    milrec::PolyMap phi = milrec::map_from_json(read_json_file(opt.input));
    milrec::FormRecovery rec = milrec::recover_form(phi, opt.search_bound);
    json j;
    j["d0"] = milrec::matrix_to_json(rec.d0);
    j["form"] = milrec::poly_to_json(rec.form);
    write_output(opt, j);
    return kExitSuccess;
}

int run_recognize(const Options& opt) {
    milrec::AlgebraTable t = milrec::table_from_json(read_json_file(opt.input));
    milrec::RecognitionVerdict v = milrec::recognize(t);
    write_output(opt, milrec::verdict_to_json(v));
    return v.accepted ? kExitSuccess : kExitRejected;
}

int run_invariant(const Options& opt) {
    milrec::Polynomial q = load_form(opt);
    write_output(opt, milrec::invariants_to_json(milrec::cubic_invariants(q)));
    return kExitSuccess;
}

json summary_of(const milrec::PolyMap& p, const std::optional<milrec::Rational>& j_value) {
    json s;
    milrec::GradedTable g = milrec::build_milnor_table(p);
    s["dim"] = g.table.dim();
    s["nil_index"] = milrec::nil_index(g.table, milrec::maximal_ideal(g.table));
    s["hilbert"] = milrec::hilbert_function(p);
    if (j_value) s["J"] = j_value->str();
    return s;
}

int run_roundtrip(const Options& opt) {
    milrec::Polynomial q = load_form(opt);
    milrec::PolyMap grad = milrec::gradient_map(q);
    const bool ternary_cubic = q.num_vars() == 3 && q.degree() == 3;

    std::optional<milrec::Rational> j_original;
    if (ternary_cubic) j_original = milrec::cubic_invariants(q).j;
    json original = summary_of(grad, j_original);

    milrec::AlgebraTable table = milrec::build_milnor_table(grad).table;
    milrec::AlgebraTable scrambled = milrec::scramble_table(table, opt.seed);
    milrec::ReconstructionReport report = milrec::reconstruct_map(scrambled);
    milrec::FormRecovery rec = milrec::recover_form(report.phi, opt.search_bound);

    std::optional<milrec::Rational> j_recovered;
    if (ternary_cubic) j_recovered = milrec::cubic_invariants(rec.form).j;
    json recovered = summary_of(milrec::gradient_map(rec.form), j_recovered);
    recovered["form"] = milrec::poly_to_json(rec.form);

    bool match = original.at("dim") == recovered.at("dim") &&
                 original.at("nil_index") == recovered.at("nil_index") &&
                 original.at("hilbert") == recovered.at("hilbert");
    if (ternary_cubic) match = match && *j_original == *j_recovered;

    json out;
    out["match"] = match;
    out["original"] = original;
    out["recovered"] = recovered;
    out["seed"] = opt.seed;
    write_output(opt, out);
    return match ? kExitSuccess : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reconstruction of defining forms from quotient-algebra tables"};
    app.require_subcommand(1);

    Options opt;
    std::string command;

    auto add_common = [&](CLI::App* sub, bool wants_qt) {
        sub->add_option("--input", opt.input, "input JSON file");
        sub->add_option("--output", opt.output, "output file (default: stdout)");
        if (wants_qt) {
            sub->add_option("--qt", opt.qt,
                            "generate the cubic z1^3+z2^3+z3^3+t*z1*z2*z3 instead of reading --input");
        }
        sub->callback([&command, sub] { command = sub->get_name(); });
        return sub;
    };

    CLI::App* milnor = add_common(app.add_subcommand("milnor", "build the quotient table of a form or map"), true);
    milnor->add_option("--explicit-basis", opt.basis_file, "basis file of degree-tagged polynomials");

    CLI::App* scramble = add_common(app.add_subcommand("scramble", "apply a seeded change of basis to a table"), false);
    scramble->add_option("--seed", opt.seed, "basis-change seed (0 keeps the basis)");

    add_common(app.add_subcommand("reconstruct", "recover a polynomial map from a table"), false);

    CLI::App* recover = add_common(app.add_subcommand("recover", "integrate a map to a defining form"), false);
    recover->add_option("--search-bound", opt.search_bound, "candidate limit for the invertible-solution search");

    add_common(app.add_subcommand("recognize", "decide whether a table passes all quotient certificates"), false);

    add_common(app.add_subcommand("invariant", "S, T, discriminant and J of a ternary cubic"), true);

    CLI::App* roundtrip = add_common(app.add_subcommand("roundtrip", "scramble, reconstruct and verify a form end to end"), true);
    roundtrip->add_option("--seed", opt.seed, "basis-change seed");
    roundtrip->add_option("--search-bound", opt.search_bound, "candidate limit for the invertible-solution search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!opt.qt.empty() && !opt.input.empty()) {
            throw std::invalid_argument("--qt and --input are mutually exclusive");
        }
        if (opt.qt.empty() && opt.input.empty()) {
            throw std::invalid_argument("either --input or --qt is required");
        }
        if (command == "milnor") return run_milnor(opt);
        if (command == "scramble") return run_scramble(opt);
        if (command == "reconstruct") return run_reconstruct(opt);
        if (command == "recover") return run_recover(opt);
        if (command == "recognize") return run_recognize(opt);
        if (command == "invariant") return run_invariant(opt);
        if (command == "roundtrip") return run_roundtrip(opt);
        std::cerr << "unknown command\n";
        return kExitMalformed;
    } catch (const milrec::RejectError& e) {
        json err;
        err["error"] = std::string(milrec::to_string(e.reason()));
        err["detail"] = e.detail();
        try {
            write_output(opt, err);
        } catch (const std::exception& io_err) {
            std::cerr << io_err.what() << "\n";
            return kExitMalformed;
        }
        return kExitRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
}
