// exalg: exact exterior-algebra kernel CLI.
//
// Exit codes: 0 success, 1 domain error (e.g. characteristic-2 rejection,
// singular map), 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exalg/determinant.hpp"
#include "exalg/invariant.hpp"
#include "exalg/json_io.hpp"
#include "exalg/morphism.hpp"
#include "exalg/parse.hpp"
#include "exalg/random.hpp"
#include "exalg/words.hpp"

namespace {

using nlohmann::json;
using namespace exalg;

struct GlobalOpts {
    int n = 3;
    std::string field = "q";
    std::uint64_t seed = 0;
    std::string output = "text";

    AlgebraSignature signature() const { return {n, field_from_name(field)}; }
    bool json_mode() const { return output == "json"; }
};

void emit(const GlobalOpts& opts, const json& j, const std::string& text) {
    if (opts.json_mode())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

SquareMatrix parse_matrix_rows(const std::vector<std::string>& rows, FieldSpec field) {
    std::vector<std::vector<Scalar>> entries;
    for (const std::string& row : rows) {
        std::istringstream iss(row);
        std::vector<Scalar> r;
        std::string tok;
        while (iss >> tok) {
            auto slash = tok.find('/');
            if (slash == std::string::npos)
                r.push_back(Scalar::from_integer(BigInt(tok), field));
            else
                r.push_back(Scalar::from_fraction(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)), field));
        }
        if (!r.empty()) entries.push_back(std::move(r));
    }
    std::size_t n = entries.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    SquareMatrix m(static_cast<int>(n), field);
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i].size() != n) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = entries[i][j];
    }
    return m;
}

SquareMatrix load_matrix(const std::string& file, const std::string& inline_rows, FieldSpec field) {
    std::vector<std::string> rows;
    if (!inline_rows.empty()) {
        std::string row;
        std::istringstream iss(inline_rows);
        while (std::getline(iss, row, ';')) rows.push_back(row);
    } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open matrix file " + file);
        std::string line;
        while (std::getline(in, line)) rows.push_back(line);
    }
    return parse_matrix_rows(rows, field);
}

Morphism load_morphism(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open morphism file " + file);
    json j;
    in >> j;
    return morphism_from_json(j);
}

std::set<int> parse_grades(const std::string& list) {
    std::set<int> grades;
    std::istringstream iss(list);
    std::string tok;
    while (std::getline(iss, tok, ',')) grades.insert(std::stoi(tok));
    return grades;
}

void cmd_eval(const GlobalOpts& opts, const std::string& expr) {
    AlgebraSignature sig = opts.signature();
    Multivector v = parse_expr(expr, sig);
    json j = multivector_json(v);
    j["signature"] = signature_json(sig);
    emit(opts, j, format_canonical(v));
}

void cmd_det(const GlobalOpts& opts, const std::string& file, const std::string& inline_rows,
             const std::string& method) {
    SquareMatrix m = load_matrix(file, inline_rows, field_from_name(opts.field));
    json j{{"field", opts.field}, {"n", m.size()}, {"method", method}};
    std::string text;
    auto run = [&](const std::string& name) -> Scalar {
        if (name == "wedge") return det_wedge(m);
        if (name == "leibniz") return det_leibniz(m);
        if (name == "cofactor") return det_cofactor(m, 1);
        throw CLI::ValidationError("--method must be wedge, leibniz, cofactor, or all");
    };
    if (method == "all") {
        Scalar w = det_wedge(m), l = det_leibniz(m), c = det_cofactor(m, 1);
        bool agree = w == l && l == c;
        j["wedge"] = w.str();
        j["leibniz"] = l.str();
        j["cofactor"] = c.str();
        j["agree"] = agree;
        text = "wedge: " + w.str() + "\nleibniz: " + l.str() + "\ncofactor: " + c.str() +
               "\nagree: " + (agree ? "true" : "false");
    } else {
        Scalar d = run(method);
        j["det"] = d.str();
        text = d.str();
    }
    emit(opts, j, text);
}

void cmd_aut_apply(const GlobalOpts& opts, const std::string& map_file, const std::string& expr) {
    Morphism f = load_morphism(map_file);
    Multivector x = parse_expr(expr, f.signature());
    Multivector y = f.apply(x);
    json j = multivector_json(y);
    j["signature"] = signature_json(f.signature());
    emit(opts, j, format_canonical(y));
}

void cmd_aut_check(const GlobalOpts& opts, const std::string& map_file) {
    Morphism f = load_morphism(map_file);  // construction validates
    bool aut = is_automorphism(f);
    json j{{"signature", signature_json(f.signature())}, {"valid", true}, {"automorphism", aut}};
    emit(opts, j, std::string("valid: true\nautomorphism: ") + (aut ? "true" : "false"));
}

void cmd_aut_decompose(const GlobalOpts& opts, const std::string& map_file) {
    Morphism f = load_morphism(map_file);
    SemidirectFactors parts = semidirect_factor(f);
    json tau = json::array();
    std::string tau_text;
    for (int i = 1; i <= parts.tau.size(); ++i) {
        json row = json::array();
        for (int jj = 1; jj <= parts.tau.size(); ++jj) {
            row.push_back(parts.tau.at(i, jj).str());
            tau_text += parts.tau.at(i, jj).str() + (jj == parts.tau.size() ? "" : " ");
        }
        tau.push_back(row);
        tau_text += "\n";
    }
    json j{{"signature", signature_json(f.signature())},
           {"n_part", morphism_json(parts.n_part)},
           {"tau", tau}};
    std::string text = "tau:\n" + tau_text + "n_part images:\n";
    for (int i = 1; i <= f.signature().n; ++i)
        text += "  e" + std::to_string(i) + " -> " + format_canonical(parts.n_part.image(i)) + "\n";
    text.pop_back();
    emit(opts, j, text);
}

void cmd_center(const GlobalOpts& opts) {
    AlgebraSignature sig = opts.signature();
    std::vector<Blade> basis = center_basis(sig);
    json blades = json::array();
    std::string text;
    for (Blade b : basis) {
        blades.push_back(b.indices());
        text += (text.empty() ? "" : ", ") + b.str();
    }
    emit(opts, {{"signature", signature_json(sig)}, {"center_basis", blades}}, text);
}

void cmd_comm(const GlobalOpts& opts) {
    AlgebraSignature sig = opts.signature();
    std::vector<Blade> basis = comm_subalgebra_basis(sig);
    json blades = json::array();
    std::string text;
    for (Blade b : basis) {
        blades.push_back(b.indices());
        text += (text.empty() ? "" : ", ") + b.str();
    }
    emit(opts, {{"signature", signature_json(sig)}, {"comm_subalgebra_basis", blades}}, text);
}

void cmd_invariant_check(const GlobalOpts& opts, const std::string& grades_list, int samples) {
    AlgebraSignature sig = opts.signature();
    GradeSetSpec spec = gradeset_custom(sig, parse_grades(grades_list));
    bool closed = is_subalgebra(spec);
    InvarianceReport r = invariance_check(spec, samples, opts.seed);
    std::string text = std::string("subalgebra: ") + (closed ? "true" : "false") + "\nverdict: " +
                       std::string(r.verdict == Verdict::invariant_on_sample ? "invariant_on_sample" : "refuted") +
                       " (" + std::to_string(r.samples_tested) + " samples)";
    if (r.witness)
        text += "\nwitness: blade " + r.witness->blade.str() + " escapes to grade " +
                std::to_string(r.witness->escaping_grade);
    json j = invariance_report_json(r);
    j["subalgebra"] = closed;
    emit(opts, j, text);
}

void cmd_invariant_classify(const GlobalOpts& opts, int samples) {
    AlgebraSignature sig = opts.signature();
    Classification c = classify_bruteforce(sig, samples, opts.seed);
    std::string text;
    for (const auto& m : c.matched) text += "matched  " + gradeset_str(m.grades) + "  " + m.matched_form + "\n";
    for (const auto& a : c.anomalies) text += "ANOMALY  " + gradeset_str(a.grades) + "\n";
    for (const auto& r : c.refuted)
        text += "refuted  " + gradeset_str(r.grades) + "  witness: " + r.witness.blade.str() + " -> grade " +
                std::to_string(r.witness.escaping_grade) + "\n";
    text += "anomalies: " + std::to_string(c.anomalies.size());
    json j = classification_json(c);
    j["signature"] = signature_json(sig);
    j["samples"] = samples;
    j["seed"] = opts.seed;
    emit(opts, j, text);
}

void cmd_char2_demo(const GlobalOpts& opts) {
    Char2Report r = char2_report(FieldSpec::prime(2));
    json j{{"field", "fp:2"},
           {"m1_commutes", r.m1_commutes},
           {"m1_square_zero", r.m1_square_zero},
           {"m2_square_reduces", r.m2_square_reduces},
           {"witness", r.witness}};
    std::string text = std::string("m1: e1e2 = e2e1: ") + (r.m1_commutes ? "true" : "false") +
                       "\nm1: e1e1 = 0: " + (r.m1_square_zero ? "true" : "false") +
                       "\nm2: e1e1 reducible to 0: " + (r.m2_square_reduces ? "true" : "false");
    for (const std::string& w : r.witness) text += "\n  " + w;
    emit(opts, j, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior-algebra kernel"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--n", opts.n, "generator count")->capture_default_str();
    app.add_option("--field", opts.field, "coefficient field: q or fp:P")->capture_default_str();
    app.add_option("--seed", opts.seed, "sampler seed")->capture_default_str();
    app.add_option("--output", opts.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string expr, matrix_file, inline_rows, method = "all", map_file, grades_list;
    int samples = 200;

    // let the global --n/--field/--seed/--output flags appear after the
    // subcommand name as well as before it
    app.fallthrough();

    auto* eval = app.add_subcommand("eval", "evaluate an expression to canonical form");
    eval->add_option("expr", expr)->required();

    auto* det = app.add_subcommand("det", "determinant of a matrix");
    auto* mf = det->add_option("--matrix", matrix_file, "matrix file, one row per line");
    det->add_option("--inline", inline_rows, "inline rows, ';'-separated")->excludes(mf);
    det->add_option("--method", method, "wedge|leibniz|cofactor|all")
        ->check(CLI::IsMember({"wedge", "leibniz", "cofactor", "all"}))
        ->capture_default_str();

    auto* aut = app.add_subcommand("aut", "morphism operations");
    aut->require_subcommand(1);
    auto* aut_apply = aut->add_subcommand("apply", "apply a morphism to an expression");
    aut_apply->add_option("--map", map_file)->required();
    aut_apply->add_option("expr", expr)->required();
    auto* aut_check = aut->add_subcommand("check", "validate a morphism file");
    aut_check->add_option("--map", map_file)->required();
    auto* aut_decompose = aut->add_subcommand("decompose", "semidirect factorization");
    aut_decompose->add_option("--map", map_file)->required();

    app.add_subcommand("center", "brute-force center basis");
    app.add_subcommand("comm", "commutator subalgebra basis");

    auto* invariant = app.add_subcommand("invariant", "invariant subalgebra checks");
    invariant->require_subcommand(1);
    auto* inv_check = invariant->add_subcommand("check", "sample-based invariance of a grade set");
    inv_check->add_option("--grades", grades_list, "comma-separated grades")->required();
    inv_check->add_option("--samples", samples)->capture_default_str();
    auto* inv_classify = invariant->add_subcommand("classify", "brute-force classification sweep");
    inv_classify->add_option("--samples", samples)->capture_default_str();

    auto* construct = app.add_subcommand("construct", "quotient-construction demonstrations");
    construct->require_subcommand(1);
    construct->add_subcommand("char2-demo", "characteristic-2 behaviour of the two relation sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) cmd_eval(opts, expr);
        else if (det->parsed()) {
            if (matrix_file.empty() && inline_rows.empty())
                throw CLI::RequiredError("det requires --matrix or --inline");
            cmd_det(opts, matrix_file, inline_rows, method);
        } else if (aut_apply->parsed()) cmd_aut_apply(opts, map_file, expr);
        else if (aut_check->parsed()) cmd_aut_check(opts, map_file);
        else if (aut_decompose->parsed()) cmd_aut_decompose(opts, map_file);
        else if (app.get_subcommand("center")->parsed()) cmd_center(opts);
        else if (app.get_subcommand("comm")->parsed()) cmd_comm(opts);
        else if (inv_check->parsed()) cmd_invariant_check(opts, grades_list, samples);
        else if (inv_classify->parsed()) cmd_invariant_classify(opts, samples);
        else if (construct->parsed()) cmd_char2_demo(opts);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
