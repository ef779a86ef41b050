// Command-line front end: parses sheaf expressions, runs the library and
// prints either human tables or machine JSON.
//
// Exit codes: 0 = computation succeeded (whatever the verdict), 1 = negative
// verdict under --strict, 2 = expression syntax error, 3 = invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sheafcoh/render.hpp"
#include "sheafcoh/sheafcoh.hpp"

namespace {

sheafcoh::space parse_space(const std::string& s) {
    std::vector<int> dims;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("--space: expected a comma-separated list of dimensions");
        }
        if (used != tok.size())
            throw std::invalid_argument("--space: expected a comma-separated list of dimensions");
        dims.push_back(n);
    }
    return sheafcoh::space(dims);  // validates n_i >= 1
}

struct output {
    std::string format = "table";
    std::string path;

    void emit(const std::string& table, const sheafcoh::json& j) const {
        std::string body = (format == "json") ? j.dump() + "\n" : table;
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(path);
            if (!f) throw std::invalid_argument("--out: cannot open " + path);
            f << body;
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sheaf cohomology on products of projective spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string space_arg;
    output out;
    bool strict = false;
    app.add_option("--space", space_arg, "factor dimensions n1,n2,... of the ambient space")
        ->required();
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_flag("--strict", strict, "exit 1 on INCONCLUSIVE/FAIL verdicts");

    std::string expr;
    std::string variant_arg = "II";
    bool verify = false, kcheck = false;
    int j_arg = 0;

    CLI::App* c_coh = app.add_subcommand("coh", "cohomology table of a sheaf");
    c_coh->add_option("--sheaf", expr)->required();

    CLI::App* c_blocks = app.add_subcommand("blocks", "the standard block collection");
    c_blocks->add_flag("--verify", verify, "also check the block axioms");

    CLI::App* c_dual = app.add_subcommand("dual", "the right-mutated dual collection");
    c_dual->add_flag("--verify", verify, "also check the orthogonality pattern");

    CLI::App* c_beil = app.add_subcommand("beilinson", "E1 page of the spectral sequence");
    c_beil->add_option("--sheaf", expr)->required();
    c_beil->add_option("--variant", variant_arg)->check(CLI::IsMember({"I", "II"}));
    c_beil->add_flag("--kcheck", kcheck, "also run the K-class convergence check");

    CLI::App* c_acm = app.add_subcommand("acm", "witnesses against the ACM property");
    c_acm->add_option("--sheaf", expr)->required();

    CLI::App* c_split = app.add_subcommand("split", "splitting criterion verdict");
    c_split->add_option("--sheaf", expr)->required();

    CLI::App* c_omega = app.add_subcommand("omega", "canonical twisted-forms bundle");
    c_omega->add_option("--j", j_arg)->required();

    CLI::App* c_char = app.add_subcommand("characterize", "differential-forms characterization");
    c_char->add_option("--j", j_arg)->required();
    c_char->add_option("--sheaf", expr)->required();

    CLI::App* c_sum = app.add_subcommand("summand", "trivial-summand report");
    c_sum->add_option("--sheaf", expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    using namespace sheafcoh;
    int rc = 0;
    try {
        space X = parse_space(space_arg);

        if (app.got_subcommand(c_coh)) {
            coh_table t = cohomology(parse_sheaf(expr, X));
            out.emit(table_of(t), to_json(t));
        } else if (app.got_subcommand(c_blocks)) {
            block_collection C = standard_blocks(X);
            json j = to_json(C);
            std::string table = table_of(C);
            if (verify) {
                auto vs = verify_block_axioms(C);
                j["report"] = to_json(vs);
                table += table_of(vs);
                if (strict && !vs.empty()) rc = 1;
            }
            out.emit(table, j);
        } else if (app.got_subcommand(c_dual)) {
            dual_blocks D = dual_collection(X);
            json j = to_json(D);
            std::string table = table_of(D);
            if (verify) {
                auto vs = verify_duality(X, D);
                j["report"] = to_json(vs);
                table += table_of(vs);
                if (strict && !vs.empty()) rc = 1;
            }
            out.emit(table, j);
        } else if (app.got_subcommand(c_beil)) {
            ss_variant v = (variant_arg == "I") ? ss_variant::I : ss_variant::II;
            e1_page page = beilinson_e1(X, parse_sheaf(expr, X), v);
            json j = to_json(page);
            std::string table = table_of(page);
            if (kcheck) {
                kclass_result r = kclass_check(page);
                j["kcheck"] = to_json(r);
                table += table_of(r);
                if (strict && !r.pass) rc = 1;
            }
            out.emit(table, j);
        } else if (app.got_subcommand(c_acm)) {
            auto ws = acm_check(X, parse_sheaf(expr, X));
            json warr = json::array();
            for (const auto& w : ws) warr.push_back(to_json(w));
            out.emit(table_of(ws), json{{"acm", ws.empty()}, {"witnesses", warr}});
            if (strict && !ws.empty()) rc = 1;
        } else if (app.got_subcommand(c_split)) {
            split_result r = split_check(X, parse_sheaf(expr, X));
            out.emit(table_of(r), to_json(r));
            if (strict && !r.certified) rc = 1;
        } else if (app.got_subcommand(c_omega)) {
            sheaf_sum F = omega_bundle(X, j_arg);
            json j = {{"j", j_arg},
                      {"rank", json_int(rank(F))},
                      {"expr", to_string(F)},
                      {"terms", to_json(F)}};
            std::ostringstream table;
            table << "j: " << j_arg << "\nrank: " << rank(F) << "\nsheaf: " << to_string(F)
                  << "\n";
            out.emit(table.str(), j);
        } else if (app.got_subcommand(c_char)) {
            characterize_result r = characterize(X, j_arg, parse_sheaf(expr, X));
            out.emit(table_of(r), to_json(r));
            if (strict && !r.pass) rc = 1;
        } else if (app.got_subcommand(c_sum)) {
            corner_report r = corner_summand(X, parse_sheaf(expr, X));
            out.emit(table_of(r), to_json(r));
            if (strict && !(r.hypotheses_hold && r.verified)) rc = 1;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.semantic ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
