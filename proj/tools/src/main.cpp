#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "seifert/cli/commands.hpp"

namespace {

using namespace seifert;
using namespace seifert::cli;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw invalid_input("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

SeifertData load_seifert(const std::string& path) {
    return to_seifert(parse_input(read_input(path)));
}

std::vector<Int> parse_word(const std::string& text) {
    std::vector<Int> word;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            word.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw invalid_input("--spinc: '" + item + "' is not an integer");
        }
    }
    if (word.empty()) throw invalid_input("--spinc: empty exponent list");
    return word;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of Seifert fibered rational homology spheres (e < 0):\n"
                 "Casson-Walker, K^2 + #V, Reidemeister-Turaev torsion, Seiberg-Witten"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name;
    app.add_option("--format", format_name, "Output format: json, table or csv");

    std::string input_path = "-";
    std::string spinc_text;
    bool all_structures = false;
    long terms = 16;
    std::string pg_text;
    BatchParams batch;
    long h_cap = 5000;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "Input JSON file, or - for stdin");
    };

    CLI::App* normalize = app.add_subcommand("normalize", "Normalize Seifert invariants");
    add_input(normalize);
    CLI::App* invariants = app.add_subcommand("invariants", "Full invariant report");
    add_input(invariants);
    CLI::App* torsion = app.add_subcommand("torsion", "Reidemeister-Turaev torsion at 1");
    add_input(torsion);
    torsion->add_option("--spinc", spinc_text,
                        "spin^c structure as comma-separated exponents a0,a1,...,anu");
    torsion->add_flag("--all", all_structures, "table over all |H| spin^c structures");
    CLI::App* plumbing = app.add_subcommand("plumbing", "Plumbing graph as Graphviz DOT");
    add_input(plumbing);
    CLI::App* poincare = app.add_subcommand("poincare", "Poincare series coefficients");
    add_input(poincare);
    poincare->add_option("--terms", terms, "Last exponent to report (default 16)");
    CLI::App* verify = app.add_subcommand("verify", "Check the torsion/Casson-Walker identity");
    add_input(verify);
    CLI::App* conjecture =
        app.add_subcommand("conjecture", "Gap sw0 - (K^2 + #V)/8 - pg for a supplied genus");
    add_input(conjecture);
    conjecture->add_option("--pg", pg_text, "Geometric genus (integer or rational)")->required();
    CLI::App* batch_verify =
        app.add_subcommand("batch-verify", "Verify the identity on random manifolds");
    batch_verify->add_option("--count", batch.count, "Number of manifolds")->required();
    batch_verify->add_option("--seed", batch.seed, "Generator seed (default 0)");
    batch_verify->add_option("--max-alpha", batch.gen.max_alpha, "Largest multiplicity (default 10)");
    batch_verify->add_option("--max-arms", batch.gen.max_arms, "Largest arm count (default 5)");
    batch_verify->add_option("--h-cap", h_cap, "Reject |H| above this (default 5000)");
    batch_verify->add_option("--jobs", batch.jobs, "Worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (batch_verify->parsed()) {
            // CSV is the default here; --format json switches to full reports.
            Format format = format_name.empty() ? Format::Csv : parse_format(format_name);
            batch.gen.h_cap = Int(h_cap);
            return run_batch_verify(batch, format, std::cout);
        }
        Format format = format_name.empty() ? Format::Json : parse_format(format_name);
        if (normalize->parsed()) return run_normalize(load_seifert(input_path), format, std::cout);
        if (invariants->parsed())
            return run_invariants(load_seifert(input_path), format, std::cout);
        if (torsion->parsed()) {
            std::optional<std::vector<Int>> word;
            if (!spinc_text.empty()) word = parse_word(spinc_text);
            return run_torsion(load_seifert(input_path), word, all_structures, format, std::cout);
        }
        if (plumbing->parsed()) return run_plumbing(load_seifert(input_path), std::cout);
        if (poincare->parsed())
            return run_poincare(load_seifert(input_path), terms, format, std::cout);
        if (verify->parsed()) return run_verify(load_seifert(input_path), format, std::cout);
        if (conjecture->parsed())
            return run_conjecture(load_seifert(input_path), parse_rat(pg_text), format, std::cout);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const invalid_input& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const internal_error& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 3;
    }
}
