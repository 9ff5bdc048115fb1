// Command-line front end: verify the published table corpus, run seeded
// random searches, or print a reconstructed generator matrix.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sdc/corpus.hpp"
#include "sdc/search.hpp"
#include "sdc/verify.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::vector<sdc::TableRow> load(const std::string& corpus_path) {
    return corpus_path.empty() ? sdc::builtin_corpus() : sdc::load_corpus_file(corpus_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-dual code construction and verification"};
    app.require_subcommand(1);

    std::string corpus_path;
    app.add_option("--corpus", corpus_path, "corpus file (defaults to the embedded table corpus)");

    auto* verify = app.add_subcommand("verify", "verify table rows against their published parameters");
    std::string rows_csv, report_path;
    int workers = 1;
    verify->add_option("--rows", rows_csv, "comma-separated row ids (default: all)");
    verify->add_option("--workers", workers, "enumeration worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--report", report_path, "write the JSON report to this file");

    auto* search = app.add_subcommand("search", "seeded random search for self-dual constructions");
    sdc::SearchConfig cfg;
    std::string ring_name_opt = "F2", out_path;
    search->add_option("--ring", ring_name_opt, "F2, F2uF2 or F4uF4");
    search->add_option("--group", cfg.group, "group tag, e.g. C4, C8, C17, C4xC2");
    search->add_option("--listing", cfg.listing, "natural, c2p_split, lex_xy, lex_yx");
    search->add_option("--seed", cfg.seed, "RNG seed");
    search->add_option("--trials", cfg.max_trials, "number of random draws");
    search->add_option("--min-dist", cfg.min_dist, "minimum distance threshold");
    search->add_option("--workers", cfg.workers, "enumeration worker threads")->check(CLI::PositiveNumber);
    search->add_option("--max-results", cfg.max_results, "stop after this many hits");
    search->add_flag("--v2-zero", cfg.v2_zero, "force v2 = 0");
    search->add_flag("--ra-zero", cfg.ra_zero, "force A = 0");
    search->add_option("--out", out_path, "write hits JSON to this file");

    auto* show = app.add_subcommand("show-row", "print the reconstructed generator of a row");
    std::string show_id;
    int show_workers = 1;
    show->add_option("id", show_id, "row id")->required();
    show->add_option("--workers", show_workers, "enumeration worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            const auto rows = load(corpus_path);
            const sdc::Report report = sdc::verify_corpus(rows, workers, split_ids(rows_csv));
            for (const auto& issue : report.lint) std::cout << "lint: " << issue << "\n";
            for (const auto& r : report.rows) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.n << "," << r.k << "," << r.d << "]"
                          << (r.form.empty() ? "" : " " + r.form);
                if (r.beta) std::cout << " beta=" << *r.beta;
                if (r.gamma) std::cout << " gamma=" << *r.gamma;
                if (!r.listing_used.empty()) std::cout << " listing=" << r.listing_used;
                if (!r.gray_layout.empty()) std::cout << " layout=" << r.gray_layout;
                if (!r.presentation.empty()) std::cout << " presentation=" << r.presentation;
                if (!r.parent_used.empty()) std::cout << " parent=" << r.parent_used;
                if (!r.note.empty()) std::cout << "  (" << r.note << ")";
                std::cout << "\n";
            }
            std::cout << report.summary_text(rows);
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << report.to_json() << "\n";
            }
            return report.failed() == 0 ? 0 : 1;
        }
        if (*search) {
            cfg.ring = sdc::parse_ring(ring_name_opt);
            const auto hits = sdc::run_search(cfg);
            const std::string json = sdc::search_hits_json(cfg, hits);
            if (out_path.empty())
                std::cout << json << "\n";
            else
                std::ofstream(out_path) << json << "\n";
            std::cerr << hits.size() << " hit(s) in " << cfg.max_trials << " trials\n";
            return 0;
        }
        if (*show) {
            const auto rows = load(corpus_path);
            sdc::Verifier verifier(rows, show_workers);
            verifier.verify({show_id});
            const sdc::BinaryCode* bin = verifier.binary_of(show_id);
            if (!bin) {
                std::cerr << "row " << show_id << " not found or not buildable\n";
                return 1;
            }
            for (const auto& r : bin->rows()) std::cout << sdc::word_to_string(r, bin->length()) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
