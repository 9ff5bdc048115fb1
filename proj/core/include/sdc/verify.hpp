#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdc/bincode.hpp"
#include "sdc/construction.hpp"
#include "sdc/corpus.hpp"
#include "sdc/transforms.hpp"

namespace sdc {

struct RowResult {
    std::string id;
    std::string kind;
    bool self_dual = false;
    int n = 0, k = 0, d = 0;
    std::string form;  // computed form, "" when classification failed
    std::optional<long> beta, gamma;
    bool pass = false;
    std::string listing_used;  // resolved listing (construction rows)
    std::string gray_layout;   // resolved Gray layout where one was in play
    std::string presentation;  // parent presentation used by neighbour rows
    std::string parent_used;   // resolved parent of a neighbour row; differs
                               // from the published one when only an
                               // alternate parent reproduces the row
    std::string note;          // check failures and resolution remarks
    double millis = 0;
};

struct Report {
    std::vector<RowResult> rows;
    std::vector<std::string> lint;

    int passed() const;
    int failed() const;
    const RowResult* find(const std::string& id) const;

    // Inventory of verified previously-unknown codes, grouped by
    // enumerator form and gamma.
    std::string summary_text(const std::vector<TableRow>& corpus) const;
    std::string to_json() const;
};

class Verifier {
public:
    Verifier(std::vector<TableRow> rows, int workers = 1);

    // Verifies the requested rows (all when empty) plus any ancestors they
    // need, in dependency order.
    Report verify(const std::vector<std::string>& subset = {});

    // Built artifacts for show-row; valid after verify().
    const BinaryCode* binary_of(const std::string& id) const;
    const std::vector<TableRow>& corpus() const { return rows_; }

private:
    struct Built {
        BinaryCode bin;
        // Ring-level stage kept for children: the construction generator for
        // extension parents, the extended length-34 rows for extension rows.
        std::optional<RingCode> ring_stage;
        std::string listing_used;
        GrayLayout layout = GrayLayout::Block;
    };

    RowResult verify_construction(const TableRow& row);
    RowResult verify_extension(const TableRow& row);
    RowResult verify_neighbour(const TableRow& row);

    std::vector<TableRow> rows_;
    int workers_ = 1;
    std::map<std::string, Built> built_;
};

// Convenience wrapper matching the CLI: lint, verify, report.
Report verify_corpus(const std::vector<TableRow>& rows, int workers, const std::vector<std::string>& subset = {});

}  // namespace sdc
