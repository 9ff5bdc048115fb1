#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdc/bincode.hpp"
#include "sdc/ring.hpp"

namespace sdc {

enum class RowKind { Construction, Extension, Neighbour };
const char* row_kind_name(RowKind k);

struct ExpectedParams {
    int n = 0, k = 0, d = 0;
    std::optional<EnumForm> form;
    long beta = 0;
    std::optional<long> gamma;
    std::string aut;   // informational only, never checked
    bool is_new = false;
};

struct TableRow {
    std::string id;
    RowKind kind = RowKind::Construction;

    // construction payload
    std::string ring, group, listing, v1, v2, ra;

    // extension payload
    std::string parent, c, x;  // neighbour rows reuse parent and x

    ExpectedParams expected;
};

std::vector<TableRow> parse_corpus(const std::string& text);
std::vector<TableRow> load_corpus_file(const std::string& path);

// The embedded transcription of the published tables.
const std::string& builtin_corpus_text();
std::vector<TableRow> builtin_corpus();

// Static checks before any enumeration: ids unique, parents resolve with an
// acyclic dependency order, gamma ranges, alphabet validity.  Returns
// human-readable complaints; empty means clean.
std::vector<std::string> lint_corpus(const std::vector<TableRow>& rows);

// Rows sorted so that every parent precedes its children; throws on cycles
// or missing parents.
std::vector<TableRow> topo_order(const std::vector<TableRow>& rows);

}  // namespace sdc
