#include "sdc/corpus.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sdc/group.hpp"

namespace sdc {

const char* row_kind_name(RowKind k) {
    switch (k) {
        case RowKind::Construction: return "construction";
        case RowKind::Extension: return "extension";
        case RowKind::Neighbour: return "neighbour";
    }
    throw std::logic_error("bad RowKind");
}

namespace {

std::optional<EnumForm> parse_form(const std::string& s) {
    if (s == "-") return std::nullopt;
    if (s == "W64_1") return EnumForm::W64_1;
    if (s == "W64_2") return EnumForm::W64_2;
    if (s == "W68_1") return EnumForm::W68_1;
    if (s == "W68_2") return EnumForm::W68_2;
    throw std::invalid_argument("unknown enumerator form: " + s);
}

TableRow parse_line(const std::string& line) {
    std::istringstream in(line);
    TableRow row;
    std::string kind;
    in >> row.id >> kind;
    if (kind == "construction") {
        row.kind = RowKind::Construction;
        in >> row.ring >> row.group >> row.listing >> row.v1 >> row.v2 >> row.ra;
    } else if (kind == "extension") {
        row.kind = RowKind::Extension;
        in >> row.parent >> row.c >> row.x;
    } else if (kind == "neighbour") {
        row.kind = RowKind::Neighbour;
        in >> row.parent >> row.x;
    } else {
        throw std::invalid_argument("unknown row kind '" + kind + "' in: " + line);
    }
    std::string sep, form, gamma, flag;
    in >> sep;
    if (sep != ";") throw std::invalid_argument("missing ';' separator in: " + line);
    in >> row.expected.n >> row.expected.k >> row.expected.d >> form >> row.expected.beta >> gamma >>
        row.expected.aut >> flag;
    if (!in) throw std::invalid_argument("truncated corpus row: " + line);
    row.expected.form = parse_form(form);
    if (gamma != "-") row.expected.gamma = std::stol(gamma);
    row.expected.is_new = (flag == "new");
    return row;
}

}  // namespace

std::vector<TableRow> parse_corpus(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        rows.push_back(parse_line(line));
    }
    return rows;
}

std::vector<TableRow> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
}

std::vector<TableRow> builtin_corpus() { return parse_corpus(builtin_corpus_text()); }

std::vector<std::string> lint_corpus(const std::vector<TableRow>& rows) {
    std::vector<std::string> issues;
    std::set<std::string> ids;
    for (const auto& r : rows) {
        if (!ids.insert(r.id).second) issues.push_back("duplicate id " + r.id);
        if (r.expected.gamma && (*r.expected.gamma < 0 || *r.expected.gamma > 9))
            issues.push_back(r.id + ": gamma outside 0..9");
        if (r.expected.n != 2 * r.expected.k) issues.push_back(r.id + ": expected n != 2k");
        if (r.kind == RowKind::Construction) {
            try {
                const RingId ring = parse_ring(r.ring);
                const auto g = make_group(r.group);
                make_listing(r.listing, *g);
                for (const auto* s : {&r.v1, &r.v2, &r.ra}) {
                    if (static_cast<int>(s->size()) != g->order) {
                        issues.push_back(r.id + ": seed length != group order");
                        continue;
                    }
                    parse_word(ring, *s);
                }
            } catch (const std::exception& e) {
                issues.push_back(r.id + ": " + e.what());
            }
        } else if (r.kind == RowKind::Extension) {
            try {
                parse_word(RingId::F2uF2, r.x);
                parse_word(RingId::F2uF2, r.c);
            } catch (const std::exception& e) {
                issues.push_back(r.id + ": " + e.what());
            }
        } else {
            if (r.x.find_first_not_of("01") != std::string::npos) issues.push_back(r.id + ": non-binary x");
            if (r.x.size() != 34) issues.push_back(r.id + ": x must list coordinates 35..68");
        }
        // Published (beta, gamma) must sit inside the enumerator templates.
        if (r.expected.form == EnumForm::W68_2 && !r.expected.gamma)
            issues.push_back(r.id + ": W68_2 requires gamma");
    }
    try {
        topo_order(rows);
    } catch (const std::exception& e) {
        issues.push_back(e.what());
    }
    return issues;
}

std::vector<TableRow> topo_order(const std::vector<TableRow>& rows) {
    std::map<std::string, const TableRow*> by_id;
    for (const auto& r : rows) by_id[r.id] = &r;
    std::vector<TableRow> out;
    std::set<std::string> done, visiting;
    // Recursive DFS over the parent links; the DAG is tiny.
    auto visit = [&](auto&& self, const TableRow& r) -> void {
        if (done.count(r.id)) return;
        if (!visiting.insert(r.id).second) throw std::runtime_error("dependency cycle at " + r.id);
        if (r.kind != RowKind::Construction) {
            auto it = by_id.find(r.parent);
            if (it == by_id.end()) throw std::runtime_error(r.id + " references missing parent " + r.parent);
            self(self, *it->second);
        }
        visiting.erase(r.id);
        done.insert(r.id);
        out.push_back(r);
    };
    for (const auto& r : rows) visit(visit, r);
    return out;
}

}  // namespace sdc
