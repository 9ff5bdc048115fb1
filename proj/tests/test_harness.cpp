#include <doctest.h>

#include <map>
#include <stdexcept>

#include "sdc/corpus.hpp"
#include "sdc/search.hpp"
#include "sdc/verify.hpp"

using namespace sdc;

TEST_CASE("the embedded corpus parses and lints clean") {
    const auto rows = builtin_corpus();
    CHECK(rows.size() == 41);
    CHECK(lint_corpus(rows).empty());
    std::map<RowKind, int> kinds;
    for (const auto& r : rows) ++kinds[r.kind];
    CHECK(kinds[RowKind::Construction] == 5);
    CHECK(kinds[RowKind::Extension] == 3);
    CHECK(kinds[RowKind::Neighbour] == 33);
    int marked_new = 0;
    for (const auto& r : rows) marked_new += r.expected.is_new ? 1 : 0;
    CHECK(marked_new == 32);
}

TEST_CASE("expected parameters are internally consistent") {
    for (const auto& r : builtin_corpus()) {
        CHECK(r.expected.n == 2 * r.expected.k);
        CHECK(r.expected.d == 12);
        if (r.expected.form == EnumForm::W68_2) CHECK(r.expected.gamma.has_value());
        if (r.expected.gamma) {
            CHECK(*r.expected.gamma >= 0);
            CHECK(*r.expected.gamma <= 9);
        }
    }
}

TEST_CASE("topological order puts parents before children") {
    const auto rows = topo_order(builtin_corpus());
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i].id] = i;
    for (const auto& r : rows)
        if (r.kind != RowKind::Construction) CHECK(pos.at(r.parent) < pos.at(r.id));
}

TEST_CASE("corpus linting catches malformed rows") {
    auto rows = builtin_corpus();
    rows.push_back(rows.front());  // duplicate id
    CHECK(!lint_corpus(rows).empty());

    auto missing = builtin_corpus();
    for (auto& r : missing)
        if (r.id == "D1") r.parent = "Z9";  // no longer resolves
    CHECK_THROWS_AS(topo_order(missing), std::runtime_error);

    auto cyclic = builtin_corpus();
    for (auto& r : cyclic)
        if (r.id == "D1") r.parent = "I1";  // D1 -> I1 -> D1
    CHECK_THROWS_AS(topo_order(cyclic), std::runtime_error);

    // A bad alphabet symbol is flagged by the lint pass.
    const auto bad = parse_corpus("X1 construction F2 C4 natural 10z0 0000 0000 ; 16 8 2 - 0 - 1 -");
    CHECK(!lint_corpus(bad).empty());
}

TEST_CASE("corpus text round trip") {
    const auto again = parse_corpus(builtin_corpus_text());
    CHECK(again.size() == builtin_corpus().size());
    CHECK_THROWS_AS(parse_corpus("X1 construction F2 C4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_corpus("X1 teleport F2 ; 1 1 1 - 0 - 1 -"), std::invalid_argument);
}

TEST_CASE("search is deterministic and respects forced zeros") {
    SearchConfig cfg;
    cfg.ring = RingId::F2;
    cfg.group = "C4";
    cfg.seed = 12345;
    cfg.max_trials = 3000;
    cfg.min_dist = 4;
    cfg.classify = false;
    const auto a = run_search(cfg);
    const auto b = run_search(cfg);
    REQUIRE(!a.empty());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].trial == b[i].trial);
        CHECK(a[i].v1 == b[i].v1);
        CHECK(a[i].v2 == b[i].v2);
        CHECK(a[i].ra == b[i].ra);
        CHECK(a[i].d == b[i].d);
    }
    cfg.seed = 54321;
    const auto c = run_search(cfg);
    bool identical = c.size() == a.size();
    if (identical)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (c[i].v1 != a[i].v1) identical = false;
    CHECK(!identical);

    cfg.v2_zero = true;
    cfg.ra_zero = true;
    for (const auto& hit : run_search(cfg)) {
        CHECK(hit.v2 == "0000");
        CHECK(hit.ra == "0000");
    }
    CHECK(search_hits_json(cfg, run_search(cfg)) == search_hits_json(cfg, run_search(cfg)));
}

TEST_CASE("search results satisfy what they claim") {
    SearchConfig cfg;
    cfg.ring = RingId::F2uF2;
    cfg.group = "C4";
    cfg.seed = 99;
    cfg.max_trials = 2000;
    cfg.min_dist = 4;
    cfg.classify = true;  // computes the true minimum distance per hit
    cfg.max_results = 5;
    const auto hits = run_search(cfg);
    REQUIRE(!hits.empty());
    const auto g = make_group(cfg.group);
    for (const auto& hit : hits) {
        const auto spec = make_spec(cfg.ring, g, natural_listing(4), parse_word(cfg.ring, hit.v1),
                                    parse_word(cfg.ring, hit.v2), parse_word(cfg.ring, hit.ra));
        CHECK(check_theorem2(spec));
        RingCode stage{cfg.ring, 16, build(spec).rows()};
        const auto bin = stage.binary_image();
        CHECK(bin.is_self_dual());
        CHECK(bin.min_distance() == hit.d);
        CHECK(hit.d >= cfg.min_dist);
        CHECK(hit.n == 32);
        CHECK(hit.k == 16);
    }
}

TEST_CASE("a corrupted row fails verification and is reported") {
    // Corrupting v1 breaks self-duality, which is detected before any
    // enumeration, so this stays fast.
    auto rows = builtin_corpus();
    const TableRow* e1 = nullptr;
    for (auto& r : rows)
        if (r.id == "E1") {
            r.v1[0] = '1';
            e1 = &r;
        }
    REQUIRE(e1 != nullptr);
    REQUIRE(!check_theorem2(make_spec(RingId::F2, make_group("C17"), natural_listing(17),
                                      parse_word(RingId::F2, e1->v1), parse_word(RingId::F2, e1->v2),
                                      parse_word(RingId::F2, e1->ra))));
    const Report rep = verify_corpus(rows, 1, {"E1"});
    REQUIRE(rep.rows.size() == 1);
    CHECK(!rep.rows.front().pass);
    CHECK(rep.failed() == 1);
    const auto json = rep.to_json();
    CHECK(json.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("verify reports are deterministic apart from timings") {
    auto rows = builtin_corpus();
    for (auto& r : rows)
        if (r.id == "E1") r.v1[0] = '1';  // fast-failing row
    auto strip = [](Report rep) {
        for (auto& r : rep.rows) r.millis = 0;
        return rep.to_json();
    };
    CHECK(strip(verify_corpus(rows, 1, {"E1"})) == strip(verify_corpus(rows, 1, {"E1"})));
}
