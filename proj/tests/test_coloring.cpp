#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "runlab/coloring.hpp"
#include "runlab/errors.hpp"
#include "runlab/rng.hpp"

using namespace runlab;
using namespace std::chrono_literals;

namespace {

std::vector<std::pair<int, int>> int_edges(const DeBruijnGraph& g) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(int(u), int(v));
    return es;
}

}  // namespace

TEST_CASE("chromatic number anchors") {
    CHECK(chromatic_number(build_graph(1, 4)) == 4);  // chi(D(1,m)) = m
    CHECK(chromatic_number(build_graph(2, 2)) == 1);  // single vertex
    CHECK(chromatic_number(build_graph(2, 4)) == 2);

    SUBCASE("matches exhaustive assignment enumeration on small graphs") {
        for (auto [k, m] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                            {2, 5}, {3, 4}, {3, 5}, {3, 6}}) {
            auto g = build_graph(k, m);
            CHECK(chromatic_number(g) ==
                  oracles::brute_chromatic(int_edges(g), int(g.vertex_count())));
        }
    }
    SUBCASE("vertex budget is enforced") {
        CHECK_THROWS_AS(chromatic_number(build_graph(2, 8), 10), ResourceError);
        try {
            chromatic_number(build_graph(2, 8), 10);
        } catch (const ResourceError& e) {
            CHECK(e.chi_lower.has_value());
            CHECK(e.chi_upper.has_value());
        }
    }
}

TEST_CASE("Theorem A inequality and the iterated-log bound, small exact instances") {
    for (int m = 3; m <= 8; ++m) {
        int chi1 = chromatic_number(build_graph(1, m));
        int chi2 = chromatic_number(build_graph(2, m));
        int chi3 = chromatic_number(build_graph(3, m));
        CHECK(std::log2(double(chi1)) <= double(chi2) + 1e-12);
        CHECK(std::log2(double(chi2)) <= double(chi3) + 1e-12);
        CHECK(double(chi2) >= std::log2(double(m)) - 1e-12);
        CHECK(double(chi3) >= std::log2(std::log2(double(m))) - 1e-12);
    }
}

TEST_CASE("lift of the single-edge coloring of D(2,3)") {
    auto g = build_graph(2, 3);
    EdgeColoring ec{2, 3, 1, {0}};  // the only edge, colored 0
    auto vc = lift_edge_coloring(g, ec);
    CHECK(vc.colors == 2);  // 2^q
    // colex ranks: (1,2) -> 0, (1,3) -> 1, (2,3) -> 2
    CHECK(vc.assign == std::vector<int>{1, 0, 0});  // {0} at the source, {} elsewhere
}

TEST_CASE("lift rejects colorings with a monochromatic 2-edge path") {
    auto g = build_graph(2, 4);
    EdgeColoring ec{2, 4, 1, {0, 0, 0, 0}};
    CHECK_THROWS_AS(lift_edge_coloring(g, ec), InvalidInputError);
}

TEST_CASE("lift of an edgeless graph colors every vertex by the empty set") {
    auto g = build_graph(2, 2);  // one vertex, no edges
    EdgeColoring ec{2, 2, 1, {}};
    auto vc = lift_edge_coloring(g, ec);
    CHECK(vc.assign == std::vector<int>{0});
}

TEST_CASE("lift soundness, exhaustive over q=1 and q=2 colorings of D(2,4)") {
    auto g = build_graph(2, 4);
    for (int q : {1, 2}) {
        const int total = 1;
        int count = 1;
        for (std::uint64_t e = 0; e < g.edge_count(); ++e) count *= q;
        (void)total;
        std::vector<int> assign(g.edge_count(), 0);
        for (int idx = 0; idx < count; ++idx) {
            EdgeColoring ec{2, 4, q, assign};
            bool valid = true;
            try {
                auto vc = lift_edge_coloring(g, ec);
                CHECK(vc.colors == (1 << q));
            } catch (const InvalidInputError&) {
                valid = false;  // filtered: has a monochromatic 2-edge path
            }
            // properness of valid lifts is asserted inside lift_edge_coloring
            (void)valid;
            for (std::size_t e = 0; e < assign.size(); ++e) {
                if (++assign[e] < q) break;
                assign[e] = 0;
            }
        }
    }
}

TEST_CASE("lift of a searched q=2 coloring of D(2,5)") {
    // an edge coloring of D(2,5) is a vertex coloring of D(3,5)
    auto res = search_coloring(3, 5, 2, 2, 5000ms);
    REQUIRE(res.status == SearchStatus::found);
    auto g = build_graph(2, 5);
    auto vc = lift_edge_coloring(g, as_edge_coloring(*res.coloring));
    CHECK(vc.colors <= 4);
    for (auto [u, v] : g.edges()) CHECK(vc.assign[u] != vc.assign[v]);
}

TEST_CASE("find_mono_path examples") {
    auto g = build_graph(2, 3);
    SUBCASE("single edge, one color") {
        VertexColoring vc{2, 3, 1, {0, 0, 0}};
        auto p = find_mono_path(g, vc, 2);
        REQUIRE(p.has_value());
        CHECK(p->vertices == std::vector<std::uint64_t>{0, 2});  // (1,2) -> (2,3)
        CHECK(p->length_edges() == 1);
    }
    SUBCASE("bichromatic edge kills the 2-vertex path") {
        // colex ranks: (1,2)=0, (1,3)=1, (2,3)=2; colors (1,2)=0,(2,3)=1,(1,3)=0
        VertexColoring vc{2, 3, 2, {0, 0, 1}};
        CHECK(!find_mono_path(g, vc, 2).has_value());
    }
    SUBCASE("longest path of D(2,4) under one color") {
        auto g4 = build_graph(2, 4);
        VertexColoring vc{2, 4, 1, std::vector<int>(6, 0)};
        auto p = find_mono_path(g4, vc, 3);
        REQUIRE(p.has_value());
        CHECK(p->vertices.size() == 3);
        CHECK(g4.unrank(p->vertices[0]) == Word{1, 2});
        CHECK(g4.unrank(p->vertices[1]) == Word{2, 3});
        CHECK(g4.unrank(p->vertices[2]) == Word{3, 4});
        CHECK(!find_mono_path(g4, vc, 4).has_value());
    }
    SUBCASE("l = 1 returns a single vertex") {
        VertexColoring vc{2, 3, 2, {0, 1, 0}};
        auto p = find_mono_path(g, vc, 1);
        REQUIRE(p.has_value());
        CHECK(p->vertices.size() == 1);
    }
}

TEST_CASE("find_mono_path agrees with brute-force path enumeration") {
    Xoshiro256pp rng(7);
    for (auto [k, m] : {std::pair{2, 6}, {2, 8}, {3, 7}, {1, 6}}) {
        auto g = build_graph(k, m);
        auto edges = int_edges(g);
        for (int r : {1, 2, 3}) {
            for (int trial = 0; trial < 8; ++trial) {
                VertexColoring vc{k, m, r, {}};
                for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
                    vc.assign.push_back(int(rng.bounded(std::uint32_t(r))));
                for (int l = 1; l <= 5; ++l) {
                    auto mine = find_mono_path(g, vc, l);
                    auto brute =
                        oracles::brute_mono_paths(edges, vc.assign, int(g.vertex_count()), l);
                    CHECK(mine.has_value() == !brute.empty());
                    if (mine) {
                        CHECK(mine->vertices.size() == std::size_t(l));
                        for (std::size_t i = 0; i + 1 < mine->vertices.size(); ++i) {
                            bool adjacent = false;
                            for (auto s : g.successor_ranks(mine->vertices[i]))
                                if (s == mine->vertices[i + 1]) adjacent = true;
                            CHECK(adjacent);
                        }
                        for (auto v : mine->vertices)
                            CHECK(vc.assign[v] == vc.assign[mine->vertices[0]]);
                    }
                }
            }
        }
    }
}

TEST_CASE("check_chvatal") {
    SUBCASE("D(1,3), one color, one edge: trivially holds") {
        auto rep = check_chvatal(build_graph(1, 3), 1, 1);
        CHECK(rep.chi == 3);
        CHECK(rep.hypothesis_met);  // 3 > 1^1
        CHECK(rep.checked);
        CHECK(rep.colorings_checked == 1);
        CHECK(rep.colorings_with_mono_path == 1);
        CHECK(rep.holds());
    }
    SUBCASE("D(1,5), two colors, 2-edge paths: exhaustive over 2^10") {
        auto rep = check_chvatal(build_graph(1, 5), 2, 2);
        CHECK(rep.chi == 5);
        CHECK(rep.hypothesis_met);  // 5 > 4
        CHECK(rep.exhaustive);
        CHECK(rep.colorings_checked == 1024);
        CHECK(rep.colorings_with_mono_path == 1024);
        CHECK(!rep.counterexample.has_value());
        CHECK(rep.holds());
    }
    SUBCASE("D(1,4), two colors: hypothesis 4 > 4 fails, nothing checked") {
        auto rep = check_chvatal(build_graph(1, 4), 2, 2);
        CHECK(rep.chi == 4);
        CHECK(!rep.hypothesis_met);
        CHECK(!rep.checked);
        CHECK(rep.colorings_checked == 0);
        CHECK(rep.holds());
    }
    SUBCASE("exhaustive budget is enforced") {
        ChvatalOptions opts;
        opts.max_exhaustive = 100;
        CHECK_THROWS_AS(check_chvatal(build_graph(1, 5), 2, 2, opts), ResourceError);
    }
    SUBCASE("sampled mode is deterministic and thread-count independent") {
        ChvatalOptions opts;
        opts.mode = CheckMode::sampled;
        opts.samples = 2000;
        opts.seed = 42;
        auto a = check_chvatal(build_graph(1, 5), 2, 2, opts);
        auto b = check_chvatal(build_graph(1, 5), 2, 2, opts);
        opts.threads = 4;
        auto c = check_chvatal(build_graph(1, 5), 2, 2, opts);
        CHECK(a.colorings_with_mono_path == b.colorings_with_mono_path);
        CHECK(a.colorings_with_mono_path == c.colorings_with_mono_path);
        CHECK(a.colorings_checked == 2000);
    }
}

TEST_CASE("search_coloring") {
    SUBCASE("a proper 2-coloring of D(2,4) avoids 2-vertex paths") {
        auto res = search_coloring(2, 4, 2, 2, 5000ms);
        REQUIRE(res.status == SearchStatus::found);
        CHECK(!find_mono_path(build_graph(2, 4), *res.coloring, 2).has_value());
    }
    SUBCASE("one color on D(2,3) is exhausted, not timed out") {
        auto res = search_coloring(2, 3, 1, 2, 5000ms);
        CHECK(res.status == SearchStatus::exhausted);
        CHECK(!res.coloring.has_value());
    }
    SUBCASE("2-coloring of D(3,6) without 3-vertex monochromatic paths") {
        auto res = search_coloring(3, 6, 2, 3, 10000ms);
        REQUIRE(res.status == SearchStatus::found);
        CHECK(!find_mono_path(build_graph(3, 6), *res.coloring, 3).has_value());
    }
    SUBCASE("timeout is reported as timeout") {
        auto res = search_coloring(3, 12, 2, 3, 0ms);
        CHECK(res.status == SearchStatus::timeout);
    }
    SUBCASE("l = 1 is always exhausted: every vertex is a 1-path") {
        auto res = search_coloring(2, 4, 2, 1, 5000ms);
        CHECK(res.status == SearchStatus::exhausted);
    }
}

TEST_CASE("coloring validation") {
    auto g = build_graph(2, 4);
    CHECK_THROWS_AS(require_matching(g, VertexColoring{2, 4, 2, {0, 1}}), InvalidInputError);
    CHECK_THROWS_AS(require_matching(g, VertexColoring{2, 5, 2, std::vector<int>(6, 0)}),
                    InvalidInputError);
    CHECK_THROWS_AS(require_matching(g, VertexColoring{2, 4, 2, {0, 1, 2, 0, 0, 0}}),
                    InvalidInputError);
    CHECK_THROWS_AS(as_edge_coloring(VertexColoring{1, 4, 2, {0, 0, 0, 0}}),
                    InvalidDimensionError);
}
