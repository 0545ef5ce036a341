#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "runlab/errors.hpp"
#include "runlab/rng.hpp"
#include "runlab/run_prob.hpp"

using namespace runlab;

namespace {

GridFunction random_discrete(Xoshiro256pp& rng, int k, int M, int r) {
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) size *= M;
    std::vector<int> tab(size);
    for (auto& v : tab) v = int(rng.bounded(std::uint32_t(r)));
    return GridFunction::discrete_table(k, M, r, std::move(tab));
}

GridFunction random_rational(Xoshiro256pp& rng, int k, int M) {
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) size *= M;
    std::vector<Rat> tab(size);
    for (auto& v : tab) v = Rat(int(rng.bounded(7)) - 3, 1 + int(rng.bounded(4)));
    return GridFunction::rational_table(k, M, std::move(tab));
}

RunReport exact(const GridFunction& f, RunEvent ev, int l) {
    return exact_run_probability({f, NoiseKind::discrete_uniform}, ev, l);
}

}  // namespace

TEST_CASE("derived sign function") {
    SUBCASE("constant f gives the zero function") {
        auto f = GridFunction::discrete_table(2, 3, 2, std::vector<int>(9, 1));
        auto g = derived_sign_function(f).materialized();
        for (const Rat& v : g.rat_table()) CHECK(v == Rat(0));
    }
    SUBCASE("identity on two symbols") {
        auto f = GridFunction::discrete_table(1, 2, 2, {0, 1});
        auto g = derived_sign_function(f);
        CHECK(g.value(std::vector<int>{1, 2}) == Rat(1));
        CHECK(g.value(std::vector<int>{2, 1}) == Rat(-1));
        CHECK(g.value(std::vector<int>{1, 1}) == Rat(0));
        CHECK(g.value(std::vector<int>{2, 2}) == Rat(0));
    }
    SUBCASE("indicator(x1 < x2) against direct comparison on all 27 triples") {
        std::vector<int> tab(9);
        std::vector<int> z(2);
        for (std::uint64_t i = 0; i < 9; ++i) {
            GridFunction::point_at(i, 3, z);
            tab[i] = z[0] < z[1] ? 1 : 0;
        }
        auto f = GridFunction::discrete_table(2, 3, 2, tab);
        auto g = derived_sign_function(f);
        std::vector<int> t(3);
        for (std::uint64_t i = 0; i < 27; ++i) {
            GridFunction::point_at(i, 3, t);
            Rat a = f.value(std::span<const int>(t).first(2));
            Rat b = f.value(std::span<const int>(t).last(2));
            Rat expect = a < b ? Rat(1) : a > b ? Rat(-1) : Rat(0);
            CHECK(g.value(t) == expect);
        }
    }
}

TEST_CASE("exact run probabilities, frozen examples") {
    SUBCASE("constant f has probability one for every event and length") {
        auto f = GridFunction::discrete_table(2, 3, 2, std::vector<int>(9, 1));
        for (int l : {1, 2, 3, 4}) CHECK(exact(f, RunEvent::constant, l).probability == Rat(1));
    }
    SUBCASE("k=2, M=2, indicator(x1=x2), l=2: 4 of 8 triples") {
        auto f = GridFunction::discrete_table(2, 2, 2, {1, 0, 0, 1});
        auto rep = exact(f, RunEvent::constant, 2);
        CHECK(rep.favorable == 4);
        CHECK(rep.total == 8);
        CHECK(rep.probability == Rat(1, 2));
    }
    SUBCASE("k=1, M=2, identity, l=2: P(U1=U2) = 1/2") {
        auto f = GridFunction::discrete_table(1, 2, 2, {0, 1});
        CHECK(exact(f, RunEvent::constant, 2).probability == Rat(1, 2));
    }
    SUBCASE("k=1, M=3, identity, l=2, increasing: 3 of 9 pairs") {
        auto f = GridFunction::discrete_table(1, 3, 3, {0, 1, 2});
        auto rep = exact(f, RunEvent::increasing, 2);
        CHECK(rep.favorable == 3);
        CHECK(rep.total == 9);
    }
    SUBCASE("l = 1 is a run of every kind") {
        auto f = GridFunction::discrete_table(1, 3, 3, {2, 0, 1});
        for (auto ev : {RunEvent::constant, RunEvent::increasing, RunEvent::decreasing})
            CHECK(exact(f, ev, 1).probability == Rat(1));
    }
    SUBCASE("rejects l < 1") {
        auto f = GridFunction::discrete_table(1, 2, 2, {0, 1});
        CHECK_THROWS_AS(exact(f, RunEvent::constant, 0), RangeError);
    }
}

TEST_CASE("DP equals naive enumeration over all tuples") {
    Xoshiro256pp rng(11);
    int instances = 0;
    while (instances < 36) {
        int k = 1 + int(rng.bounded(3));
        int M = 1 + int(rng.bounded(4));
        int l = 1 + int(rng.bounded(3));
        double tuples = std::pow(double(M), double(l + k - 1));
        if (tuples > 20000) continue;
        ++instances;
        GridFunction f = (instances % 2 == 0) ? random_discrete(rng, k, M, 1 + int(rng.bounded(3)))
                                              : random_rational(rng, k, M);
        for (auto [ev, name] : {std::pair{RunEvent::constant, "constant"},
                                {RunEvent::increasing, "increasing"},
                                {RunEvent::decreasing, "decreasing"}}) {
            auto rep = exact(f, ev, l);
            auto [fav, total] = oracles::naive_run_count(f, name, l);
            CHECK(rep.favorable == fav);
            CHECK(rep.total == total);
        }
    }
}

TEST_CASE("constant runs computed directly match the 0-run of the sign function") {
    Xoshiro256pp rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        int k = 1 + int(rng.bounded(2));
        int M = 2 + int(rng.bounded(3));
        int l = 2 + int(rng.bounded(2));
        GridFunction f = trial % 2 ? random_rational(rng, k, M) : random_discrete(rng, k, M, 3);
        auto direct = exact(f, RunEvent::constant, l);
        // a constant run of l windows of f is a 0-run of l-1 windows of g
        GridFunction g = derived_sign_function(f);
        CHECK(direct.favorable == count_value_runs(g, Rat(0), l - 1));
    }
}

TEST_CASE("trichotomy at grid scale: the three probabilities are never all zero") {
    Xoshiro256pp rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int k = 1 + int(rng.bounded(3));
        int M = 1 + int(rng.bounded(4));
        int l = 1 + int(rng.bounded(3));
        GridFunction f = random_rational(rng, k, M);
        Rat pc = exact(f, RunEvent::constant, l).probability;
        Rat pi = exact(f, RunEvent::increasing, l).probability;
        Rat pd = exact(f, RunEvent::decreasing, l).probability;
        CHECK((pc > 0 || pi > 0 || pd > 0));
        CHECK(pc > 0);  // diagonal tuples always contribute
    }
}

TEST_CASE("mono_path_count") {
    SUBCASE("frozen examples") {
        CHECK(mono_path_count(VertexColoring{2, 3, 1, {0, 0, 0}}, 2) == 1);
        CHECK(mono_path_count(VertexColoring{2, 4, 1, std::vector<int>(6, 0)}, 2) == 4);
        // proper 2-coloring of D(2,4): classes {12,34} and the rest
        VertexColoring proper{2, 4, 2, {}};
        auto g = build_graph(2, 4);
        proper.assign.resize(6, 1);
        proper.assign[g.rank(Word{1, 2})] = 0;
        proper.assign[g.rank(Word{3, 4})] = 0;
        CHECK(mono_path_count(proper, 2) == 0);
    }
    SUBCASE("agrees with brute-force path enumeration") {
        Xoshiro256pp rng(19);
        for (auto [k, m] : {std::pair{2, 5}, {2, 6}, {3, 6}, {1, 5}}) {
            auto g = build_graph(k, m);
            auto words = oracles::all_increasing_words(k, m);
            auto edges = oracles::brute_edges(words);
            std::vector<std::pair<int, int>> rank_edges;
            for (auto [u, v] : edges)
                rank_edges.emplace_back(int(g.rank(words[u])), int(g.rank(words[v])));
            for (int r : {1, 2}) {
                VertexColoring vc{k, m, r, {}};
                for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
                    vc.assign.push_back(int(rng.bounded(std::uint32_t(r))));
                for (int l = 1; l <= 4; ++l) {
                    auto brute = oracles::brute_mono_paths(rank_edges, vc.assign,
                                                           int(g.vertex_count()), l);
                    CHECK(mono_path_count(vc, l) == BigInt(brute.size()));
                }
            }
        }
    }
}

TEST_CASE("counting bridge check") {
    SUBCASE("constant f, k=2, M=4, l=3: one increasing tuple, one 3-vertex path") {
        auto f = GridFunction::discrete_table(2, 4, 2, std::vector<int>(16, 1));
        auto rep = counting_bridge_check(f, 3);
        CHECK(rep.increasing_tuple_count == 1);
        CHECK(rep.path_count == 1);
    }
    SUBCASE("l = 1 counts every vertex") {
        auto f = GridFunction::discrete_table(2, 4, 2, std::vector<int>(16, 0));
        auto rep = counting_bridge_check(f, 1);
        CHECK(rep.increasing_tuple_count == 6);  // C(4,2)
        CHECK(rep.path_count == 6);
    }
    SUBCASE("random tables never violate the identity; hypothesis implies the bound") {
        Xoshiro256pp rng(23);
        int hypothesis_seen = 0;
        for (int trial = 0; trial < 60; ++trial) {
            int k = 2 + int(rng.bounded(2));
            int M = 2 + int(rng.bounded(4));
            int l = 1 + int(rng.bounded(3));
            auto f = random_discrete(rng, k, M, 1 + int(rng.bounded(2)));
            auto rep = counting_bridge_check(f, l);  // throws on any violation
            if (rep.bound_checked) {
                ++hypothesis_seen;
                CHECK(rep.bound_holds);
                CHECK(rep.probability >= rep.factorial_bound);
            }
        }
        CHECK(hypothesis_seen > 0);  // r=1 tables always qualify
    }
    SUBCASE("rejects rational-valued and rule-backed functions") {
        auto fr = GridFunction::rational_table(1, 2, {Rat(0), Rat(1)});
        CHECK_THROWS_AS(counting_bridge_check(fr, 2), InvalidInputError);
    }
}

TEST_CASE("adversarial_min") {
    SUBCASE("k=1, M=2, r=2, l=2: minimum 1/2 at the lex-smallest non-constant table") {
        auto out = adversarial_min(1, 2, 2, 2);
        CHECK(out.min_probability == Rat(1, 2));
        CHECK(out.argmin.int_table() == std::vector<int>{0, 1});
        CHECK(out.exhaustive);
        CHECK(out.functions_evaluated == 4);
    }
    SUBCASE("single grid point forces a constant process") {
        auto out = adversarial_min(1, 1, 3, 4);
        CHECK(out.min_probability == Rat(1));
    }
    SUBCASE("k=2, M=3, r=2, l=2: exhaustive over 512 tables, reproducible") {
        auto a = adversarial_min(2, 3, 2, 2);
        auto b = adversarial_min(2, 3, 2, 2);
        CHECK(a.min_probability == b.min_probability);
        CHECK(a.argmin.int_table() == b.argmin.int_table());
        CHECK(a.functions_evaluated == 512);
        // exhaustive minimum can only beat any specific table
        auto id_rep = exact(GridFunction::discrete_table(2, 3, 2, {0, 0, 0, 1, 1, 1, 0, 1, 0}),
                            RunEvent::constant, 2);
        CHECK(a.min_probability <= id_rep.probability);
    }
    SUBCASE("threads do not change the exhaustive result") {
        MinimizeOptions opts;
        opts.threads = 4;
        auto a = adversarial_min(2, 3, 2, 2, opts);
        auto b = adversarial_min(2, 3, 2, 2);
        CHECK(a.min_probability == b.min_probability);
        CHECK(a.argmin.int_table() == b.argmin.int_table());
    }
    SUBCASE("sampled mode is deterministic for a fixed seed") {
        MinimizeOptions opts;
        opts.mode = CheckMode::sampled;
        opts.samples = 4;
        opts.seed = 99;
        auto a = adversarial_min(2, 4, 2, 2, opts);
        auto b = adversarial_min(2, 4, 2, 2, opts);
        CHECK(a.min_probability == b.min_probability);
        CHECK(a.argmin.int_table() == b.argmin.int_table());
        CHECK(!a.exhaustive);
        // exhaustive minimum is a floor for any sampled result
        auto ex = adversarial_min(2, 4, 2, 2);
        CHECK(a.min_probability >= ex.min_probability);
    }
    SUBCASE("exhaustive budget is enforced") {
        MinimizeOptions opts;
        opts.max_exhaustive = 100;
        CHECK_THROWS_AS(adversarial_min(2, 3, 2, 2, opts), ResourceError);
    }
}

TEST_CASE("verify_lower_bound") {
    SUBCASE("(k,l,r) = (2,2,2): M = 4, p = 1/64, exhaustive minimum clears it") {
        auto rep = verify_lower_bound(2, 2, 2);
        CHECK(rep.M == 4);
        CHECK(rep.p_lower == Rat(1, 64));
        CHECK(rep.exhaustive);
        CHECK(rep.holds);
        CHECK(rep.min_probability >= Rat(1, 64));
    }
    SUBCASE("(k,l,r) = (2,2,1): every table is constant") {
        auto rep = verify_lower_bound(2, 2, 1);
        CHECK(rep.M == 2);
        CHECK(rep.min_probability == Rat(1));
        CHECK(rep.holds);
    }
    SUBCASE("large spaces fall back to sampling") {
        MinimizeOptions opts;
        opts.samples = 2;
        opts.seed = 5;
        auto rep = verify_lower_bound(2, 3, 2, opts);  // M = 9: 2^81 tables
        CHECK(rep.M == 9);
        CHECK(!rep.exhaustive);
        CHECK(rep.p_lower == Rat(BigInt(1), big_pow(BigInt(9), 4)));
        CHECK(rep.holds);  // no counterexample found
    }
}
