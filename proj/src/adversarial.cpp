#include "runlab/adversarial.hpp"

#include <algorithm>
#include <numeric>

#include "runlab/errors.hpp"
#include "runlab/rng.hpp"

namespace runlab {

GridFunction construct_h(const VertexColoring& g) {
    if (g.k < 3)
        throw InvalidDimensionError("construct_h needs k >= 3; the fourth case reads z_2 and z_3");
    if (g.colors != 2) throw InvalidInputError("construct_h needs a 2-coloring");
    DeBruijnGraph graph = build_graph(g.k, g.m);
    require_matching(graph, g);

    const int k = g.k;
    auto rule = [graph, g, k](std::span<const int> z) -> int {
        bool increasing = true, decreasing = true;
        for (int i = 0; i + 1 < k; ++i) {
            if (z[i] >= z[i + 1]) increasing = false;
            if (z[i] <= z[i + 1]) decreasing = false;
        }
        if (increasing) return g.assign[graph.rank(z)];
        if (decreasing) {
            Word rev(z.rbegin(), z.rend());
            return g.assign[graph.rank(rev)];
        }
        std::vector<int> sorted(z.begin(), z.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
        return z[1] < z[2] ? 0 : 1;  // alpha(z_2, z_3)
    };
    return GridFunction::discrete_rule(k, g.m, 2, std::move(rule));
}

namespace {

// all 2k+1 windows of h over the 3k coordinates equal?
bool windows_constant(const GridFunction& h, std::span<const int> z, int k) {
    int first = h.discrete_value(z.subspan(0, k));
    for (int i = 1; i <= 2 * k; ++i)
        if (h.discrete_value(z.subspan(i, k)) != first) return false;
    return true;
}

void throw_violation(std::span<const int> z) {
    throw ConstructionViolationError("all windows of h are equal on the distinct tuple " +
                                         word_to_string(z),
                                     std::vector<int>(z.begin(), z.end()));
}

// ordered tuples of distinct values, depth-first
void enumerate_distinct(const GridFunction& h, int k, int M, std::vector<int>& z,
                        std::vector<char>& used, std::size_t depth, BigInt& checked) {
    if (depth == z.size()) {
        checked += 1;
        if (windows_constant(h, z, k)) throw_violation(z);
        return;
    }
    for (int v = 1; v <= M; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        z[depth] = v;
        enumerate_distinct(h, k, M, z, used, depth + 1, checked);
        used[v] = 0;
    }
}

}  // namespace

ImpossibilityReport verify_impossibility(const VertexColoring& g,
                                         const ImpossibilityOptions& opts) {
    const int k = g.k;
    const int M = g.m;
    DeBruijnGraph graph = build_graph(k, M);
    require_matching(graph, g);
    if (g.colors != 2) throw InvalidInputError("verify_impossibility needs a 2-coloring");
    if (M < 3 * k)
        throw InvalidInputError("no distinct 3k-tuples exist: M = " + std::to_string(M) +
                                " < 3k = " + std::to_string(3 * k));
    if (find_mono_path(graph, g, k))
        throw InvalidInputError("the coloring has a monochromatic path of " + std::to_string(k) +
                                " vertices; construct_h requires none");

    GridFunction h = construct_h(g);

    ImpossibilityReport rep;
    rep.k = k;
    rep.M = M;
    rep.seed = opts.seed;

    const int n = 3 * k;
    BigInt ordered_tuples = falling_factorial(BigInt(M), n);
    CheckMode mode = opts.mode.value_or(ordered_tuples <= BigInt(opts.max_exhaustive)
                                            ? CheckMode::exhaustive
                                            : CheckMode::sampled);
    if (mode == CheckMode::exhaustive) {
        if (ordered_tuples > BigInt(opts.max_exhaustive))
            throw ResourceError("exhaustive impossibility check needs " + ordered_tuples.str() +
                                " tuples, budget is " + std::to_string(opts.max_exhaustive));
        rep.exhaustive = true;
        std::vector<int> z(n);
        std::vector<char> used(M + 1, 0);
        enumerate_distinct(h, k, M, z, used, 0, rep.tuples_checked);
    } else {
        rep.exhaustive = false;
        Xoshiro256pp rng(opts.seed);
        // partial Fisher-Yates: a uniform ordered sample without replacement
        std::vector<int> pool(M);
        std::iota(pool.begin(), pool.end(), 1);
        std::vector<int> z(n);
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            for (int i = 0; i < n; ++i) {
                std::uint32_t j = i + rng.bounded(std::uint32_t(M - i));
                std::swap(pool[i], pool[j]);
                z[i] = pool[i];
            }
            rep.tuples_checked += 1;
            if (windows_constant(h, z, k)) throw_violation(z);
        }
    }
    return rep;
}

DistinctnessReport distinctness_bound_check(int k, int M) {
    if (k < 1 || M < 1) throw InvalidDimensionError("need k >= 1 and M >= 1");
    DistinctnessReport rep;
    rep.k = k;
    rep.M = M;
    const int n = 3 * k;
    rep.product_side = Rat(1);
    // when M < 3k the factor at j = M is exactly zero, so the product is zero
    for (int j = 0; j < n; ++j) rep.product_side *= Rat(BigInt(M - j), BigInt(M));
    rep.bound_side = Rat(1) - Rat(BigInt(9) * k * k, BigInt(M));
    rep.distinct_probability =
        M >= n ? Rat(falling_factorial(BigInt(M), n), big_pow(BigInt(M), std::uint64_t(n)))
               : Rat(0);
    rep.meaningful = M >= n;
    rep.holds = !rep.meaningful || rep.product_side > rep.bound_side;
    return rep;
}

}  // namespace runlab
