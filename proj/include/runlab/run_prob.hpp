#pragma once

#include <cstdint>
#include <optional>

#include "runlab/coloring.hpp"
#include "runlab/grid_function.hpp"
#include "runlab/numeric.hpp"

namespace runlab {

enum class RunEvent { constant, increasing, decreasing };

enum class NoiseKind {
    discrete_uniform,  // U uniform on {1..M}
    uniform_ceil       // U uniform on (0,1], window sees ceil(M*U)
};

// Both noise kinds induce the same law for the window process; the exact
// engine computes under the discrete one, Monte Carlo honors the choice.
struct ProcessSpec {
    GridFunction f;
    NoiseKind noise = NoiseKind::discrete_uniform;
};

struct RunReport {
    RunEvent event = RunEvent::constant;
    int l = 0;  // run length in windows
    int k = 0;
    int M = 0;
    BigInt favorable;
    BigInt total;  // M^(l+k-1)
    Rat probability;
};

// g(x_1..x_{k+1}) in {-1,0,+1}: the sign of f(x_2..x_{k+1}) - f(x_1..x_k).
// Carried as a rational-valued rule over a materialized copy of f.
GridFunction derived_sign_function(const GridFunction& f,
                                   std::uint64_t size_budget = 10'000'000);

// Exact rational probability that the first l windows form the event, by
// dynamic programming over (last k-1 coordinates, current run value) states.
// Monotone events reduce to targeted runs of the derived sign function.
// l = 1 is a run by convention, probability one.
RunReport exact_run_probability(const ProcessSpec& spec, RunEvent event, int l,
                                std::uint64_t work_budget = 200'000'000);

// Favorable tuple count for `windows` overlapping windows of f all equal to a
// fixed target value; the engine the monotone reductions run on.
BigInt count_value_runs(const GridFunction& f, const Rat& target, int windows,
                        std::uint64_t work_budget = 200'000'000);

// Number of monochromatic directed paths of exactly l_vertices vertices.
BigInt mono_path_count(const VertexColoring& vc, int l_vertices);

struct BridgeOptions {
    // enumerate all M^M value assignments while that count stays within budget
    std::uint64_t coloring_budget = 2'000'000;
    std::uint64_t work_budget = 200'000'000;
};

struct BridgeReport {
    int k = 0, M = 0, l = 0;
    BigInt increasing_tuple_count;  // tuples x_1<...<x_{l+k-1} with equal windows
    BigInt path_count;              // monochromatic l-vertex paths under c = f
    bool hypothesis_checked = false;
    bool hypothesis_holds = false;  // every coloring arising from f has a path
    std::uint64_t colorings_enumerated = 0;
    Rat probability;      // exact constant-run probability of f
    Rat factorial_bound;  // (M-k-l+1)!/M!
    bool bound_checked = false;
    bool bound_holds = false;
};

// The counting identity at the core of the constant-run lower bound: strictly
// increasing tuples with equal windows are exactly the monochromatic directed
// paths of D(k,M) under the coloring c(a_1..a_k) = f(a_1..a_k).  When every
// coloring c_y(a) = f(y_{a_1}..y_{a_k}) arising from f has at least one such
// path, the exact run probability must reach (M-k-l+1)!/M!.  Mismatches throw
// IdentityViolationError: they indicate a bug, not a property of f.
BridgeReport counting_bridge_check(const GridFunction& f, int l, const BridgeOptions& opts = {});

struct MinimizeOptions {
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t max_exhaustive = 10'000'000;  // function tables
    std::uint64_t samples = 256;                // sampled mode restarts
    std::uint64_t seed = 0;
    int threads = 1;
};

struct AdversarialMin {
    int k = 0, M = 0, r = 0, l = 0;
    Rat min_probability;
    GridFunction argmin;  // ties broken by lexicographically smallest table
    BigInt functions_evaluated;
    bool exhaustive = false;
    std::uint64_t seed = 0;
};

// Minimum exact constant-run probability over discrete grid functions
// {1..M}^k -> {0..r-1}, exhaustively or by seeded sampling with hill-climbing
// refinement.
AdversarialMin adversarial_min(int k, int M, int r, int l, const MinimizeOptions& opts = {});

struct LowerBoundReport {
    int k = 0, l = 0, r = 0;
    BigInt M;          // from M_for(k,l,r)
    Rat p_lower;       // 1/M^(k+l-1)
    Rat min_probability;
    bool exhaustive = false;  // false: "no counterexample found" over samples
    bool holds = false;       // min_probability >= p_lower
    BigInt functions_evaluated;
};

// Desk-scale check of the constant-run lower bound: the worst grid function
// on {1..M}^k with M = M_for(k,l,r) still has P(Z_1 = ... = Z_l) >= p_lower.
LowerBoundReport verify_lower_bound(int k, int l, int r, const MinimizeOptions& opts = {});

}  // namespace runlab
