#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "runlab/coloring.hpp"
#include "runlab/grid_function.hpp"
#include "runlab/numeric.hpp"

namespace runlab {

// The four-case grid function h built from a 2-coloring g of D(k,M):
//   strictly increasing z  -> g(z)
//   strictly decreasing z  -> g(reversed z)
//   any repeated value     -> 0
//   otherwise              -> alpha(z_2,z_3), alpha(x,y) = 0 iff x < y else 1.
// Rule-backed; k >= 3 because the fourth case reads z_2 and z_3.
GridFunction construct_h(const VertexColoring& g);

struct ImpossibilityOptions {
    std::optional<CheckMode> mode;              // default: auto by tuple count
    std::uint64_t max_exhaustive = 100'000'000; // ordered distinct tuples
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

struct ImpossibilityReport {
    int k = 0, M = 0;
    bool exhaustive = false;
    BigInt tuples_checked;
    std::uint64_t violations = 0;  // a throw happens first; stays 0
    std::uint64_t seed = 0;
};

// Checks that no tuple of 3k distinct values from {1..M} makes all 2k+1
// overlapping windows of h equal.  Requires g to avoid monochromatic k-vertex
// paths (verified first).  A violating tuple throws
// ConstructionViolationError carrying the tuple: it would mean a bug here,
// not a property of g.
ImpossibilityReport verify_impossibility(const VertexColoring& g,
                                         const ImpossibilityOptions& opts = {});

struct DistinctnessReport {
    int k = 0, M = 0;
    Rat product_side;   // prod_{j=0}^{3k-1} (1 - j/M)
    Rat bound_side;     // 1 - 9k^2/M
    bool meaningful = false;  // M >= 3k
    bool holds = false;       // product > bound, asserted when meaningful
    Rat distinct_probability;  // exact P(3k uniform draws distinct) = M!/((M-3k)! M^{3k})
};

DistinctnessReport distinctness_bound_check(int k, int M);

}  // namespace runlab
