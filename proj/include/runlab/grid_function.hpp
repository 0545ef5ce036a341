#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "runlab/numeric.hpp"

namespace runlab {

enum class RangeKind { discrete, rational };

// f : {1..M}^k -> values.  Discrete functions take values in {0..r-1};
// rational-valued functions take exact rationals.  Backed by a full table in
// row-major order with coordinate 1 fastest-varying, or by an evaluation rule.
// Immutable; rule closures must be safe to call concurrently.
class GridFunction {
public:
    GridFunction() = default;

    static GridFunction discrete_table(int k, int M, int r, std::vector<int> table);
    static GridFunction rational_table(int k, int M, std::vector<Rat> table);
    static GridFunction discrete_rule(int k, int M, int r,
                                      std::function<int(std::span<const int>)> rule);
    static GridFunction rational_rule(int k, int M, std::function<Rat(std::span<const int>)> rule);

    int k() const { return k_; }
    int M() const { return M_; }
    RangeKind range_kind() const { return kind_; }
    int colors() const;  // r; discrete functions only
    bool tabular() const { return tabular_; }

    // M^k, which must fit in 64 bits for tabular backing
    std::uint64_t table_size() const;

    // row-major index with coordinate 1 fastest-varying
    static std::uint64_t point_index(std::span<const int> z, int M);
    static void point_at(std::uint64_t index, int M, std::span<int> out);

    Rat value(std::span<const int> z) const;
    int discrete_value(std::span<const int> z) const;

    // full-table copy of a rule-backed function
    GridFunction materialized(std::uint64_t size_budget = 10'000'000) const;

    const std::vector<int>& int_table() const;
    const std::vector<Rat>& rat_table() const;

private:
    int k_ = 0, M_ = 0, r_ = 0;
    RangeKind kind_ = RangeKind::discrete;
    bool tabular_ = false;
    std::vector<int> itab_;
    std::vector<Rat> rtab_;
    std::function<int(std::span<const int>)> irule_;
    std::function<Rat(std::span<const int>)> rrule_;
};

}  // namespace runlab
