#pragma once

#include <optional>
#include <vector>

#include "runlab/numeric.hpp"

namespace runlab {

enum class TowerKind { exact, real, symbolic };

// t_1(x) = x and t_i(x) = 2^(t_{i-1}(x)).  Exact for integer-valued chains
// while the result stays under the bit budget; evaluated as a 128-bit-mantissa
// real for non-integral arguments or past the budget; symbolic once even the
// floating exponent overflows.  log_chain[j] holds log2 applied j times to the
// value as a double (+inf where no double can hold it), so astronomically
// large towers stay comparable.
struct TowerValue {
    int level = 1;
    std::optional<Rat> base_rational;  // present when the argument was exact
    Real base_real{0};
    TowerKind kind = TowerKind::exact;
    Rat exact_value{0};
    Real real_value{0};
    std::vector<double> log_chain;  // size == level, entry j = log2^{(j)}(value)

    bool is_integer() const;
    BigInt integer_value() const;
};

inline constexpr std::uint64_t kTowerBitBudget = 1'000'000;

TowerValue tower(int level, const Rat& x, std::uint64_t bit_budget = kTowerBitBudget);
TowerValue tower(int level, const Real& x, std::uint64_t bit_budget = kTowerBitBudget);

// The integer M with log2 iterated (k-2) times equal to l^r: tower(k-1, l^r).
TowerValue M_for(int k, int l, int r);

struct BoundReport {
    int k = 0;
    std::optional<int> l;
    std::optional<int> r;
    std::optional<TowerValue> M;
    std::optional<Rat> p_lower;          // exact 1/M^(k+l-1) when materializable
    std::optional<double> p_lower_log2;  // rendering otherwise
    std::optional<TowerValue> theorem3_M;       // t_{k-2}(k/sqrt(8))
    std::optional<Real> theorem3_bound;         // 9k^2/M when representable
    std::optional<bool> theorem3_vacuous;       // bound >= 1
};

BoundReport p_lower(int k, int l, int r);
BoundReport theorem3_constants(int k);

}  // namespace runlab
