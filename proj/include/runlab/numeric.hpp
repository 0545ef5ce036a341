#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace runlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binary float with a 128-bit mantissa, for tower arithmetic on non-integral
// arguments where exact evaluation is impossible.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;

BigInt big_pow(const BigInt& base, std::uint64_t exp);
BigInt factorial(int n);
// n * (n-1) * ... * (n-terms+1)
BigInt falling_factorial(const BigInt& n, int terms);
BigInt binomial_big(int n, int k);

// C(n,k) if it fits in 64 bits, nullopt on overflow.
std::optional<std::uint64_t> binomial_u64(int n, int k);

// Pascal triangle with saturating entries, sized for combinatorial ranking.
// Entries whose true value exceeds `cap` are clamped to cap; lookups used by
// rank/unrank only ever compare against values <= cap, so clamped entries
// behave correctly as "too large".
class BinomialTable {
public:
    BinomialTable() = default;
    BinomialTable(int max_n, int max_k, std::uint64_t cap);

    std::uint64_t at(int n, int k) const;
    int max_n() const { return max_n_; }
    int max_k() const { return max_k_; }

private:
    int max_n_ = -1;
    int max_k_ = -1;
    std::uint64_t cap_ = 0;
    std::vector<std::uint64_t> c_;
};

}  // namespace runlab
