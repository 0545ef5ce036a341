#include "runlab/numeric.hpp"

#include "runlab/errors.hpp"

namespace runlab {

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

BigInt factorial(int n) {
    if (n < 0) throw RangeError("factorial of negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt falling_factorial(const BigInt& n, int terms) {
    if (terms < 0) throw RangeError("falling_factorial with negative term count");
    BigInt r = 1;
    for (int j = 0; j < terms; ++j) r *= (n - j);
    return r;
}

BigInt binomial_big(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;  // exact at every step
    }
    return r;
}

std::optional<std::uint64_t> binomial_u64(int n, int k) {
    BigInt b = binomial_big(n, k);
    if (b > BigInt(UINT64_MAX)) return std::nullopt;
    return static_cast<std::uint64_t>(b);
}

namespace {
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a >= cap || b >= cap || a + b >= cap) return cap;
    return a + b;
}
}  // namespace

BinomialTable::BinomialTable(int max_n, int max_k, std::uint64_t cap)
    : max_n_(max_n), max_k_(max_k), cap_(cap), c_(std::size_t(max_n + 1) * (max_k + 1), 0) {
    for (int n = 0; n <= max_n; ++n) {
        c_[std::size_t(n) * (max_k_ + 1)] = 1;
        for (int k = 1; k <= max_k && k <= n; ++k) {
            // entries outside the triangle stay 0, so the recurrence is uniform
            std::uint64_t a = c_[std::size_t(n - 1) * (max_k_ + 1) + k];
            std::uint64_t b = c_[std::size_t(n - 1) * (max_k_ + 1) + (k - 1)];
            c_[std::size_t(n) * (max_k_ + 1) + k] = saturating_add(a, b, cap_);
        }
    }
}

std::uint64_t BinomialTable::at(int n, int k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > max_n_ || k > max_k_) throw RangeError("binomial table lookup out of range");
    return c_[std::size_t(n) * (max_k_ + 1) + k];
}

}  // namespace runlab
