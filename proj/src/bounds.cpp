#include "runlab/bounds.hpp"

#include <cmath>

#include "runlab/errors.hpp"

namespace runlab {

namespace {

// largest exponent we let the 128-bit-mantissa reals reach; past this the
// tower goes symbolic
const double kMaxReal2Exp = 1e8;

Real exp2_real(const Real& x) { return pow(Real(2), x); }

std::vector<double> double_chain(int level, double base) {
    // d[i] = t_{i+1}(base) as double, +inf once it overflows
    std::vector<double> t(level);
    double v = base;
    for (int i = 0; i < level; ++i) {
        t[i] = v;
        v = std::exp2(v);  //(+inf propagates)
    }
    // log_chain[j] = log2^{(j)}(t_level) = t_{level-j}
    std::vector<double> chain(level);
    for (int j = 0; j < level; ++j) chain[j] = t[level - 1 - j];
    return chain;
}

}  // namespace

bool TowerValue::is_integer() const {
    return kind == TowerKind::exact && denominator(exact_value) == 1;
}

BigInt TowerValue::integer_value() const {
    if (!is_integer()) throw InvalidInputError("tower value is not an exact integer");
    return numerator(exact_value);
}

TowerValue tower(int level, const Rat& x, std::uint64_t bit_budget) {
    if (level < 1) throw RangeError("tower level must be at least 1");
    TowerValue t;
    t.level = level;
    t.base_rational = x;
    t.base_real = Real(x);
    t.log_chain = double_chain(level, double(t.base_real));

    Rat cur = x;
    bool exact = true;
    Real real_cur = 0;
    int i = 2;
    for (; i <= level && exact; ++i) {
        if (denominator(cur) == 1) {
            BigInt e = numerator(cur);
            if (e >= 0 && e <= BigInt(bit_budget)) {
                cur = Rat(BigInt(1) << std::size_t(e));
                continue;
            }
            if (e < 0 && -e <= BigInt(bit_budget)) {
                cur = Rat(BigInt(1), BigInt(1) << std::size_t(-e));
                continue;
            }
        }
        // exact evaluation ends here; continue over the reals
        exact = false;
        real_cur = Real(cur);
        break;
    }
    if (exact) {
        t.kind = TowerKind::exact;
        t.exact_value = cur;
        return t;
    }
    for (; i <= level; ++i) {
        if (real_cur > kMaxReal2Exp) {
            t.kind = TowerKind::symbolic;
            return t;
        }
        real_cur = exp2_real(real_cur);
    }
    t.kind = TowerKind::real;
    t.real_value = real_cur;
    return t;
}

TowerValue tower(int level, const Real& x, std::uint64_t bit_budget) {
    (void)bit_budget;
    if (level < 1) throw RangeError("tower level must be at least 1");
    TowerValue t;
    t.level = level;
    t.base_real = x;
    t.log_chain = double_chain(level, double(x));
    Real cur = x;
    for (int i = 2; i <= level; ++i) {
        if (cur > kMaxReal2Exp) {
            t.kind = TowerKind::symbolic;
            return t;
        }
        cur = exp2_real(cur);
    }
    t.kind = TowerKind::real;
    t.real_value = cur;
    return t;
}

TowerValue M_for(int k, int l, int r) {
    if (k < 2) throw InvalidDimensionError("M_for is defined for k >= 2");
    if (l < 1 || r < 1) throw RangeError("M_for needs l >= 1 and r >= 1");
    BigInt lr = big_pow(BigInt(l), std::uint64_t(r));
    return tower(k - 1, Rat(lr));
}

BoundReport p_lower(int k, int l, int r) {
    BoundReport rep;
    rep.k = k;
    rep.l = l;
    rep.r = r;
    TowerValue M = M_for(k, l, r);
    rep.M = M;

    const std::uint64_t e = std::uint64_t(k) + std::uint64_t(l) - 1;
    if (M.is_integer()) {
        BigInt Mi = M.integer_value();
        std::uint64_t bits = Mi == 0 ? 1 : boost::multiprecision::msb(Mi) + 1;
        if (bits * e <= kTowerBitBudget) rep.p_lower = Rat(BigInt(1), big_pow(Mi, e));
    }
    // log2 rendering, finite whenever one log application tames the value
    double log2M;
    if (std::isfinite(M.log_chain[0]))
        log2M = std::log2(M.log_chain[0]);
    else if (M.level >= 2 && std::isfinite(M.log_chain[1]))
        log2M = M.log_chain[1];
    else
        log2M = std::numeric_limits<double>::infinity();
    if (std::isfinite(log2M)) rep.p_lower_log2 = -double(e) * log2M;
    return rep;
}

BoundReport theorem3_constants(int k) {
    if (k < 3) throw InvalidDimensionError("Theorem 3 constants are defined for k >= 3");
    BoundReport rep;
    rep.k = k;
    Real base = Real(k) / sqrt(Real(8));
    TowerValue M = tower(k - 2, base);
    rep.theorem3_M = M;
    if (M.kind == TowerKind::real) {
        Real bound = Real(9 * k * k) / M.real_value;
        rep.theorem3_bound = bound;
        rep.theorem3_vacuous = bound >= 1;
    } else {
        // M is beyond floating range, so 9k^2/M is far below one
        rep.theorem3_vacuous = false;
    }
    return rep;
}

}  // namespace runlab
