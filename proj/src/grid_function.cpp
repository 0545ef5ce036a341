#include "runlab/grid_function.hpp"

#include <string>

#include "runlab/errors.hpp"

namespace runlab {

namespace {

std::uint64_t checked_table_size(int k, int M) {
    if (k < 1) throw InvalidDimensionError("grid functions need window length k >= 1");
    if (M < 1) throw InvalidDimensionError("grid functions need grid size M >= 1");
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) {
        if (size > UINT64_MAX / std::uint64_t(M)) throw ResourceError("M^k overflows 64 bits");
        size *= std::uint64_t(M);
    }
    return size;
}

void check_point(std::span<const int> z, int k, int M) {
    if (std::ssize(z) != k) throw RangeError("grid point has wrong arity");
    for (int x : z)
        if (x < 1 || x > M) throw RangeError("grid coordinate out of {1..M}");
}

}  // namespace

GridFunction GridFunction::discrete_table(int k, int M, int r, std::vector<int> table) {
    std::uint64_t size = checked_table_size(k, M);
    if (r < 1) throw RangeError("discrete range needs r >= 1");
    if (table.size() != size)
        throw InvalidInputError("table has " + std::to_string(table.size()) + " entries, expected " +
                                std::to_string(size));
    for (int v : table)
        if (v < 0 || v >= r) throw RangeError("table value outside {0..r-1}");
    GridFunction f;
    f.k_ = k;
    f.M_ = M;
    f.r_ = r;
    f.kind_ = RangeKind::discrete;
    f.tabular_ = true;
    f.itab_ = std::move(table);
    return f;
}

GridFunction GridFunction::rational_table(int k, int M, std::vector<Rat> table) {
    std::uint64_t size = checked_table_size(k, M);
    if (table.size() != size)
        throw InvalidInputError("table has " + std::to_string(table.size()) + " entries, expected " +
                                std::to_string(size));
    GridFunction f;
    f.k_ = k;
    f.M_ = M;
    f.kind_ = RangeKind::rational;
    f.tabular_ = true;
    f.rtab_ = std::move(table);
    return f;
}

GridFunction GridFunction::discrete_rule(int k, int M, int r,
                                         std::function<int(std::span<const int>)> rule) {
    checked_table_size(k, M);
    if (r < 1) throw RangeError("discrete range needs r >= 1");
    GridFunction f;
    f.k_ = k;
    f.M_ = M;
    f.r_ = r;
    f.kind_ = RangeKind::discrete;
    f.irule_ = std::move(rule);
    return f;
}

GridFunction GridFunction::rational_rule(int k, int M,
                                         std::function<Rat(std::span<const int>)> rule) {
    checked_table_size(k, M);
    GridFunction f;
    f.k_ = k;
    f.M_ = M;
    f.kind_ = RangeKind::rational;
    f.rrule_ = std::move(rule);
    return f;
}

int GridFunction::colors() const {
    if (kind_ != RangeKind::discrete)
        throw InvalidInputError("rational-valued grid function has no color count");
    return r_;
}

std::uint64_t GridFunction::table_size() const { return checked_table_size(k_, M_); }

std::uint64_t GridFunction::point_index(std::span<const int> z, int M) {
    std::uint64_t idx = 0;
    for (std::size_t i = z.size(); i-- > 0;) idx = idx * std::uint64_t(M) + std::uint64_t(z[i] - 1);
    return idx;
}

void GridFunction::point_at(std::uint64_t index, int M, std::span<int> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = int(index % std::uint64_t(M)) + 1;
        index /= std::uint64_t(M);
    }
}

Rat GridFunction::value(std::span<const int> z) const {
    check_point(z, k_, M_);
    if (kind_ == RangeKind::discrete) return Rat(discrete_value(z));
    if (tabular_) return rtab_[point_index(z, M_)];
    return rrule_(z);
}

int GridFunction::discrete_value(std::span<const int> z) const {
    check_point(z, k_, M_);
    if (kind_ != RangeKind::discrete)
        throw InvalidInputError("rational-valued grid function has no discrete values");
    int v = tabular_ ? itab_[point_index(z, M_)] : irule_(z);
    return v;
}

GridFunction GridFunction::materialized(std::uint64_t size_budget) const {
    std::uint64_t size = table_size();
    if (size > size_budget)
        throw ResourceError("materializing needs " + std::to_string(size) +
                            " entries, budget is " + std::to_string(size_budget));
    if (tabular_) return *this;
    std::vector<int> point(k_);
    if (kind_ == RangeKind::discrete) {
        std::vector<int> tab(size);
        for (std::uint64_t i = 0; i < size; ++i) {
            point_at(i, M_, point);
            tab[i] = irule_(point);
        }
        return discrete_table(k_, M_, r_, std::move(tab));
    }
    std::vector<Rat> tab(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        point_at(i, M_, point);
        tab[i] = rrule_(point);
    }
    return rational_table(k_, M_, std::move(tab));
}

const std::vector<int>& GridFunction::int_table() const {
    if (!tabular_ || kind_ != RangeKind::discrete)
        throw InvalidInputError("not a tabular discrete grid function");
    return itab_;
}

const std::vector<Rat>& GridFunction::rat_table() const {
    if (!tabular_ || kind_ != RangeKind::rational)
        throw InvalidInputError("not a tabular rational grid function");
    return rtab_;
}

}  // namespace runlab
