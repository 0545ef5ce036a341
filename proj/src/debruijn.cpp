#include "runlab/debruijn.hpp"

#include <algorithm>
#include <sstream>

#include "runlab/errors.hpp"

namespace runlab {

bool is_increasing_word(std::span<const int> w, int k, int m) {
    if (std::ssize(w) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (w[i] < 1 || w[i] > m) return false;
        if (i > 0 && w[i] <= w[i - 1]) return false;
    }
    return true;
}

std::string word_to_string(std::span<const int> word) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ',';
        os << word[i];
    }
    os << ')';
    return os.str();
}

namespace {

void require_word(std::span<const int> w, int k, int m) {
    if (!is_increasing_word(w, k, m))
        throw RangeError("not a strictly increasing " + std::to_string(k) + "-word over {1.." +
                         std::to_string(m) + "}: " + word_to_string(w));
}

std::uint64_t rank_with(const BinomialTable& binom, std::span<const int> w) {
    // colex rank of a subset: sum of C(w_i - 1, i), i 1-based
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < w.size(); ++i) r += binom.at(w[i] - 1, int(i) + 1);
    return r;
}

Word unrank_with(const BinomialTable& binom, std::uint64_t index, int k, int m) {
    Word w(k);
    std::uint64_t rem = index;
    int hi = m - 1;
    for (int i = k; i >= 1; --i) {
        int x = hi;
        while (x >= i && binom.at(x, i) > rem) --x;
        if (x < i - 1 || binom.at(x, i) > rem)
            throw RangeError("unrank index out of range");
        rem -= binom.at(x, i);
        w[i - 1] = x + 1;
        hi = x - 1;
    }
    if (rem != 0) throw RangeError("unrank index out of range");
    return w;
}

}  // namespace

DeBruijnGraph build_graph(int k, int m, std::uint64_t vertex_budget) {
    if (k < 1 || k > m)
        throw InvalidDimensionError("D(k,m) requires 1 <= k <= m, got k=" + std::to_string(k) +
                                    " m=" + std::to_string(m));
    auto vc = binomial_u64(m, k);
    if (!vc || *vc > vertex_budget)
        throw ResourceError("vertex count C(" + std::to_string(m) + "," + std::to_string(k) +
                            ") exceeds the vertex budget " + std::to_string(vertex_budget));
    auto ec = binomial_u64(m, k + 1);
    if (!ec)
        throw ResourceError("edge count C(m,k+1) overflows 64 bits");

    DeBruijnGraph g;
    g.k_ = k;
    g.m_ = m;
    g.vertex_count_ = *vc;
    g.edge_count_ = *ec;
    g.binom_ = BinomialTable(m, k + 1, *vc + *ec + 1);
    return g;
}

std::uint64_t DeBruijnGraph::rank(std::span<const int> word) const {
    require_word(word, k_, m_);
    return rank_with(binom_, word);
}

Word DeBruijnGraph::unrank(std::uint64_t index) const {
    if (index >= vertex_count_) throw RangeError("vertex rank out of range");
    return unrank_with(binom_, index, k_, m_);
}

std::uint64_t DeBruijnGraph::edge_rank(std::span<const int> word) const {
    require_word(word, k_ + 1, m_);
    return rank_with(binom_, word);
}

Word DeBruijnGraph::edge_unrank(std::uint64_t index) const {
    if (index >= edge_count_) throw RangeError("edge rank out of range");
    return unrank_with(binom_, index, k_ + 1, m_);
}

std::vector<Word> DeBruijnGraph::successors(std::span<const int> word) const {
    require_word(word, k_, m_);
    std::vector<Word> out;
    Word next;
    if (k_ > 1) next.assign(word.begin() + 1, word.end());
    next.push_back(0);
    for (int b = word.back() + 1; b <= m_; ++b) {
        next.back() = b;
        out.push_back(next);
    }
    return out;
}

std::vector<std::uint64_t> DeBruijnGraph::successor_ranks(std::uint64_t v) const {
    Word w = unrank(v);
    std::vector<std::uint64_t> out;
    for (const Word& s : successors(w)) out.push_back(rank_with(binom_, s));
    return out;
}

std::vector<std::uint64_t> DeBruijnGraph::predecessor_ranks(std::uint64_t v) const {
    Word w = unrank(v);
    // predecessors are (a, w_1, ..., w_{k-1}) for a < w_1 (all a < w for k=1)
    Word pred(k_);
    if (k_ > 1) std::copy(w.begin(), w.end() - 1, pred.begin() + 1);
    std::vector<std::uint64_t> out;
    for (int a = 1; a < w.front(); ++a) {
        pred.front() = a;
        out.push_back(rank_with(binom_, pred));
    }
    return out;
}

bool DeBruijnGraph::has_edge(std::span<const int> u, std::span<const int> v) const {
    require_word(u, k_, m_);
    require_word(v, k_, m_);
    if (k_ == 1) return u[0] < v[0];
    return std::equal(u.begin() + 1, u.end(), v.begin());
}

Word DeBruijnGraph::edge_to_word(std::span<const int> u, std::span<const int> v) const {
    if (!has_edge(u, v))
        throw InvalidEdgeError("not an edge of D(" + std::to_string(k_) + "," + std::to_string(m_) +
                               "): " + word_to_string(u) + " -> " + word_to_string(v));
    Word w(u.begin(), u.end());
    w.push_back(v.back());
    return w;
}

std::pair<Word, Word> DeBruijnGraph::word_to_edge(std::span<const int> word) const {
    require_word(word, k_ + 1, m_);
    Word u(word.begin(), word.end() - 1);
    Word v(word.begin() + 1, word.end());
    return {std::move(u), std::move(v)};
}

std::vector<std::vector<std::uint64_t>> DeBruijnGraph::adjacency_lists() const {
    std::vector<std::vector<std::uint64_t>> adj(vertex_count_);
    for (std::uint64_t v = 0; v < vertex_count_; ++v) adj[v] = successor_ranks(v);
    return adj;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> DeBruijnGraph::edges() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> es;
    es.reserve(edge_count_);
    for (std::uint64_t v = 0; v < vertex_count_; ++v)
        for (std::uint64_t s : successor_ranks(v)) es.emplace_back(v, s);
    return es;
}

std::uint64_t rank_word(std::span<const int> word, int m) {
    int k = int(word.size());
    require_word(word, k, m);
    BinomialTable t(m, k, UINT64_MAX / 4);
    return rank_with(t, word);
}

Word unrank_word(std::uint64_t index, int k, int m) {
    if (k < 1 || k > m) throw InvalidDimensionError("unrank_word requires 1 <= k <= m");
    auto vc = binomial_u64(m, k);
    if (!vc || index >= *vc) throw RangeError("unrank index out of range");
    BinomialTable t(m, k, UINT64_MAX / 4);
    return unrank_with(t, index, k, m);
}

}  // namespace runlab
