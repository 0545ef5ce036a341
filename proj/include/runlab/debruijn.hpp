#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "runlab/numeric.hpp"

namespace runlab {

// A word over {1..m}; vertices of D(k,m) are the strictly increasing ones.
using Word = std::vector<int>;

bool is_increasing_word(std::span<const int> w, int k, int m);

inline constexpr std::uint64_t kDefaultVertexBudget = 1'000'000;

// The increasing k-dimensional de Bruijn graph of m symbols.  Vertices are the
// strictly increasing k-words over {1..m}; there is an edge u -> v iff
// v_i = u_{i+1} for all i < k (for k=1 this is vacuous and the edge rule is
// a -> b iff a < b).  Vertices are ranked colexicographically, which is also a
// topological order: the final symbol strictly increases along every edge.
// Adjacency is implicit; nothing is mutated after construction, so instances
// can be shared freely across threads.
class DeBruijnGraph {
public:
    int k() const { return k_; }
    int m() const { return m_; }
    std::uint64_t vertex_count() const { return vertex_count_; }
    std::uint64_t edge_count() const { return edge_count_; }

    // Colexicographic rank of a k-subset, and its inverse.
    std::uint64_t rank(std::span<const int> word) const;
    Word unrank(std::uint64_t index) const;

    // Rank of a (k+1)-word; keys edges through the line-graph bijection.
    std::uint64_t edge_rank(std::span<const int> word) const;
    Word edge_unrank(std::uint64_t index) const;

    std::vector<Word> successors(std::span<const int> word) const;
    std::vector<std::uint64_t> successor_ranks(std::uint64_t v) const;
    std::vector<std::uint64_t> predecessor_ranks(std::uint64_t v) const;
    bool has_edge(std::span<const int> u, std::span<const int> v) const;

    // phi^{-1}: an edge (u,v) fuses into the (k+1)-word u . v_k.
    Word edge_to_word(std::span<const int> u, std::span<const int> v) const;
    // phi: a (k+1)-word splits into (prefix, suffix).
    std::pair<Word, Word> word_to_edge(std::span<const int> word) const;

    // Materialized out-adjacency, built on demand; callers own the result.
    std::vector<std::vector<std::uint64_t>> adjacency_lists() const;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const;

private:
    friend DeBruijnGraph build_graph(int, int, std::uint64_t);
    int k_ = 0, m_ = 0;
    std::uint64_t vertex_count_ = 0, edge_count_ = 0;
    BinomialTable binom_;
};

DeBruijnGraph build_graph(int k, int m, std::uint64_t vertex_budget = kDefaultVertexBudget);

// Standalone ranking, independent of a built graph.
std::uint64_t rank_word(std::span<const int> word, int m);
Word unrank_word(std::uint64_t index, int k, int m);

std::string word_to_string(std::span<const int> word);

}  // namespace runlab
