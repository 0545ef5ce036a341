#pragma once

// Brute-force oracles, independent of the library's algorithmic paths.  Each
// one enumerates directly from definitions; keep them dumb.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "runlab/grid_function.hpp"
#include "runlab/numeric.hpp"

namespace oracles {

using runlab::BigInt;
using runlab::GridFunction;
using runlab::Rat;
using Word = std::vector<int>;

// every strictly increasing k-word over {1..m}, by direct recursion
inline std::vector<Word> all_increasing_words(int k, int m) {
    std::vector<Word> out;
    Word cur;
    std::function<void(int)> rec = [&](int lo) {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= m; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// the overlap rule applied to one ordered pair of words
inline bool overlap_edge(const Word& u, const Word& v) {
    int k = int(u.size());
    if (k == 1) return u[0] < v[0];
    for (int i = 0; i + 1 < k; ++i)
        if (v[i] != u[i + 1]) return false;
    return true;
}

// all edges of D(k,m) found by testing every ordered pair of words
inline std::vector<std::pair<int, int>> brute_edges(const std::vector<Word>& words) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < int(words.size()); ++i)
        for (int j = 0; j < int(words.size()); ++j)
            if (i != j && overlap_edge(words[i], words[j])) es.emplace_back(i, j);
    return es;
}

// all directed paths of exactly l vertices, by depth-first walk over edges
inline std::vector<std::vector<int>> brute_paths(const std::vector<std::pair<int, int>>& edges,
                                                 int n, int l) {
    std::vector<std::vector<int>> succ(n);
    for (auto [u, v] : edges) succ[u].push_back(v);
    std::vector<std::vector<int>> paths;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int v) {
        cur.push_back(v);
        if (int(cur.size()) == l)
            paths.push_back(cur);
        else
            for (int s : succ[v]) rec(s);
        cur.pop_back();
    };
    for (int v = 0; v < n; ++v) rec(v);
    return paths;
}

inline std::vector<std::vector<int>> brute_mono_paths(
    const std::vector<std::pair<int, int>>& edges, const std::vector<int>& colors, int n, int l) {
    std::vector<std::vector<int>> out;
    for (const auto& p : brute_paths(edges, n, l)) {
        bool mono = true;
        for (int v : p)
            if (colors[v] != colors[p[0]]) mono = false;
        if (mono) out.push_back(p);
    }
    return out;
}

// minimal r such that some assignment of {0..r-1} makes every undirected edge
// bichromatic, by enumerating all r^n assignments
inline int brute_chromatic(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n == 0) return 0;
    for (int r = 1;; ++r) {
        std::vector<int> col(n, 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : edges)
                if (col[u] == col[v]) proper = false;
            if (proper) return r;
            int i = 0;
            while (i < n && ++col[i] == r) col[i++] = 0;
            if (i == n) break;
        }
    }
}

// run probability by full enumeration of all M^(l+k-1) tuples
inline std::pair<BigInt, BigInt> naive_run_count(const GridFunction& f,
                                                 const std::string& event, int l) {
    const int k = f.k();
    const int M = f.M();
    const int L = l + k - 1;
    BigInt favorable = 0, total = 0;
    std::vector<int> z(L, 1);
    while (true) {
        total += 1;
        std::vector<Rat> w(l);
        for (int i = 0; i < l; ++i) w[i] = f.value(std::span<const int>(z).subspan(i, k));
        bool ok = true;
        for (int i = 0; i + 1 < l && ok; ++i) {
            if (event == "constant") ok = w[i] == w[i + 1];
            if (event == "increasing") ok = w[i] < w[i + 1];
            if (event == "decreasing") ok = w[i] > w[i + 1];
        }
        if (ok) favorable += 1;
        int i = 0;
        while (i < L && ++z[i] > M) z[i++] = 1;
        if (i == L) break;
    }
    return {favorable, total};
}

}  // namespace oracles
