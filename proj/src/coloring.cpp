#include "runlab/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "runlab/errors.hpp"
#include "runlab/rng.hpp"

namespace runlab {

void require_matching(const DeBruijnGraph& g, const VertexColoring& vc) {
    if (vc.k != g.k() || vc.m != g.m())
        throw InvalidInputError("coloring is for D(" + std::to_string(vc.k) + "," +
                                std::to_string(vc.m) + "), not this graph");
    if (vc.assign.size() != g.vertex_count())
        throw InvalidInputError("coloring has " + std::to_string(vc.assign.size()) +
                                " entries, graph has " + std::to_string(g.vertex_count()) +
                                " vertices");
    if (vc.colors < 1) throw InvalidInputError("coloring needs at least one color");
    for (int c : vc.assign)
        if (c < 0 || c >= vc.colors) throw InvalidInputError("color index out of range");
}

void require_matching(const DeBruijnGraph& g, const EdgeColoring& ec) {
    if (ec.k != g.k() || ec.m != g.m())
        throw InvalidInputError("edge coloring is for D(" + std::to_string(ec.k) + "," +
                                std::to_string(ec.m) + "), not this graph");
    if (ec.assign.size() != g.edge_count())
        throw InvalidInputError("edge coloring has " + std::to_string(ec.assign.size()) +
                                " entries, graph has " + std::to_string(g.edge_count()) + " edges");
    if (ec.colors < 1) throw InvalidInputError("coloring needs at least one color");
    for (int c : ec.assign)
        if (c < 0 || c >= ec.colors) throw InvalidInputError("color index out of range");
}

VertexColoring as_vertex_coloring(const EdgeColoring& ec) {
    return VertexColoring{ec.k + 1, ec.m, ec.colors, ec.assign};
}

EdgeColoring as_edge_coloring(const VertexColoring& vc) {
    if (vc.k < 2) throw InvalidDimensionError("vertex colorings of D(1,m) color no line graph");
    return EdgeColoring{vc.k - 1, vc.m, vc.colors, vc.assign};
}

namespace {

using Adj = std::vector<std::vector<std::uint32_t>>;

Adj undirected_adjacency(const DeBruijnGraph& g) {
    Adj adj(g.vertex_count());
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        for (std::uint64_t s : g.successor_ranks(v)) {
            adj[v].push_back(std::uint32_t(s));
            adj[s].push_back(std::uint32_t(v));
        }
    return adj;
}

int greedy_clique(const Adj& adj) {
    const int n = int(adj.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });
    std::vector<char> in_clique(n, 0);
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (std::find(adj[v].begin(), adj[v].end(), std::uint32_t(u)) == adj[v].end()) {
                ok = false;
                break;
            }
        if (ok) {
            clique.push_back(v);
            in_clique[v] = 1;
        }
    }
    return int(clique.size());
}

// Next vertex by DSATUR: max distinct neighbor colors, ties by degree then rank.
int select_dsatur(const Adj& adj, const std::vector<int>& col,
                  std::vector<long long>& mark, long long stamp) {
    int best = -1, best_sat = -1;
    std::size_t best_deg = 0;
    for (int v = 0; v < int(adj.size()); ++v) {
        if (col[v] >= 0) continue;
        ++stamp;
        int sat = 0;
        for (std::uint32_t u : adj[v])
            if (col[u] >= 0 && mark[col[u]] != stamp) {
                mark[col[u]] = stamp;
                ++sat;
            }
        if (sat > best_sat || (sat == best_sat && adj[v].size() > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = adj[v].size();
        }
    }
    return best;
}

int greedy_color_count(const Adj& adj) {
    const int n = int(adj.size());
    std::vector<int> col(n, -1);
    std::vector<long long> mark(n + 1, -1);
    long long stamp = 0;
    for (int step = 0; step < n; ++step) {
        int v = select_dsatur(adj, col, mark, stamp);
        stamp += n;
        std::vector<char> banned(n + 1, 0);
        for (std::uint32_t u : adj[v])
            if (col[u] >= 0) banned[col[u]] = 1;
        int c = 0;
        while (banned[c]) ++c;
        col[v] = c;
    }
    return *std::max_element(col.begin(), col.end()) + 1;
}

bool colorable_backtrack(const Adj& adj, int r, std::vector<int>& col, int colored, int max_used,
                         std::vector<long long>& mark, long long& stamp) {
    const int n = int(adj.size());
    if (colored == n) return true;
    int v = select_dsatur(adj, col, mark, stamp);
    stamp += n;
    std::vector<char> banned(r, 0);
    for (std::uint32_t u : adj[v])
        if (col[u] >= 0) banned[col[u]] = 1;
    // trying at most one unused color keeps the search complete
    int cap = std::min(r - 1, max_used + 1);
    for (int c = 0; c <= cap; ++c) {
        if (banned[c]) continue;
        col[v] = c;
        if (colorable_backtrack(adj, r, col, colored + 1, std::max(max_used, c), mark, stamp))
            return true;
        col[v] = -1;
    }
    return false;
}

}  // namespace

int chromatic_number(const DeBruijnGraph& g, std::uint64_t vertex_budget) {
    if (g.vertex_count() > vertex_budget) {
        int lower = g.edge_count() > 0 ? 2 : 1;
        throw ResourceError("chromatic number: " + std::to_string(g.vertex_count()) +
                                " vertices exceed the budget " + std::to_string(vertex_budget),
                            lower, int(std::min<std::uint64_t>(g.vertex_count(), INT32_MAX)));
    }
    Adj adj = undirected_adjacency(g);
    const int n = int(adj.size());
    if (n == 0) return 0;
    int lower = greedy_clique(adj);
    int upper = greedy_color_count(adj);
    for (int r = lower; r < upper; ++r) {
        std::vector<int> col(n, -1);
        std::vector<long long> mark(n + 1, -1);
        long long stamp = 0;
        if (colorable_backtrack(adj, r, col, 0, -1, mark, stamp)) return r;
    }
    return upper;
}

VertexColoring lift_edge_coloring(const DeBruijnGraph& g, const EdgeColoring& ec) {
    require_matching(g, ec);
    if (ec.colors > 30)
        throw RangeError("lift supports at most 30 edge colors (subset index must fit an int)");

    // the precondition is properness of ec as a vertex coloring of D(k+1,m);
    // with no edges there is nothing to check (and no line graph to build)
    if (g.edge_count() > 0) {
        DeBruijnGraph line =
            build_graph(g.k() + 1, g.m(), std::max(kDefaultVertexBudget, g.edge_count()));
        if (auto p = find_mono_path(line, as_vertex_coloring(ec), 2)) {
            Word w0 = line.unrank(p->vertices[0]);
            Word w1 = line.unrank(p->vertices[1]);
            Word u(w0.begin(), w0.end() - 1);
            Word v(w0.begin() + 1, w0.end());
            Word w(w1.begin() + 1, w1.end());
            throw InvalidInputError("edge coloring has a monochromatic 2-edge path " +
                                    word_to_string(u) + " -> " + word_to_string(v) + " -> " +
                                    word_to_string(w));
        }
    }

    VertexColoring out{g.k(), g.m(), 1 << ec.colors, std::vector<int>(g.vertex_count(), 0)};
    Word word(g.k() + 1);
    for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
        Word base = g.unrank(u);
        std::copy(base.begin(), base.end(), word.begin());
        int mask = 0;
        for (int b = base.back() + 1; b <= g.m(); ++b) {
            word.back() = b;
            mask |= 1 << ec.assign[g.edge_rank(word)];
        }
        out.assign[u] = mask;
    }

    // Theorem A guarantees properness; check it anyway
    for (std::uint64_t u = 0; u < g.vertex_count(); ++u)
        for (std::uint64_t v : g.successor_ranks(u))
            if (out.assign[u] == out.assign[v])
                throw IdentityViolationError("lifted coloring is not proper on edge " +
                                             word_to_string(g.unrank(u)) + " -> " +
                                             word_to_string(g.unrank(v)));
    return out;
}

std::optional<DirectedPath> find_mono_path(const DeBruijnGraph& g, const VertexColoring& vc,
                                           int l_vertices) {
    require_matching(g, vc);
    if (l_vertices < 1) throw RangeError("a path needs at least one vertex");
    const std::uint64_t n = g.vertex_count();
    if (l_vertices == 1) {
        if (n == 0) return std::nullopt;
        return DirectedPath{{0}};
    }
    std::vector<int> dp(n, 0);
    std::vector<std::int64_t> parent(n, -1);
    for (std::uint64_t v = 0; v < n; ++v) {
        dp[v] = 1;
        for (std::uint64_t u : g.predecessor_ranks(v)) {
            if (vc.assign[u] == vc.assign[v] && dp[u] + 1 > dp[v]) {
                dp[v] = dp[u] + 1;
                parent[v] = std::int64_t(u);
            }
        }
        if (dp[v] >= l_vertices) {
            DirectedPath path;
            std::int64_t cur = std::int64_t(v);
            for (int i = 0; i < l_vertices; ++i) {
                path.vertices.push_back(std::uint64_t(cur));
                cur = parent[cur];
            }
            std::reverse(path.vertices.begin(), path.vertices.end());
            return path;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::vector<std::uint32_t>> predecessor_lists(const DeBruijnGraph& g) {
    std::vector<std::vector<std::uint32_t>> preds(g.vertex_count());
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        for (std::uint64_t s : g.successor_ranks(v)) preds[s].push_back(std::uint32_t(v));
    return preds;
}

// longest monochromatic path, in vertices
bool has_mono_path(const std::vector<std::vector<std::uint32_t>>& preds,
                   const std::vector<int>& colors, int l_vertices, std::vector<int>& dp) {
    const std::size_t n = preds.size();
    if (l_vertices <= 1) return n > 0;
    for (std::size_t v = 0; v < n; ++v) {
        int best = 1;
        for (std::uint32_t u : preds[v])
            if (colors[u] == colors[v] && dp[u] + 1 > best) best = dp[u] + 1;
        dp[v] = best;
        if (best >= l_vertices) return true;
    }
    return false;
}

}  // namespace

ChvatalReport check_chvatal(const DeBruijnGraph& g, int r, int l_edges,
                            const ChvatalOptions& opts) {
    if (r < 1) throw RangeError("need at least one color");
    if (l_edges < 1) throw RangeError("need a positive path length");

    ChvatalReport rep;
    rep.k = g.k();
    rep.m = g.m();
    rep.r = r;
    rep.l_edges = l_edges;
    rep.seed = opts.seed;
    rep.chi = chromatic_number(g);
    rep.threshold = big_pow(BigInt(l_edges), std::uint64_t(r));
    rep.hypothesis_met = BigInt(rep.chi) > rep.threshold;
    if (!rep.hypothesis_met) return rep;  // nothing to check

    const std::uint64_t ecount = g.edge_count();
    BigInt space = big_pow(BigInt(r), ecount);
    bool exhaustive = opts.mode == CheckMode::exhaustive;
    if (exhaustive && space > BigInt(opts.max_exhaustive))
        throw ResourceError("exhaustive Chvatal check needs " + space.str() +
                            " colorings, budget is " + std::to_string(opts.max_exhaustive));

    DeBruijnGraph line = build_graph(g.k() + 1, g.m(), std::max(kDefaultVertexBudget, ecount));
    auto preds = predecessor_lists(line);

    const std::uint64_t total =
        exhaustive ? std::uint64_t(space) : opts.samples;

    struct ChunkOut {
        std::uint64_t with_path = 0;
        std::optional<std::pair<std::uint64_t, std::vector<int>>> counterexample;
    };
    const std::uint64_t chunk_size = 1 << 14;
    const std::uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;
    std::vector<ChunkOut> outs(num_chunks);

    auto run_chunk = [&](std::uint64_t ci) {
        std::uint64_t begin = ci * chunk_size;
        std::uint64_t end = std::min(total, begin + chunk_size);
        std::vector<int> assign(ecount, 0);
        std::vector<int> dp(line.vertex_count(), 0);
        Xoshiro256pp rng = Xoshiro256pp::stream(opts.seed, ci);
        if (exhaustive) {
            // decode the base-r odometer at the chunk start, then increment
            std::uint64_t idx = begin;
            for (std::uint64_t e = 0; e < ecount && idx > 0; ++e) {
                assign[e] = int(idx % r);
                idx /= r;
            }
        }
        for (std::uint64_t i = begin; i < end; ++i) {
            if (!exhaustive)
                for (std::uint64_t e = 0; e < ecount; ++e)
                    assign[e] = int(rng.bounded(std::uint32_t(r)));
            if (has_mono_path(preds, assign, l_edges, dp)) {
                ++outs[ci].with_path;
            } else if (!outs[ci].counterexample) {
                outs[ci].counterexample = {i, assign};
            }
            if (exhaustive && i + 1 < end) {
                for (std::uint64_t e = 0; e < ecount; ++e) {
                    if (++assign[e] < r) break;
                    assign[e] = 0;
                }
            }
        }
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1 || num_chunks <= 1) {
        for (std::uint64_t ci = 0; ci < num_chunks; ++ci) run_chunk(ci);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t ci; (ci = next.fetch_add(1)) < num_chunks;) run_chunk(ci);
            });
        for (auto& th : pool) th.join();
    }

    rep.checked = true;
    rep.exhaustive = exhaustive;
    rep.colorings_checked = total;
    for (const auto& o : outs) rep.colorings_with_mono_path += o.with_path;
    for (const auto& o : outs)
        if (o.counterexample) {  // lowest index wins: chunks are ordered
            rep.counterexample = EdgeColoring{g.k(), g.m(), r, o.counterexample->second};
            break;
        }
    return rep;
}

namespace {

struct PathDpScratch {
    std::vector<int> dp;
    std::vector<std::int64_t> parent;
};

// returns a witness path of exactly l vertices, or empty
std::vector<std::uint32_t> mono_path_witness(const std::vector<std::vector<std::uint32_t>>& preds,
                                             const std::vector<int>& col, int l,
                                             PathDpScratch& s) {
    const std::size_t n = preds.size();
    s.dp.assign(n, 0);
    s.parent.assign(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        s.dp[v] = 1;
        for (std::uint32_t u : preds[v])
            if (col[u] == col[v] && s.dp[u] + 1 > s.dp[v]) {
                s.dp[v] = s.dp[u] + 1;
                s.parent[v] = u;
            }
        if (s.dp[v] >= l) {
            std::vector<std::uint32_t> path;
            std::int64_t cur = std::int64_t(v);
            for (int i = 0; i < l; ++i) {
                path.push_back(std::uint32_t(cur));
                cur = s.parent[cur];
            }
            return path;
        }
    }
    return {};
}

}  // namespace

SearchResult search_coloring(int k, int m, int r, int l_vertices,
                             std::chrono::milliseconds time_budget,
                             std::uint64_t vertex_budget) {
    if (r < 1) throw RangeError("need at least one color");
    if (l_vertices < 1) throw RangeError("need a positive path length");
    DeBruijnGraph g = build_graph(k, m, vertex_budget);
    const std::size_t n = g.vertex_count();
    auto preds = predecessor_lists(g);

    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + time_budget;
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    SearchResult res;
    auto finish_found = [&](std::vector<int> col) {
        VertexColoring vc{k, m, r, std::move(col)};
        if (find_mono_path(g, vc, l_vertices))
            throw IdentityViolationError("search produced a coloring with a monochromatic path");
        res.status = SearchStatus::found;
        res.coloring = std::move(vc);
        res.seconds = elapsed();
        return res;
    };

    // Warm phase: repair random violating paths.  Finds plentiful solutions
    // fast; proves nothing when it fails.
    if (r >= 2 && l_vertices >= 2) {
        Xoshiro256pp rng(1);
        std::vector<int> col(n);
        for (auto& c : col) c = int(rng.bounded(std::uint32_t(r)));
        PathDpScratch scratch;
        const std::uint64_t cap = 50'000 + 100 * std::uint64_t(n);
        for (std::uint64_t it = 0; it < cap; ++it) {
            if ((it & 255) == 0 && std::chrono::steady_clock::now() >= deadline) break;
            auto witness = mono_path_witness(preds, col, l_vertices, scratch);
            if (witness.empty()) return finish_found(std::move(col));
            std::uint32_t v = witness[rng.bounded(std::uint32_t(witness.size()))];
            col[v] = (col[v] + 1 + int(rng.bounded(std::uint32_t(r - 1)))) % r;
            ++res.repairs;
        }
    }

    // Complete phase: backtracking in topological (rank) order, pruned by the
    // longest monochromatic path ending at each assigned vertex.
    std::vector<int> col(n, -1), dp(n, 0), tried(n, -1), max_used(n + 1, -1);
    std::int64_t depth = 0;
    bool timed_out = false;
    while (depth >= 0) {
        if (std::size_t(depth) == n) return finish_found(std::move(col));
        if ((res.nodes++ & 4095) == 0 && std::chrono::steady_clock::now() >= deadline) {
            timed_out = true;
            break;
        }
        int cap = std::min(r - 1, max_used[depth] + 1);  // color symmetry
        int c = tried[depth] + 1;
        bool advanced = false;
        for (; c <= cap; ++c) {
            int best = 0;
            for (std::uint32_t u : preds[depth])
                if (col[u] == c && dp[u] > best) best = dp[u];
            if (best + 1 >= l_vertices) continue;  // would close a forbidden path
            tried[depth] = c;
            col[depth] = c;
            dp[depth] = best + 1;
            max_used[depth + 1] = std::max(max_used[depth], c);
            ++depth;
            if (std::size_t(depth) < n) tried[depth] = -1;
            advanced = true;
            break;
        }
        if (!advanced) {
            tried[depth] = -1;
            col[depth] = -1;
            --depth;
        }
    }

    res.status = timed_out ? SearchStatus::timeout : SearchStatus::exhausted;
    res.seconds = elapsed();
    return res;
}

}  // namespace runlab
