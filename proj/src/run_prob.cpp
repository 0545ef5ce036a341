#include "runlab/run_prob.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "runlab/bounds.hpp"
#include "runlab/errors.hpp"
#include "runlab/rng.hpp"

namespace runlab {

GridFunction derived_sign_function(const GridFunction& f, std::uint64_t size_budget) {
    GridFunction base = f.materialized(size_budget);
    const int k = f.k();
    auto rule = [base, k](std::span<const int> z) -> Rat {
        Rat a = base.value(z.first(k));   // f(x_1..x_k)
        Rat b = base.value(z.last(k));    // f(x_2..x_{k+1})
        if (a > b) return Rat(-1);
        if (a < b) return Rat(1);
        return Rat(0);
    };
    return GridFunction::rational_rule(k + 1, f.M(), std::move(rule));
}

namespace {

struct ValueTable {
    std::vector<int> ids;     // one id per window index
    std::vector<Rat> values;  // id -> value, in first-appearance order
};

ValueTable build_value_table(const GridFunction& f, std::uint64_t work_budget) {
    const std::uint64_t size = f.table_size();
    if (size > work_budget)
        throw ResourceError("value table needs " + std::to_string(size) + " evaluations, budget " +
                            std::to_string(work_budget));
    ValueTable t;
    t.ids.resize(size);
    std::map<Rat, int> dict;
    std::vector<int> pt(f.k());
    for (std::uint64_t i = 0; i < size; ++i) {
        GridFunction::point_at(i, f.M(), pt);
        Rat v = f.value(pt);
        auto [it, inserted] = dict.emplace(std::move(v), int(t.values.size()));
        if (inserted) t.values.push_back(it->first);
        t.ids[i] = it->second;
    }
    return t;
}

// Tuples in {1..M}^(windows + w - 1) whose `windows` overlapping w-windows all
// carry one value of f.  State: (suffix of w-1 coordinates, value id).
BigInt count_equal_runs(const GridFunction& f, int windows, std::uint64_t work_budget) {
    const int M = f.M();
    ValueTable vt = build_value_table(f, work_budget);
    const std::uint64_t wsize = vt.ids.size();
    const std::uint64_t ssize = wsize / std::uint64_t(M);
    const std::uint64_t V = vt.values.size();
    if (windows == 1) return BigInt(wsize);
    if (ssize * V > work_budget / std::uint64_t(M))
        throw ResourceError("run DP state space exceeds the work budget");

    std::vector<BigInt> cur(ssize * V);
    for (std::uint64_t widx = 0; widx < wsize; ++widx)
        cur[(widx / M) * V + vt.ids[widx]] += 1;
    for (int step = 1; step < windows; ++step) {
        std::vector<BigInt> nxt(ssize * V);
        for (std::uint64_t s = 0; s < ssize; ++s)
            for (std::uint64_t vid = 0; vid < V; ++vid) {
                const BigInt& c = cur[s * V + vid];
                if (c == 0) continue;
                for (int b = 0; b < M; ++b) {
                    std::uint64_t nw = s + std::uint64_t(b) * ssize;
                    if (vt.ids[nw] != int(vid)) continue;
                    nxt[(nw / M) * V + vid] += c;
                }
            }
        cur = std::move(nxt);
    }
    BigInt favorable = 0;
    for (const BigInt& c : cur) favorable += c;
    return favorable;
}

// Same, but every window must equal a fixed target value.
BigInt count_target_runs_impl(const GridFunction& g, const Rat& target, int windows,
                              std::uint64_t work_budget) {
    const int M = g.M();
    ValueTable vt = build_value_table(g, work_budget);
    const std::uint64_t wsize = vt.ids.size();
    const std::uint64_t ssize = wsize / std::uint64_t(M);
    int tid = -1;
    for (std::size_t i = 0; i < vt.values.size(); ++i)
        if (vt.values[i] == target) tid = int(i);
    if (tid < 0) return 0;  // target value never attained

    std::vector<BigInt> cur(ssize);
    for (std::uint64_t widx = 0; widx < wsize; ++widx)
        if (vt.ids[widx] == tid) cur[widx / M] += 1;
    for (int step = 1; step < windows; ++step) {
        std::vector<BigInt> nxt(ssize);
        for (std::uint64_t s = 0; s < ssize; ++s) {
            const BigInt& c = cur[s];
            if (c == 0) continue;
            for (int b = 0; b < M; ++b) {
                std::uint64_t nw = s + std::uint64_t(b) * ssize;
                if (vt.ids[nw] == tid) nxt[nw / M] += c;
            }
        }
        cur = std::move(nxt);
    }
    BigInt favorable = 0;
    for (const BigInt& c : cur) favorable += c;
    return favorable;
}

}  // namespace

BigInt count_value_runs(const GridFunction& f, const Rat& target, int windows,
                        std::uint64_t work_budget) {
    if (windows < 1) throw RangeError("need at least one window");
    return count_target_runs_impl(f, target, windows, work_budget);
}

RunReport exact_run_probability(const ProcessSpec& spec, RunEvent event, int l,
                                std::uint64_t work_budget) {
    if (l < 1) throw RangeError("run length must be at least 1");
    const GridFunction& f = spec.f;
    RunReport rep;
    rep.event = event;
    rep.l = l;
    rep.k = f.k();
    rep.M = f.M();
    rep.total = big_pow(BigInt(f.M()), std::uint64_t(l + f.k() - 1));
    if (l == 1) {
        rep.favorable = rep.total;  // a single window is a run of every kind
    } else if (event == RunEvent::constant) {
        rep.favorable = count_equal_runs(f, l, work_budget);
    } else {
        GridFunction g = derived_sign_function(f, work_budget);
        Rat target(event == RunEvent::increasing ? 1 : -1);
        rep.favorable = count_target_runs_impl(g, target, l - 1, work_budget);
    }
    rep.probability = Rat(rep.favorable, rep.total);
    return rep;
}

BigInt mono_path_count(const VertexColoring& vc, int l_vertices) {
    if (l_vertices < 1) throw RangeError("a path needs at least one vertex");
    DeBruijnGraph g = build_graph(vc.k, vc.m);
    require_matching(g, vc);
    const std::uint64_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> preds(n);
    for (std::uint64_t v = 0; v < n; ++v)
        for (std::uint64_t s : g.successor_ranks(v)) preds[s].push_back(std::uint32_t(v));

    std::vector<BigInt> dp(n, BigInt(1));
    for (int len = 2; len <= l_vertices; ++len) {
        std::vector<BigInt> nxt(n);
        for (std::uint64_t v = 0; v < n; ++v)
            for (std::uint32_t u : preds[v])
                if (vc.assign[u] == vc.assign[v]) nxt[v] += dp[u];
        dp = std::move(nxt);
    }
    BigInt count = 0;
    for (const BigInt& c : dp) count += c;
    return count;
}

namespace {

// visit strictly increasing n-tuples from {1..M}
template <typename F>
void for_each_increasing_tuple(int M, int n, F&& fn) {
    if (n > M || n < 1) return;
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i + 1;
    while (true) {
        fn(std::span<const int>(t));
        int i = n - 1;
        while (i >= 0 && t[i] == M - (n - 1 - i)) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < n; ++j) t[j] = t[j - 1] + 1;
    }
}

bool mono_path_exists(const std::vector<std::vector<std::uint32_t>>& preds,
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

BridgeReport counting_bridge_check(const GridFunction& f, int l, const BridgeOptions& opts) {
    if (l < 1) throw RangeError("run length must be at least 1");
    if (!f.tabular() || f.range_kind() != RangeKind::discrete)
        throw InvalidInputError("the bridge check needs a tabular discrete grid function");
    const int k = f.k();
    const int M = f.M();
    const int n = l + k - 1;

    BridgeReport rep;
    rep.k = k;
    rep.M = M;
    rep.l = l;

    // side one: strictly increasing tuples whose windows agree under f
    const std::vector<int>& tab = f.int_table();
    for_each_increasing_tuple(M, n, [&](std::span<const int> t) {
        int first = tab[GridFunction::point_index(t.subspan(0, k), M)];
        for (int i = 1; i < l; ++i)
            if (tab[GridFunction::point_index(t.subspan(i, k), M)] != first) return;
        rep.increasing_tuple_count += 1;
    });

    // side two: monochromatic l-vertex paths under the identity coloring
    std::vector<Word> words;
    std::vector<std::vector<std::uint32_t>> preds;
    if (k <= M) {
        DeBruijnGraph g = build_graph(k, M);
        const std::uint64_t nv = g.vertex_count();
        words.reserve(nv);
        preds.resize(nv);
        for (std::uint64_t v = 0; v < nv; ++v) {
            words.push_back(g.unrank(v));
            for (std::uint64_t s : g.successor_ranks(v)) preds[s].push_back(std::uint32_t(v));
        }
        VertexColoring id_col{k, M, f.colors(), std::vector<int>(nv, 0)};
        for (std::uint64_t v = 0; v < nv; ++v)
            id_col.assign[v] = tab[GridFunction::point_index(words[v], M)];
        rep.path_count = mono_path_count(id_col, l);
    }

    if (rep.increasing_tuple_count != rep.path_count)
        throw IdentityViolationError(
            "bridge identity violated for k=" + std::to_string(k) + " M=" + std::to_string(M) +
            " l=" + std::to_string(l) + ": " + rep.increasing_tuple_count.str() +
            " increasing tuples vs " + rep.path_count.str() + " monochromatic paths");

    // hypothesis: every coloring c_y(a) = f(y_{a_1}..y_{a_k}) has a path
    BigInt yspace = big_pow(BigInt(M), std::uint64_t(M));
    if (k <= M && yspace <= BigInt(opts.coloring_budget)) {
        rep.hypothesis_checked = true;
        rep.hypothesis_holds = true;
        const std::uint64_t ycount = std::uint64_t(yspace);
        const std::size_t nv = words.size();
        std::vector<int> y(M, 1), colors(nv), dp(nv), mapped(k);
        for (std::uint64_t yi = 0; yi < ycount; ++yi) {
            for (std::size_t v = 0; v < nv; ++v) {
                for (int i = 0; i < k; ++i) mapped[i] = y[words[v][i] - 1];
                colors[v] = tab[GridFunction::point_index(mapped, M)];
            }
            ++rep.colorings_enumerated;
            if (!mono_path_exists(preds, colors, l, dp)) {
                rep.hypothesis_holds = false;
                break;
            }
            for (int i = 0; i < M; ++i) {  // odometer over {1..M}^M
                if (++y[i] <= M) break;
                y[i] = 1;
            }
        }
    }

    rep.probability = exact_run_probability({f, NoiseKind::discrete_uniform}, RunEvent::constant, l,
                                            opts.work_budget)
                          .probability;
    if (rep.hypothesis_checked && rep.hypothesis_holds) {
        rep.factorial_bound = Rat(1, falling_factorial(BigInt(M), n));
        rep.bound_checked = true;
        rep.bound_holds = rep.probability >= rep.factorial_bound;
        if (!rep.bound_holds)
            throw IdentityViolationError("constant-run probability " +
                                         rep.probability.str() +
                                         " fell below the factorial bound " +
                                         rep.factorial_bound.str());
    }
    return rep;
}

namespace {

// Lean counter for the adversarial search: favorable tuples for the constant
// event over a small discrete table, in 64-bit arithmetic.  Caller guarantees
// M^(l+k-1) fits.
std::uint64_t count_equal_runs_u64(const std::vector<int>& tab, int r, int M, int l,
                                   std::vector<std::uint64_t>& cur,
                                   std::vector<std::uint64_t>& nxt) {
    const std::uint64_t wsize = tab.size();
    const std::uint64_t ssize = wsize / std::uint64_t(M);
    if (l == 1) return wsize;
    cur.assign(ssize * r, 0);
    for (std::uint64_t widx = 0; widx < wsize; ++widx) ++cur[(widx / M) * r + tab[widx]];
    for (int step = 1; step < l; ++step) {
        nxt.assign(ssize * r, 0);
        for (std::uint64_t s = 0; s < ssize; ++s)
            for (int vid = 0; vid < r; ++vid) {
                std::uint64_t c = cur[s * r + vid];
                if (!c) continue;
                for (int b = 0; b < M; ++b) {
                    std::uint64_t nw = s + std::uint64_t(b) * ssize;
                    if (tab[nw] == vid) nxt[(nw / M) * r + vid] += c;
                }
            }
        std::swap(cur, nxt);
    }
    std::uint64_t favorable = 0;
    for (std::uint64_t c : cur) favorable += c;
    return favorable;
}

// big-endian decode: digit 0 of `index` is table entry 0, so ascending index
// order is ascending lexicographic order of tables
void decode_table_lex(std::uint64_t index, int r, std::vector<int>& tab) {
    for (std::size_t i = tab.size(); i-- > 0;) {
        tab[i] = int(index % std::uint64_t(r));
        index /= std::uint64_t(r);
    }
}

}  // namespace

AdversarialMin adversarial_min(int k, int M, int r, int l, const MinimizeOptions& opts) {
    if (k < 1 || M < 1) throw InvalidDimensionError("adversarial_min needs k >= 1 and M >= 1");
    if (r < 1) throw RangeError("need at least one value");
    if (l < 1) throw RangeError("run length must be at least 1");

    std::uint64_t tsize = 1;
    for (int i = 0; i < k; ++i) {
        if (tsize > (std::uint64_t(1) << 40) / std::uint64_t(M))
            throw ResourceError("table size M^k is too large to enumerate");
        tsize *= std::uint64_t(M);
    }
    const int L = l + k - 1;
    const bool u64_ok = double(L) * std::log2(double(M)) < 62.0;

    AdversarialMin out;
    out.k = k;
    out.M = M;
    out.r = r;
    out.l = l;
    out.seed = opts.seed;
    const BigInt total = big_pow(BigInt(M), std::uint64_t(L));

    // exact favorable count for one table; hot paths use the u64 counter
    auto favorable_big = [&](const std::vector<int>& tab) -> BigInt {
        GridFunction f = GridFunction::discrete_table(k, M, r, tab);
        ProcessSpec spec{f, NoiseKind::discrete_uniform};
        return exact_run_probability(spec, RunEvent::constant, l).favorable;
    };

    std::vector<int> best_tab;
    BigInt best_fav = -1;

    if (opts.mode == CheckMode::exhaustive) {
        BigInt space = big_pow(BigInt(r), tsize);
        if (space > BigInt(opts.max_exhaustive))
            throw ResourceError("exhaustive minimization needs " + space.str() +
                                " tables, budget is " + std::to_string(opts.max_exhaustive));
        const std::uint64_t count = std::uint64_t(space);
        out.exhaustive = true;
        out.functions_evaluated = count;

        if (!u64_ok) {
            // rare corner: few tables but huge tuple spaces
            std::vector<int> tab(tsize, 0);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                decode_table_lex(idx, r, tab);
                BigInt fav = favorable_big(tab);
                if (best_fav < 0 || fav < best_fav) {
                    best_fav = fav;
                    best_tab = tab;
                }
            }
        } else {
            struct ChunkBest {
                std::uint64_t fav = UINT64_MAX;
                std::uint64_t index = 0;
            };
            const std::uint64_t chunk_size = 4096;
            const std::uint64_t num_chunks = (count + chunk_size - 1) / chunk_size;
            std::vector<ChunkBest> bests(num_chunks);
            auto run_chunk = [&](std::uint64_t ci) {
                std::uint64_t begin = ci * chunk_size;
                std::uint64_t end = std::min(count, begin + chunk_size);
                std::vector<int> tab(tsize);
                std::vector<std::uint64_t> cur, nxt;
                decode_table_lex(begin, r, tab);
                for (std::uint64_t idx = begin; idx < end; ++idx) {
                    std::uint64_t fav = count_equal_runs_u64(tab, r, M, l, cur, nxt);
                    if (fav < bests[ci].fav) {
                        bests[ci].fav = fav;
                        bests[ci].index = idx;
                    }
                    // ascending lexicographic order: bump the last entry
                    for (std::size_t e = tsize; e-- > 0;) {
                        if (++tab[e] < r) break;
                        tab[e] = 0;
                    }
                }
            };
            int threads = std::max(1, opts.threads);
            if (threads == 1 || num_chunks <= 1) {
                for (std::uint64_t ci = 0; ci < num_chunks; ++ci) run_chunk(ci);
            } else {
                std::atomic<std::uint64_t> nexti{0};
                std::vector<std::thread> pool;
                for (int t = 0; t < threads; ++t)
                    pool.emplace_back([&] {
                        for (std::uint64_t ci; (ci = nexti.fetch_add(1)) < num_chunks;)
                            run_chunk(ci);
                    });
                for (auto& th : pool) th.join();
            }
            ChunkBest overall;
            for (const auto& b : bests)
                if (b.fav < overall.fav) overall = b;  // first chunk wins ties: lex smallest
            best_fav = overall.fav;
            best_tab.assign(tsize, 0);
            decode_table_lex(overall.index, r, best_tab);
        }
    } else {
        // seeded random restarts, each refined by first-improvement descent
        Xoshiro256pp rng(opts.seed);
        std::vector<std::uint64_t> cur, nxt;
        auto favorable_of = [&](const std::vector<int>& tab) -> BigInt {
            if (u64_ok) return BigInt(count_equal_runs_u64(tab, r, M, l, cur, nxt));
            return favorable_big(tab);
        };
        BigInt evals = 0;
        std::vector<int> tab(tsize);
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            for (auto& v : tab) v = int(rng.bounded(std::uint32_t(r)));
            BigInt fav = favorable_of(tab);
            evals += 1;
            bool improved = true;
            while (improved) {
                improved = false;
                for (std::size_t p = 0; p < tsize; ++p) {
                    int orig = tab[p];
                    for (int v = 0; v < r; ++v) {
                        if (v == orig) continue;
                        tab[p] = v;
                        BigInt f2 = favorable_of(tab);
                        evals += 1;
                        if (f2 < fav) {
                            fav = f2;
                            orig = v;
                            improved = true;
                        } else {
                            tab[p] = orig;
                        }
                    }
                    tab[p] = orig;
                }
            }
            if (best_fav < 0 || fav < best_fav || (fav == best_fav && tab < best_tab)) {
                best_fav = fav;
                best_tab = tab;
            }
        }
        out.exhaustive = false;
        out.functions_evaluated = evals;
    }

    out.min_probability = Rat(best_fav, total);
    out.argmin = GridFunction::discrete_table(k, M, r, std::move(best_tab));
    return out;
}

LowerBoundReport verify_lower_bound(int k, int l, int r, const MinimizeOptions& opts) {
    TowerValue Mv = M_for(k, l, r);
    if (!Mv.is_integer())
        throw ResourceError("M_for(k,l,r) is not an exact integer");
    BigInt Mbig = Mv.integer_value();
    if (Mbig > 1024) throw ResourceError("M = " + Mbig.str() + " is too large for verification");
    const int M = int(Mbig);

    std::uint64_t tsize = 1;
    for (int i = 0; i < k; ++i) {
        if (tsize > (std::uint64_t(1) << 40) / std::uint64_t(M))
            throw ResourceError("table size M^k is too large to search");
        tsize *= std::uint64_t(M);
    }

    MinimizeOptions local = opts;
    if (local.mode == CheckMode::exhaustive &&
        big_pow(BigInt(r), tsize) > BigInt(local.max_exhaustive))
        local.mode = CheckMode::sampled;

    AdversarialMin am = adversarial_min(k, M, r, l, local);

    LowerBoundReport rep;
    rep.k = k;
    rep.l = l;
    rep.r = r;
    rep.M = Mbig;
    rep.p_lower = Rat(BigInt(1), big_pow(Mbig, std::uint64_t(k + l - 1)));
    rep.min_probability = am.min_probability;
    rep.exhaustive = am.exhaustive;
    rep.holds = am.min_probability >= rep.p_lower;
    rep.functions_evaluated = am.functions_evaluated;
    return rep;
}

}  // namespace runlab
