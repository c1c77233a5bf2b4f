#pragma once
#ifndef PATHREACH_TESTKIT_HPP
#define PATHREACH_TESTKIT_HPP

// Brute-force oracles and seeded instance generators. Nothing here shares code
// with the reachability engine or the DAG decomposer.

#include "pathreach/decomposition.hpp"
#include "pathreach/digraph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathreach::testkit {

// Reproducible randomness. The engine is std::mt19937_64, whose output sequence
// is fixed by the C++ standard. The standard distributions are not, so ranges
// are derived here: below(b) is the high 64 bits of a 128-bit product and
// unit() takes the top 53 bits.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const unsigned __int128 wide = static_cast<unsigned __int128>(engine_()) * bound;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

struct InstanceSeed {
    std::size_t n = 1;
    std::size_t k = 0;
    std::size_t max_len = 1;
    std::uint64_t seed = 0;
};

// k random walks over [0, n). Each walk has a uniform length in [1, max_len]
// and a uniform start; each further step is drawn uniformly from the n - 1
// vertices other than the current one. With n == 1 every walk is one vertex.
inline WalkDecomposition gen_decomposed_instance(const InstanceSeed& spec) {
    if (spec.n == 0 || spec.max_len == 0) {
        throw std::invalid_argument("instance seed needs n >= 1 and max_len >= 1");
    }
    SeededRng rng(spec.seed);
    std::vector<Walk> walks;
    walks.reserve(spec.k);
    for (std::size_t i = 0; i < spec.k; ++i) {
        const std::size_t len = 1 + rng.below(spec.max_len);
        std::vector<VertexId> vertices{static_cast<VertexId>(rng.below(spec.n))};
        while (spec.n > 1 && vertices.size() < len) {
            auto next = static_cast<VertexId>(rng.below(spec.n - 1));
            if (next >= vertices.back()) {
                ++next;
            }
            vertices.push_back(next);
        }
        walks.emplace_back(std::move(vertices));
    }
    return WalkDecomposition(std::move(walks));
}

// Each pair i < j becomes edge (i, j) independently with probability p.
inline Digraph gen_random_dag(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    SeededRng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.unit() < p) {
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
            }
        }
    }
    return Digraph(n, std::move(edges));
}

// k paths of seg_len edges laid end to end: path i runs from i * seg_len to
// (i + 1) * seg_len, sharing its last vertex with the first vertex of path i+1.
inline WalkDecomposition gen_chain_of_paths(std::size_t k, std::size_t seg_len) {
    if (seg_len == 0) {
        throw std::invalid_argument("chain segments need at least one edge");
    }
    std::vector<Walk> walks;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<VertexId> vertices;
        for (std::size_t v = i * seg_len; v <= (i + 1) * seg_len; ++v) {
            vertices.push_back(static_cast<VertexId>(v));
        }
        walks.emplace_back(std::move(vertices));
    }
    return WalkDecomposition(std::move(walks));
}

// Worst case for frontier search. Edge (x, x+1) belongs to walk x mod k, and
// each walk lists its edges by descending x, joined by backward connector
// steps. Getting from 0 to n-1 needs n-2 switches, so the frontier moves one
// vertex per advance. For k >= 2 the walks are edge-disjoint simple paths.
inline WalkDecomposition gen_staircase(std::size_t n, std::size_t k) {
    if (n < 2 || k == 0) {
        throw std::invalid_argument("staircase needs n >= 2 and k >= 1");
    }
    std::vector<Walk> walks;
    for (std::size_t r = 0; r < k && r + 1 < n; ++r) {
        std::size_t top = r;
        while (top + k + 1 < n) {
            top += k;
        }
        std::vector<VertexId> vertices;
        for (std::size_t x = top + k; x >= k; x -= k) {
            vertices.push_back(static_cast<VertexId>(x - k));
            vertices.push_back(static_cast<VertexId>(x - k + 1));
        }
        walks.emplace_back(std::move(vertices));
    }
    return WalkDecomposition(std::move(walks));
}

// Breadth-first search. s == t is reachable through the empty path.
inline bool oracle_reachable(const Digraph& g, VertexId s, VertexId t) {
    if (s >= g.vertex_count() || t >= g.vertex_count()) {
        throw std::out_of_range("query vertex out of range");
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        if (v == t) {
            return true;
        }
        for (VertexId w : g.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return false;
}

// Fewest walk switches on any route from s to t.
//
// 0-1 BFS over occurrences (walk i, position q): stepping to (i, q+1) is free,
// jumping to any other occurrence of the same vertex, in any walk, costs one.
// Every occurrence of s is a free source.
inline std::optional<std::size_t> oracle_min_switches(const WalkDecomposition& w, std::size_t n,
                                                      VertexId s, VertexId t) {
    if (s >= n || t >= n) {
        throw std::out_of_range("query vertex out of range");
    }
    if (s == t) {
        return 0;
    }
    struct Occurrence {
        std::size_t walk;
        std::size_t pos;
    };
    std::vector<std::size_t> base(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        base[i + 1] = base[i] + w[i].size();
    }
    std::vector<std::vector<Occurrence>> occurrences(n);
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t q = 0; q < w[i].size(); ++q) {
            if (w[i][q] >= n) {
                throw std::out_of_range("walk vertex out of range");
            }
            occurrences[w[i][q]].push_back({i, q});
        }
    }

    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cost(base.back(), unseen);
    std::deque<Occurrence> queue;
    for (const Occurrence& o : occurrences[s]) {
        cost[base[o.walk] + o.pos] = 0;
        queue.push_back(o);
    }
    std::vector<bool> done(base.back(), false);
    while (!queue.empty()) {
        const Occurrence o = queue.front();
        queue.pop_front();
        const std::size_t node = base[o.walk] + o.pos;
        if (done[node]) {
            continue;
        }
        done[node] = true;
        const std::size_t c = cost[node];
        const VertexId v = w[o.walk][o.pos];
        if (v == t) {
            return c;
        }
        if (o.pos + 1 < w[o.walk].size() && c < cost[node + 1]) {
            cost[node + 1] = c;
            queue.push_front({o.walk, o.pos + 1});
        }
        for (const Occurrence& other : occurrences[v]) {
            const std::size_t target = base[other.walk] + other.pos;
            if (c + 1 < cost[target]) {
                cost[target] = c + 1;
                queue.push_back(other);
            }
        }
    }
    return std::nullopt;
}

inline std::optional<std::size_t> oracle_min_switches(const WalkDecomposition& w, VertexId s,
                                                      VertexId t) {
    return oracle_min_switches(w, w.vertex_bound(), s, t);
}

// Fewest edge-disjoint simple paths covering g, by exhaustive search: every
// simple path is enumerated as an edge bitmask, then a subset DP partitions the
// edge set, always covering the lowest uncovered edge next. Exponential in the
// edge count; limited to 24 edges.
inline std::size_t brute_force_path_number(const Digraph& g) {
    const std::size_t m = g.edge_count();
    if (m > 24) {
        throw std::invalid_argument("brute force path number is limited to 24 edges");
    }
    std::vector<std::uint32_t> paths;
    std::vector<bool> on_path(g.vertex_count(), false);
    auto extend = [&](auto&& self, VertexId at, std::uint32_t mask) -> void {
        for (VertexId next : g.successors(at)) {
            if (on_path[next]) {
                continue;
            }
            const std::uint32_t grown = mask | (std::uint32_t{1} << *g.find_edge(at, next));
            paths.push_back(grown);
            on_path[next] = true;
            self(self, next, grown);
            on_path[next] = false;
        }
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        on_path[v] = true;
        extend(extend, v, 0);
        on_path[v] = false;
    }

    constexpr std::size_t infinite = std::numeric_limits<std::size_t>::max();
    const std::uint32_t full = m == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
    std::vector<std::size_t> best(std::size_t{full} + 1, infinite);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const std::uint32_t lowest = mask & (~mask + 1);
        for (std::uint32_t path : paths) {
            if ((path & lowest) && (path & mask) == path && best[mask ^ path] != infinite) {
                best[mask] = std::min(best[mask], best[mask ^ path] + 1);
            }
        }
    }
    return best[full];
}

}  // namespace pathreach::testkit

#endif  // PATHREACH_TESTKIT_HPP
