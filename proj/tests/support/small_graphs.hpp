#pragma once

// Test-side generators and independent oracles. Everything here is kept
// separate from the library code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

#include "bareo/graph.hpp"

namespace testsupport {

inline bareo::Graph g(const std::vector<bareo::VertexId>& vs,
                      const std::vector<std::pair<bareo::VertexId, bareo::VertexId>>& es) {
    return bareo::make_graph(vs, es);
}

/// All isomorphism representatives on exactly n labeled vertices v1..vn:
/// a graph is emitted iff its edge bitmask is minimal over all vertex
/// permutations.
inline std::vector<bareo::Graph> all_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.push_back({i, j});
    const int m = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (int k = 0; k < m; ++k)
        pair_index[pairs[k].first][pairs[k].second] =
            pair_index[pairs[k].second][pairs[k].first] = k;

    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<bareo::Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        bool minimal = true;
        for (const auto& perm : perms) {
            std::uint32_t relabeled = 0;
            for (int k = 0; k < m; ++k)
                if ((mask >> k) & 1)
                    relabeled |= std::uint32_t{1}
                                 << pair_index[perm[pairs[k].first]][perm[pairs[k].second]];
            if (relabeled < mask) {
                minimal = false;
                break;
            }
        }
        if (!minimal)
            continue;
        std::vector<bareo::VertexId> vs;
        for (int i = 1; i <= n; ++i)
            vs.push_back("v" + std::to_string(i));
        std::vector<std::pair<bareo::VertexId, bareo::VertexId>> es;
        for (int k = 0; k < m; ++k)
            if ((mask >> k) & 1)
                es.emplace_back(vs[pairs[k].first], vs[pairs[k].second]);
        out.push_back(bareo::make_graph(vs, es));
    }
    return out;
}

inline std::vector<bareo::Graph> all_graphs_up_to_iso_max(int max_n) {
    std::vector<bareo::Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto batch = all_graphs_up_to_iso(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

/// Classic brute-force chromatic number: smallest k whose k^n color
/// assignments contain a proper one.
inline int brute_chromatic(const bareo::Graph& g) {
    std::vector<bareo::VertexId> vs(g.vertices().begin(), g.vertices().end());
    const std::size_t n = vs.size();
    for (int k = 1;; ++k) {
        std::vector<int> assign(n, 0);
        for (;;) {
            bool proper = true;
            for (const bareo::Edge& e : g.edges()) {
                std::size_t a = std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin();
                std::size_t b = std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin();
                if (assign[a] == assign[b]) {
                    proper = false;
                    break;
                }
            }
            if (proper)
                return k;
            std::size_t i = 0;
            while (i < n && ++assign[i] == k)
                assign[i++] = 0;
            if (i == n)
                break;
        }
    }
}

/// Route-inspection value by the T-join formula: |E| plus the minimum
/// weight perfect matching of the odd-degree vertices under shortest-path
/// distances. Independent of the state-space walk search.
inline int postman_tjoin(const bareo::Graph& g) {
    std::vector<bareo::VertexId> vs(g.vertices().begin(), g.vertices().end());
    const std::size_t n = vs.size();
    auto vi = [&](const bareo::VertexId& v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, 1 << 20));
    for (std::size_t i = 0; i < n; ++i)
        dist[i][i] = 0;
    for (const bareo::Edge& e : g.edges())
        dist[vi(e.u)][vi(e.v)] = dist[vi(e.v)][vi(e.u)] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);

    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < n; ++i)
        if (bareo::degree(g, vs[i]) % 2 == 1)
            odd.push_back(i);

    // minimum weight perfect matching over the odd vertices, by recursion
    std::vector<bool> used(odd.size(), false);
    auto match = [&](auto&& self, std::size_t done) -> int {
        std::size_t first = done;
        while (first < odd.size() && used[first])
            ++first;
        if (first == odd.size())
            return 0;
        used[first] = true;
        int best = 1 << 20;
        for (std::size_t j = first + 1; j < odd.size(); ++j) {
            if (used[j])
                continue;
            used[j] = true;
            best = std::min(best, dist[odd[first]][odd[j]] + self(self, first + 1));
            used[j] = false;
        }
        used[first] = false;
        return best;
    };
    return static_cast<int>(g.size()) + match(match, 0);
}

/// Number of subgraphs of g (vertex subset plus any edge subset inside
/// it), enumerated directly; the open-set count must equal it.
inline std::uint64_t subgraph_count(const bareo::Graph& g) {
    std::vector<bareo::VertexId> vs(g.vertices().begin(), g.vertices().end());
    const std::size_t n = vs.size();
    std::uint64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::set<bareo::VertexId> inside;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1)
                inside.insert(vs[i]);
        std::size_t edges_within = 0;
        for (const bareo::Edge& e : g.edges())
            if (inside.count(e.u) && inside.count(e.v))
                ++edges_within;
        total += std::uint64_t{1} << edges_within;
    }
    return total;
}

/// All total vertex assignments V(g) -> V(h).
inline std::vector<bareo::VertexAssignment> all_assignments(const bareo::Graph& g,
                                                            const bareo::Graph& h) {
    std::vector<bareo::VertexId> gv(g.vertices().begin(), g.vertices().end());
    std::vector<bareo::VertexId> hv(h.vertices().begin(), h.vertices().end());
    std::vector<bareo::VertexAssignment> out;
    if (hv.empty())
        return out;
    std::vector<std::size_t> pick(gv.size(), 0);
    for (;;) {
        bareo::VertexAssignment fv;
        for (std::size_t i = 0; i < gv.size(); ++i)
            fv[gv[i]] = hv[pick[i]];
        out.push_back(std::move(fv));
        std::size_t i = 0;
        while (i < gv.size() && ++pick[i] == hv.size())
            pick[i++] = 0;
        if (i == gv.size())
            break;
    }
    return out;
}

} // namespace testsupport
