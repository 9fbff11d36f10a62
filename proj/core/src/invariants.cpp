#include "bareo/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>

#include "bareo/caps.hpp"

namespace bareo {

namespace {

void check_color_cap(const Graph& g, int n) {
    double estimate = std::pow(static_cast<double>(n), static_cast<double>(g.order()));
    if (estimate > static_cast<double>(caps().candidate_maps))
        fail(Errc::TooLarge, "coloring search space exceeds the cap");
}

VertexId color_id(int i) { return "v" + std::to_string(i); }

/// Backtracking proper-coloring search in lexicographic vertex order,
/// colors tried ascending; yields the lexicographically least coloring.
bool color_greedy(const std::vector<VertexId>& vs, const Graph& g, int n,
                  std::map<VertexId, int>& coloring, std::size_t i) {
    if (i == vs.size())
        return true;
    for (int c = 1; c <= n; ++c) {
        bool ok = true;
        for (const auto& [v, cv] : coloring)
            if (cv == c && g.has_edge(vs[i], v))
                ok = false;
        if (!ok)
            continue;
        coloring[vs[i]] = c;
        if (color_greedy(vs, g, n, coloring, i + 1))
            return true;
        coloring.erase(vs[i]);
    }
    return false;
}

} // namespace

std::optional<PointMap> find_incidence_coloring(const Graph& g, int n) {
    if (n < 1)
        fail(Errc::BadParameter, "color count must be positive");
    check_color_cap(g, n);
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    std::map<VertexId, int> coloring;
    if (!color_greedy(vs, g, n, coloring, 0))
        return std::nullopt;
    Graph kn = named_graph(NamedKind::Complete, n);
    VertexAssignment fv;
    for (const auto& [v, c] : coloring)
        fv[v] = color_id(c);
    return induced_from_hom(g, kn, fv);
}

int chromatic_number(const Graph& g) {
    if (g.empty())
        fail(Errc::EmptyGraph, "chromatic number of the empty graph is undefined");
    for (int n = 1;; ++n)
        if (find_incidence_coloring(g, n))
            return n;
}

SurjectivityCheck surjectivity_criterion(const Graph& g, int n) {
    if (n < 1)
        fail(Errc::BadParameter, "color count must be positive");
    if (!find_incidence_coloring(g, n))
        fail(Errc::NotColorable, "graph admits no proper " + std::to_string(n) + "-coloring");
    check_color_cap(g, n);

    Graph kn = named_graph(NamedKind::Complete, n);
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    const std::size_t nv = vs.size();

    SurjectivityCheck out;
    out.holds = true;
    std::vector<int> assign(nv, 1);
    for (;;) {
        bool proper = true;
        for (const Edge& e : g.edges()) {
            std::size_t iu = std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin();
            std::size_t iv = std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin();
            if (assign[iu] == assign[iv]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            std::set<int> used;
            std::set<std::pair<int, int>> pairs;
            for (std::size_t i = 0; i < nv; ++i)
                used.insert(assign[i]);
            for (const Edge& e : g.edges()) {
                std::size_t iu = std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin();
                std::size_t iv = std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin();
                pairs.insert({std::min(assign[iu], assign[iv]), std::max(assign[iu], assign[iv])});
            }
            bool surjective = static_cast<int>(used.size()) == n &&
                              pairs.size() == static_cast<std::size_t>(n) * (n - 1) / 2;
            if (!surjective && !out.counterexample) {
                out.holds = false;
                VertexAssignment fv;
                for (std::size_t i = 0; i < nv; ++i)
                    fv[vs[i]] = color_id(assign[i]);
                out.counterexample = induced_from_hom(g, kn, fv);
            }
        }
        std::size_t i = 0;
        while (i < nv && ++assign[i] > n)
            assign[i++] = 1;
        if (i == nv)
            break;
    }
    return out;
}

namespace {

/// Largest n with a surjective weak-homomorphism-induced map onto
/// B(K_n): every color used and every color pair realized by an edge.
/// Backtracking, vertices in lexicographic order, colors ascending.
bool pseudo_color(const std::vector<VertexId>& vs, const Graph& g, int n,
                  std::vector<int>& assign, std::size_t i) {
    if (i == vs.size()) {
        std::set<int> used;
        std::set<std::pair<int, int>> pairs;
        for (int c : assign)
            used.insert(c);
        if (static_cast<int>(used.size()) != n)
            return false;
        for (const Edge& e : g.edges()) {
            std::size_t iu = std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin();
            std::size_t iv = std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin();
            if (assign[iu] != assign[iv])
                pairs.insert(
                    {std::min(assign[iu], assign[iv]), std::max(assign[iu], assign[iv])});
        }
        return pairs.size() == static_cast<std::size_t>(n) * (n - 1) / 2;
    }
    for (int c = 1; c <= n; ++c) {
        assign[i] = c;
        if (pseudo_color(vs, g, n, assign, i + 1))
            return true;
    }
    assign[i] = 0;
    return false;
}

} // namespace

ThetaResult theta(const Graph& g) {
    if (g.empty())
        fail(Errc::EmptyGraph, "theta of the empty graph is undefined");

    // n is bounded by the vertex count and by the edge budget for pairs
    int bound = static_cast<int>(g.order());
    while (bound > 1 &&
           static_cast<std::size_t>(bound) * (bound - 1) / 2 > g.size())
        --bound;

    ThetaResult out;
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    for (int n = bound; n >= 1; --n) {
        check_color_cap(g, n);
        std::vector<int> assign(vs.size(), 0);
        if (pseudo_color(vs, g, n, assign, 0)) {
            out.vertex_map_value = n;
            VertexAssignment fv;
            for (std::size_t i = 0; i < vs.size(); ++i)
                fv[vs[i]] = color_id(assign[i]);
            out.witness = induced_from_weak_hom(g, named_graph(NamedKind::Complete, n), fv);
            break;
        }
    }
    out.value = out.vertex_map_value;

    // all-point-maps oracle: climb above the vertex-map value while the
    // enumeration fits; a success would widen value past vertex_map_value
    out.full_oracle_complete = true;
    PointIndex dom(g);
    if (dom.size() > caps().points) {
        out.full_oracle_complete = false;
        return out;
    }
    auto dom_masks = enumerate_open_masks(dom);
    std::set<PointIndex::Mask> opens_dom(dom_masks.begin(), dom_masks.end());
    for (int n = out.vertex_map_value + 1;; ++n) {
        Graph kn = named_graph(NamedKind::Complete, n);
        PointIndex cod(kn);
        if (cod.size() > dom.size())
            break; // no surjection from fewer points
        double estimate =
            std::pow(static_cast<double>(cod.size()), static_cast<double>(dom.size()));
        if (estimate > static_cast<double>(caps().candidate_maps)) {
            out.full_oracle_complete = false;
            break;
        }
        std::vector<PointIndex::Mask> opens_cod = enumerate_open_masks(cod);
        const PointIndex::Mask all_cod =
            cod.size() == 64 ? ~PointIndex::Mask{0} : ((PointIndex::Mask{1} << cod.size()) - 1);
        bool found = false;
        std::vector<std::size_t> img(dom.size(), 0);
        for (;;) {
            PointIndex::Mask hit = 0;
            for (std::size_t i = 0; i < dom.size(); ++i)
                hit |= PointIndex::Mask{1} << img[i];
            if (hit == all_cod) {
                bool cont = true;
                for (PointIndex::Mask u : opens_cod) {
                    PointIndex::Mask pre = 0;
                    for (std::size_t i = 0; i < dom.size(); ++i)
                        if ((u >> img[i]) & 1)
                            pre |= PointIndex::Mask{1} << i;
                    if (!opens_dom.count(pre)) {
                        cont = false;
                        break;
                    }
                }
                if (cont) {
                    std::map<BarePoint, BarePoint> images;
                    for (std::size_t i = 0; i < dom.size(); ++i)
                        images.emplace(dom.point(i), cod.point(img[i]));
                    found = true;
                    out.value = n;
                    out.witness = PointMap{g, kn, std::move(images)};
                    break;
                }
            }
            std::size_t i = 0;
            while (i < dom.size() && ++img[i] == cod.size())
                img[i++] = 0;
            if (i == dom.size())
                break;
        }
        if (!found)
            break;
    }
    return out;
}

int min_covering_closed_walk(const Graph& g) {
    if (g.size() == 0)
        fail(Errc::NoEdges, "no edges to cover");
    if (!is_connected(g))
        fail(Errc::Disconnected, "covering walk needs a connected graph");
    if (g.size() > caps().walk_edges)
        fail(Errc::TooLarge, "graph has " + std::to_string(g.size()) +
                                 " edges, walk cap is " + std::to_string(caps().walk_edges));

    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    const std::size_t nv = vs.size();
    const std::size_t ne = es.size();
    auto vindex = [&](const VertexId& v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };

    // adjacency with the edge's bit
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adj(nv);
    for (std::size_t i = 0; i < ne; ++i) {
        std::size_t a = vindex(es[i].u), b = vindex(es[i].v);
        adj[a].push_back({b, std::uint32_t{1} << i});
        adj[b].push_back({a, std::uint32_t{1} << i});
    }

    const std::uint32_t full = ne == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << ne) - 1);
    const std::size_t start = 0; // closed walks cover every vertex; any start works
    std::vector<std::vector<std::int16_t>> dist(nv,
                                                std::vector<std::int16_t>(std::size_t{1} << ne, -1));
    std::queue<std::pair<std::size_t, std::uint32_t>> queue;
    dist[start][0] = 0;
    queue.push({start, 0});
    while (!queue.empty()) {
        auto [v, covered] = queue.front();
        queue.pop();
        if (v == start && covered == full)
            return dist[v][covered];
        for (auto [w, bit] : adj[v]) {
            std::uint32_t next = covered | bit;
            if (dist[w][next] == -1) {
                dist[w][next] = static_cast<std::int16_t>(dist[v][covered] + 1);
                queue.push({w, next});
            }
        }
    }
    fail(Errc::Disconnected, "no covering closed walk found"); // unreachable on connected input
}

InvariantReport invariant_report(const Graph& g) {
    InvariantReport rep;
    rep.chi = chromatic_number(g);
    rep.witness_coloring = *find_incidence_coloring(g, rep.chi);
    ThetaResult th = theta(g);
    rep.theta = th.value;
    rep.witness_theta = th.witness;
    try {
        rep.min_walk_length = min_covering_closed_walk(g);
    } catch (const Error& e) {
        if (e.code() != Errc::Disconnected && e.code() != Errc::NoEdges)
            throw;
    }
    return rep;
}

} // namespace bareo
