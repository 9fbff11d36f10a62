#include "bareo/factorization.hpp"

#include <algorithm>
#include <map>

namespace bareo {

namespace {

void require_continuous_vertex_map(const PointMap& f) {
    for (const VertexId& v : f.domain.vertices()) {
        const BarePoint& q = f(BarePoint::vertex(v));
        if (!q.is_vertex())
            fail(Errc::NotVertexMap, "vertex '" + v + "' maps to " + q.describe());
    }
    if (!is_continuous(f))
        fail(Errc::NotContinuous, "map is not continuous");
}

// A collapsed edge mapped anywhere but the merged vertex kills both
// factorization orders: a contraction would send it to a vertex and an
// incidence factor keeps endpoint images distinct. Such maps exist and
// are continuous, but they cannot be factored.
void require_canonical(const PointMap& f) {
    for (const Edge& e : f.domain.edges()) {
        const BarePoint& iu = f(BarePoint::vertex(e.u));
        const BarePoint& iv = f(BarePoint::vertex(e.v));
        if (iu == iv && f(BarePoint::edge(e)) != iu)
            fail(Errc::NotFactorable,
                 "edge '" + e.u + "-" + e.v + "' has merged endpoints but maps to " +
                     f(BarePoint::edge(e)).describe() + " instead of " + iu.describe());
    }
}

} // namespace

FiberReport fiber_structure(const PointMap& f, const VertexId& w) {
    require_continuous_vertex_map(f);
    if (!f.codomain.has_vertex(w))
        fail(Errc::UnknownVertex, "no vertex '" + w + "' in the codomain");

    std::set<VertexId> fiber;
    for (const VertexId& v : f.domain.vertices())
        if (f(BarePoint::vertex(v)) == BarePoint::vertex(w))
            fiber.insert(v);

    FiberReport rep;
    rep.target_vertex = w;
    rep.pieces = components(induced_subgraph(f.domain, fiber));

    // cross-piece edges would merge the pieces; guard anyway
    for (std::size_t i = 0; i < rep.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < rep.pieces.size(); ++j)
            for (const VertexId& a : rep.pieces[i].vertices())
                for (const VertexId& b : rep.pieces[j].vertices())
                    if (f.domain.has_edge(a, b))
                        fail(Errc::NotContinuous, "fiber pieces of '" + w + "' are adjacent");

    // greedy proper coloring of each piece; color classes across pieces
    // form the independent sets
    std::map<VertexId, int> color;
    int max_color = 0;
    for (const Graph& piece : rep.pieces) {
        for (const VertexId& v : piece.vertices()) {
            std::set<int> used;
            for (const VertexId& nb : neighbors(piece, v)) {
                auto it = color.find(nb);
                if (it != color.end())
                    used.insert(it->second);
            }
            int c = 1;
            while (used.count(c))
                ++c;
            color[v] = c;
            max_color = std::max(max_color, c);
        }
    }
    rep.independent_sets.assign(max_color, {});
    for (const auto& [v, c] : color)
        rep.independent_sets[c - 1].insert(v);
    return rep;
}

Factorization factor_contraction_first(const PointMap& f, ContractionPick pick) {
    require_continuous_vertex_map(f);
    if (!is_connected(f.domain))
        fail(Errc::Disconnected, "contraction-first factorization needs a connected domain");
    require_canonical(f);

    Graph middle = f.domain;
    PointMap script = PointMap::identity(f.domain);
    VertexAssignment residual = vertex_restriction(f);

    for (;;) {
        std::optional<Edge> collapsed;
        for (const Edge& e : middle.edges()) {
            if (residual.at(e.u) != residual.at(e.v))
                continue;
            if (!collapsed || (pick == ContractionPick::LexSmallest ? e < *collapsed
                                                                    : *collapsed < e))
                collapsed = e;
        }
        if (!collapsed)
            break;
        QuotientResult step = contraction_script(middle, {*collapsed});
        VertexAssignment next;
        for (const VertexId& x : step.quotient.vertices()) {
            const BarePoint pre = [&] {
                for (const VertexId& y : middle.vertices())
                    if (step.map(BarePoint::vertex(y)) == BarePoint::vertex(x))
                        return BarePoint::vertex(y);
                fail(Errc::UnknownVertex, "quotient vertex without preimage");
            }();
            next[x] = residual.at(pre.vertex_id());
        }
        residual = std::move(next);
        script = compose(script, step.map);
        middle = step.quotient;
    }

    PointMap second = induced_from_hom(middle, f.codomain, residual);
    return Factorization{middle, script, second, FactorOrder::ContractionThenIncidence};
}

namespace {

VertexId fresh_for(const Graph& g, const std::set<VertexId>& taken, const VertexId& want) {
    VertexId name = want;
    while (g.has_vertex(name) || taken.count(name))
        name += "'";
    return name;
}

} // namespace

Factorization factor_incidence_first(const PointMap& f) {
    require_continuous_vertex_map(f);
    if (!is_connected(f.domain))
        fail(Errc::Disconnected, "incidence-first factorization needs a connected domain");
    require_canonical(f);

    VertexAssignment rv = vertex_restriction(f);
    std::map<VertexId, std::set<VertexId>> fiber;
    for (const VertexId& x : f.codomain.vertices())
        fiber[x] = {};
    for (const auto& [v, x] : rv)
        fiber[x].insert(v);

    for (const Graph& comp : components(f.codomain)) {
        bool hit = false;
        for (const VertexId& x : comp.vertices())
            if (!fiber[x].empty())
                hit = true;
        if (!hit)
            fail(Errc::UnreachableCodomain,
                 "codomain component containing '" + *comp.vertices().begin() +
                     "' is disjoint from the image; a contraction factor must be "
                     "surjective, so no such factorization exists");
    }

    // middle graph: the domain, plus a fresh stand-in vertex per unhit
    // codomain vertex, plus edges making each fiber connected and each
    // uncovered codomain edge reachable
    std::vector<VertexId> vs(f.domain.vertices().begin(), f.domain.vertices().end());
    std::set<VertexId> taken;
    std::map<VertexId, VertexId> stand_in; // codomain vertex -> fresh middle vertex
    for (const VertexId& x : f.codomain.vertices()) {
        if (fiber[x].empty()) {
            VertexId name = fresh_for(f.domain, taken, x);
            taken.insert(name);
            stand_in[x] = name;
            vs.push_back(name);
        }
    }

    std::vector<std::pair<VertexId, VertexId>> es;
    for (const Edge& e : f.domain.edges())
        es.emplace_back(e.u, e.v);

    std::map<VertexId, VertexId> rep; // codomain vertex -> its middle representative
    for (const VertexId& x : f.codomain.vertices()) {
        if (fiber[x].empty()) {
            rep[x] = stand_in.at(x);
            continue;
        }
        rep[x] = *fiber[x].begin();
        std::vector<VertexId> piece_reps;
        for (const Graph& piece : components(induced_subgraph(f.domain, fiber[x])))
            piece_reps.push_back(*piece.vertices().begin());
        std::sort(piece_reps.begin(), piece_reps.end());
        for (std::size_t i = 0; i + 1 < piece_reps.size(); ++i)
            es.emplace_back(piece_reps[i], piece_reps[i + 1]);
    }

    for (const Edge& e : f.codomain.edges()) {
        bool covered = false;
        for (const Edge& d : f.domain.edges())
            if (f(BarePoint::edge(d)) == BarePoint::edge(e))
                covered = true;
        if (!covered)
            es.emplace_back(rep.at(e.u), rep.at(e.v));
    }

    Graph middle = make_graph(vs, es);

    std::map<BarePoint, BarePoint> embed;
    for (const BarePoint& p : bare_points(f.domain).points)
        embed.emplace(p, p);
    PointMap first = PointMap::make(f.domain, middle, std::move(embed));

    std::map<VertexId, VertexId> to_codomain; // middle vertex -> codomain vertex
    for (const auto& [x, vset] : fiber)
        for (const VertexId& v : vset)
            to_codomain[v] = x;
    for (const auto& [x, name] : stand_in)
        to_codomain[name] = x;

    std::map<BarePoint, BarePoint> collapse;
    for (const VertexId& v : middle.vertices())
        collapse.emplace(BarePoint::vertex(v), BarePoint::vertex(to_codomain.at(v)));
    for (const Edge& e : middle.edges()) {
        const VertexId& a = to_codomain.at(e.u);
        const VertexId& b = to_codomain.at(e.v);
        collapse.emplace(BarePoint::edge(e),
                         a == b ? BarePoint::vertex(a) : BarePoint::edge(Edge::make(a, b)));
    }
    PointMap second = PointMap::make(middle, f.codomain, std::move(collapse));
    return Factorization{middle, first, second, FactorOrder::IncidenceThenContraction};
}

VertexAssignment restrict_injective_to_hom(const PointMap& f) {
    std::set<BarePoint> image;
    for (const auto& [p, q] : f.images)
        if (!image.insert(q).second)
            fail(Errc::NotInjective, "two points share the image " + q.describe());
    if (!is_continuous(f))
        fail(Errc::NotContinuous, "map is not continuous");
    if (!isolated_vertices(f.domain).empty())
        fail(Errc::IsolatedVertexPresent,
             "domain has isolated vertex '" + *isolated_vertices(f.domain).begin() + "'");
    VertexAssignment rv = vertex_restriction(f);
    if (!is_homomorphism(f.domain, f.codomain, rv))
        fail(Errc::NotHomomorphism, "restriction fails to preserve adjacency");
    return rv;
}

VertexAssignment homeomorphism_to_isomorphism(const PointMap& f) {
    std::map<BarePoint, BarePoint> inverse_images;
    for (const auto& [p, q] : f.images)
        if (!inverse_images.emplace(q, p).second)
            fail(Errc::NotBijective, "two points share the image " + q.describe());
    if (inverse_images.size() != bare_points(f.codomain).points.size())
        fail(Errc::NotBijective, "map does not cover the codomain");
    if (!is_continuous(f))
        fail(Errc::NotContinuous, "map is not continuous");
    PointMap inverse = PointMap::make(f.codomain, f.domain, std::move(inverse_images));
    if (!is_continuous(inverse))
        fail(Errc::InverseNotContinuous, "the inverse map is not continuous");

    VertexAssignment fwd = vertex_restriction(f);
    VertexAssignment bwd = vertex_restriction(inverse);
    if (!is_homomorphism(f.domain, f.codomain, fwd) ||
        !is_homomorphism(f.codomain, f.domain, bwd))
        fail(Errc::NotHomomorphism, "restriction fails to be an isomorphism");
    return fwd;
}

} // namespace bareo
