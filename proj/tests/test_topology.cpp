#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "bareo/census.hpp"
#include "bareo/topology.hpp"
#include "support/small_graphs.hpp"

using namespace bareo;
using testsupport::g;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::BadParameter;
}

Graph example_graph() { return g({"v1", "v2", "v3"}, {{"v1", "v2"}, {"v1", "v3"}}); }

PointSet set_of(const Graph& gr, const std::vector<BarePoint>& pts) {
    PointSet out{gr, {}};
    out.points.insert(pts.begin(), pts.end());
    return out;
}

BarePoint vp(const VertexId& v) { return BarePoint::vertex(v); }
BarePoint ep(const VertexId& a, const VertexId& b) { return BarePoint::edge(Edge::make(a, b)); }

} // namespace

TEST_CASE("bare points") {
    CHECK(bare_points(g({"a", "b"}, {{"a", "b"}})).size() == 3);
    CHECK(bare_points(g({"a", "b", "c"}, {})).size() == 3);
    CHECK(bare_points(named_graph(NamedKind::Petersen, 0)).size() == 25);
}

TEST_CASE("open stars") {
    Graph ex = example_graph();
    PointSet s1 = open_star(ex, "v1");
    CHECK(s1 == set_of(ex, {vp("v1"), ep("v1", "v2"), ep("v1", "v3")}));

    Graph lonely = g({"u"}, {});
    CHECK(open_star(lonely, "u") == set_of(lonely, {vp("u")}));

    Graph pet = named_graph(NamedKind::Petersen, 0);
    CHECK(open_star(pet, "v3").size() == 4);

    CHECK(code_of([&] { open_star(ex, "zz"); }) == Errc::UnknownVertex);
}

TEST_CASE("minimal neighborhoods") {
    Graph ex = example_graph();
    CHECK(minimal_neighborhood(ex, ep("v1", "v2")) == set_of(ex, {ep("v1", "v2")}));
    CHECK(minimal_neighborhood(ex, vp("v1")) == open_star(ex, "v1"));
    Graph lonely = g({"u"}, {});
    CHECK(minimal_neighborhood(lonely, vp("u")) == set_of(lonely, {vp("u")}));
    CHECK(code_of([&] { minimal_neighborhood(ex, vp("zz")); }) == Errc::UnknownPoint);
}

TEST_CASE("openness") {
    Graph ex = example_graph();
    CHECK(is_open(ex, open_star(ex, "v1")));
    CHECK_FALSE(is_open(ex, set_of(ex, {vp("v2")})));
    CHECK(is_open(ex, set_of(ex, {})));
    CHECK(is_open(ex, bare_points(ex)));
    CHECK(code_of([&] { is_open(ex, set_of(g({"a"}, {}), {})); }) == Errc::AmbientMismatch);
}

TEST_CASE("closed subgraph witness") {
    Graph ex = example_graph();
    auto w1 = closed_subgraph_witness(ex, set_of(ex, {vp("v1")}));
    REQUIRE(w1.has_value());
    CHECK(w1->order() == 1);
    CHECK(w1->size() == 0);

    CHECK_FALSE(closed_subgraph_witness(ex, set_of(ex, {ep("v1", "v2")})).has_value());

    Graph k2 = g({"a", "b"}, {{"a", "b"}});
    auto whole = closed_subgraph_witness(k2, bare_points(k2));
    REQUIRE(whole.has_value());
    CHECK(*whole == k2);
}

TEST_CASE("closure and interior") {
    Graph ex = example_graph();
    CHECK(closure(ex, set_of(ex, {ep("v1", "v2")})) ==
          set_of(ex, {ep("v1", "v2"), vp("v1"), vp("v2")}));
    CHECK(closure(ex, set_of(ex, {vp("v1")})) == set_of(ex, {vp("v1")}));
    CHECK(closure(ex, set_of(ex, {})) == set_of(ex, {}));

    PointSet star = open_star(ex, "v1");
    CHECK(interior(ex, star) == star);
    CHECK(interior(ex, set_of(ex, {vp("v2")})) == set_of(ex, {}));
    PointSet edges_only = set_of(ex, {ep("v1", "v2"), ep("v1", "v3")});
    CHECK(interior(ex, edges_only) == edges_only);
}

TEST_CASE("open set enumeration") {
    Graph k1 = g({"a"}, {});
    CHECK(enumerate_open_sets(k1).size() == 2);

    Graph k2 = g({"u", "v"}, {{"u", "v"}});
    auto opens = enumerate_open_sets(k2);
    CHECK(opens.size() == 5);
    std::set<std::set<BarePoint>> found;
    for (const PointSet& a : opens)
        found.insert(a.points);
    CHECK(found.count({}));
    CHECK(found.count({ep("u", "v")}));
    CHECK(found.count({vp("u"), ep("u", "v")}));
    CHECK(found.count({vp("v"), ep("u", "v")}));
    CHECK(found.count({vp("u"), vp("v"), ep("u", "v")}));

    CHECK(enumerate_open_sets(g({"a", "b"}, {})).size() == 4);

    CHECK(code_of([] { enumerate_open_sets(named_graph(NamedKind::Edgeless, 17)); }) ==
          Errc::TooLarge);
}

TEST_CASE("each enumerated open set passes is_open, and no other subset does") {
    for (const Graph& gr : testsupport::all_graphs_up_to_iso_max(3)) {
        PointIndex idx(gr);
        auto opens = enumerate_open_masks(idx);
        std::set<PointIndex::Mask> open_set(opens.begin(), opens.end());
        CHECK(open_set.size() == opens.size()); // exactly once each
        for (PointIndex::Mask m = 0; m <= idx.full_mask(); ++m) {
            CHECK(is_open(gr, idx.to_point_set(m)) == (open_set.count(m) != 0));
        }
    }
}

TEST_CASE("basis property: opens are unions of member minimal neighborhoods") {
    for (const Graph& gr : testsupport::all_graphs_up_to_iso_max(3)) {
        for (const PointSet& a : enumerate_open_sets(gr)) {
            PointSet rebuilt{gr, {}};
            for (const BarePoint& p : a.points) {
                PointSet nb = minimal_neighborhood(gr, p);
                rebuilt.points.insert(nb.points.begin(), nb.points.end());
            }
            CHECK(rebuilt == a);
        }
    }
}

TEST_CASE("Alexandroff: pairwise intersections stay open, minimal neighborhood is the total intersection") {
    for (const Graph& gr : testsupport::all_graphs_up_to_iso_max(3)) {
        PointIndex idx(gr);
        auto opens = enumerate_open_masks(idx);
        std::set<PointIndex::Mask> open_set(opens.begin(), opens.end());
        for (PointIndex::Mask a : opens)
            for (PointIndex::Mask b : opens)
                CHECK(open_set.count(a & b));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            PointIndex::Mask total = idx.full_mask();
            for (PointIndex::Mask a : opens)
                if ((a >> i) & 1)
                    total &= a;
            CHECK(idx.to_point_set(total) == minimal_neighborhood(gr, idx.point(i)));
        }
    }
}

TEST_CASE("set is open iff its complement carries a subgraph witness") {
    for (const Graph& gr : testsupport::all_graphs_up_to_iso_max(3)) {
        PointIndex idx(gr);
        for (PointIndex::Mask m = 0; m <= idx.full_mask(); ++m) {
            PointSet a = idx.to_point_set(m);
            PointSet comp = idx.to_point_set(idx.full_mask() & ~m);
            CHECK(is_open(gr, a) == closed_subgraph_witness(gr, comp).has_value());
        }
    }
}

TEST_CASE("closure operator laws and duality with interior") {
    for (const Graph& gr : testsupport::all_graphs_up_to_iso_max(3)) {
        PointIndex idx(gr);
        for (PointIndex::Mask m = 0; m <= idx.full_mask(); ++m) {
            PointSet a = idx.to_point_set(m);
            PointSet cl = closure(gr, a);
            CHECK(std::includes(cl.points.begin(), cl.points.end(), a.points.begin(),
                                a.points.end()));
            CHECK(closure(gr, cl) == cl);
            CHECK(closed_subgraph_witness(gr, cl).has_value());
            // smallest closed superset: every closed superset contains cl
            for (PointIndex::Mask c = 0; c <= idx.full_mask(); ++c) {
                PointSet cand = idx.to_point_set(c);
                if ((c & m) == m && closed_subgraph_witness(gr, cand).has_value())
                    CHECK((idx.mask_of(cl) & c) == idx.mask_of(cl));
            }
            PointSet comp = idx.to_point_set(idx.full_mask() & ~m);
            PointIndex::Mask dual = idx.full_mask() & ~idx.mask_of(closure(gr, comp));
            CHECK(idx.to_point_set(dual) == interior(gr, a));
        }
    }
}

TEST_CASE("singletons: vertices closed, open iff isolated; edges open") {
    for (const Graph& gr : testsupport::all_graphs_up_to_iso_max(4)) {
        for (const VertexId& v : gr.vertices()) {
            PointSet s = set_of(gr, {vp(v)});
            PointSet comp = bare_points(gr);
            comp.points.erase(vp(v));
            CHECK(is_open(gr, comp)); // {v} closed
            CHECK(is_open(gr, s) == (degree(gr, v) == 0));
        }
        for (const Edge& e : gr.edges()) {
            PointSet s = set_of(gr, {BarePoint::edge(e)});
            CHECK(is_open(gr, s));
            PointSet comp = bare_points(gr);
            comp.points.erase(BarePoint::edge(e));
            CHECK_FALSE(is_open(gr, comp)); // endpoints exist, so never closed
        }
    }
}

TEST_CASE("topological connectedness agrees with graph connectivity") {
    CHECK(is_topologically_connected(named_graph(NamedKind::Petersen, 0)));
    CHECK_FALSE(is_topologically_connected(g({"a", "b"}, {})));
    CHECK(is_topologically_connected(g({"u", "v"}, {{"u", "v"}})));
    CHECK(code_of([] { is_topologically_connected(Graph{}); }) == Errc::EmptyGraph);

    for (const Graph& gr : testsupport::all_graphs_up_to_iso_max(4))
        CHECK(is_topologically_connected(gr) == (components(gr).size() == 1));
}

TEST_CASE("separation report") {
    Graph k2 = g({"u", "v"}, {{"u", "v"}});
    SeparationReport rep = separation_report(k2);
    CHECK(rep.t0);
    CHECK_FALSE(rep.hausdorff);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first == vp("u"));
    CHECK(rep.witness->second == ep("u", "v"));

    SeparationReport discrete = separation_report(g({"a", "b", "c"}, {}));
    CHECK(discrete.t0);
    CHECK(discrete.hausdorff);
    CHECK_FALSE(discrete.witness.has_value());

    SeparationReport point = separation_report(g({"a"}, {}));
    CHECK(point.t0);
    CHECK(point.hausdorff);
}
