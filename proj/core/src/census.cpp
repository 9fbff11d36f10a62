#include "bareo/census.hpp"

#include <cmath>
#include <unordered_set>

#include "bareo/caps.hpp"

namespace bareo {

namespace {

using Mask = PointIndex::Mask;

std::unordered_set<Mask> open_mask_set(const PointIndex& idx) {
    if (idx.size() > caps().points)
        fail(Errc::TooLarge, "B(G) has " + std::to_string(idx.size()) +
                                 " points, cap is " + std::to_string(caps().points));
    auto masks = enumerate_open_masks(idx);
    return {masks.begin(), masks.end()};
}

} // namespace

bool oracle_is_continuous(const PointMap& f) {
    PointIndex dom(f.domain);
    PointIndex cod(f.codomain);
    std::unordered_set<Mask> opens_dom = open_mask_set(dom);
    std::vector<Mask> opens_cod = enumerate_open_masks(cod);
    if (cod.size() > caps().points)
        fail(Errc::TooLarge, "codomain exceeds the point cap");

    std::vector<std::size_t> img(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i)
        img[i] = cod.index(f(dom.point(i)));

    for (Mask u : opens_cod) {
        Mask pre = 0;
        for (std::size_t i = 0; i < dom.size(); ++i)
            if ((u >> img[i]) & 1)
                pre |= Mask{1} << i;
        if (!opens_dom.count(pre))
            return false;
    }
    return true;
}

CensusReport census(const Graph& g, const Graph& h) {
    PointIndex dom(g);
    PointIndex cod(h);
    const std::size_t ng = dom.size();
    const std::size_t nh = cod.size();
    if (ng == 0 || nh == 0)
        fail(Errc::EmptyGraph, "census needs nonempty bare representations");

    double estimate = std::pow(static_cast<double>(nh), static_cast<double>(ng));
    if (estimate > static_cast<double>(caps().candidate_maps))
        fail(Errc::TooLarge, "candidate map count exceeds the cap");

    CensusReport rep;
    rep.domain_graph = g;
    rep.codomain_graph = h;

    std::unordered_set<Mask> opens_dom = open_mask_set(dom);
    std::vector<Mask> opens_cod = enumerate_open_masks(cod);
    if (nh > caps().points)
        fail(Errc::TooLarge, "codomain exceeds the point cap");

    const std::size_t gv = dom.vertex_count();
    const std::size_t hv = cod.vertex_count();

    // domain edges as (endpoint index, endpoint index, edge point index)
    struct EdgeIdx {
        std::size_t u, v, e;
    };
    std::vector<EdgeIdx> gedges;
    for (std::size_t e = gv; e < ng; ++e) {
        const Edge& ed = dom.point(e).edge_value();
        gedges.push_back({dom.index(BarePoint::vertex(ed.u)), dom.index(BarePoint::vertex(ed.v)), e});
    }
    // codomain adjacency and edge lookup over vertex indices
    std::vector<std::vector<std::size_t>> hedge(hv, std::vector<std::size_t>(hv, SIZE_MAX));
    for (std::size_t e = hv; e < nh; ++e) {
        const Edge& ed = cod.point(e).edge_value();
        std::size_t a = cod.index(BarePoint::vertex(ed.u));
        std::size_t b = cod.index(BarePoint::vertex(ed.v));
        hedge[a][b] = hedge[b][a] = e;
    }

    // direct enumerations of vertex assignments: weak homs and homs
    std::vector<std::size_t> va(gv, 0);
    for (;;) {
        bool weak = true, strong = true;
        for (const EdgeIdx& e : gedges) {
            std::size_t a = va[e.u], b = va[e.v];
            if (a == b)
                strong = false;
            else if (hedge[a][b] == SIZE_MAX)
                weak = strong = false;
        }
        if (weak)
            ++rep.weak_homs;
        if (strong)
            ++rep.homs;
        std::size_t i = 0;
        while (i < gv && ++va[i] == hv)
            va[i++] = 0;
        if (i == gv)
            break;
    }

    auto subbasis_continuous = [&](const std::vector<std::size_t>& img) {
        for (std::size_t w = 0; w < hv; ++w) {
            Mask star = cod.star_mask(w);
            Mask pre = 0;
            for (std::size_t i = 0; i < ng; ++i)
                if ((star >> img[i]) & 1)
                    pre |= Mask{1} << i;
            if (!dom.mask_is_open(pre))
                return false;
        }
        return true;
    };
    auto oracle_continuous = [&](const std::vector<std::size_t>& img) {
        for (Mask u : opens_cod) {
            Mask pre = 0;
            for (std::size_t i = 0; i < ng; ++i)
                if ((u >> img[i]) & 1)
                    pre |= Mask{1} << i;
            if (!opens_dom.count(pre))
                return false;
        }
        return true;
    };

    std::unordered_set<std::uint64_t> seen_restrictions;
    std::vector<std::size_t> img(ng, 0);
    for (;;) {
        ++rep.total_maps;
        bool sb = subbasis_continuous(img);
        bool oc = oracle_continuous(img);
        if (sb != oc) {
            std::map<BarePoint, BarePoint> images;
            for (std::size_t i = 0; i < ng; ++i)
                images.emplace(dom.point(i), cod.point(img[i]));
            rep.mismatches.push_back({PointMap{g, h, std::move(images)}, sb, oc});
        }
        if (oc) {
            ++rep.continuous;
            bool vertex_map = true;
            for (std::size_t i = 0; i < gv; ++i)
                if (img[i] >= hv)
                    vertex_map = false;
            if (vertex_map) {
                std::uint64_t key = 0;
                for (std::size_t i = 0; i < gv; ++i)
                    key = key * 64 + img[i];
                if (seen_restrictions.insert(key).second)
                    ++rep.continuous_vertex_maps;

                bool edge_map = true, compatible = true;
                for (const EdgeIdx& e : gedges) {
                    if (img[e.e] < hv) {
                        edge_map = false;
                        break;
                    }
                    std::size_t a = img[e.u], b = img[e.v];
                    if (a == b || hedge[a][b] != img[e.e]) {
                        compatible = false;
                        break;
                    }
                }
                if (edge_map && compatible)
                    ++rep.incidence_maps;
            }
        }
        std::size_t i = 0;
        while (i < ng && ++img[i] == nh)
            img[i++] = 0;
        if (i == ng)
            break;
    }
    return rep;
}

bool connectedness_oracle(const Graph& g) {
    if (g.empty())
        fail(Errc::EmptyGraph, "connectedness of B(G) is undefined for the empty graph");
    PointIndex idx(g);
    std::unordered_set<Mask> opens = open_mask_set(idx);
    const Mask full = idx.full_mask();
    for (Mask u : opens) {
        if (u == 0 || u == full)
            continue;
        if (opens.count(full & ~u))
            return false; // clopen bipartition
    }
    return true;
}

} // namespace bareo
