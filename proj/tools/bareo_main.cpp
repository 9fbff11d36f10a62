// bareo: batch CLI over the star-topology toolkit. JSON in, JSON out;
// exit 0 on success, 1 on domain errors, 2 on usage or parse errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bareo/json_io.hpp"

namespace {

using bareo::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("cannot open '" + path + "'");
    return json::parse(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-topology toolkit for bare graph representations"};
    app.require_subcommand(1);

    std::string graph_path, other_path, set_path, map_path, assign_path, edges_path;
    std::string u, v, w;
    std::string order = "ci";
    bool induce_hom = false, induce_weak = false;

    auto* open_check = app.add_subcommand("open-check", "test a point set for openness");
    open_check->add_option("graph", graph_path)->required();
    open_check->add_option("set", set_path)->required();

    auto* closure_cmd = app.add_subcommand("closure", "smallest closed superset");
    closure_cmd->add_option("graph", graph_path)->required();
    closure_cmd->add_option("set", set_path)->required();

    auto* interior_cmd = app.add_subcommand("interior", "largest open subset");
    interior_cmd->add_option("graph", graph_path)->required();
    interior_cmd->add_option("set", set_path)->required();

    auto* connected_cmd = app.add_subcommand("connected", "topological connectedness of B(G)");
    connected_cmd->add_option("graph", graph_path)->required();

    auto* separation_cmd = app.add_subcommand("separation", "T0 and Hausdorff report");
    separation_cmd->add_option("graph", graph_path)->required();

    auto* continuity_cmd = app.add_subcommand("continuity", "sub-basis continuity check");
    continuity_cmd->add_option("map", map_path)->required();

    auto* classify_cmd = app.add_subcommand("classify", "full map classification");
    classify_cmd->add_option("map", map_path)->required();

    auto* induce_cmd = app.add_subcommand("induce", "induce a point map from a vertex assignment");
    induce_cmd->add_flag("--hom", induce_hom, "require a strong homomorphism");
    induce_cmd->add_flag("--weak", induce_weak, "allow a weak homomorphism");
    induce_cmd->add_option("domain", graph_path)->required();
    induce_cmd->add_option("codomain", other_path)->required();
    induce_cmd->add_option("assignment", assign_path)->required();

    auto* identify_cmd = app.add_subcommand("identify", "merge two vertices");
    identify_cmd->add_option("graph", graph_path)->required();
    identify_cmd->add_option("u", u)->required();
    identify_cmd->add_option("v", v)->required();
    identify_cmd->add_option("w", w, "name of the merged vertex (default u+v)");

    auto* contract_cmd = app.add_subcommand("contract", "run an edge-contraction script");
    contract_cmd->add_option("graph", graph_path)->required();
    contract_cmd->add_option("edges", edges_path, "JSON list of edges")->required();

    auto* vertexify_cmd = app.add_subcommand("vertexify", "continuous map to continuous vertex map");
    vertexify_cmd->add_option("map", map_path)->required();

    auto* factorize_cmd = app.add_subcommand("factorize", "factor a continuous vertex map");
    factorize_cmd->add_option("--order", order, "ci (contraction first) or ic (incidence first)")
        ->check(CLI::IsMember({"ci", "ic"}));
    factorize_cmd->add_option("map", map_path)->required();

    auto* chroma_cmd = app.add_subcommand("chroma", "chromatic number");
    chroma_cmd->add_option("graph", graph_path)->required();

    auto* theta_cmd = app.add_subcommand("theta", "largest complete image invariant");
    theta_cmd->add_option("graph", graph_path)->required();

    auto* postman_cmd = app.add_subcommand("postman", "shortest covering closed walk");
    postman_cmd->add_option("graph", graph_path)->required();

    auto* census_cmd = app.add_subcommand("census", "exhaustive point-map census");
    census_cmd->add_option("domain", graph_path)->required();
    census_cmd->add_option("codomain", other_path)->required();

    try {
        app.parse(argc, argv);

        if (*open_check) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            bareo::PointSet a = bareo::point_set_from_json(load_json(set_path));
            emit(json{{"open", bareo::is_open(g, a)}});
        } else if (*closure_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            bareo::PointSet a = bareo::point_set_from_json(load_json(set_path));
            emit(bareo::to_json(bareo::closure(g, a)));
        } else if (*interior_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            bareo::PointSet a = bareo::point_set_from_json(load_json(set_path));
            emit(bareo::to_json(bareo::interior(g, a)));
        } else if (*connected_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            emit(json{{"connected", bareo::is_topologically_connected(g)}});
        } else if (*separation_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            emit(bareo::to_json(bareo::separation_report(g)));
        } else if (*continuity_cmd) {
            bareo::PointMap f = bareo::point_map_from_json(load_json(map_path));
            emit(json{{"continuous", bareo::is_continuous(f)}});
        } else if (*classify_cmd) {
            bareo::PointMap f = bareo::point_map_from_json(load_json(map_path));
            emit(bareo::to_json(bareo::classify(f)));
        } else if (*induce_cmd) {
            if (induce_hom == induce_weak)
                throw CLI::ValidationError("pass exactly one of --hom and --weak");
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            bareo::Graph h = bareo::graph_from_json(load_json(other_path));
            bareo::VertexAssignment fv = bareo::assignment_from_json(load_json(assign_path));
            emit(bareo::to_json(induce_hom ? bareo::induced_from_hom(g, h, fv)
                                           : bareo::induced_from_weak_hom(g, h, fv)));
        } else if (*identify_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            if (w.empty())
                w = u + "+" + v;
            emit(bareo::to_json(bareo::vertex_identification(g, u, v, w)));
        } else if (*contract_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            std::vector<bareo::Edge> edges = bareo::edge_list_from_json(load_json(edges_path));
            emit(bareo::to_json(bareo::contraction_script(g, edges)));
        } else if (*vertexify_cmd) {
            bareo::PointMap f = bareo::point_map_from_json(load_json(map_path));
            emit(bareo::to_json(bareo::vertexify(f)));
        } else if (*factorize_cmd) {
            bareo::PointMap f = bareo::point_map_from_json(load_json(map_path));
            emit(bareo::to_json(order == "ci" ? bareo::factor_contraction_first(f)
                                              : bareo::factor_incidence_first(f)));
        } else if (*chroma_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            emit(json{{"chi", bareo::chromatic_number(g)}});
        } else if (*theta_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            emit(bareo::to_json(bareo::theta(g)));
        } else if (*postman_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            emit(json{{"min_walk_length", bareo::min_covering_closed_walk(g)}});
        } else if (*census_cmd) {
            bareo::Graph g = bareo::graph_from_json(load_json(graph_path));
            bareo::Graph h = bareo::graph_from_json(load_json(other_path));
            emit(bareo::to_json(bareo::census(g, h)));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help and friends
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const bareo::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
