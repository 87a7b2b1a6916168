#include <CLI11.hpp>
#include <json.hpp>

#include "splitcone/cry.hpp"
#include "splitcone/edc.hpp"
#include "splitcone/io.hpp"
#include "splitcone/netviz.hpp"
#include "splitcone/xdiagram.hpp"

#include <iostream>
#include <sstream>

using namespace splitcone;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

json rat_json(const Rat& r)
{
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json matrix_json(const DissimilarityMatrix& d)
{
    json delta = json::object();
    for (int i = 1; i <= d.n; ++i)
        for (int j = i + 1; j <= d.n; ++j)
            delta[std::to_string(i) + "," + std::to_string(j)] = rat_json(d.at(i, j));
    return json{{"n", d.n}, {"delta", delta}};
}

void print_matrix_csv(const DissimilarityMatrix& d)
{
    for (int i = 1; i <= d.n; ++i) {
        for (int j = 1; j <= d.n; ++j)
            std::cout << (j > 1 ? "," : "")
                      << (i == j ? "0" : rat_to_string(d.at(std::min(i, j), std::max(i, j))));
        std::cout << "\n";
    }
}

json facet_json(int n, const Facet& f)
{
    const char* kind = "";
    switch (f.kind) {
    case Facet::Kind::Left: kind = "left"; break;
    case Facet::Kind::Right: kind = "right"; break;
    case Facet::Kind::Triangle: kind = "triangle"; break;
    case Facet::Kind::Covering: kind = "covering"; break;
    }
    Split s = f.paired_split(n);
    json j{{"kind", kind}, {"i", f.i}, {"paired_split", {s.lo, s.hi}}};
    if (f.kind == Facet::Kind::Covering)
        j["j"] = f.j;
    return j;
}

std::vector<Split> parse_order(const std::string& text)
{
    std::vector<Split> order;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        int lo = 0, hi = 0;
        char dash = 0;
        std::istringstream ts(tok);
        if (!(ts >> lo >> dash >> hi) || dash != '-')
            throw ParseError("bad --order token '" + tok + "' (expected lo-hi)");
        order.push_back(Split{lo, hi});
    }
    return order;
}

struct Options {
    std::string input;
    std::string system_path;
    std::string format = "text";
    std::string order;
    int n = 0;
    int dilation = 1;
    bool exhaustive = false;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact polyhedral tools for equidistant circular split networks"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* c) {
        c->add_option("input,--input", opt.input, "input file")->required();
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", opt.format, "output format (text|json)")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* classify = app.add_subcommand("classify", "classify a dissimilarity matrix");
    classify->require_subcommand(1);
    auto* cl_fp = classify->add_subcommand("four-point", "tree-metric four-point condition");
    auto* cl_k = classify->add_subcommand("kalmanson", "Kalmanson condition");
    cl_k->add_flag("--exhaustive-orderings", opt.exhaustive,
                   "search all circular orderings (n <= 8)");
    auto* cl_m = classify->add_subcommand("metric", "triangle inequalities");
    for (auto* c : {cl_fp, cl_k, cl_m})
        add_input(c);

    auto* weights = app.add_subcommand("weights", "recover split weights from a matrix");
    add_input(weights);
    add_format(weights);

    auto* facets_cmd = app.add_subcommand("facets", "facet list of the equidistant cone");
    facets_cmd->add_option("--n", opt.n, "taxon count")->required();
    add_format(facets_cmd);

    auto* rays_cmd = app.add_subcommand("rays", "extreme rays of the equidistant cone");
    rays_cmd->add_option("--n", opt.n, "taxon count")->required();
    add_format(rays_cmd);

    auto* member = app.add_subcommand("membership", "locate a matrix relative to the cone");
    add_input(member);
    member->add_option("--system", opt.system_path, "split system for face membership");
    add_format(member);

    auto* decomp = app.add_subcommand("decompose", "write a matrix as a conic ray combination");
    add_input(decomp);
    add_format(decomp);

    auto* face_cmd = app.add_subcommand("face", "face of the cone containing a matrix");
    add_input(face_cmd);
    add_format(face_cmd);

    auto* xd = app.add_subcommand("xdiagram", "X-diagram machinery");
    xd->require_subcommand(1);
    auto* xd_show = xd->add_subcommand("show", "render the diagram of a matrix");
    auto* xd_check = xd->add_subcommand("check", "run the consistency rules");
    auto* xd_ray = xd->add_subcommand("ray", "staircase ray for the tight set");
    for (auto* c : {xd_show, xd_check, xd_ray})
        add_input(c);

    auto* cry = app.add_subcommand("cry", "Chan-Robbins-Yuen polytope maps");
    cry->require_subcommand(1);
    auto* cry_phi = cry->add_subcommand("phi", "map a CRY matrix into the unit cone slice");
    add_input(cry_phi);
    auto* cry_psi = cry->add_subcommand("psi", "map a cone-slice matrix back to CRY");
    add_input(cry_psi);
    auto* cry_vert = cry->add_subcommand("vertices", "vertex list of CRY_n");
    cry_vert->add_option("--n", opt.n, "matrix size")->required();
    auto* cry_vol = cry->add_subcommand("volume", "normalized volume");
    cry_vol->add_option("--n", opt.n, "matrix size")->required();
    auto* cry_ehr = cry->add_subcommand("ehrhart", "lattice points of a dilate");
    cry_ehr->add_option("--n", opt.n, "matrix size")->required();
    cry_ehr->add_option("--dilation", opt.dilation, "dilation factor")->required();

    auto* net = app.add_subcommand("net", "split-network graphs");
    net->require_subcommand(1);
    auto* net_build = net->add_subcommand("build", "build and list the network edges");
    auto* net_verify = net->add_subcommand("verify", "build and verify the network");
    auto* net_poly = net->add_subcommand("render-polygon", "dual polygon SVG");
    auto* net_graph = net->add_subcommand("render-graph", "Graphviz DOT drawing");
    for (auto* c : {net_build, net_verify, net_poly, net_graph})
        add_input(c);
    for (auto* c : {net_build, net_verify, net_graph})
        c->add_option("--order", opt.order, "insertion order, e.g. 1-3,3-5,2-4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        const bool js = opt.format == "json";

        if (*cl_fp) {
            auto d = load_matrix(opt.input);
            auto res = check_four_point(d);
            if (res.ok) {
                std::cout << "true\n";
                return kExitTrue;
            }
            const auto& w = *res.witness;
            std::cout << "false\nquadruple (" << w.quad[0] << "," << w.quad[1]
                      << "," << w.quad[2] << "," << w.quad[3] << ") sums "
                      << rat_to_string(w.sums[0]) << "," << rat_to_string(w.sums[1])
                      << "," << rat_to_string(w.sums[2]) << "\n";
            return kExitFalse;
        }
        if (*cl_k) {
            auto d = load_matrix(opt.input);
            if (opt.exhaustive) {
                auto ord = kalmanson_some_ordering(d);
                if (ord) {
                    std::cout << "true\norder";
                    for (int x : *ord)
                        std::cout << " " << x;
                    std::cout << "\n";
                    return kExitTrue;
                }
                std::cout << "false\n";
                return kExitFalse;
            }
            auto res = check_kalmanson(d);
            if (res.ok) {
                std::cout << "true\n";
                return kExitTrue;
            }
            const auto& w = *res.witness;
            std::cout << "false\nquadruple (" << w.quad[0] << "," << w.quad[1]
                      << "," << w.quad[2] << "," << w.quad[3] << ") sums "
                      << rat_to_string(w.sums[0]) << "," << rat_to_string(w.sums[1])
                      << "," << rat_to_string(w.sums[2]) << "\n";
            return kExitFalse;
        }
        if (*cl_m) {
            auto d = load_matrix(opt.input);
            auto res = check_metric(d);
            if (res.ok) {
                std::cout << "true\n";
                return kExitTrue;
            }
            std::cout << "false\ntriple (" << res.witness[0] << "," << res.witness[1]
                      << "," << res.witness[2] << ")\n";
            return kExitFalse;
        }

        if (*weights) {
            auto w = recover_weights(load_matrix(opt.input));
            if (js) {
                json out = json::array();
                for (size_t k = 0; k < w.sys.splits.size(); ++k)
                    out.push_back(json{{"split", {w.sys.splits[k].lo, w.sys.splits[k].hi}},
                                       {"weight", rat_json(w.weights[k])}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (size_t k = 0; k < w.sys.splits.size(); ++k)
                    if (w.weights[k] != 0)
                        std::cout << split_to_string(w.sys.splits[k]) << ": "
                                  << rat_to_string(w.weights[k]) << "\n";
            }
            return kExitTrue;
        }

        if (*facets_cmd) {
            auto fs = facets(opt.n);
            if (js) {
                json out = json::array();
                for (const Facet& f : fs)
                    out.push_back(facet_json(opt.n, f));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const Facet& f : fs)
                    std::cout << f.to_string() << " ~ "
                              << split_to_string(f.paired_split(opt.n)) << "\n";
            }
            return kExitTrue;
        }

        if (*rays_cmd) {
            auto rays = all_rays(opt.n);
            if (js) {
                json out = json::array();
                for (const auto& t : rays)
                    out.push_back(json{{"tau", t.to_string()},
                                       {"matrix", matrix_json(ray_vector(t))}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& t : rays)
                    std::cout << t.to_string() << "\n";
            }
            return kExitTrue;
        }

        if (*member) {
            auto d = load_matrix(opt.input);
            MembershipReport rep = opt.system_path.empty()
                                       ? membership(d)
                                       : membership(d, with_trivials(load_system(opt.system_path)));
            const char* status = rep.status == MembershipReport::Status::Interior
                                     ? "interior"
                                     : rep.status == MembershipReport::Status::OnFace
                                           ? "on-face"
                                           : "outside";
            if (js) {
                json out{{"status", status}};
                json face = json::array();
                for (const Split& s : rep.face.splits)
                    face.push_back({s.lo, s.hi});
                out["face"] = face;
                out["violations"] = rep.violations;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << status << "\n";
                if (rep.status == MembershipReport::Status::Outside) {
                    for (const auto& v : rep.violations)
                        std::cout << "violated: " << v << "\n";
                } else {
                    for (const Split& s : rep.face.splits)
                        std::cout << split_to_string(s) << "\n";
                }
            }
            return rep.status == MembershipReport::Status::Outside ? kExitFalse
                                                                   : kExitTrue;
        }

        if (*decomp) {
            auto d = load_matrix(opt.input);
            std::vector<DecompositionTerm> terms;
            try {
                terms = decompose(d);
            } catch (const std::domain_error&) {
                std::cout << "not in cone\n";
                return kExitFalse;
            }
            if (js) {
                json out = json::array();
                for (const auto& t : terms)
                    out.push_back(json{{"coeff", rat_json(t.coeff)},
                                       {"tau", t.tau.to_string()}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& t : terms)
                    std::cout << rat_to_string(t.coeff) << " * " << t.tau.to_string()
                              << "\n";
            }
            return kExitTrue;
        }

        if (*face_cmd) {
            auto d = load_matrix(opt.input);
            auto rep = membership(d);
            if (rep.status == MembershipReport::Status::Outside) {
                std::cout << "outside\n";
                return kExitFalse;
            }
            auto rays = rays_of_face(rep.face);
            if (js) {
                json splits = json::array();
                for (const Split& s : rep.face.splits)
                    splits.push_back({s.lo, s.hi});
                json taus = json::array();
                for (const auto& t : rays)
                    taus.push_back(t.to_string());
                std::cout << json{{"splits", splits}, {"rays", taus}}.dump(2) << "\n";
            } else {
                for (const Split& s : rep.face.splits)
                    std::cout << split_to_string(s) << "\n";
                std::cout << "rays:\n";
                for (const auto& t : rays)
                    std::cout << t.to_string() << "\n";
            }
            return kExitTrue;
        }

        if (*xd_show) {
            std::cout << render_ascii(xdiagram_of(load_matrix(opt.input)));
            return kExitTrue;
        }
        if (*xd_check) {
            auto viol = check_rules(xdiagram_of(load_matrix(opt.input)));
            if (viol.empty()) {
                std::cout << "consistent\n";
                return kExitTrue;
            }
            for (const auto& v : viol)
                std::cout << "rule " << v.rule << ": " << v.description << "\n";
            return kExitFalse;
        }
        if (*xd_ray) {
            auto tau = ray_for_tight_set(xdiagram_of(load_matrix(opt.input)));
            std::cout << (tau ? tau->to_string() : std::string("0")) << "\n";
            return kExitTrue;
        }

        if (*cry_phi) {
            auto x = cry_from_json(read_file(opt.input));
            print_matrix_csv(phi(x));
            return kExitTrue;
        }
        if (*cry_psi) {
            auto d = load_matrix(opt.input);
            CRYMatrix x;
            try {
                x = psi(d);
            } catch (const std::domain_error&) {
                std::cout << "not in polytope\n";
                return kExitFalse;
            }
            for (int i = 1; i <= x.n; ++i) {
                for (int j = 1; j <= x.n; ++j)
                    std::cout << (j > 1 ? "," : "") << rat_to_string(x.at(i, j));
                std::cout << "\n";
            }
            return kExitTrue;
        }
        if (*cry_vert) {
            for (const auto& x : cry_vertices(opt.n)) {
                for (int i = 1; i <= x.n; ++i) {
                    for (int j = 1; j <= x.n; ++j)
                        std::cout << (j > 1 ? "," : "") << rat_to_string(x.at(i, j));
                    std::cout << "\n";
                }
                std::cout << "\n";
            }
            return kExitTrue;
        }
        if (*cry_vol) {
            std::cout << rat_to_string(normalized_volume(opt.n)) << "\n";
            return kExitTrue;
        }
        if (*cry_ehr) {
            auto c = count_lattice_points(opt.n, opt.dilation);
            std::cout << c.pedc << "\n";
            return kExitTrue;
        }

        if (*net_build || *net_verify || *net_graph || *net_poly) {
            auto sys = with_trivials(load_system(opt.input));
            if (*net_poly) {
                std::cout << render_polygon(sys);
                return kExitTrue;
            }
            std::vector<Split> order;
            if (!opt.order.empty())
                order = parse_order(opt.order);
            auto g = build_network(sys, order);
            if (*net_verify) {
                auto res = verify_split_graph(g);
                if (res.ok) {
                    std::cout << "ok\n";
                    return kExitTrue;
                }
                std::cout << "failed: " << res.witness << "\n";
                return kExitFalse;
            }
            if (*net_graph) {
                std::cout << render_network(g);
                return kExitTrue;
            }
            for (const NetEdge& e : g.edges)
                std::cout << e.u << " -- " << e.v << " : "
                          << (e.label ? split_to_string(*e.label) : "root") << "\n";
            return kExitTrue;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
