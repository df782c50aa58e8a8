// Command-line front end. Output is JSON on stdout; errors go to stderr.
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include "sl3/catalog.hpp"
#include "sl3/ends.hpp"
#include "sl3/error.hpp"
#include "sl3/json_io.hpp"
#include "sl3/lamination.hpp"
#include "sl3/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace sl3;

namespace {

struct Options {
    std::string fixtures = SL3_DEFAULT_FIXTURES;
    std::vector<std::string> surfaces;
    std::string chart;
    std::string point;
    std::string path;
    std::string seed;
    std::string edge;
    std::string puncture;
    std::string suite;
    std::string multiset;
    std::string method = "pl";
    std::string name;
    bool all = false;
    bool reverse = false;
    bool rotate = false;
    bool pretty = false;
    int s = 0;
    std::uint64_t rng_seed = 1;
    std::size_t random_points = 1000;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j, const Options& o) { std::cout << (o.pretty ? j.dump(2) : j.dump()) << "\n"; }

// A surface argument is a file path, or the name of a fixture in the fixture directory.
Triangulation resolve_surface(const std::string& arg, const Options& o) {
    if (fs::exists(arg)) return load_triangulation(arg);
    const fs::path p = fs::path(o.fixtures) / (arg + ".json");
    if (fs::exists(p)) return load_triangulation(p.string());
    if (arg == "dstar") return dstar_triangulation();
    throw Usage("cannot find surface '" + arg + "'");
}

std::string first_puncture(const Triangulation& tri) {
    for (const auto& p : tri.points)
        if (p.kind == PointKind::Puncture) return p.id;
    throw Error(ErrorKind::MissingChart, "surface has no puncture");
}

// --chart NAME[:puncture]; without it the single --surface is used.
PunctureChart resolve_chart(const Options& o) {
    std::string name = o.chart, punct = o.puncture;
    if (const auto c = name.find(':'); c != std::string::npos) {
        punct = name.substr(c + 1);
        name = name.substr(0, c);
    }
    if (name.empty()) {
        if (o.surfaces.size() != 1) throw Usage("give --chart or exactly one --surface");
        name = o.surfaces.front();
    }
    if (name == "dstar" && (punct.empty() || punct == "p")) return dstar_chart();
    const auto tri = resolve_surface(name, o);
    return make_puncture_chart(tri, punct.empty() ? first_puncture(tri) : punct);
}

Triangulation single_surface(const Options& o) {
    if (o.surfaces.size() == 1) return resolve_surface(o.surfaces.front(), o);
    if (o.surfaces.empty() && !o.chart.empty()) return resolve_chart(o).tri;
    throw Usage("give exactly one --surface");
}

TropicalPoint require_point(const Options& o) {
    if (o.point.empty()) throw Usage("--point is required");
    return point_from_json(parse_json_arg(o.point));
}

json layout_json(const QuiverLayout& l, const Triangulation& tri) {
    json edges = json::object(), faces = json::array();
    for (std::size_t e = 0; e < tri.edges.size(); ++e)
        edges[tri.edges[e].id] = {l.edge_vertex[e][0] + 1, l.edge_vertex[e][1] + 1};
    for (Vertex f : l.face_vertex) faces.push_back(f + 1);
    return {{"edges", edges}, {"faces", faces}};
}

json counts_json(const SurfaceCounts& c) {
    return {{"chi", c.chi}, {"edges", c.edges}, {"interior_edges", c.interior_edges}, {"triangles", c.triangles},
            {"vertices", c.vertices}, {"unfrozen", c.unfrozen}, {"consistent", c.consistent()}};
}

json entry_json(const CatalogEntry& e) {
    json coords = json::object();
    for (const auto& [l, v] : e.coords) coords[std::to_string(l)] = to_string(v);
    return {{"name", e.name}, {"figure_ref", e.figure_ref}, {"coords", coords}, {"theta", to_json(e.theta)},
            {"casimir", to_json(casimir(to_point(e), dstar_chart()))}};
}

int cmd_quiver(const Options& o) {
    const auto tri = single_surface(o);
    const auto problems = validate(tri);
    if (!problems.empty()) throw Error(ErrorKind::InvalidTriangulation, problems.front());
    const auto q = build_quiver(tri);
    emit({{"surface", tri.name}, {"seed", to_json(q.seed)}, {"layout", layout_json(q.layout, tri)},
          {"counts", counts_json(surface_counts(tri))}},
         o);
    return 0;
}

ExchangeSeed base_seed(const Options& o) {
    if (!o.seed.empty()) return seed_from_json(parse_json_arg(o.seed));
    if (!o.chart.empty()) return resolve_chart(o).seed();
    if (o.surfaces.size() == 1) return build_quiver(resolve_surface(o.surfaces.front(), o)).seed;
    return dstar_chart().seed();
}

int cmd_mutate(const Options& o) {
    if (o.path.empty()) throw Usage("--path is required");
    const auto path = path_from_json(parse_json_arg(o.path));
    const auto seed = base_seed(o);
    if (o.point.empty()) {
        emit(to_json(apply_path(seed, path)), o);
        return 0;
    }
    const auto x = require_point(o);
    if (x.size() != seed.size()) throw Error(ErrorKind::ChartMismatch, "point length differs from the seed size");
    emit(to_json(apply_path(x, seed, path).first), o);
    return 0;
}

int cmd_flip(const Options& o) {
    const auto tri = single_surface(o);
    const int e = tri.edge_index(o.edge);
    if (e < 0) throw Usage("no edge '" + o.edge + "'");
    const auto f = flip(tri, e);
    MutationPath relabel = {MutationStep::permute(f.relabeling)};
    emit({{"flipped", to_json(f.flipped)}, {"path", to_json(f.path)}, {"lower_path", to_json(f.lower_path)},
          {"relabeling", to_json(relabel).at(0).at("permute")}, {"seed", to_json(build_quiver(f.flipped).seed)}},
         o);
    return 0;
}

int cmd_casimir(const Options& o) {
    const auto x = require_point(o);
    if (o.chart.empty() && o.surfaces.size() == 1) {
        const auto tri = single_surface(o);
        const auto q = build_quiver(tri);
        json out = json::object();
        for (std::size_t m = 0; m < tri.points.size(); ++m)
            if (tri.points[m].kind == PointKind::Puncture &&
                (o.puncture.empty() || o.puncture == tri.points[m].id))
                out[tri.points[m].id] = to_json(casimir_at(x, tri, q.layout, static_cast<int>(m)));
        emit(o.puncture.empty() ? out : out.at(o.puncture), o);
        return 0;
    }
    emit(to_json(casimir(x, resolve_chart(o))), o);
    return 0;
}

int cmd_weyl(const Options& o) {
    if (o.s != 1 && o.s != 2) throw Usage("--s must be 1 or 2");
    const auto ch = resolve_chart(o);
    const auto x = require_point(o);
    if (o.method == "pl") {
        emit(to_json(x.flavor == Flavor::A ? weyl_a_action(x, ch, o.s) : weyl_pl(o.s, x, ch)), o);
        return 0;
    }
    const auto loops = weyl_loop(o.s, ch);
    if (o.method != "loop" && o.method != "alt") throw Usage("--method is pl, loop or alt");
    const auto& path = o.method == "loop" ? loops.primary : loops.alternative;
    emit(to_json(CompiledPath(ch.seed(), path).apply(x)), o);
    return 0;
}

int cmd_dynkin(const Options& o) {
    const auto x = require_point(o);
    if (!o.chart.empty()) {
        const auto ch = resolve_chart(o);
        emit(to_json(dynkin_pl(x, ch.tri, ch.layout())), o);
        return 0;
    }
    const auto tri = single_surface(o);
    emit(to_json(dynkin_pl(x, tri, build_quiver(tri).layout)), o);
    return 0;
}

// "ends --multiset '2*i+ o-' [--s 1|2] [--reverse]"
int cmd_ends(const Options& o) {
    auto m = parse_multiset(o.multiset);
    json out = {{"input", to_string(m)}, {"theta", to_json(theta(m))}};
    if (o.reverse) m = dynkin(m);
    if (o.s == 1 || o.s == 2) m = weyl_act(o.s, m);
    else if (o.s != 0) throw Usage("--s must be 1 or 2");
    m = normalize(m);
    out["result"] = to_string(m);
    out["result_theta"] = to_json(theta(m));
    emit(out, o);
    return 0;
}

int cmd_catalog(const Options& o) {
    json out = json::array();
    for (const auto& e : catalog()) {
        if (!o.name.empty() && e.name != o.name) continue;
        auto entry = e;
        if (o.reverse) entry = orientation_reverse(entry);
        if (o.rotate) entry = pi_rotation(entry);
        out.push_back(entry_json(entry));
    }
    if (!o.name.empty() && out.empty()) throw Usage("no catalog entry '" + o.name + "'");
    emit(out, o);
    return 0;
}

int cmd_track(const Options& o) {
    if (o.path.empty()) throw Usage("--path is required");
    const auto ch = resolve_chart(o);
    const auto track = track_p_cluster(ch, path_from_json(parse_json_arg(o.path)));
    json stations = json::array();
    for (const auto& st : track.stations) {
        json theta = json::array(), star = json::array();
        for (const auto& c : st.theta) theta.push_back(to_json(c));
        for (const auto& c : st.theta_star) star.push_back(to_json(c));
        stations.push_back({{"step", st.step}, {"seed", to_json(st.seed)}, {"theta", theta}, {"theta_star", star}});
    }
    emit({{"path", to_json(track.path)}, {"stations", stations}}, o);
    return 0;
}

int cmd_verify(const Options& o) {
    if (o.all == !o.suite.empty()) throw Usage("give exactly one of --suite NAME or --all");
    SuiteOptions so;
    so.rng_seed = o.rng_seed;
    so.random_points = o.random_points;
    if (o.surfaces.empty()) {
        for (const char* n : {"dstar", "triangle", "square", "annulus", "torus", "twice_punctured_disk"}) {
            const fs::path p = fs::path(o.fixtures) / (std::string(n) + ".json");
            if (fs::exists(p)) so.surfaces.push_back(load_triangulation(p.string()));
        }
    } else {
        for (const auto& s : o.surfaces) so.surfaces.push_back(resolve_surface(s, o));
    }
    std::vector<std::string> names = o.all ? suite_names() : std::vector<std::string>{o.suite};
    json reports = json::array();
    bool pass = true;
    for (const auto& n : names) {
        const auto r = run_suite(n, so);
        pass &= r.pass();
        reports.push_back(r.to_json());
    }
    emit({{"pass", pass}, {"reports", reports}}, o);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"sl3 lamination toolkit: quivers, tropical mutations, Casimir, Weyl and Dynkin maps"};
    app.require_subcommand(1);
    app.add_option("--fixtures", o.fixtures, "Fixture directory")->capture_default_str();
    app.add_flag("--pretty", o.pretty, "Indent JSON output");

    auto surface = [&](CLI::App* c) { c->add_option("--surface", o.surfaces, "Triangulation file or fixture name"); };
    auto chart = [&](CLI::App* c) {
        c->add_option("--chart", o.chart, "Chart NAME[:puncture]");
        c->add_option("--puncture", o.puncture, "Puncture id");
    };
    auto point = [&](CLI::App* c) { c->add_option("--point", o.point, "Tropical point JSON or @FILE"); };
    auto pretty = [&](CLI::App* c) { c->add_flag("--pretty", o.pretty, "Indent JSON output"); };

    auto* quiver = app.add_subcommand("quiver", "Build the quiver of a triangulation");
    surface(quiver);
    auto* mutate = app.add_subcommand("mutate", "Apply a mutation path to a seed and a point");
    surface(mutate);
    chart(mutate);
    point(mutate);
    mutate->add_option("--path", o.path, "Path JSON or @FILE");
    mutate->add_option("--seed", o.seed, "Seed JSON or @FILE");
    auto* flipc = app.add_subcommand("flip", "Flip an interior edge");
    surface(flipc);
    flipc->add_option("--edge", o.edge, "Edge id")->required();
    auto* cas = app.add_subcommand("casimir", "Tropical Casimir coweight of an X-point");
    surface(cas);
    chart(cas);
    point(cas);
    auto* weyl = app.add_subcommand("weyl", "Weyl reflection at a puncture");
    chart(weyl);
    surface(weyl);
    point(weyl);
    weyl->add_option("--s", o.s, "Simple reflection 1 or 2")->required();
    weyl->add_option("--method", o.method, "pl, loop or alt")->capture_default_str();
    auto* dyn = app.add_subcommand("dynkin", "Dynkin involution of an X-point");
    surface(dyn);
    chart(dyn);
    point(dyn);
    auto* ends = app.add_subcommand("ends", "Act on a multiset of signed ends");
    ends->add_option("--multiset", o.multiset, "e.g. \"2*i+ o-\"")->required();
    ends->add_option("--s", o.s, "Simple reflection 1 or 2");
    ends->add_flag("--dynkin", o.reverse, "Apply the Dynkin involution first");
    auto* cat = app.add_subcommand("catalog", "Elementary braid table");
    cat->add_option("--name", o.name, "Single entry");
    cat->add_flag("--reverse", o.reverse, "Orientation reversal");
    cat->add_flag("--rotate", o.rotate, "Rotation by pi");
    auto* track = app.add_subcommand("track", "Casimir values of the delta points along a path");
    chart(track);
    surface(track);
    track->add_option("--path", o.path, "Path JSON or @FILE");
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    surface(verify);
    verify->add_option("--suite", o.suite, "Suite name");
    verify->add_flag("--all", o.all, "Run every suite");
    verify->add_option("--rng-seed", o.rng_seed, "Seed for random sample points")->capture_default_str();
    verify->add_option("--random-points", o.random_points, "Random sample points per sweep")->capture_default_str();
    for (auto* c : {quiver, mutate, flipc, cas, weyl, dyn, ends, cat, track, verify}) pretty(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*quiver) return cmd_quiver(o);
        if (*mutate) return cmd_mutate(o);
        if (*flipc) return cmd_flip(o);
        if (*cas) return cmd_casimir(o);
        if (*weyl) return cmd_weyl(o);
        if (*dyn) return cmd_dynkin(o);
        if (*ends) return cmd_ends(o);
        if (*cat) return cmd_catalog(o);
        if (*track) return cmd_track(o);
        if (*verify) return cmd_verify(o);
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
        return 2;
    }
    return 2;
}
