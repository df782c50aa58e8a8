#include "sl3/json_io.hpp"
#include "sl3/error.hpp"

#include <fstream>
#include <sstream>

namespace sl3 {

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw Error(ErrorKind::ParseError, "rationals are written as \"p/q\" strings or integers");
}

std::size_t one_based(const json& j, std::size_t n) {
    if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, "vertex ids are integers");
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace

json to_json(const ExchangeSeed& seed) {
    json frozen = json::array();
    for (Vertex i = 0; i < seed.size(); ++i)
        if (seed.is_frozen(i)) frozen.push_back(i + 1);
    return {{"size", seed.size()}, {"frozen", frozen}, {"matrix2", seed.matrix2()}};
}

json to_json(const TropicalPoint& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(to_string(c));
    return {{"flavor", p.flavor == Flavor::X ? "X" : "A"}, {"coords", coords}};
}

json to_json(const MutationPath& path) {
    json out = json::array();
    for (const auto& s : path) {
        if (s.kind == MutationStep::Kind::Mutate) {
            out.push_back({{"mutate", s.k + 1}});
        } else {
            json sigma = json::array();
            for (Vertex v : s.sigma) sigma.push_back(v + 1);
            out.push_back({{"permute", sigma}});
        }
    }
    return out;
}

json to_json(const Coweight& c) { return {{"w1", to_string(c.c1)}, {"w2", to_string(c.c2)}}; }

json to_json(const Weight& w) { return {{"w1", to_string(w.w1)}, {"w2", to_string(w.w2)}}; }

json to_json(const Triangulation& tri) {
    json j;
    if (!tri.name.empty()) j["name"] = tri.name;
    j["marked_points"] = json::array();
    for (const auto& p : tri.points)
        j["marked_points"].push_back({{"id", p.id}, {"kind", p.kind == PointKind::Puncture ? "puncture" : "special"}});
    j["edges"] = json::array();
    for (const auto& e : tri.edges) {
        json je = {{"id", e.id},
                   {"ends", {tri.points[e.ends[0]].id, tri.points[e.ends[1]].id}},
                   {"kind", e.kind == EdgeKind::Interior ? "interior" : "boundary"}};
        if (e.labels) je["vertices"] = {(*e.labels)[0] + 1, (*e.labels)[1] + 1};
        j["edges"].push_back(je);
    }
    j["triangles"] = json::array();
    for (const auto& t : tri.triangles) {
        json jt;
        jt["slots"] = json::array();
        for (const auto& s : t.slots) jt["slots"].push_back({{"edge", tri.edges[s.edge].id}, {"forward", s.forward}});
        if (t.face_label) jt["face"] = *t.face_label + 1;
        j["triangles"].push_back(jt);
    }
    return j;
}

ExchangeSeed seed_from_json(const json& j) {
    return guarded([&] {
        const std::size_t n = j.at("size").get<std::size_t>();
        std::vector<bool> frozen(n, false);
        for (const auto& f : j.at("frozen")) frozen[one_based(f, n)] = true;
        auto m2 = j.at("matrix2").get<std::vector<std::vector<int>>>();
        if (m2.size() != n) throw Error(ErrorKind::InvalidSeed, "matrix2 has the wrong number of rows");
        return ExchangeSeed::from_matrix2(m2, frozen);
    });
}

TropicalPoint point_from_json(const json& j) {
    return guarded([&] {
        TropicalPoint p;
        const auto flavor = j.at("flavor").get<std::string>();
        if (flavor == "X") p.flavor = Flavor::X;
        else if (flavor == "A") p.flavor = Flavor::A;
        else throw Error(ErrorKind::ParseError, "flavor must be X or A");
        for (const auto& c : j.at("coords")) p.coords.push_back(rational_from_json(c));
        return p;
    });
}

MutationPath path_from_json(const json& j) {
    return guarded([&] {
        MutationPath path;
        if (!j.is_array()) throw Error(ErrorKind::ParseError, "a path is a JSON array");
        for (const auto& s : j) {
            if (s.contains("mutate")) {
                const long long k = s.at("mutate").get<long long>();
                if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "vertex ids start at 1");
                path.push_back(MutationStep::mutate(static_cast<Vertex>(k - 1)));
            } else if (s.contains("permute")) {
                Permutation sigma;
                const auto& arr = s.at("permute");
                for (const auto& v : arr) sigma.push_back(one_based(v, arr.size()));
                path.push_back(MutationStep::permute(std::move(sigma)));
            } else {
                throw Error(ErrorKind::ParseError, "path steps are {\"mutate\":k} or {\"permute\":[...]}");
            }
        }
        return path;
    });
}

Coweight coweight_from_json(const json& j) {
    return guarded([&] { return Coweight{rational_from_json(j.at("w1")), rational_from_json(j.at("w2"))}; });
}

Triangulation triangulation_from_json(const json& j) {
    return guarded([&] {
        Triangulation tri;
        tri.name = j.value("name", "");
        for (const auto& p : j.at("marked_points")) {
            const auto kind = p.at("kind").get<std::string>();
            if (kind != "puncture" && kind != "special")
                throw Error(ErrorKind::ParseError, "marked point kind must be puncture or special");
            tri.points.push_back({p.at("id").get<std::string>(), kind == "puncture" ? PointKind::Puncture : PointKind::Special});
        }
        for (const auto& e : j.at("edges")) {
            Edge edge;
            edge.id = e.at("id").get<std::string>();
            const auto& ends = e.at("ends");
            if (ends.size() != 2) throw Error(ErrorKind::ParseError, "edge " + edge.id + " needs two ends");
            for (int s = 0; s < 2; ++s) {
                edge.ends[s] = tri.point_index(ends[s].get<std::string>());
                if (edge.ends[s] < 0) throw Error(ErrorKind::ParseError, "edge " + edge.id + " has an unknown end");
            }
            const auto kind = e.value("kind", "interior");
            if (kind != "interior" && kind != "boundary")
                throw Error(ErrorKind::ParseError, "edge kind must be interior or boundary");
            edge.kind = kind == "interior" ? EdgeKind::Interior : EdgeKind::Boundary;
            if (e.contains("vertices")) {
                const auto v = e.at("vertices").get<std::vector<long long>>();
                if (v.size() != 2 || v[0] < 1 || v[1] < 1)
                    throw Error(ErrorKind::ParseError, "edge " + edge.id + " vertices must be two ids >= 1");
                edge.labels = std::array<Vertex, 2>{static_cast<Vertex>(v[0] - 1), static_cast<Vertex>(v[1] - 1)};
            }
            tri.edges.push_back(edge);
        }
        for (const auto& t : j.at("triangles")) {
            Triangle tr;
            const auto& slots = t.at("slots");
            if (slots.size() != 3) throw Error(ErrorKind::ParseError, "a triangle has three slots");
            for (int k = 0; k < 3; ++k) {
                const auto id = slots[k].at("edge").get<std::string>();
                tr.slots[k].edge = tri.edge_index(id);
                if (tr.slots[k].edge < 0) throw Error(ErrorKind::ParseError, "unknown edge " + id);
                tr.slots[k].forward = slots[k].value("forward", true);
            }
            if (t.contains("face")) {
                const long long f = t.at("face").get<long long>();
                if (f < 1) throw Error(ErrorKind::ParseError, "face ids start at 1");
                tr.face_label = static_cast<Vertex>(f - 1);
            }
            tri.triangles.push_back(tr);
        }
        return tri;
    });
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return guarded([&] { return json::parse(ss.str()); });
}

json parse_json_arg(const std::string& text) {
    if (!text.empty() && text[0] == '@') return read_json_file(text.substr(1));
    return guarded([&] { return json::parse(text); });
}

Triangulation load_triangulation(const std::string& path) { return triangulation_from_json(read_json_file(path)); }

}  // namespace sl3
