#include "sl3/catalog.hpp"
#include "sl3/error.hpp"

#include "embedded_fixtures.hpp"

namespace sl3 {

const Triangulation& dstar_triangulation() {
    static const Triangulation tri = triangulation_from_json(json::parse(embedded::kDstar));
    return tri;
}

const PunctureChart& dstar_chart() {
    static const PunctureChart ch = make_puncture_chart(dstar_triangulation(), "p");
    return ch;
}

std::vector<CatalogEntry> load_catalog(const json& j) {
    std::vector<CatalogEntry> out;
    try {
        for (const auto& item : j) {
            CatalogEntry e;
            e.name = item.at("name").get<std::string>();
            e.figure_ref = item.value("figure_ref", "");
            for (const auto& [label, value] : item.at("coords").items()) {
                const int l = std::stoi(label);
                if (l < 1 || l > 10) throw Error(ErrorKind::RoleNotFound, e.name + ": label " + label);
                const Rational v = parse_rational(value.get<std::string>());
                if (v != 0) e.coords[l] = v;
            }
            e.theta = coweight_from_json(item.at("theta"));
            const Coweight derived = casimir(to_point(e), dstar_chart());
            if (derived != e.theta)
                throw Error(ErrorKind::ChartMismatch, e.name + ": stored theta differs from the Casimir value");
            out.push_back(std::move(e));
        }
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::ParseError, ex.what());
    }
    return out;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = load_catalog(json::parse(embedded::kCatalog));
    return entries;
}

TropicalPoint to_point(const CatalogEntry& e) {
    const auto& ch = dstar_chart();
    auto x = TropicalPoint::zero(Flavor::X, ch.size());
    for (const auto& [l, v] : e.coords) x[ch.v(l)] = v;
    return x;
}

std::map<int, Rational> unfrozen_coords(const TropicalPoint& x) {
    const auto& ch = dstar_chart();
    std::map<int, Rational> out;
    for (int l = 1; l <= 6; ++l)
        if (x[ch.v(l)] != 0) out[l] = x[ch.v(l)];
    return out;
}

CatalogEntry orientation_reverse(const CatalogEntry& e) {
    const auto& ch = dstar_chart();
    CatalogEntry r = e;
    r.name = e.name + "*";
    r.coords = unfrozen_coords(dynkin_pl(to_point(e), ch.tri, ch.layout()));
    r.theta = dynkin_star(e.theta);
    return r;
}

int pi_rotation_label(int label) {
    static const int image[11] = {0, 2, 1, 5, 6, 3, 4, 9, 10, 7, 8};
    if (label < 1 || label > 10) throw Error(ErrorKind::RoleNotFound, "label " + std::to_string(label));
    return image[label];
}

CatalogEntry pi_rotation(const CatalogEntry& e) {
    CatalogEntry r = e;
    r.name = e.name + "^pi";
    r.coords.clear();
    for (const auto& [l, v] : e.coords) r.coords[pi_rotation_label(l)] = v;
    return r;
}

bool sign_coherence(const std::vector<CatalogEntry>& entries) {
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b)
            for (const auto& [l, v] : entries[a].coords) {
                auto it = entries[b].coords.find(l);
                if (it != entries[b].coords.end() && v * it->second < 0) return false;
            }
    return true;
}

ClusterTrack track_p_cluster(const PunctureChart& ch, const MutationPath& path) {
    ClusterTrack track;
    track.path = path;
    const std::size_t n = ch.size();
    ExchangeSeed seed = ch.seed();
    for (std::size_t t = 0; t <= path.size(); ++t) {
        if (t > 0) seed = apply_path(seed, MutationPath{path[t - 1]});
        const MutationPath back = invert_path(MutationPath(path.begin(), path.begin() + t));
        const CompiledPath pull(seed, back);
        Station st;
        st.step = t;
        st.seed = seed;
        for (Vertex j = 0; j < n; ++j) {
            const auto base = pull.apply(TropicalPoint::basis(Flavor::X, n, j));
            st.theta.push_back(casimir(base, ch));
            st.theta_star.push_back(dynkin_star(st.theta.back()));
        }
        track.stations.push_back(std::move(st));
    }
    return track;
}

std::set<Weight> p_cluster(const Station& st, const std::vector<Vertex>& vertices) {
    std::set<Weight> out;
    for (Vertex v : vertices) out.insert(as_weight(st.theta_star.at(v)));
    return out;
}

}  // namespace sl3
