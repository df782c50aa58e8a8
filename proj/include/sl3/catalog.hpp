#pragma once

#include "sl3/exchange.hpp"
#include "sl3/json_io.hpp"
#include "sl3/lamination.hpp"
#include "sl3/lattice.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sl3 {

// Elementary braid on the once-punctured disk, in D* chart labels.
struct CatalogEntry {
    std::string name;
    std::string figure_ref;
    std::map<int, Rational> coords;  // label -> value, zeros omitted
    Coweight theta;
    bool operator==(const CatalogEntry&) const = default;
};

// The once-punctured disk with two special points; global ids equal the chart labels.
const Triangulation& dstar_triangulation();
const PunctureChart& dstar_chart();

// Throws ChartMismatch when a stored theta disagrees with the Casimir value of its coordinates.
std::vector<CatalogEntry> load_catalog(const json& j);
// The eleven braids, from the fixture compiled into the library.
const std::vector<CatalogEntry>& catalog();

TropicalPoint to_point(const CatalogEntry& e);
std::map<int, Rational> unfrozen_coords(const TropicalPoint& x);

CatalogEntry orientation_reverse(const CatalogEntry& e);
// Swaps 1<->2, 3<->5, 4<->6, 7<->9, 8<->10.
CatalogEntry pi_rotation(const CatalogEntry& e);
int pi_rotation_label(int label);

bool sign_coherence(const std::vector<CatalogEntry>& entries);

struct Station {
    std::size_t step = 0;  // number of path steps applied
    ExchangeSeed seed;
    std::vector<Coweight> theta;       // Casimir value of each delta point, pulled back to the base chart
    std::vector<Coweight> theta_star;  // its Dynkin dual
};

struct ClusterTrack {
    MutationPath path;
    std::vector<Station> stations;
};

ClusterTrack track_p_cluster(const PunctureChart& ch, const MutationPath& path);

// Distinct theta* values over the given vertices, read as weights.
std::set<Weight> p_cluster(const Station& st, const std::vector<Vertex>& vertices);

}  // namespace sl3
