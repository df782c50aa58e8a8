#pragma once

#include "sl3/exchange.hpp"
#include "sl3/lattice.hpp"
#include "sl3/triangulation.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sl3 {

// Two triangles around a puncture p, labelled 1..10:
//   1, 2  edge vertices next to p (upper edge, lower edge)
//   3, 5  the far vertices of those edges
//   4, 6  the faces (right, left)
//   7, 8  far side of the right triangle (7 on the upper side), 9, 10 far side of the left one.
struct PunctureChart {
    Triangulation tri;
    Quiver quiver;
    int puncture = -1;
    std::array<Vertex, 11> local{};  // local[1..10]; local[0] unused

    Vertex v(int label) const;
    const ExchangeSeed& seed() const { return quiver.seed; }
    const QuiverLayout& layout() const { return quiver.layout; }
    std::size_t size() const { return quiver.seed.size(); }
    Permutation swap(int a, int b) const { return transposition(size(), v(a), v(b)); }
};

// Arrows of the local quiver as (tail, head) label pairs.
const std::vector<std::pair<int, int>>& puncture_chart_arrows();

PunctureChart make_puncture_chart(const Triangulation& tri, const std::string& puncture_id);

// A special point m lying in a single triangle with corners (BL, BR, m):
//   1 near m and 3 near BL on the side m -> BL, 2 near m and 5 near BR on BR -> m,
//   6 near BL and 7 near BR on the opposite side, 4 the face.
struct SpecialPointChart {
    Triangulation tri;
    Quiver quiver;
    int point = -1;
    std::array<Vertex, 8> local{};

    Vertex v(int label) const;
    std::size_t size() const { return quiver.seed.size(); }
};

SpecialPointChart make_special_chart(const Triangulation& tri, const std::string& point_id);

// Coefficients of the two coroot directions attached to a marked point m:
// alpha1 collects far edge vertices and faces at the corners of m, alpha2 the near edge vertices.
struct PeripheralVectors {
    std::vector<int> alpha1, alpha2;
};

PeripheralVectors peripheral_vectors(const Triangulation& tri, const QuiverLayout& layout, int point);

Coweight casimir(const TropicalPoint& x, const PunctureChart& ch);
Coweight casimir_at(const TropicalPoint& x, const Triangulation& tri, const QuiverLayout& layout, int puncture);

// x_i = sum_j eps_ij a_j on unfrozen i; frozen outputs are 0.
TropicalPoint ensemble_tropical(const TropicalPoint& a, const ExchangeSeed& seed);

struct ExactSequenceReport {
    std::size_t size = 0, unfrozen = 0, rank_eps = 0;
    std::size_t ker_rank = 0, ann_rank = 0;
    std::size_t expected_ker = 0, expected_ann = 0;
    bool basis_in_kernel = false;
    bool basis_independent = false;
    bool coroots_annihilate = false;
    bool coroots_independent = false;
    bool chart_vectors_agree = true;
    std::vector<std::string> notes;

    bool ok() const;
};

ExactSequenceReport verify_exact_sequence(const Triangulation& tri);

TropicalPoint weyl_pl_r2(const TropicalPoint& x, const PunctureChart& ch);
// Conjugate of r2 by the Dynkin involution of the chart's triangulation.
TropicalPoint weyl_pl_r1(const TropicalPoint& x, const PunctureChart& ch);
TropicalPoint weyl_pl(int s, const TropicalPoint& x, const PunctureChart& ch);

struct WeylLoops {
    MutationPath primary;      // mu3 mu4 mu5 (5 6) mu5 mu4 mu3, or mu1 (1 2) mu1
    MutationPath alternative;  // mu3 mu4 mu5 mu6 mu4 mu3 (5 6), or mu1 mu2 (1 2)
};

WeylLoops weyl_loop(int s, const PunctureChart& ch);

// The primary loop started at each vertex of the cycle (3 4 5 6) in both directions,
// or at either of 1, 2.
std::vector<MutationPath> weyl_loop_variants(int s, const PunctureChart& ch);

TropicalPoint dynkin_pl(const TropicalPoint& x, const Triangulation& tri, const QuiverLayout& layout);

Rational potential_u(const TropicalPoint& a, const PunctureChart& ch, int s);
TropicalPoint weyl_a_action(const TropicalPoint& a, const PunctureChart& ch, int s);

Rational w_m_tropical(const TropicalPoint& x, const SpecialPointChart& ch);
// nu_E = x1 w1v + (x3 + [x4]_+) w2v
Coweight pinning_from_point(const TropicalPoint& x, const SpecialPointChart& ch);

struct Pinning {
    std::map<std::string, Coweight> nu;  // one per boundary interval
};

bool is_in_Lp0(const std::vector<Coweight>& casimir_values, const Pinning& pinning);

}  // namespace sl3
