#include "sl3/lamination.hpp"
#include "sl3/error.hpp"

#include <algorithm>
#include <set>

namespace sl3 {

namespace {

void require_x(const TropicalPoint& x, std::size_t n) {
    if (x.flavor != Flavor::X) throw Error(ErrorKind::FlavorMismatch, "expected an X-point");
    if (x.size() != n) throw Error(ErrorKind::ChartMismatch, "point length differs from chart size");
}

void require_a(const TropicalPoint& a, std::size_t n) {
    if (a.flavor != Flavor::A) throw Error(ErrorKind::FlavorMismatch, "expected an A-point");
    if (a.size() != n) throw Error(ErrorKind::ChartMismatch, "point length differs from chart size");
}

std::vector<std::pair<int, int>> corners_at(const Triangulation& tri, int point) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t t = 0; t < tri.triangles.size(); ++t)
        for (int k = 0; k < 3; ++k)
            if (tri.corner(static_cast<int>(t), k) == point) out.emplace_back(static_cast<int>(t), k);
    return out;
}

int slot_edge(const Triangulation& tri, int t, int k) { return tri.triangles[t].slots[((k % 3) + 3) % 3].edge; }

}  // namespace

Vertex PunctureChart::v(int label) const {
    if (label < 1 || label > 10) throw Error(ErrorKind::RoleNotFound, "puncture chart label " + std::to_string(label));
    return local[label];
}

Vertex SpecialPointChart::v(int label) const {
    if (label < 1 || label > 7) throw Error(ErrorKind::RoleNotFound, "special point chart label " + std::to_string(label));
    return local[label];
}

const std::vector<std::pair<int, int>>& puncture_chart_arrows() {
    static const std::vector<std::pair<int, int>> arrows = {
        {3, 4}, {4, 5}, {5, 6}, {6, 3}, {2, 4}, {4, 1}, {1, 6}, {6, 2},
        {4, 7}, {7, 3}, {5, 8}, {8, 4}, {3, 10}, {10, 6}, {6, 9}, {9, 5},
    };
    return arrows;
}

PunctureChart make_puncture_chart(const Triangulation& tri, const std::string& puncture_id) {
    PunctureChart ch;
    ch.tri = tri;
    ch.quiver = build_quiver(tri);
    ch.puncture = tri.point_index(puncture_id);
    if (ch.puncture < 0) throw Error(ErrorKind::MissingChart, "no marked point " + puncture_id);
    if (tri.points[ch.puncture].kind != PointKind::Puncture)
        throw Error(ErrorKind::MissingChart, puncture_id + " is not a puncture");
    const auto corners = corners_at(tri, ch.puncture);
    if (corners.size() != 2 || corners[0].first == corners[1].first)
        throw Error(ErrorKind::MissingChart, "the star of " + puncture_id + " is not a pair of triangles");

    const auto& L = ch.quiver.layout;
    const auto [tr, k] = corners[0];
    const auto [tl, j] = corners[1];
    if (slot_edge(tri, tl, j - 1) != slot_edge(tri, tr, k) || slot_edge(tri, tl, j) != slot_edge(tri, tr, k - 1))
        throw Error(ErrorKind::MissingChart, "the two triangles at " + puncture_id + " are not glued along both edges at it");

    auto& loc = ch.local;
    loc[1] = L.slot_vertex(tri, tr, k - 1, false);
    loc[3] = L.slot_vertex(tri, tr, k - 1, true);
    loc[2] = L.slot_vertex(tri, tr, k, true);
    loc[5] = L.slot_vertex(tri, tr, k, false);
    loc[8] = L.slot_vertex(tri, tr, k + 1, true);
    loc[7] = L.slot_vertex(tri, tr, k + 1, false);
    loc[4] = L.face_vertex[tr];
    loc[10] = L.slot_vertex(tri, tl, j + 1, true);
    loc[9] = L.slot_vertex(tri, tl, j + 1, false);
    loc[6] = L.face_vertex[tl];

    const auto& seed = ch.quiver.seed;
    std::set<Vertex> ids(loc.begin() + 1, loc.end());
    if (ids.size() != 10) throw Error(ErrorKind::ChartMismatch, "local labels are not distinct");
    int expected[11][11] = {};
    for (auto [a, b] : puncture_chart_arrows()) {
        expected[a][b] = 2;
        expected[b][a] = -2;
    }
    for (int a = 1; a <= 6; ++a) {
        if (seed.is_frozen(loc[a])) throw Error(ErrorKind::ChartMismatch, "local vertex " + std::to_string(a) + " is frozen");
        for (int b = 1; b <= 10; ++b)
            if (seed.m2(loc[a], loc[b]) != expected[a][b])
                throw Error(ErrorKind::ChartMismatch,
                            "local arrow pattern differs at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        for (Vertex w = 0; w < seed.size(); ++w)
            if (!ids.count(w) && seed.m2(loc[a], w) != 0)
                throw Error(ErrorKind::ChartMismatch, "local vertex " + std::to_string(a) + " has an arrow leaving the chart");
    }
    return ch;
}

SpecialPointChart make_special_chart(const Triangulation& tri, const std::string& point_id) {
    SpecialPointChart ch;
    ch.tri = tri;
    ch.quiver = build_quiver(tri);
    ch.point = tri.point_index(point_id);
    if (ch.point < 0) throw Error(ErrorKind::MissingChart, "no marked point " + point_id);
    if (tri.points[ch.point].kind != PointKind::Special)
        throw Error(ErrorKind::MissingChart, point_id + " is not a special point");
    const auto corners = corners_at(tri, ch.point);
    if (corners.size() != 1) throw Error(ErrorKind::MissingChart, point_id + " does not belong to exactly one triangle");
    const auto [t, k] = corners[0];
    const auto& L = ch.quiver.layout;
    ch.local[1] = L.slot_vertex(tri, t, k, true);
    ch.local[3] = L.slot_vertex(tri, t, k, false);
    ch.local[5] = L.slot_vertex(tri, t, k + 2, true);
    ch.local[2] = L.slot_vertex(tri, t, k + 2, false);
    ch.local[6] = L.slot_vertex(tri, t, k + 1, true);
    ch.local[7] = L.slot_vertex(tri, t, k + 1, false);
    ch.local[4] = L.face_vertex[t];
    return ch;
}

PeripheralVectors peripheral_vectors(const Triangulation& tri, const QuiverLayout& layout, int point) {
    PeripheralVectors pv{std::vector<int>(layout.size, 0), std::vector<int>(layout.size, 0)};
    for (std::size_t e = 0; e < tri.edges.size(); ++e)
        for (int s = 0; s < 2; ++s)
            if (tri.edges[e].ends[s] == point) {
                ++pv.alpha2[layout.edge_vertex[e][s]];
                ++pv.alpha1[layout.edge_vertex[e][1 - s]];
            }
    for (auto [t, k] : corners_at(tri, point)) ++pv.alpha1[layout.face_vertex[t]];
    return pv;
}

Coweight casimir(const TropicalPoint& x, const PunctureChart& ch) {
    require_x(x, ch.size());
    return {x[ch.v(3)] + x[ch.v(4)] + x[ch.v(5)] + x[ch.v(6)], x[ch.v(1)] + x[ch.v(2)]};
}

Coweight casimir_at(const TropicalPoint& x, const Triangulation& tri, const QuiverLayout& layout, int puncture) {
    require_x(x, layout.size);
    const auto pv = peripheral_vectors(tri, layout, puncture);
    Coweight c;
    for (Vertex i = 0; i < layout.size; ++i) {
        if (pv.alpha1[i]) c.c1 += pv.alpha1[i] * x[i];
        if (pv.alpha2[i]) c.c2 += pv.alpha2[i] * x[i];
    }
    return c;
}

TropicalPoint ensemble_tropical(const TropicalPoint& a, const ExchangeSeed& seed) {
    require_a(a, seed.size());
    auto x = TropicalPoint::zero(Flavor::X, seed.size());
    for (Vertex i = 0; i < seed.size(); ++i) {
        if (seed.is_frozen(i)) continue;
        for (Vertex j = 0; j < seed.size(); ++j)
            if (seed.m2(i, j)) x[i] += Rational(seed.m2(i, j), 2) * a[j];
    }
    return x;
}

bool ExactSequenceReport::ok() const {
    return ker_rank == expected_ker && ann_rank == expected_ann && basis_in_kernel && basis_independent &&
           coroots_annihilate && coroots_independent && chart_vectors_agree;
}

ExactSequenceReport verify_exact_sequence(const Triangulation& tri) {
    const Quiver q = build_quiver(tri);
    const auto& seed = q.seed;
    const auto uf = seed.unfrozen();
    ExactSequenceReport r;
    r.size = seed.size();
    r.unfrozen = uf.size();

    std::vector<RationalVector> rows;
    for (Vertex i : uf) {
        RationalVector row(seed.size());
        for (Vertex j = 0; j < seed.size(); ++j) row[j] = seed.eps(i, j);
        rows.push_back(std::move(row));
    }
    r.rank_eps = rank(rows);
    r.ker_rank = r.unfrozen - r.rank_eps;
    r.ann_rank = r.size - r.rank_eps;
    r.expected_ker = 2 * tri.punctures();
    r.expected_ann = 2 * tri.points.size();

    // Kernel of the dual of the ensemble map: covectors w on unfrozen vertices with w^T eps = 0.
    std::vector<RationalVector> ker_basis;
    r.basis_in_kernel = true;
    std::vector<RationalVector> coroots;
    r.coroots_annihilate = true;
    for (std::size_t m = 0; m < tri.points.size(); ++m) {
        const auto pv = peripheral_vectors(tri, q.layout, static_cast<int>(m));
        for (const auto* coef : {&pv.alpha1, &pv.alpha2}) {
            RationalVector full(seed.size());
            for (Vertex i = 0; i < seed.size(); ++i) full[i] = (*coef)[i];
            for (Vertex i : uf) {
                Rational s = 0;
                for (Vertex j = 0; j < seed.size(); ++j) s += seed.eps(i, j) * full[j];
                if (s != 0) r.coroots_annihilate = false;
            }
            coroots.push_back(full);
            if (tri.points[m].kind != PointKind::Puncture) continue;
            RationalVector w;
            for (Vertex i = 0; i < seed.size(); ++i) {
                if (seed.is_frozen(i)) {
                    if (full[i] != 0) r.basis_in_kernel = false;
                } else {
                    w.push_back(full[i]);
                }
            }
            for (Vertex j = 0; j < seed.size(); ++j) {
                Rational s = 0;
                for (std::size_t a = 0; a < uf.size(); ++a) s += w[a] * seed.eps(uf[a], j);
                if (s != 0) r.basis_in_kernel = false;
            }
            ker_basis.push_back(std::move(w));
        }
    }
    r.basis_independent = rank(ker_basis) == ker_basis.size() && ker_basis.size() == r.expected_ker;
    r.coroots_independent = rank(coroots) == coroots.size() && coroots.size() == r.expected_ann;

    // Where the local charts exist, their explicit vectors must be the ones used above.
    for (std::size_t m = 0; m < tri.points.size(); ++m) {
        const auto pv = peripheral_vectors(tri, q.layout, static_cast<int>(m));
        std::vector<int> a1(seed.size(), 0), a2(seed.size(), 0);
        try {
            if (tri.points[m].kind == PointKind::Puncture) {
                const auto ch = make_puncture_chart(tri, tri.points[m].id);
                for (int l : {3, 4, 5, 6}) a1[ch.v(l)] = 1;
                for (int l : {1, 2}) a2[ch.v(l)] = 1;
            } else {
                const auto ch = make_special_chart(tri, tri.points[m].id);
                for (int l : {3, 4, 5}) a1[ch.v(l)] = 1;
                for (int l : {1, 2}) a2[ch.v(l)] = 1;
            }
        } catch (const Error&) {
            r.notes.push_back("no local chart at " + tri.points[m].id);
            continue;
        }
        if (a1 != pv.alpha1 || a2 != pv.alpha2) {
            r.chart_vectors_agree = false;
            r.notes.push_back("chart vectors differ at " + tri.points[m].id);
        }
    }
    return r;
}

TropicalPoint weyl_pl_r2(const TropicalPoint& x, const PunctureChart& ch) {
    require_x(x, ch.size());
    const Rational x1 = x[ch.v(1)], x2 = x[ch.v(2)];
    TropicalPoint y = x;
    y[ch.v(1)] = -x2;
    y[ch.v(2)] = -x1;
    y[ch.v(4)] += -positive_part(-x1) + positive_part(x2);
    y[ch.v(6)] += positive_part(x1) - positive_part(-x2);
    return y;
}

TropicalPoint weyl_pl_r1(const TropicalPoint& x, const PunctureChart& ch) {
    require_x(x, ch.size());
    return dynkin_pl(weyl_pl_r2(dynkin_pl(x, ch.tri, ch.layout()), ch), ch.tri, ch.layout());
}

TropicalPoint weyl_pl(int s, const TropicalPoint& x, const PunctureChart& ch) {
    if (s == 1) return weyl_pl_r1(x, ch);
    if (s == 2) return weyl_pl_r2(x, ch);
    throw Error(ErrorKind::IndexOutOfRange, "simple index must be 1 or 2");
}

WeylLoops weyl_loop(int s, const PunctureChart& ch) {
    auto mu = [&](int l) { return MutationStep::mutate(ch.v(l)); };
    auto tr = [&](int a, int b) { return MutationStep::permute(ch.swap(a, b)); };
    if (s == 2) return {{mu(1), tr(1, 2), mu(1)}, {mu(1), mu(2), tr(1, 2)}};
    if (s == 1)
        return {{mu(3), mu(4), mu(5), tr(5, 6), mu(5), mu(4), mu(3)},
                {mu(3), mu(4), mu(5), mu(6), mu(4), mu(3), tr(5, 6)}};
    throw Error(ErrorKind::IndexOutOfRange, "simple index must be 1 or 2");
}

std::vector<MutationPath> weyl_loop_variants(int s, const PunctureChart& ch) {
    auto mu = [&](int l) { return MutationStep::mutate(ch.v(l)); };
    auto tr = [&](int a, int b) { return MutationStep::permute(ch.swap(a, b)); };
    std::vector<MutationPath> out;
    if (s == 2) {
        out.push_back({mu(1), tr(1, 2), mu(1)});
        out.push_back({mu(2), tr(1, 2), mu(2)});
        out.push_back({mu(1), mu(2), tr(1, 2)});
        out.push_back({mu(2), mu(1), tr(1, 2)});
        return out;
    }
    if (s != 1) throw Error(ErrorKind::IndexOutOfRange, "simple index must be 1 or 2");
    const std::vector<std::vector<int>> cycles = {{3, 4, 5, 6}, {3, 6, 5, 4}};
    for (const auto& c : cycles)
        for (int r = 0; r < 4; ++r) {
            const int a = c[r], b = c[(r + 1) % 4], d = c[(r + 2) % 4], e = c[(r + 3) % 4];
            out.push_back({mu(a), mu(b), mu(d), tr(d, e), mu(d), mu(b), mu(a)});
        }
    return out;
}

TropicalPoint dynkin_pl(const TropicalPoint& x, const Triangulation& tri, const QuiverLayout& layout) {
    require_x(x, layout.size);
    TropicalPoint y = x;
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) y[layout.face_vertex[t]] = -x[layout.face_vertex[t]];
    for (std::size_t e = 0; e < tri.edges.size(); ++e) {
        // T_L traverses E along its stored orientation, so it lies on the left of i^1 -> i^2.
        Rational left = 0, right = 0;
        for (std::size_t t = 0; t < tri.triangles.size(); ++t)
            for (const auto& s : tri.triangles[t].slots)
                if (s.edge == static_cast<int>(e)) (s.forward ? left : right) = x[layout.face_vertex[t]];
        const Vertex i1 = layout.edge_vertex[e][0], i2 = layout.edge_vertex[e][1];
        y[i1] = x[i2] + positive_part(left) - positive_part(-right);
        y[i2] = x[i1] + positive_part(right) - positive_part(-left);
    }
    return y;
}

Rational potential_u(const TropicalPoint& a, const PunctureChart& ch, int s) {
    require_a(a, ch.size());
    auto A = [&](int l) -> const Rational& { return a[ch.v(l)]; };
    if (s == 1) {
        return rmin(rmin(A(3) + A(4) - A(1) - A(7), A(4) + A(5) - A(2) - A(8)),
                    rmin(A(5) + A(6) - A(2) - A(9), A(6) + A(3) - A(1) - A(10)));
    }
    if (s == 2) return rmin(A(1) + A(2) - A(4), A(1) + A(2) - A(6));
    throw Error(ErrorKind::IndexOutOfRange, "simple index must be 1 or 2");
}

TropicalPoint weyl_a_action(const TropicalPoint& a, const PunctureChart& ch, int s) {
    const Rational u = potential_u(a, ch, s);
    TropicalPoint b = a;
    if (s == 1)
        for (int l : {3, 4, 5, 6}) b[ch.v(l)] -= u;
    else
        for (int l : {1, 2}) b[ch.v(l)] -= u;
    return b;
}

Rational w_m_tropical(const TropicalPoint& x, const SpecialPointChart& ch) {
    require_x(x, ch.size());
    return rmax(x[ch.v(1)], x[ch.v(3)] + positive_part(x[ch.v(4)]));
}

Coweight pinning_from_point(const TropicalPoint& x, const SpecialPointChart& ch) {
    require_x(x, ch.size());
    return {x[ch.v(1)], x[ch.v(3)] + positive_part(x[ch.v(4)])};
}

bool is_in_Lp0(const std::vector<Coweight>& casimir_values, const Pinning& pinning) {
    return std::all_of(casimir_values.begin(), casimir_values.end(), is_dominant) &&
           std::all_of(pinning.nu.begin(), pinning.nu.end(), [](const auto& kv) { return is_antidominant(kv.second); });
}

}  // namespace sl3
