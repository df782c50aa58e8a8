#include "sl3/triangulation.hpp"
#include "sl3/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sl3 {

int Triangulation::point_index(const std::string& id) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].id == id) return static_cast<int>(i);
    return -1;
}

int Triangulation::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return static_cast<int>(i);
    return -1;
}

int Triangulation::slot_start(int t, int k) const {
    const Slot& s = triangles.at(t).slots.at(((k % 3) + 3) % 3);
    const Edge& e = edges.at(s.edge);
    return s.forward ? e.ends[0] : e.ends[1];
}

int Triangulation::slot_end(int t, int k) const {
    const Slot& s = triangles.at(t).slots.at(((k % 3) + 3) % 3);
    const Edge& e = edges.at(s.edge);
    return s.forward ? e.ends[1] : e.ends[0];
}

std::size_t Triangulation::punctures() const {
    return std::count_if(points.begin(), points.end(), [](const MarkedPoint& p) { return p.kind == PointKind::Puncture; });
}

std::size_t Triangulation::special_points() const { return points.size() - punctures(); }

std::size_t Triangulation::interior_edges() const {
    return std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.kind == EdgeKind::Interior; });
}

long Triangulation::euler_characteristic() const {
    return static_cast<long>(points.size()) - static_cast<long>(edges.size()) + static_cast<long>(triangles.size()) -
           static_cast<long>(punctures());
}

Vertex QuiverLayout::slot_vertex(const Triangulation& tri, int t, int k, bool near_start) const {
    const Slot& s = tri.triangles.at(t).slots.at(((k % 3) + 3) % 3);
    const auto& ev = edge_vertex.at(s.edge);
    // forward: the start of the slot is ends[0], where i^1 sits
    const bool first = (s.forward == near_start);
    return first ? ev[0] : ev[1];
}

bool SurfaceCounts::consistent() const {
    return static_cast<long>(edges) == expected_edges && static_cast<long>(interior_edges) == expected_interior_edges &&
           static_cast<long>(triangles) == expected_triangles && static_cast<long>(vertices) == expected_vertices &&
           static_cast<long>(unfrozen) == expected_unfrozen;
}

SurfaceCounts surface_counts(const Triangulation& tri) {
    SurfaceCounts c;
    c.chi = tri.euler_characteristic();
    const long mb = static_cast<long>(tri.special_points());
    c.edges = tri.edges.size();
    c.interior_edges = tri.interior_edges();
    c.triangles = tri.triangles.size();
    c.vertices = 2 * c.edges + c.triangles;
    c.unfrozen = c.vertices - 2 * (c.edges - c.interior_edges);
    c.expected_edges = -3 * c.chi + 2 * mb;
    c.expected_interior_edges = -3 * c.chi + mb;
    c.expected_triangles = -2 * c.chi + mb;
    c.expected_vertices = -8 * c.chi + 5 * mb;
    c.expected_unfrozen = -8 * c.chi + 3 * mb;
    return c;
}

std::vector<std::string> validate(const Triangulation& tri) {
    std::vector<std::string> out;
    const int np = static_cast<int>(tri.points.size());
    const int ne = static_cast<int>(tri.edges.size());
    if (tri.triangles.empty()) out.push_back("no triangles");

    bool indices_ok = true;
    for (const auto& e : tri.edges)
        for (int end : e.ends)
            if (end < 0 || end >= np) {
                out.push_back("edge " + e.id + " has an unknown endpoint");
                indices_ok = false;
            }
    for (std::size_t t = 0; t < tri.triangles.size(); ++t)
        for (const auto& s : tri.triangles[t].slots)
            if (s.edge < 0 || s.edge >= ne) {
                out.push_back("triangle " + std::to_string(t) + " refers to an unknown edge");
                indices_ok = false;
            }
    if (!indices_ok) return out;

    std::vector<int> uses(ne, 0), forward_uses(ne, 0);
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        const auto& tr = tri.triangles[t];
        const int ti = static_cast<int>(t);
        for (int k = 0; k < 3; ++k) {
            ++uses[tr.slots[k].edge];
            if (tr.slots[k].forward) ++forward_uses[tr.slots[k].edge];
            if (tri.slot_end(ti, k) != tri.slot_start(ti, k + 1))
                out.push_back("triangle " + std::to_string(t) + ": slots " + std::to_string(k) + " and " +
                              std::to_string((k + 1) % 3) + " do not meet");
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (tr.slots[a].edge == tr.slots[b].edge)
                    out.push_back("triangle " + std::to_string(t) + " is self-folded along edge " +
                                  tri.edges[tr.slots[a].edge].id);
    }

    std::vector<int> boundary_degree(np, 0);
    for (int e = 0; e < ne; ++e) {
        const Edge& edge = tri.edges[e];
        if (edge.kind == EdgeKind::Interior) {
            if (uses[e] != 2) out.push_back("interior edge " + edge.id + " borne by " + std::to_string(uses[e]) + " slots");
            else if (forward_uses[e] != 1) out.push_back("interior edge " + edge.id + " glued with matching orientations");
        } else {
            if (uses[e] != 1) out.push_back("boundary edge " + edge.id + " borne by " + std::to_string(uses[e]) + " slots");
            for (int end : edge.ends) {
                ++boundary_degree[end];
                if (tri.points[end].kind == PointKind::Puncture)
                    out.push_back("boundary edge " + edge.id + " ends at puncture " + tri.points[end].id);
            }
        }
    }
    std::vector<bool> used_point(np, false);
    for (const auto& e : tri.edges)
        for (int end : e.ends) used_point[end] = true;
    for (int p = 0; p < np; ++p) {
        if (!used_point[p]) out.push_back("marked point " + tri.points[p].id + " lies on no edge");
        if (tri.points[p].kind == PointKind::Special && boundary_degree[p] != 2)
            out.push_back("special point " + tri.points[p].id + " is not on exactly two boundary edge ends");
    }

    const auto c = surface_counts(tri);
    if (tri.punctures() == 1 && tri.special_points() == 1 && c.chi == 0)
        out.push_back("once-punctured disk with a single special point");
    if (static_cast<long>(c.triangles) != c.expected_triangles)
        out.push_back("triangle count " + std::to_string(c.triangles) + " differs from -2chi+|M_b| = " +
                      std::to_string(c.expected_triangles));
    if (static_cast<long>(c.edges) != c.expected_edges)
        out.push_back("edge count " + std::to_string(c.edges) + " differs from -3chi+2|M_b| = " +
                      std::to_string(c.expected_edges));
    if (static_cast<long>(c.interior_edges) != c.expected_interior_edges)
        out.push_back("interior edge count " + std::to_string(c.interior_edges) + " differs from -3chi+|M_b| = " +
                      std::to_string(c.expected_interior_edges));

    bool any_label = false, all_labels = true;
    for (const auto& e : tri.edges) {
        any_label |= e.labels.has_value();
        all_labels &= e.labels.has_value();
    }
    for (const auto& t : tri.triangles) {
        any_label |= t.face_label.has_value();
        all_labels &= t.face_label.has_value();
    }
    if (any_label && !all_labels) out.push_back("vertex labels given for only some roles");
    if (all_labels) {
        const std::size_t n = 2 * tri.edges.size() + tri.triangles.size();
        std::vector<int> hit(n, 0);
        bool range_ok = true;
        auto mark = [&](Vertex v) {
            if (v >= n) range_ok = false;
            else ++hit[v];
        };
        for (const auto& e : tri.edges) {
            mark((*e.labels)[0]);
            mark((*e.labels)[1]);
        }
        for (const auto& t : tri.triangles) mark(*t.face_label);
        if (!range_ok || std::any_of(hit.begin(), hit.end(), [](int h) { return h != 1; }))
            out.push_back("vertex labels do not partition 1.." + std::to_string(n));
    }
    return out;
}

Quiver build_quiver(const Triangulation& tri) {
    auto v = validate(tri);
    if (!v.empty()) throw Error(ErrorKind::InvalidTriangulation, v.front());

    QuiverLayout layout;
    layout.size = 2 * tri.edges.size() + tri.triangles.size();
    layout.edge_vertex.resize(tri.edges.size());
    layout.face_vertex.resize(tri.triangles.size());
    const bool labelled = !tri.edges.empty() && tri.edges.front().labels.has_value();
    for (std::size_t e = 0; e < tri.edges.size(); ++e)
        layout.edge_vertex[e] = labelled ? *tri.edges[e].labels : std::array<Vertex, 2>{2 * e, 2 * e + 1};
    for (std::size_t t = 0; t < tri.triangles.size(); ++t)
        layout.face_vertex[t] = labelled ? *tri.triangles[t].face_label : 2 * tri.edges.size() + t;
    layout.frozen.assign(layout.size, false);
    for (std::size_t e = 0; e < tri.edges.size(); ++e)
        if (tri.edges[e].kind == EdgeKind::Boundary) {
            layout.frozen[layout.edge_vertex[e][0]] = true;
            layout.frozen[layout.edge_vertex[e][1]] = true;
        }

    ExchangeSeed seed(layout.size, layout.frozen);
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        const int ti = static_cast<int>(t);
        const Vertex g = layout.face_vertex[t];
        for (int k = 0; k < 3; ++k) {
            const Vertex a = layout.slot_vertex(tri, ti, k, true);
            const Vertex b = layout.slot_vertex(tri, ti, k, false);
            const Vertex next_a = layout.slot_vertex(tri, ti, k + 1, true);
            seed.add_m2(a, g, 2);
            seed.add_m2(g, b, 2);
            seed.add_m2(b, next_a, 2);  // corner arrow
            seed.add_m2(b, a, 1);       // dashed, cancels across interior edges
        }
    }
    return {seed, layout};
}

Triangulation reverse_edge(const Triangulation& tri, int edge) {
    Triangulation out = tri;
    Edge& e = out.edges.at(edge);
    std::swap(e.ends[0], e.ends[1]);
    if (e.labels) std::swap((*e.labels)[0], (*e.labels)[1]);
    for (auto& t : out.triangles)
        for (auto& s : t.slots)
            if (s.edge == edge) s.forward = !s.forward;
    return out;
}

MutationPath FlipResult::full_path() const {
    MutationPath p = path;
    p.push_back(MutationStep::permute(relabeling));
    return p;
}

FlipResult flip(const Triangulation& tri, int edge) {
    auto v = validate(tri);
    if (!v.empty()) throw Error(ErrorKind::InvalidTriangulation, v.front());
    if (edge < 0 || edge >= static_cast<int>(tri.edges.size())) throw Error(ErrorKind::IndexOutOfRange, "no such edge");
    if (tri.edges[edge].kind == EdgeKind::Boundary)
        throw Error(ErrorKind::BoundaryEdge, "edge " + tri.edges[edge].id + " is a boundary edge");

    int tl = -1, kl = -1, tr = -1, kr = -1;
    for (std::size_t t = 0; t < tri.triangles.size(); ++t)
        for (int k = 0; k < 3; ++k) {
            const Slot& s = tri.triangles[t].slots[k];
            if (s.edge != edge) continue;
            if (s.forward) tl = static_cast<int>(t), kl = k;
            else tr = static_cast<int>(t), kr = k;
        }
    if (tl == tr) throw Error(ErrorKind::SelfGluedQuadrilateral, "both sides of " + tri.edges[edge].id + " lie in one triangle");

    // E runs B -> T with the left triangle (L,B,T) and the right triangle (R,T,B).
    const auto& TL = tri.triangles[tl];
    const auto& TR = tri.triangles[tr];
    const int apex_l = tri.corner(tl, kl + 2);
    const int apex_r = tri.corner(tr, kr + 2);

    FlipResult res;
    res.flipped = tri;
    Edge& ne = res.flipped.edges[edge];
    ne.ends = {apex_l, apex_r};
    Triangle top, bottom;
    top.slots = {Slot{edge, true}, TR.slots[(kr + 2) % 3], TL.slots[(kl + 1) % 3]};
    bottom.slots = {TL.slots[(kl + 2) % 3], TR.slots[(kr + 1) % 3], Slot{edge, false}};
    top.face_label = TL.face_label;
    bottom.face_label = TR.face_label;
    res.flipped.triangles[tl] = top;
    res.flipped.triangles[tr] = bottom;
    auto fv = validate(res.flipped);
    if (!fv.empty()) throw Error(ErrorKind::InvalidTriangulation, "flip produced an invalid triangulation: " + fv.front());

    const auto before = build_quiver(tri).layout;
    const auto after = build_quiver(res.flipped).layout;
    const Vertex e_top = before.edge_vertex[edge][1];
    const Vertex e_bottom = before.edge_vertex[edge][0];
    const Vertex f_left = before.face_vertex[tl];
    const Vertex f_right = before.face_vertex[tr];
    res.path = {MutationStep::mutate(e_top), MutationStep::mutate(e_bottom), MutationStep::mutate(f_right),
                MutationStep::mutate(f_left)};
    res.lower_path = {MutationStep::mutate(e_bottom), MutationStep::mutate(e_top), MutationStep::mutate(f_left),
                      MutationStep::mutate(f_right)};

    res.relabeling.resize(before.size);
    for (Vertex i = 0; i < before.size; ++i) res.relabeling[i] = i;
    for (std::size_t e = 0; e < tri.edges.size(); ++e)
        for (int s = 0; s < 2; ++s) res.relabeling[before.edge_vertex[e][s]] = after.edge_vertex[e][s];
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) res.relabeling[before.face_vertex[t]] = after.face_vertex[t];
    res.relabeling[e_top] = after.face_vertex[tl];
    res.relabeling[e_bottom] = after.face_vertex[tr];
    res.relabeling[f_left] = after.edge_vertex[edge][0];
    res.relabeling[f_right] = after.edge_vertex[edge][1];
    return res;
}

std::optional<Permutation> match_layouts(const Triangulation& a, const Triangulation& b) {
    if (a.edges.size() != b.edges.size() || a.triangles.size() != b.triangles.size() || a.points.size() != b.points.size())
        return std::nullopt;
    const std::size_t ne = a.edges.size();
    std::vector<int> to_b(ne);
    std::vector<std::vector<bool>> options(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const int eb = b.edge_index(a.edges[e].id);
        if (eb < 0) return std::nullopt;
        to_b[e] = eb;
        const auto& ea = a.edges[e];
        const auto& ebb = b.edges[eb];
        auto pid = [](const Triangulation& t, int i) { return t.points[i].id; };
        const bool same = pid(a, ea.ends[0]) == pid(b, ebb.ends[0]) && pid(a, ea.ends[1]) == pid(b, ebb.ends[1]);
        const bool rev = pid(a, ea.ends[0]) == pid(b, ebb.ends[1]) && pid(a, ea.ends[1]) == pid(b, ebb.ends[0]);
        if (same) options[e].push_back(false);
        if (rev) options[e].push_back(true);
        if (options[e].empty()) return std::nullopt;
    }
    const auto qa = build_quiver(a).layout;
    const auto qb = build_quiver(b).layout;

    std::vector<bool> flipped(ne, false);
    std::optional<Permutation> found;
    std::size_t best = ne + 1;
    std::function<void(std::size_t)> search = [&](std::size_t e) {
        if (e < ne) {
            for (bool f : options[e]) {
                flipped[e] = f;
                search(e + 1);
            }
            return;
        }
        std::vector<int> tri_map(a.triangles.size(), -1);
        std::vector<bool> used(b.triangles.size(), false);
        for (std::size_t t = 0; t < a.triangles.size(); ++t) {
            for (std::size_t u = 0; u < b.triangles.size() && tri_map[t] < 0; ++u) {
                if (used[u]) continue;
                for (int rot = 0; rot < 3; ++rot) {
                    bool ok = true;
                    for (int k = 0; k < 3 && ok; ++k) {
                        const Slot& sa = a.triangles[t].slots[k];
                        const Slot& sb = b.triangles[u].slots[(k + rot) % 3];
                        ok = sb.edge == to_b[sa.edge] && sb.forward == (sa.forward != flipped[sa.edge]);
                    }
                    if (ok) {
                        tri_map[t] = static_cast<int>(u);
                        used[u] = true;
                        break;
                    }
                }
            }
            if (tri_map[t] < 0) return;
        }
        Permutation perm(qa.size);
        for (std::size_t e2 = 0; e2 < ne; ++e2)
            for (int s = 0; s < 2; ++s)
                perm[qa.edge_vertex[e2][s]] = qb.edge_vertex[to_b[e2]][flipped[e2] ? 1 - s : s];
        for (std::size_t t = 0; t < a.triangles.size(); ++t) perm[qa.face_vertex[t]] = qb.face_vertex[tri_map[t]];
        // Fewest reversals wins: on a torus, reversing every edge is a symmetry, not the identification.
        const auto reversals = static_cast<std::size_t>(std::count(flipped.begin(), flipped.end(), true));
        if (reversals < best) {
            best = reversals;
            found = perm;
        }
    };
    search(0);
    return found;
}

Rational x_face(const QuiverLayout& layout, const TropicalPoint& p, int triangle) {
    if (triangle < 0 || triangle >= static_cast<int>(layout.face_vertex.size()))
        throw Error(ErrorKind::RoleNotFound, "no triangle " + std::to_string(triangle));
    if (p.size() != layout.size) throw Error(ErrorKind::RoleNotFound, "point length differs from layout");
    return p[layout.face_vertex[triangle]];
}

Rational x_edge(const QuiverLayout& layout, const TropicalPoint& p, int edge, int s) {
    if (edge < 0 || edge >= static_cast<int>(layout.edge_vertex.size()) || (s != 1 && s != 2))
        throw Error(ErrorKind::RoleNotFound, "no edge role (" + std::to_string(edge) + "," + std::to_string(s) + ")");
    if (p.size() != layout.size) throw Error(ErrorKind::RoleNotFound, "point length differs from layout");
    return p[layout.edge_vertex[edge][s - 1]];
}

}  // namespace sl3
