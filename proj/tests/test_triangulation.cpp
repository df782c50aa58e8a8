#include "sl3/error.hpp"
#include "sl3/json_io.hpp"
#include "sl3/triangulation.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace sl3;

namespace {

Triangulation fixture(const std::string& name) { return load_triangulation(std::string(FIXTURE_DIR) + "/" + name + ".json"); }

const std::vector<std::string> kSurfaces = {"dstar", "triangle", "square", "annulus", "torus", "twice_punctured_disk"};

// Sum of the per-triangle quivers: a_k -> G -> b_k, b_k -> a_{k+1}, and the half arrow b_k -> a_k.
std::vector<std::vector<int>> oracle_matrix2(const Triangulation& tri, const QuiverLayout& l) {
    std::vector<std::vector<int>> m(l.size, std::vector<int>(l.size, 0));
    auto arrow = [&](Vertex i, Vertex j, int w2) {
        m[i][j] += w2;
        m[j][i] -= w2;
    };
    for (int t = 0; t < static_cast<int>(tri.triangles.size()); ++t) {
        const Vertex g = l.face_vertex[t];
        for (int k = 0; k < 3; ++k) {
            const Vertex a = l.slot_vertex(tri, t, k, true), b = l.slot_vertex(tri, t, k, false);
            const Vertex next = l.slot_vertex(tri, t, (k + 1) % 3, true);
            arrow(a, g, 2);
            arrow(g, b, 2);
            arrow(b, next, 2);
            arrow(b, a, 1);
        }
    }
    return m;
}

}  // namespace

TEST(Triangulation, FixturesValidate) {
    for (const auto& n : kSurfaces) EXPECT_TRUE(validate(fixture(n)).empty()) << n;
}

TEST(Triangulation, QuiverIsTheAmalgamOfTriangleQuivers) {
    for (const auto& n : kSurfaces) {
        const auto tri = fixture(n);
        const auto q = build_quiver(tri);
        EXPECT_EQ(q.seed.matrix2(), oracle_matrix2(tri, q.layout)) << n;
        for (std::size_t e = 0; e < tri.edges.size(); ++e)
            for (Vertex v : q.layout.edge_vertex[e]) EXPECT_EQ(q.seed.is_frozen(v), tri.edges[e].kind == EdgeKind::Boundary);
        for (Vertex v : q.layout.face_vertex) EXPECT_FALSE(q.seed.is_frozen(v));
    }
}

TEST(Triangulation, SingleTriangleHasSevenVertices) {
    const auto q = build_quiver(fixture("triangle"));
    EXPECT_EQ(q.seed.size(), 7u);
    EXPECT_EQ(q.seed.unfrozen().size(), 1u);
    const Vertex g = q.layout.face_vertex[0];
    int in = 0, out = 0;
    for (Vertex v = 0; v < 7; ++v) {
        if (q.seed.m2(v, g) > 0) ++in;
        if (q.seed.m2(g, v) > 0) ++out;
    }
    EXPECT_EQ(in, 3);
    EXPECT_EQ(out, 3);
}

TEST(Triangulation, CountsFollowEulerCharacteristic) {
    struct Row {
        std::string name;
        long chi;
        std::size_t vertices, unfrozen;
    };
    for (const auto& r : std::vector<Row>{{"dstar", 0, 10, 6},
                                          {"triangle", 1, 7, 1},
                                          {"square", 1, 12, 4},
                                          {"annulus", 0, 10, 6},
                                          {"torus", -1, 8, 8},
                                          {"twice_punctured_disk", -1, 18, 14}}) {
        const auto c = surface_counts(fixture(r.name));
        EXPECT_TRUE(c.consistent()) << r.name;
        EXPECT_EQ(c.chi, r.chi) << r.name;
        EXPECT_EQ(c.vertices, r.vertices) << r.name;
        EXPECT_EQ(c.unfrozen, r.unfrozen) << r.name;
    }
}

TEST(Triangulation, RejectsSelfFoldedTriangles) {
    auto tri = fixture("torus");
    tri.triangles[0].slots[1] = {tri.triangles[0].slots[0].edge, !tri.triangles[0].slots[0].forward};
    const auto v = validate(tri);
    ASSERT_FALSE(v.empty());
    EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("self-folded") != std::string::npos; }));
}

TEST(Triangulation, RejectsUnbalancedGluing) {
    auto tri = fixture("square");
    tri.triangles.pop_back();
    EXPECT_FALSE(validate(tri).empty());
    try {
        build_quiver(tri);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidTriangulation);
    }
}

TEST(Triangulation, SquareFlip) {
    const auto tri = fixture("square");
    const auto f = flip(tri, tri.edge_index("d"));
    const auto& d = f.flipped.edges[f.flipped.edge_index("d")];
    std::vector<std::string> ends = {f.flipped.points[d.ends[0]].id, f.flipped.points[d.ends[1]].id};
    std::sort(ends.begin(), ends.end());
    EXPECT_EQ(ends, (std::vector<std::string>{"p1", "p3"}));
    EXPECT_EQ(f.path.size(), 4u);
    EXPECT_EQ(apply_path(build_quiver(tri).seed, f.full_path()), build_quiver(f.flipped).seed);
    const auto back = flip(f.flipped, tri.edge_index("d"));
    EXPECT_TRUE(match_layouts(tri, back.flipped).has_value());
}

TEST(Triangulation, FlipErrors) {
    const auto square = fixture("square");
    try {
        flip(square, square.edge_index("s01"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BoundaryEdge);
    }
    const auto dstar = fixture("dstar");
    try {
        flip(dstar, dstar.edge_index("up"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidTriangulation);
    }
}

TEST(Triangulation, MatchLayoutsKeepsUntouchedOrientations) {
    const auto tri = fixture("torus");
    const auto pi = match_layouts(tri, tri);
    ASSERT_TRUE(pi.has_value());
    for (Vertex i = 0; i < pi->size(); ++i) EXPECT_EQ((*pi)[i], i);
    EXPECT_FALSE(match_layouts(tri, fixture("square")).has_value());
}

TEST(Triangulation, RoleLookup) {
    const auto tri = fixture("square");
    const auto q = build_quiver(tri);
    auto x = TropicalPoint::zero(Flavor::X, q.seed.size());
    x[q.layout.face_vertex[1]] = 5;
    EXPECT_EQ(x_face(q.layout, x, 1), 5);
    EXPECT_EQ(x_edge(q.layout, x, tri.edge_index("d"), 1), 0);
    try {
        x_face(q.layout, x, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RoleNotFound);
    }
    EXPECT_THROW(x_edge(q.layout, x, 0, 3), Error);
}
