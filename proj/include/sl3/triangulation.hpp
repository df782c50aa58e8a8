#pragma once

#include "sl3/exchange.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sl3 {

enum class PointKind { Puncture, Special };
enum class EdgeKind { Interior, Boundary };

struct MarkedPoint {
    std::string id;
    PointKind kind = PointKind::Special;
};

struct Edge {
    std::string id;
    std::array<int, 2> ends{};  // indices into marked_points; stored orientation ends[0] -> ends[1]
    EdgeKind kind = EdgeKind::Interior;
    // Optional fixed vertex ids (0-based) of i^1(E) near ends[0] and i^2(E) near ends[1].
    std::optional<std::array<Vertex, 2>> labels;
};

// A triangle side traversing an edge, forward means ends[0] -> ends[1].
struct Slot {
    int edge = 0;
    bool forward = true;
    bool operator==(const Slot&) const = default;
};

// Slots in counter-clockwise order: slot k runs from corner k to corner k+1.
struct Triangle {
    std::array<Slot, 3> slots{};
    std::optional<Vertex> face_label;
};

struct Triangulation {
    std::string name;
    std::vector<MarkedPoint> points;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;

    int point_index(const std::string& id) const;  // -1 if absent
    int edge_index(const std::string& id) const;   // -1 if absent

    int slot_start(int t, int k) const;
    int slot_end(int t, int k) const;
    int corner(int t, int k) const { return slot_start(t, k); }

    std::size_t punctures() const;
    std::size_t special_points() const;
    std::size_t interior_edges() const;
    // Euler characteristic of the punctured surface.
    long euler_characteristic() const;
};

struct QuiverLayout {
    std::size_t size = 0;
    std::vector<std::array<Vertex, 2>> edge_vertex;  // [i^1(E), i^2(E)] relative to the stored orientation
    std::vector<Vertex> face_vertex;                 // i(T)
    std::vector<bool> frozen;

    // Vertex of slot (t,k) near its start or its end.
    Vertex slot_vertex(const Triangulation& tri, int t, int k, bool near_start) const;
};

struct Quiver {
    ExchangeSeed seed;
    QuiverLayout layout;
};

std::vector<std::string> validate(const Triangulation& tri);

// Amalgamated quiver: per-triangle quivers glued along edges, dashed arrows of weight 1/2.
Quiver build_quiver(const Triangulation& tri);

// Reverses the stored orientation of an edge, keeping its vertices where they are.
Triangulation reverse_edge(const Triangulation& tri, int edge);

struct FlipResult {
    Triangulation flipped;
    MutationPath path;        // mu on: E near its end, E near its start, right face, left face
    MutationPath lower_path;  // mu on: E near its start, E near its end, left face, right face
    Permutation relabeling;   // old vertex ids -> vertex ids of build_quiver(flipped)

    MutationPath full_path() const;
};

FlipResult flip(const Triangulation& tri, int edge);

// Vertex permutation carrying build_quiver(a) onto build_quiver(b) when a and b describe the
// same triangulation with the same edge ids, possibly with edges reversed and triangles
// reordered or rotated, preferring the fewest reversed edges. Empty when no such correspondence exists.
std::optional<Permutation> match_layouts(const Triangulation& a, const Triangulation& b);

// Role-indexed reads.
Rational x_face(const QuiverLayout& layout, const TropicalPoint& p, int triangle);
Rational x_edge(const QuiverLayout& layout, const TropicalPoint& p, int edge, int s);  // s in {1,2}

struct SurfaceCounts {
    long chi = 0;
    std::size_t edges = 0, interior_edges = 0, triangles = 0, vertices = 0, unfrozen = 0;
    long expected_edges = 0, expected_interior_edges = 0, expected_triangles = 0, expected_vertices = 0,
         expected_unfrozen = 0;
    bool consistent() const;
};

SurfaceCounts surface_counts(const Triangulation& tri);

}  // namespace sl3
