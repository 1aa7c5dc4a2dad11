#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "sfkit/flower.hpp"

namespace sfkit {

struct NonManifold : Error { using Error::Error; };
struct NotSimplyConnected : Error { using Error::Error; };
struct ChartFailure : Error { using Error::Error; };
struct MissingLabel : Error { using Error::Error; };

/// An oriented triangulation of a sphere or disc.
struct TriComplex {
    int V = 0;
    std::vector<std::array<int, 3>> faces;

    struct EdgeInfo {
        int v, w;           // v < w
        int f_left = -1;    // face containing the directed edge (v, w)
        int f_right = -1;   // face containing (w, v)
    };
    std::vector<EdgeInfo> edges;
    std::vector<int> degree;
    std::vector<bool> boundary_vertex;
    std::vector<std::vector<int>> star_petals;  // neighbors in cyclic order
    std::vector<std::vector<int>> star_faces;   // faces in the same cyclic order

    int edge_index(int v, int w) const;
    bool interior_edge(int e) const { return edges[e].f_left >= 0 && edges[e].f_right >= 0; }
    bool interior_vertex(int v) const { return !boundary_vertex[v]; }
    int euler() const { return V - static_cast<int>(edges.size()) + static_cast<int>(faces.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
};

/// Validates and indexes a face list (vertices 0..V-1). Rejects non-manifold
/// gluings, orientation mismatches, and complexes that are not simply
/// connected (Euler characteristic must be 1 or 2).
TriComplex build_complex(const std::vector<std::array<int, 3>>& faces);

/// The soccerball complex: the triangulation whose dual is the classic
/// soccer-ball pattern (pentagons at the 12 degree-5 vertices, hexagons at
/// the 20 degree-6 vertices). Vertices 0..11 have degree 5; around every
/// degree-6 vertex the neighbor degrees alternate 5, 6, 5, 6, 5, 6, so the
/// complex carries exactly two edge types (5-6 and 6-6).
TriComplex soccerball_complex();

/// Real schwarzian per interior edge (undirected).
class EdgeLabel {
public:
    void set(int v, int w, double s);
    double get(int v, int w) const;
    bool has(int v, int w) const;
    std::size_t size() const { return s_.size(); }

private:
    static std::uint64_t key(int v, int w);
    std::unordered_map<std::uint64_t, double> s_;
};

/// Labels for the soccerball: s on 5-6 edges, s_prime on 6-6 edges.
EdgeLabel soccerball_edge_label(const TriComplex& K, double s, double s_prime);

/// Breadth-first spanning tree of the dual graph.
struct DualTree {
    int root = 0;
    std::vector<int> parent_face;   // -1 for the root
    std::vector<int> parent_edge;   // edge index crossed from the parent
    std::vector<int> order;         // faces in BFS order
    std::vector<int> non_tree_edges;  // interior edges not crossed
};

DualTree dual_spanning_tree(const TriComplex& K, int root_face = 0);

struct HolonomyEntry {
    int edge;
    double discrepancy;
};

/// A schwarzian-driven layout: per-face circle triples (each face owns its
/// copies), a representative circle per vertex, and the holonomy report over
/// non-tree dual edges.
struct PackingLayout {
    TriComplex K;
    EdgeLabel label;
    int root_face = 0;
    std::vector<std::array<GenCircle, 3>> face_circles;  // aligned with K.faces
    std::vector<GenCircle> vertex_circle;
    std::vector<HolonomyEntry> holonomy;

    double max_holonomy() const;
};

/// Lays the complex out from the base triple placed on the root face,
/// traversing the dual spanning tree and placing each new circle by its edge
/// schwarzian. The label must cover every interior edge.
PackingLayout layout_complex(const TriComplex& K, const EdgeLabel& label, const FaceTriple& base,
                             int root_face = 0);

struct VertexVerdict {
    int v;
    LabelVerdict verdict;
    bool out_of_range = false;  // some spoke had s >= 1
};

/// Runs the flower closure checks on every interior vertex's cyclic spoke
/// labels.
std::vector<VertexVerdict> check_packing_label(const TriComplex& K, const EdgeLabel& label);

/// Angle swept around interior vertex v: the star of v is developed
/// face-by-face from its circles in the layout, the vertex circle is charted
/// onto the unit circle (with the star holonomy's interior fixed point at the
/// origin when the holonomy is elliptic), and the arcs subtended by
/// consecutive tangency points are summed. Integer multiples of 2*pi indicate
/// local packing; other values are cone angles.
double angle_sum(const PackingLayout& layout, int v);

}  // namespace sfkit
