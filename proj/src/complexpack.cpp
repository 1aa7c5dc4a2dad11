#include "sfkit/complexpack.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace sfkit {

int TriComplex::edge_index(int v, int w) const {
    if (v > w) std::swap(v, w);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].v == v && edges[i].w == w) return static_cast<int>(i);
    return -1;
}

TriComplex build_complex(const std::vector<std::array<int, 3>>& faces) {
    if (faces.empty()) throw Error("build_complex: no faces");
    int V = 0;
    for (const auto& f : faces)
        for (int v : f) {
            if (v < 0) throw Error("build_complex: negative vertex index");
            V = std::max(V, v + 1);
        }

    TriComplex K;
    K.V = V;
    K.faces = faces;

    std::set<std::array<int, 3>> seen;
    for (auto f : faces) {
        if (f[0] == f[1] || f[1] == f[2] || f[2] == f[0])
            throw NonManifold("build_complex: degenerate face");
        std::array<int, 3> key = f;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            throw NonManifold("build_complex: duplicate face");
    }

    // Directed edges: each may appear in at most one face.
    std::map<std::pair<int, int>, int> directed;
    for (int fi = 0; fi < K.face_count(); ++fi) {
        const auto& f = faces[fi];
        for (int k = 0; k < 3; ++k) {
            auto key = std::make_pair(f[k], f[(k + 1) % 3]);
            if (!directed.emplace(key, fi).second)
                throw NonManifold("build_complex: repeated directed edge (orientation mismatch)");
        }
    }

    std::map<std::pair<int, int>, int> edge_of;
    for (const auto& [de, fi] : directed) {
        int v = std::min(de.first, de.second), w = std::max(de.first, de.second);
        auto key = std::make_pair(v, w);
        auto it = edge_of.find(key);
        if (it == edge_of.end()) {
            TriComplex::EdgeInfo e;
            e.v = v;
            e.w = w;
            edge_of.emplace(key, static_cast<int>(K.edges.size()));
            K.edges.push_back(e);
            it = edge_of.find(key);
        }
        auto& e = K.edges[it->second];
        if (de.first == v)
            e.f_left = fi;
        else
            e.f_right = fi;
    }

    int chi = K.euler();
    if (chi != 1 && chi != 2)
        throw NotSimplyConnected("build_complex: Euler characteristic is " + std::to_string(chi));

    // Face connectivity.
    {
        std::vector<bool> vis(K.face_count(), false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        int count = 1;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int k = 0; k < 3; ++k) {
                int e = K.edge_index(faces[f][k], faces[f][(k + 1) % 3]);
                const auto& ei = K.edges[e];
                int g = (ei.f_left == f) ? ei.f_right : ei.f_left;
                if (g >= 0 && !vis[g]) {
                    vis[g] = true;
                    ++count;
                    q.push(g);
                }
            }
        }
        if (count != K.face_count())
            throw NotSimplyConnected("build_complex: faces are not connected");
    }

    K.boundary_vertex.assign(V, false);
    for (const auto& e : K.edges)
        if (e.f_left < 0 || e.f_right < 0) {
            K.boundary_vertex[e.v] = true;
            K.boundary_vertex[e.w] = true;
        }

    // Vertex stars: at vertex a, each face (a, b, c) contributes the link
    // step b -> c. Interior vertices must close into a single cycle,
    // boundary vertices into a single path.
    K.degree.assign(V, 0);
    K.star_petals.assign(V, {});
    K.star_faces.assign(V, {});
    std::vector<std::map<int, std::pair<int, int>>> succ(V);  // b -> (c, face)
    std::vector<std::set<int>> nbrs(V);
    for (int fi = 0; fi < K.face_count(); ++fi) {
        const auto& f = faces[fi];
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3], c = f[(k + 2) % 3];
            if (!succ[a].emplace(b, std::make_pair(c, fi)).second)
                throw NonManifold("build_complex: vertex link branches at " + std::to_string(a));
            nbrs[a].insert(b);
            nbrs[a].insert(c);
        }
    }
    for (int v = 0; v < V; ++v) {
        if (nbrs[v].empty()) continue;
        K.degree[v] = static_cast<int>(nbrs[v].size());
        int start = *nbrs[v].begin();
        if (K.boundary_vertex[v]) {
            // Unique neighbor with no predecessor in the link.
            std::set<int> targets;
            for (const auto& [b, cf] : succ[v]) targets.insert(cf.first);
            int found = -1;
            for (int b : nbrs[v])
                if (succ[v].count(b) && !targets.count(b)) {
                    if (found >= 0) throw NonManifold("build_complex: split link at vertex " + std::to_string(v));
                    found = b;
                }
            if (found < 0) throw NonManifold("build_complex: malformed boundary link at " + std::to_string(v));
            start = found;
        }
        int cur = start;
        std::set<int> visited;
        while (true) {
            K.star_petals[v].push_back(cur);
            visited.insert(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) break;  // boundary path ends
            K.star_faces[v].push_back(it->second.second);
            cur = it->second.first;
            if (cur == start) break;  // interior cycle closed
            if (visited.count(cur))
                throw NonManifold("build_complex: tangled link at vertex " + std::to_string(v));
        }
        if (K.star_petals[v].size() != nbrs[v].size())
            throw NonManifold("build_complex: disconnected link at vertex " + std::to_string(v));
    }
    return K;
}

namespace {

struct Vec3 {
    double x, y, z;
};
Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 crossv(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double det3(Vec3 a, Vec3 b, Vec3 c) { return dot(a, crossv(b, c)); }

}  // namespace

TriComplex soccerball_complex() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> ico;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            ico.push_back({0, s1, s2 * phi});
            ico.push_back({s1, s2 * phi, 0});
            ico.push_back({s2 * phi, 0, s1});
        }
    // Icosahedron faces: vertex triples at pairwise distance 2, oriented
    // outward.
    std::vector<std::array<int, 3>> ifaces;
    auto d2 = [&](int i, int j) {
        Vec3 d = ico[i] - ico[j];
        return dot(d, d);
    };
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            for (int k = j + 1; k < 12; ++k)
                if (std::abs(d2(i, j) - 4) < 1e-9 && std::abs(d2(j, k) - 4) < 1e-9 &&
                    std::abs(d2(i, k) - 4) < 1e-9) {
                    std::array<int, 3> f{i, j, k};
                    if (det3(ico[i], ico[j], ico[k]) < 0) std::swap(f[1], f[2]);
                    ifaces.push_back(f);
                }

    // Pentakis dodecahedron: apex per icosahedron vertex (indices 0..11),
    // one vertex per icosahedron face (12..31); each apex fans over the five
    // face-vertices around it.
    std::vector<Vec3> fpos(ifaces.size());
    for (std::size_t f = 0; f < ifaces.size(); ++f)
        fpos[f] = (1.0 / 3.0) * (ico[ifaces[f][0]] + ico[ifaces[f][1]] + ico[ifaces[f][2]]);

    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < 12; ++i) {
        std::vector<int> around;
        for (std::size_t f = 0; f < ifaces.size(); ++f)
            if (ifaces[f][0] == i || ifaces[f][1] == i || ifaces[f][2] == i)
                around.push_back(static_cast<int>(f));
        // Sort the five incident faces by angle about the vertex direction.
        Vec3 axis = ico[i];
        double an = std::sqrt(dot(axis, axis));
        axis = (1.0 / an) * axis;
        Vec3 ref = fpos[around[0]] - dot(fpos[around[0]], axis) * axis;
        Vec3 ref2 = crossv(axis, ref);
        std::sort(around.begin(), around.end(), [&](int f1, int f2) {
            auto ang = [&](int f) {
                Vec3 p = fpos[f] - dot(fpos[f], axis) * axis;
                return std::atan2(dot(p, ref2), dot(p, ref));
            };
            return ang(f1) < ang(f2);
        });
        for (std::size_t k = 0; k < around.size(); ++k) {
            int f1 = around[k], f2 = around[(k + 1) % around.size()];
            std::array<int, 3> tri{i, 12 + f1, 12 + f2};
            if (det3(ico[i], fpos[f1], fpos[f2]) < 0) std::swap(tri[1], tri[2]);
            faces.push_back(tri);
        }
    }
    return build_complex(faces);
}

std::uint64_t EdgeLabel::key(int v, int w) {
    if (v > w) std::swap(v, w);
    return (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(w);
}

void EdgeLabel::set(int v, int w, double s) { s_[key(v, w)] = s; }

bool EdgeLabel::has(int v, int w) const { return s_.count(key(v, w)) > 0; }

double EdgeLabel::get(int v, int w) const {
    auto it = s_.find(key(v, w));
    if (it == s_.end())
        throw MissingLabel("EdgeLabel: no label for edge " + std::to_string(v) + "-" +
                           std::to_string(w));
    return it->second;
}

EdgeLabel soccerball_edge_label(const TriComplex& K, double s, double s_prime) {
    EdgeLabel lab;
    for (const auto& e : K.edges) {
        bool mixed = (K.degree[e.v] == 5) != (K.degree[e.w] == 5);
        lab.set(e.v, e.w, mixed ? s : s_prime);
    }
    return lab;
}

DualTree dual_spanning_tree(const TriComplex& K, int root_face) {
    if (root_face < 0 || root_face >= K.face_count())
        throw Error("dual_spanning_tree: bad root face");
    DualTree T;
    T.root = root_face;
    T.parent_face.assign(K.face_count(), -1);
    T.parent_edge.assign(K.face_count(), -1);
    std::vector<bool> vis(K.face_count(), false);
    std::vector<bool> edge_used(K.edges.size(), false);
    std::queue<int> q;
    q.push(root_face);
    vis[root_face] = true;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        T.order.push_back(f);
        for (int k = 0; k < 3; ++k) {
            int e = K.edge_index(K.faces[f][k], K.faces[f][(k + 1) % 3]);
            const auto& ei = K.edges[e];
            int g = (ei.f_left == f) ? ei.f_right : ei.f_left;
            if (g < 0 || vis[g]) continue;
            vis[g] = true;
            edge_used[e] = true;
            T.parent_face[g] = f;
            T.parent_edge[g] = e;
            q.push(g);
        }
    }
    for (std::size_t e = 0; e < K.edges.size(); ++e)
        if (K.interior_edge(static_cast<int>(e)) && !edge_used[e])
            T.non_tree_edges.push_back(static_cast<int>(e));
    return T;
}

namespace {

int face_pos(const std::array<int, 3>& f, int v) {
    for (int k = 0; k < 3; ++k)
        if (f[k] == v) return k;
    throw Error("face_pos: vertex not in face");
}

// Place the circle opposite edge (v, w) in the face across from f, given f's
// circles; f must contain the directed edge (v, w).
GenCircle place_across(const TriComplex& K, const std::array<GenCircle, 3>& fc, int f, int v,
                       int w, double s) {
    const auto& fv = K.faces[f];
    int pv = face_pos(fv, v);
    if (fv[(pv + 1) % 3] != w) throw Error("place_across: directed edge not in face");
    int px = (pv + 2) % 3;
    FaceTriple triple(fc[pv], fc[(pv + 1) % 3], fc[px]);
    return place_by_schwarzian(triple, s);
}

}  // namespace

double PackingLayout::max_holonomy() const {
    double m = 0;
    for (const auto& h : holonomy) m = std::max(m, h.discrepancy);
    return m;
}

PackingLayout layout_complex(const TriComplex& K, const EdgeLabel& label, const FaceTriple& base,
                             int root_face) {
    for (std::size_t e = 0; e < K.edges.size(); ++e)
        if (K.interior_edge(static_cast<int>(e)) && !label.has(K.edges[e].v, K.edges[e].w))
            throw MissingLabel("layout_complex: label does not cover all interior edges");

    PackingLayout L;
    L.K = K;
    L.label = label;
    L.root_face = root_face;
    GenCircle unset = GenCircle::circle(Complex(0, 0), 1.0);
    L.face_circles.assign(K.face_count(), {unset, unset, unset});
    L.vertex_circle.assign(K.V, unset);
    std::vector<bool> have_vertex(K.V, false);

    DualTree T = dual_spanning_tree(K, root_face);

    for (int k = 0; k < 3; ++k) {
        L.face_circles[root_face][k] = base.circle(k);
        int v = K.faces[root_face][k];
        L.vertex_circle[v] = base.circle(k);
        have_vertex[v] = true;
    }

    for (int f : T.order) {
        if (f == root_face) continue;
        int pf = T.parent_face[f];
        const auto& ei = K.edges[T.parent_edge[f]];
        // Directed edge (p, q) as it appears in the parent face.
        int p = (ei.f_left == pf) ? ei.v : ei.w;
        int q = (ei.f_left == pf) ? ei.w : ei.v;
        double s = label.get(ei.v, ei.w);
        GenCircle cb = place_across(K, L.face_circles[pf], pf, p, q, s);
        const auto& fv = K.faces[f];
        int pq = face_pos(fv, q);
        if (fv[(pq + 1) % 3] != p) throw Error("layout_complex: face orientation broken");
        int pb = (pq + 2) % 3;
        L.face_circles[f][pq] = L.face_circles[pf][face_pos(K.faces[pf], q)];
        L.face_circles[f][(pq + 1) % 3] = L.face_circles[pf][face_pos(K.faces[pf], p)];
        L.face_circles[f][pb] = cb;
        int b = fv[pb];
        if (!have_vertex[b]) {
            L.vertex_circle[b] = cb;
            have_vertex[b] = true;
        }
    }

    for (int e : T.non_tree_edges) {
        const auto& ei = K.edges[e];
        int f = ei.f_left, g = ei.f_right;
        double s = label.get(ei.v, ei.w);
        GenCircle alt = place_across(K, L.face_circles[f], f, ei.v, ei.w, s);
        const auto& gv = K.faces[g];
        int pb = 0;
        for (int k = 0; k < 3; ++k)
            if (gv[k] != ei.v && gv[k] != ei.w) pb = k;
        L.holonomy.push_back({e, circle_distance(alt, L.face_circles[g][pb])});
    }
    return L;
}

std::vector<VertexVerdict> check_packing_label(const TriComplex& K, const EdgeLabel& label) {
    std::vector<VertexVerdict> out;
    for (int v = 0; v < K.V; ++v) {
        if (!K.interior_vertex(v) || K.star_petals[v].empty()) continue;
        VertexVerdict vv;
        vv.v = v;
        std::vector<double> s;
        bool in_range = true;
        for (int w : K.star_petals[v]) {
            double sv = label.get(v, w);
            if (!(sv < 1.0)) in_range = false;
            s.push_back(sv);
        }
        if (!in_range) {
            vv.out_of_range = true;
            vv.verdict.fail_a = vv.verdict.fail_b = vv.verdict.fail_c = true;
        } else {
            vv.verdict = verify_packing_label(s);
        }
        out.push_back(vv);
    }
    return out;
}

double angle_sum(const PackingLayout& layout, int v) {
    const TriComplex& K = layout.K;
    if (v < 0 || v >= K.V || !K.interior_vertex(v))
        throw Error("angle_sum: vertex must be interior");
    const auto& petals = K.star_petals[v];
    const auto& faces = K.star_faces[v];
    const int k = static_cast<int>(petals.size());

    // Develop the star from the first face's own circles.
    const auto& f0 = K.faces[faces[0]];
    GenCircle cv = layout.face_circles[faces[0]][face_pos(f0, v)];
    std::vector<GenCircle> pet;
    pet.push_back(layout.face_circles[faces[0]][face_pos(f0, petals[0])]);
    pet.push_back(layout.face_circles[faces[0]][face_pos(f0, petals[1 % k])]);
    for (int i = 1; i <= k; ++i) {
        // Across the spoke edge {v, petals[i % k]}: patch faces
        // (pet[i], cv, pet[i-1] | next petal).
        double s = layout.label.get(v, petals[i % k]);
        FaceTriple tri(pet[i], cv, pet[i - 1]);
        pet.push_back(place_by_schwarzian(tri, s));
    }

    // Star holonomy: first face onto its wrapped copy.
    FaceTriple first(cv, pet[0], pet[1]);
    FaceTriple wrapped(cv, pet[k], pet[k + 1]);
    Mobius h = face_mobius(first, wrapped);

    // Chart sending the vertex circle to the unit circle, positively.
    Complex b1 = cv.boundary_point(0.0), b2, b3;
    if (cv.is_line) {
        double L = std::max(1.0, std::abs(cv.point));
        b2 = cv.boundary_point(L);
        b3 = cv.boundary_point(3.0 * L);
    } else {
        double step = cv.orientation > 0 ? 2.0 * kPi / 3.0 : -2.0 * kPi / 3.0;
        b2 = cv.boundary_point(step);
        b3 = cv.boundary_point(2.0 * step);
    }
    Mobius chart = mobius_from_points(ExtPoint(b1), ExtPoint(b2), ExtPoint(b3),
                                      ExtPoint(Complex(1, 0)), ExtPoint(Complex(0, 1)),
                                      ExtPoint(Complex(-1, 0)));

    double dev = std::abs(h.a - 1.0) + std::abs(h.b) + std::abs(h.c) + std::abs(h.d - 1.0);
    double dev2 = std::abs(h.a + 1.0) + std::abs(h.b) + std::abs(h.c) + std::abs(h.d + 1.0);
    if (std::min(dev, dev2) > 1e-6) {
        // Re-center the chart on the holonomy's interior fixed point.
        std::vector<ExtPoint> candidates;
        if (std::abs(h.c) > 1e-12) {
            Complex disc = std::sqrt((h.d - h.a) * (h.d - h.a) + 4.0 * h.b * h.c);
            candidates.emplace_back((h.a - h.d + disc) / (2.0 * h.c));
            candidates.emplace_back((h.a - h.d - disc) / (2.0 * h.c));
        } else {
            if (std::abs(h.d - h.a) > 1e-12) candidates.emplace_back(h.b / (h.d - h.a));
            candidates.push_back(ExtPoint::infinity());
        }
        bool found = false;
        for (const ExtPoint& cand : candidates) {
            if (!cv.contains(cand)) continue;
            Complex w0 = apply_mobius(chart, cand).value();
            Mobius recenter{Complex(1, 0), -w0, -std::conj(w0), Complex(1, 0)};
            chart = recenter * chart;
            found = true;
            break;
        }
        if (!found) throw ChartFailure("angle_sum: holonomy has no interior fixed point");
    }

    std::vector<double> theta(k + 1);
    for (int i = 0; i <= k; ++i) {
        ExtPoint t = tangency_point(cv, pet[i]);
        ExtPoint img = apply_mobius(chart, t);
        theta[i] = std::arg(img.value());
    }
    double total = 0;
    for (int i = 0; i < k; ++i) {
        double d = theta[i + 1] - theta[i];
        d -= 2.0 * kPi * std::floor(d / (2.0 * kPi));
        if (d <= 1e-12) d += 2.0 * kPi;
        total += d;
    }
    return total;
}

}  // namespace sfkit
