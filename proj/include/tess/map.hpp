#ifndef TESS_MAP_HPP
#define TESS_MAP_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tess {

enum class graph_mode { sphere, patch };

// Rotation system. Darts 2e and 2e+1 are the two directions of edge e,
// so twin(d) == (d ^ 1). rot[v] lists outgoing darts counterclockwise.
struct combinatorial_map {
    int nv = 0;
    std::vector<int> origin;            // dart -> tail vertex
    std::vector<std::vector<int>> rot;  // vertex -> outgoing darts, ccw
    std::vector<int> rot_pos;           // dart -> its index in rot[origin[dart]]

    int nd() const { return static_cast<int>(origin.size()); }
    int ne() const { return nd() / 2; }
    static int twin(int d) { return d ^ 1; }
    int head(int d) const { return origin[twin(d)]; }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    int rot_next(int d) const {
        const auto& r = rot[origin[d]];
        int i = rot_pos[d] + 1;
        return r[i == static_cast<int>(r.size()) ? 0 : i];
    }
    int rot_prev(int d) const {
        const auto& r = rot[origin[d]];
        int i = rot_pos[d];
        return r[i == 0 ? r.size() - 1 : i - 1];
    }

    // Walks the face lying to the left of d: after arriving at head(d),
    // leave along the dart that follows the reversal of d in the rotation there.
    int face_next(int d) const { return rot_next(twin(d)); }
    int face_prev(int d) const { return twin(rot_prev(d)); }
};

struct tessellation {
    combinatorial_map map;
    std::vector<std::vector<int>> faces;  // face -> dart cycle, in walk order
    std::vector<int> face_of;             // dart -> face id
    graph_mode mode = graph_mode::sphere;
    int outer = -1;                       // patch mode only
    std::vector<char> v_int, e_int, f_int;

    int nv() const { return map.nv; }
    int ne() const { return map.ne(); }
    int nf() const { return static_cast<int>(faces.size()); }

    int edge_u(int e) const { return map.origin[2 * e]; }
    int edge_v(int e) const { return map.origin[2 * e + 1]; }
    int face_degree(int f) const { return static_cast<int>(faces[f].size()); }
    int vertex_degree(int v) const { return map.degree(v); }

    bool interior_vertex(int v) const { return v_int[v] != 0; }
    bool interior_edge(int e) const { return e_int[e] != 0; }
    bool interior_face(int f) const { return f_int[f] != 0; }

    // faces incident to v, one per corner, in rotation order
    std::vector<int> vertex_faces(int v) const {
        std::vector<int> out;
        out.reserve(map.rot[v].size());
        for (int d : map.rot[v]) out.push_back(face_of[d]);
        return out;
    }

    std::vector<int> face_vertices(int f) const {
        std::vector<int> out;
        out.reserve(faces[f].size());
        for (int d : faces[f]) out.push_back(map.origin[d]);
        return out;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(map.rot[v].size());
        for (int d : map.rot[v]) out.push_back(map.head(d));
        return out;
    }

    // dart at v whose face is f; the corner (v, f) per rotation position
    int corner_dart(int v, int f) const {
        for (int d : map.rot[v])
            if (face_of[d] == f) return d;
        fail(errc::not_a_corner, "vertex " + std::to_string(v) +
                                     " has no corner on face " + std::to_string(f));
    }

    void check_face(int f) const {
        if (f < 0 || f >= nf())
            fail(errc::unknown_face, "face id " + std::to_string(f));
    }
};

namespace detail {

inline void trace_faces(tessellation& t) {
    const auto& m = t.map;
    t.face_of.assign(m.nd(), -1);
    t.faces.clear();
    for (int d0 = 0; d0 < m.nd(); ++d0) {
        if (t.face_of[d0] != -1) continue;
        int f = static_cast<int>(t.faces.size());
        t.faces.emplace_back();
        int d = d0;
        do {
            t.face_of[d] = f;
            t.faces[f].push_back(d);
            d = m.face_next(d);
        } while (d != d0);
    }
}

inline void classify_interior(tessellation& t) {
    t.v_int.assign(t.nv(), 1);
    t.e_int.assign(t.ne(), 1);
    t.f_int.assign(t.nf(), 1);
    if (t.mode == graph_mode::sphere) return;
    for (int v = 0; v < t.nv(); ++v)
        for (int d : t.map.rot[v])
            if (t.face_of[d] == t.outer) { t.v_int[v] = 0; break; }
    for (int e = 0; e < t.ne(); ++e)
        t.e_int[e] = t.v_int[t.edge_u(e)] && t.v_int[t.edge_v(e)];
    for (int f = 0; f < t.nf(); ++f) {
        if (f == t.outer) { t.f_int[f] = 0; continue; }
        for (int d : t.faces[f])
            if (!t.v_int[t.map.origin[d]]) { t.f_int[f] = 0; break; }
    }
}

} // namespace detail

// rotations[v] lists the neighbors of v in counterclockwise order.
// outer_hint = (u, v) names a dart; the face containing it becomes the outer face.
inline tessellation build_from_rotation_system(
    const std::vector<std::vector<int>>& rotations, graph_mode mode,
    std::pair<int, int> outer_hint = {-1, -1}) {
    const int n = static_cast<int>(rotations.size());
    if (n == 0) fail(errc::invalid_parameter, "empty rotation system");

    for (int v = 0; v < n; ++v) {
        std::vector<int> seen;
        for (int w : rotations[v]) {
            if (w < 0 || w >= n)
                fail(errc::invalid_parameter,
                     "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(w));
            if (w == v) fail(errc::self_loop, "at vertex " + std::to_string(v));
            seen.push_back(w);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            fail(errc::multi_edge, "duplicate neighbor at vertex " + std::to_string(v));
    }

    // symmetric adjacency, then edge ids in first-encounter order
    auto key = [n](int a, int b) {
        return static_cast<std::int64_t>(std::min(a, b)) * n + std::max(a, b);
    };
    std::unordered_map<std::int64_t, int> edge_id;
    std::vector<std::pair<int, int>> edge_dir;  // edge -> (tail of dart 2e, head)
    for (int v = 0; v < n; ++v)
        for (int w : rotations[v]) {
            auto it = edge_id.find(key(v, w));
            if (it == edge_id.end()) {
                edge_id.emplace(key(v, w), static_cast<int>(edge_dir.size()));
                edge_dir.emplace_back(v, w);
            }
        }
    for (auto& [k, e] : edge_id) {
        auto [a, b] = edge_dir[e];
        bool ba = std::find(rotations[b].begin(), rotations[b].end(), a) != rotations[b].end();
        if (!ba)
            fail(errc::asymmetric_adjacency, "edge " + std::to_string(a) + "-" +
                                                 std::to_string(b) + " listed only at " +
                                                 std::to_string(a));
        (void)k;
    }

    tessellation t;
    t.mode = mode;
    auto& m = t.map;
    m.nv = n;
    m.origin.assign(2 * edge_dir.size(), -1);
    m.rot.assign(n, {});
    for (int e = 0; e < static_cast<int>(edge_dir.size()); ++e) {
        m.origin[2 * e] = edge_dir[e].first;
        m.origin[2 * e + 1] = edge_dir[e].second;
    }
    for (int v = 0; v < n; ++v) {
        m.rot[v].reserve(rotations[v].size());
        for (int w : rotations[v]) {
            int e = edge_id.at(key(v, w));
            m.rot[v].push_back(2 * e + (edge_dir[e].first == v ? 0 : 1));
        }
    }
    m.rot_pos.assign(m.nd(), -1);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < m.degree(v); ++i) m.rot_pos[m.rot[v][i]] = i;

    // connectivity
    {
        std::vector<char> vis(n, 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : m.rot[v]) {
                int w = m.head(d);
                if (!vis[w]) { vis[w] = 1; ++cnt; q.push(w); }
            }
        }
        if (cnt != n) fail(errc::disconnected, std::to_string(n - cnt) + " vertices unreachable");
    }

    detail::trace_faces(t);

    long euler = static_cast<long>(t.nv()) - t.ne() + t.nf();
    if (euler != 2)
        fail(errc::euler_violation,
             "V-E+F = " + std::to_string(euler) + ", rotation system is not planar");

    if (mode == graph_mode::patch) {
        if (outer_hint.first < 0)
            fail(errc::outer_face_not_found, "patch mode needs an outer face hint");
        auto [u, v] = outer_hint;
        int hint_dart = -1;
        if (u >= 0 && u < n)
            for (int d : m.rot[u])
                if (m.head(d) == v) { hint_dart = d; break; }
        if (hint_dart < 0)
            fail(errc::outer_face_not_found,
                 "no dart " + std::to_string(u) + "->" + std::to_string(v));
        t.outer = t.face_of[hint_dart];
    }

    detail::classify_interior(t);
    return t;
}

// vertex cycle of a face, in walk order
inline std::vector<int> face_boundary(const tessellation& t, int f) {
    t.check_face(f);
    return t.face_vertices(f);
}

namespace detail {

struct face_meet {
    std::vector<int> verts;
    std::vector<int> edges;
};

inline face_meet closure_intersection(const tessellation& t, int f, int g) {
    face_meet out;
    std::vector<int> vf = t.face_vertices(f);
    std::vector<int> vg = t.face_vertices(g);
    std::sort(vf.begin(), vf.end());
    std::sort(vg.begin(), vg.end());
    std::set_intersection(vf.begin(), vf.end(), vg.begin(), vg.end(),
                          std::back_inserter(out.verts));
    std::vector<int> ef, eg;
    for (int d : t.faces[f]) ef.push_back(d / 2);
    for (int d : t.faces[g]) eg.push_back(d / 2);
    std::sort(ef.begin(), ef.end());
    std::sort(eg.begin(), eg.end());
    std::set_intersection(ef.begin(), ef.end(), eg.begin(), eg.end(),
                          std::back_inserter(out.edges));
    return out;
}

} // namespace detail

// faces sharing at least one edge with f
inline std::vector<int> faces_lower_adjacent_to(const tessellation& t, int f) {
    t.check_face(f);
    std::vector<int> out;
    for (int d : t.faces[f]) {
        int g = t.face_of[combinatorial_map::twin(d)];
        if (g != f && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return out;
}

inline bool lower_adjacent_faces(const tessellation& t, int sigma, int tau) {
    t.check_face(sigma);
    t.check_face(tau);
    if (sigma == tau) return false;
    for (int d : t.faces[sigma])
        if (t.face_of[combinatorial_map::twin(d)] == tau) return true;
    return false;
}

// tau and omega both lower-adjacent to sigma, touching each other in a vertex of sigma
inline bool sigma_adjacent(const tessellation& t, int sigma, int tau, int omega) {
    t.check_face(sigma);
    t.check_face(tau);
    t.check_face(omega);
    if (tau == omega) return false;
    if (!lower_adjacent_faces(t, sigma, tau) || !lower_adjacent_faces(t, sigma, omega))
        return false;
    auto meet = detail::closure_intersection(t, tau, omega);
    std::vector<int> sv = t.face_vertices(sigma);
    for (int v : meet.verts)
        if (std::find(sv.begin(), sv.end(), v) != sv.end()) return true;
    return false;
}

inline bool sigma_neighbours(const tessellation& t, int sigma, int tau, int omega) {
    return sigma_adjacent(t, sigma, tau, omega);
}

} // namespace tess

#endif
