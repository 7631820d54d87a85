#ifndef TESS_LATTICE_HPP
#define TESS_LATTICE_HPP

// Exact plane coordinates over Q[sqrt(3)] and a window cutter for periodic
// tilings. Everything here is exact rational arithmetic; the only consumers
// of these coordinates are the rotation sort and the outer-face hint.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "errors.hpp"
#include "map.hpp"
#include "rational.hpp"

namespace tess {

// a + b*sqrt(3)
struct q3 {
    rational a, b;

    q3() = default;
    q3(rational a_, rational b_) : a(a_), b(b_) {}

    q3 operator+(const q3& o) const { return {a + o.a, b + o.b}; }
    q3 operator-(const q3& o) const { return {a - o.a, b - o.b}; }
    q3 operator-() const { return {-a, -b}; }
    q3 operator*(const q3& o) const {
        return {a * o.a + rat(3) * (b * o.b), a * o.b + b * o.a};
    }
    q3 operator*(const rational& s) const { return {a * s, b * s}; }

    bool operator==(const q3& o) const { return a == o.a && b == o.b; }
    bool operator!=(const q3& o) const { return !(*this == o); }

    // exact sign; a^2 vs 3 b^2 settles the mixed-sign case
    int sign() const {
        int sa = (a.num > 0) - (a.num < 0);
        int sb = (b.num > 0) - (b.num < 0);
        if (sa == 0 && sb == 0) return 0;
        if (sa >= 0 && sb >= 0) return 1;
        if (sa <= 0 && sb <= 0) return -1;
        rational d = a * a - rat(3) * (b * b);
        int sd = (d.num > 0) - (d.num < 0);
        return sa > 0 ? sd : -sd;
    }
};

inline bool q3_less(const q3& u, const q3& v) { return (u - v).sign() < 0; }

struct vec2 {
    q3 x, y;

    vec2 operator+(const vec2& o) const { return {x + o.x, y + o.y}; }
    vec2 operator-(const vec2& o) const { return {x - o.x, y - o.y}; }

    bool operator==(const vec2& o) const { return x == o.x && y == o.y; }
};

struct vec2_less {
    bool operator()(const vec2& u, const vec2& v) const {
        if (u.x != v.x) return q3_less(u.x, v.x);
        return q3_less(u.y, v.y);
    }
};

inline q3 times_sqrt3(const q3& t) { return {rat(3) * t.b, t.a}; }

inline q3 cross(const vec2& u, const vec2& v) { return u.x * v.y - u.y * v.x; }

// 0 for directions in [0, pi), 1 for [pi, 2pi); nonzero input assumed
inline int angle_half(const vec2& u) {
    int sy = u.y.sign();
    if (sy > 0) return 0;
    if (sy == 0 && u.x.sign() > 0) return 0;
    return 1;
}

inline bool angle_less(const vec2& u, const vec2& v) {
    int hu = angle_half(u), hv = angle_half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v).sign() > 0;
}

inline vec2 rot60(const vec2& v) {
    rational h(1, 2);
    return {(v.x - times_sqrt3(v.y)) * h, (times_sqrt3(v.x) + v.y) * h};
}

inline vec2 rot30(const vec2& v) {
    rational h(1, 2);
    return {(times_sqrt3(v.x) - v.y) * h, (v.x + times_sqrt3(v.y)) * h};
}

// Candidate-universe builder: intern vertices by exact position, list faces,
// then cut a patch window around a seed vertex by breadth-first face layers.
struct tiling_builder {
    std::map<vec2, int, vec2_less> index;
    std::vector<vec2> position;
    std::vector<std::vector<int>> faces;
    std::set<std::vector<int>> face_keys;  // dedupes multiply enumerated faces

    int vertex(const vec2& p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(position.size());
        index.emplace(p, id);
        position.push_back(p);
        return id;
    }

    void face(const std::vector<vec2>& cycle) {
        std::vector<int> ids;
        ids.reserve(cycle.size());
        for (const vec2& p : cycle) ids.push_back(vertex(p));
        std::vector<int> key = ids;
        std::sort(key.begin(), key.end());
        if (face_keys.insert(std::move(key)).second) faces.push_back(std::move(ids));
    }

    tessellation window(const vec2& seed, int radius) const {
        if (radius < 1) fail(errc::invalid_parameter, "window radius must be >= 1");
        auto sit = index.find(seed);
        if (sit == index.end()) fail(errc::invalid_parameter, "window seed not in tiling");
        int seed_id = sit->second;

        const int nv = static_cast<int>(position.size());
        const int nf = static_cast<int>(faces.size());
        std::vector<std::vector<int>> at_vertex(nv);
        for (int f = 0; f < nf; ++f)
            for (int v : faces[f]) at_vertex[v].push_back(f);

        // breadth-first face layers: layer 1 touches the seed, layer l+1
        // shares a vertex with layer l
        std::vector<int> layer(nf, 0);
        std::vector<char> touched(nv, 0);
        std::vector<int> frontier;
        for (int f : at_vertex[seed_id]) {
            layer[f] = 1;
            frontier.push_back(f);
        }
        for (int l = 1; l < radius && !frontier.empty(); ++l) {
            for (int f : frontier)
                for (int v : faces[f]) touched[v] = 1;
            std::vector<int> next;
            for (int f = 0; f < nf; ++f) {
                if (layer[f] != 0) continue;
                for (int v : faces[f]) {
                    if (touched[v]) {
                        layer[f] = l + 1;
                        next.push_back(f);
                        break;
                    }
                }
            }
            frontier.swap(next);
        }
        std::vector<char> selected(nf, 0);
        for (int f = 0; f < nf; ++f) selected[f] = layer[f] != 0;

        // fill enclosed holes: flood the unselected faces from the universe
        // rim; anything unreached is surrounded by the selection
        std::map<std::pair<int, int>, std::vector<int>> edge_faces;
        for (int f = 0; f < nf; ++f) {
            const auto& c = faces[f];
            const int m = static_cast<int>(c.size());
            for (int i = 0; i < m; ++i) {
                int u = c[i], v = c[(i + 1) % m];
                edge_faces[{std::min(u, v), std::max(u, v)}].push_back(f);
            }
        }
        {
            std::vector<char> outside(nf, 0);
            std::queue<int> q;
            for (const auto& ef : edge_faces) {
                if (ef.second.size() == 1 && !selected[ef.second[0]] &&
                    !outside[ef.second[0]]) {
                    outside[ef.second[0]] = 1;
                    q.push(ef.second[0]);
                }
            }
            while (!q.empty()) {
                int f = q.front();
                q.pop();
                const auto& c = faces[f];
                const int m = static_cast<int>(c.size());
                for (int i = 0; i < m; ++i) {
                    int u = c[i], v = c[(i + 1) % m];
                    for (int g : edge_faces[{std::min(u, v), std::max(u, v)}]) {
                        if (!selected[g] && !outside[g]) {
                            outside[g] = 1;
                            q.push(g);
                        }
                    }
                }
            }
            for (int f = 0; f < nf; ++f)
                if (!selected[f] && !outside[f]) selected[f] = 1;
        }

        // compact vertex ids over the selection, in intern order
        std::vector<int> new_id(nv, -1);
        std::vector<int> used;
        for (int f = 0; f < nf; ++f)
            if (selected[f])
                for (int v : faces[f])
                    if (new_id[v] == -1) {
                        new_id[v] = 0;
                        used.push_back(v);
                    }
        std::sort(used.begin(), used.end());
        for (int i = 0; i < static_cast<int>(used.size()); ++i) new_id[used[i]] = i;

        // rotations: incident edges of selected faces, sorted by exact angle
        std::vector<std::vector<int>> adj(used.size());
        for (int f = 0; f < nf; ++f) {
            if (!selected[f]) continue;
            const auto& c = faces[f];
            const int m = static_cast<int>(c.size());
            for (int i = 0; i < m; ++i) {
                int u = c[i], v = c[(i + 1) % m];
                adj[new_id[u]].push_back(new_id[v]);
                adj[new_id[v]].push_back(new_id[u]);
            }
        }
        for (int v = 0; v < static_cast<int>(used.size()); ++v) {
            auto& a = adj[v];
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            const vec2 base = position[used[v]];
            std::sort(a.begin(), a.end(), [&](int p, int q) {
                return angle_less(position[used[p]] - base, position[used[q]] - base);
            });
        }

        // outer hint: from the bottom-most vertex, the lowest-angle edge has
        // the unbounded region on its right
        int bottom = 0;
        for (int v = 1; v < static_cast<int>(used.size()); ++v) {
            const vec2& pb = position[used[bottom]];
            const vec2& pv = position[used[v]];
            int c = (pv.y - pb.y).sign();
            if (c < 0 || (c == 0 && (pv.x - pb.x).sign() < 0)) bottom = v;
        }
        if (adj[bottom].empty()) fail(errc::invalid_parameter, "window is empty");
        int first = adj[bottom][0];

        return build_from_rotation_system(adj, graph_mode::patch, {bottom, first});
    }
};

}  // namespace tess

#endif
