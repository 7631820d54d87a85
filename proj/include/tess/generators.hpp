#ifndef TESS_GENERATORS_HPP
#define TESS_GENERATORS_HPP

// Deterministic builders for the example graphs: the Platonic solids,
// prisms and antiprisms, the truncated cube, lattice windows of four
// periodic tilings, and the sharp big-face window.

#include <string>
#include <vector>

#include "builder.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "map.hpp"

namespace tess {

namespace detail {

// Assemble a sphere map from consistently oriented face cycles: each corner
// (a, x, b) pins b directly after a in the rotation at x.
inline tessellation map_from_faces(int nv, const std::vector<std::vector<int>>& faces) {
    std::vector<std::map<int, int>> after(nv);
    for (const auto& c : faces) {
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i) {
            int a = c[(i + m - 1) % m], x = c[i], b = c[(i + 1) % m];
            if (x < 0 || x >= nv) fail(errc::invalid_parameter, "face vertex out of range");
            if (!after[x].emplace(a, b).second)
                fail(errc::invalid_parameter,
                     "dart into vertex " + std::to_string(x) + " used by two faces");
        }
    }
    std::vector<std::vector<int>> rot(nv);
    for (int x = 0; x < nv; ++x) {
        if (after[x].empty()) fail(errc::invalid_parameter, "isolated vertex");
        int start = after[x].begin()->first;
        int cur = start;
        do {
            rot[x].push_back(cur);
            auto it = after[x].find(cur);
            if (it == after[x].end())
                fail(errc::invalid_parameter,
                     "faces do not close a rotation at vertex " + std::to_string(x));
            cur = it->second;
        } while (cur != start && rot[x].size() <= after[x].size());
        if (cur != start || rot[x].size() != after[x].size())
            fail(errc::invalid_parameter,
                 "faces do not close a rotation at vertex " + std::to_string(x));
    }
    return build_from_rotation_system(rot, graph_mode::sphere);
}

// Vertex truncation: one new vertex per dart, each original face doubled,
// each original vertex blown up into a polygon.
inline tessellation truncate(const tessellation& t) {
    if (t.mode != graph_mode::sphere)
        fail(errc::patch_mode_unsupported, "truncate is defined for the sphere mode only");
    std::vector<std::vector<int>> faces;
    for (const auto& cycle : t.faces) {
        std::vector<int> big;
        for (int d : cycle) {
            big.push_back(d);
            big.push_back(combinatorial_map::twin(d));
        }
        faces.push_back(big);
    }
    for (int v = 0; v < t.nv(); ++v) {
        std::vector<int> ring(t.map.rot[v].rbegin(), t.map.rot[v].rend());
        faces.push_back(ring);
    }
    return map_from_faces(t.map.nd(), faces);
}

}  // namespace detail

inline tessellation tetrahedron() {
    return detail::map_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

inline tessellation cube() {
    return detail::map_from_faces(8, {{0, 3, 2, 1},
                                      {4, 5, 6, 7},
                                      {0, 1, 5, 4},
                                      {1, 2, 6, 5},
                                      {2, 3, 7, 6},
                                      {3, 0, 4, 7}});
}

inline tessellation octahedron() {
    return detail::map_from_faces(6, {{0, 1, 2},
                                      {0, 2, 3},
                                      {0, 3, 4},
                                      {0, 4, 1},
                                      {5, 2, 1},
                                      {5, 3, 2},
                                      {5, 4, 3},
                                      {5, 1, 4}});
}

inline tessellation icosahedron() {
    auto a = [](int i) { return 1 + i % 5; };
    auto b = [](int i) { return 6 + i % 5; };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, a(i), a(i + 1)});
        faces.push_back({a(i), b(i), a(i + 1)});
        faces.push_back({b(i), b(i + 1), a(i + 1)});
        faces.push_back({11, b(i + 1), b(i)});
    }
    return detail::map_from_faces(12, faces);
}

inline tessellation dodecahedron() { return dual_graph(icosahedron()).dual; }

inline tessellation platonic(const std::string& name) {
    if (name == "tetrahedron") return tetrahedron();
    if (name == "cube") return cube();
    if (name == "octahedron") return octahedron();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "icosahedron") return icosahedron();
    fail(errc::invalid_parameter, "unknown platonic solid: " + name);
}

inline tessellation prism(int n) {
    if (n < 3) fail(errc::invalid_parameter, "prism needs n >= 3");
    auto a = [n](int i) { return i % n; };
    auto b = [n](int i) { return n + i % n; };
    std::vector<std::vector<int>> faces;
    std::vector<int> top, bottom;
    for (int i = 0; i < n; ++i) top.push_back(a(i));
    for (int i = n - 1; i >= 0; --i) bottom.push_back(b(i));
    faces.push_back(top);
    faces.push_back(bottom);
    for (int i = 0; i < n; ++i) faces.push_back({a(i + 1), a(i), b(i), b(i + 1)});
    return detail::map_from_faces(2 * n, faces);
}

inline tessellation antiprism(int n) {
    if (n < 3) fail(errc::invalid_parameter, "antiprism needs n >= 3");
    auto a = [n](int i) { return i % n; };
    auto b = [n](int i) { return n + i % n; };
    std::vector<std::vector<int>> faces;
    std::vector<int> top, bottom;
    for (int i = 0; i < n; ++i) top.push_back(a(i));
    for (int i = n - 1; i >= 0; --i) bottom.push_back(b(i));
    faces.push_back(top);
    faces.push_back(bottom);
    for (int i = 0; i < n; ++i) {
        faces.push_back({a(i), b(i), a(i + 1)});
        faces.push_back({b(i), b(i + 1), a(i + 1)});
    }
    return detail::map_from_faces(2 * n, faces);
}

inline tessellation truncated_cube() { return detail::truncate(cube()); }

// w x h grid of vertices; bounded faces are the (w-1)(h-1) unit squares
inline tessellation square_lattice(int w, int h) {
    if (w < 2 || h < 2) fail(errc::invalid_parameter, "square_lattice needs w, h >= 2");
    auto id = [w](int i, int j) { return j * w + i; };
    std::vector<std::vector<int>> rot(w * h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            auto& r = rot[id(i, j)];
            if (i + 1 < w) r.push_back(id(i + 1, j));
            if (j + 1 < h) r.push_back(id(i, j + 1));
            if (i > 0) r.push_back(id(i - 1, j));
            if (j > 0) r.push_back(id(i, j - 1));
        }
    return build_from_rotation_system(rot, graph_mode::patch, {id(0, 0), id(1, 0)});
}

namespace detail {

inline vec2 tri_xy(rational alpha, rational beta) {
    rational h(1, 2);
    return {q3{alpha + beta * h, rat(0)}, q3{rat(0), beta * h}};
}

inline vec2 combo(const vec2& u, int i, const vec2& v, int j) {
    rational ri(i), rj(j);
    return {u.x * ri + v.x * rj, u.y * ri + v.y * rj};
}

// kagome lattice helper: triangles and hexagons keyed by integer coordinates
// (alpha, beta) along the 0- and 60-degree axes
inline tiling_builder trihexagonal_universe(int m) {
    tiling_builder tb;
    for (int al = -m; al <= m; ++al) {
        for (int be = -m; be <= m; ++be) {
            bool ea = (al % 2) == 0, eb = (be % 2) == 0;
            auto at = [&](int da, int db) { return tri_xy(rat(al + da), rat(be + db)); };
            if (ea && eb) {
                tb.face({at(1, 0), at(0, 1), at(-1, 1), at(-1, 0), at(0, -1), at(1, -1)});
                tb.face({at(1, 0), at(1, 1), at(0, 1)});
            } else if (!ea && !eb) {
                tb.face({at(0, 0), at(1, 0), at(0, 1)});
            }
        }
    }
    return tb;
}

}  // namespace detail

inline tessellation trihexagonal(int radius) {
    if (radius < 1) fail(errc::invalid_parameter, "radius must be >= 1");
    int m = 2 * radius + 6;
    return detail::trihexagonal_universe(m).window(detail::tri_xy(rat(1), rat(0)), radius);
}

// dual of the kagome lattice: one rhombus per kagome vertex, with corners
// alternating between hexagon centers and triangle centroids
inline tessellation rhombille(int radius) {
    if (radius < 1) fail(errc::invalid_parameter, "radius must be >= 1");
    int m = 2 * radius + 6;
    tiling_builder tb;
    for (int al = -m; al <= m; ++al) {
        for (int be = -m; be <= m; ++be) {
            bool ea = (al % 2) == 0, eb = (be % 2) == 0;
            if (ea && eb) continue;
            auto at = [&](int da3, int db3) {
                return detail::tri_xy(rat(al) + rat(da3, 3), rat(be) + rat(db3, 3));
            };
            if (!ea && eb)
                tb.face({at(-1, 2), at(-3, 0), at(1, -2), at(3, 0)});
            else if (ea && !eb)
                tb.face({at(0, 3), at(-2, 1), at(0, -3), at(2, -1)});
            else
                tb.face({at(1, 1), at(-3, 3), at(-1, -1), at(3, -3)});
        }
    }
    return tb.window(detail::tri_xy(rat(0), rat(0)), radius);
}

inline tessellation rhombitrihexagonal(int radius) {
    if (radius < 1) fail(errc::invalid_parameter, "radius must be >= 1");
    int m = radius + 3;
    vec2 e[6], dd[6];
    e[0] = {q3{rat(1), rat(0)}, q3{rat(0), rat(0)}};
    dd[0] = {q3{rat(3, 2), rational(1, 2)}, q3{rational(1, 2), rational(1, 2)}};
    for (int k = 1; k < 6; ++k) {
        e[k] = rot60(e[k - 1]);
        dd[k] = rot60(dd[k - 1]);
    }
    tiling_builder tb;
    for (int i = -m; i <= m; ++i) {
        for (int j = -m; j <= m; ++j) {
            vec2 center = detail::combo(dd[0], i, dd[1], j);
            std::vector<vec2> hex;
            for (int k = 0; k < 6; ++k) hex.push_back(center + e[k]);
            tb.face(hex);
            for (int k = 0; k < 3; ++k)
                tb.face({center + e[k], center + e[(k + 1) % 6], center + dd[k] + e[(k + 3) % 6],
                         center + dd[k] + e[(k + 4) % 6]});
            for (int k = 0; k < 6; ++k)
                tb.face({center + e[(k + 1) % 6], center + dd[k] + e[(k + 3) % 6],
                         center + dd[(k + 1) % 6] + e[(k + 5) % 6]});
        }
    }
    return tb.window(e[0], radius);
}

inline tessellation tiling_3_12_12(int radius) {
    if (radius < 1) fail(errc::invalid_parameter, "radius must be >= 1");
    int m = radius + 3;
    vec2 big[6];
    big[0] = {q3{rat(2), rat(1)}, q3{rat(0), rat(0)}};
    for (int k = 1; k < 6; ++k) big[k] = rot60(big[k - 1]);
    vec2 r[12];
    r[0] = {q3{rat(1), rational(1, 2)}, q3{rational(1, 2), rat(0)}};
    for (int k = 1; k < 12; ++k) r[k] = rot30(r[k - 1]);
    tiling_builder tb;
    for (int i = -m; i <= m; ++i) {
        for (int j = -m; j <= m; ++j) {
            vec2 center = detail::combo(big[0], i, big[1], j);
            std::vector<vec2> dodeca;
            for (int k = 0; k < 12; ++k) dodeca.push_back(center + r[k]);
            tb.face(dodeca);
            for (int k = 0; k < 6; ++k)
                tb.face({center + r[2 * k], center + r[2 * k + 1],
                         center + big[k] + r[(2 * k + 4) % 12]});
        }
    }
    return tb.window(r[0], radius);
}

// One k-gon, a ring of k triangles, then `layers` rings of squares; the
// boundary vertices of the k-gon come out with pattern (3,3,4,k) and the
// triangle apexes with (3,4,4,4).
inline tessellation sharp_big_face(int k, int layers) {
    if (k < 8 || k > 12) fail(errc::invalid_parameter, "sharp_big_face needs 8 <= k <= 12");
    if (layers < 2) fail(errc::invalid_parameter, "sharp_big_face needs layers >= 2");
    patch_builder pb;
    std::vector<int> z = pb.first_face(k);
    std::vector<int> x(k), y(k);
    for (int i = 0; i < k; ++i) x[i] = pb.attach({z[i], z[(i + 1) % k]}, 1)[0];
    for (int i = 1; i <= k; ++i)
        y[i % k] = pb.attach({x[i - 1], z[i % k], x[i % k]}, 1)[0];
    // boundary now alternates tip, anchor, tip, anchor, ...
    std::vector<int> bd;
    for (int i = 0; i < k; ++i) {
        bd.push_back(y[i]);
        bd.push_back(x[i]);
    }
    for (int ring = 2; ring <= layers; ++ring) {
        std::vector<int> next;
        const int n = static_cast<int>(bd.size());
        for (int i = 0; i < k; ++i)
            next.push_back(pb.attach({bd[2 * i], bd[2 * i + 1], bd[(2 * i + 2) % n]}, 1)[0]);
        // fresh tips take the even slots so the next ring consumes the old
        // tips, which the squares of this ring just brought up to degree 4
        std::vector<int> merged;
        for (int i = 0; i < k; ++i) {
            merged.push_back(next[i]);
            merged.push_back(bd[(2 * i + 2) % n]);
        }
        bd.swap(merged);
    }
    return pb.build();
}

struct generator_spec {
    std::string kind;
    std::string name;          // platonic
    int n = 0;                 // prism / antiprism
    int w = 0, h = 0;          // square_lattice
    int radius = 0;            // tilings
    int k = 0, layers = 0;     // sharp_big_face
};

inline tessellation generate(const generator_spec& s) {
    if (s.kind == "platonic") return platonic(s.name);
    if (s.kind == "prism") return prism(s.n);
    if (s.kind == "antiprism") return antiprism(s.n);
    if (s.kind == "truncated_cube") return truncated_cube();
    if (s.kind == "square_lattice") return square_lattice(s.w, s.h);
    if (s.kind == "trihexagonal") return trihexagonal(s.radius);
    if (s.kind == "rhombitrihexagonal") return rhombitrihexagonal(s.radius);
    if (s.kind == "rhombille") return rhombille(s.radius);
    if (s.kind == "tiling_3_12_12") return tiling_3_12_12(s.radius);
    if (s.kind == "sharp_big_face") return sharp_big_face(s.k, s.layers);
    fail(errc::invalid_parameter, "unknown generator kind: " + s.kind);
}

}  // namespace tess

#endif
