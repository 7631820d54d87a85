#ifndef TESS_CURVATURE_HPP
#define TESS_CURVATURE_HPP

#include <algorithm>
#include <vector>

#include "map.hpp"
#include "rational.hpp"

namespace tess {

namespace detail {
inline void require_interior_vertex(const tessellation& t, int x) {
    if (x < 0 || x >= t.nv())
        fail(errc::invalid_parameter, "vertex id " + std::to_string(x));
    if (!t.interior_vertex(x))
        fail(errc::boundary_vertex, "vertex " + std::to_string(x) + " touches the outer face");
}
} // namespace detail

// 1 - |x|/2 + sum over incident faces of 1/|face|, one term per corner
inline rational combinatorial_curvature(const tessellation& t, int x) {
    detail::require_interior_vertex(t, x);
    rational phi = rat(1) - rat(t.vertex_degree(x), 2);
    for (int f : t.vertex_faces(x)) phi += rat(1, t.face_degree(f));
    return phi;
}

inline rational corner_curvature(const tessellation& t, int x, int sigma) {
    t.check_face(sigma);
    detail::require_interior_vertex(t, x);
    t.corner_dart(x, sigma);  // NotACorner when (x, sigma) is not incident
    return rat(1, t.vertex_degree(x)) + rat(1, t.face_degree(sigma)) - rat(1, 2);
}

// 1/|x1| + 1/|x2| + 1/|s1| + 1/|s2| - 1 over the two endpoints and two sides
inline rational psi_curvature(const tessellation& t, int e) {
    if (e < 0 || e >= t.ne())
        fail(errc::invalid_parameter, "edge id " + std::to_string(e));
    if (!t.interior_edge(e))
        fail(errc::boundary_edge, "edge " + std::to_string(e) + " is not interior");
    return rat(1, t.vertex_degree(t.edge_u(e))) + rat(1, t.vertex_degree(t.edge_v(e))) +
           rat(1, t.face_degree(t.face_of[2 * e])) +
           rat(1, t.face_degree(t.face_of[2 * e + 1])) - rat(1);
}

// nondecreasing tuple of incident face degrees
inline std::vector<int> vertex_pattern(const tessellation& t, int x) {
    detail::require_interior_vertex(t, x);
    std::vector<int> pat;
    for (int f : t.vertex_faces(x)) pat.push_back(t.face_degree(f));
    std::sort(pat.begin(), pat.end());
    return pat;
}

inline rational total_curvature(const tessellation& t) {
    rational sum;
    for (int v = 0; v < t.nv(); ++v)
        if (t.interior_vertex(v)) sum += combinatorial_curvature(t, v);
    return sum;
}

// psi equals half the sum of its four corner curvatures, checked exactly
inline bool psi_corner_identity_check(const tessellation& t) {
    for (int e = 0; e < t.ne(); ++e) {
        if (!t.interior_edge(e)) continue;
        int x1 = t.edge_u(e), x2 = t.edge_v(e);
        int s1 = t.face_of[2 * e], s2 = t.face_of[2 * e + 1];
        rational half = (corner_curvature(t, x1, s1) + corner_curvature(t, x1, s2) +
                         corner_curvature(t, x2, s1) + corner_curvature(t, x2, s2)) *
                        rat(1, 2);
        if (psi_curvature(t, e) != half) return false;
    }
    return true;
}

struct class_flags {
    bool in_nng = true;
    bool in_cc = true;
    bool in_mm = true;
};

inline class_flags classify(const tessellation& t) {
    class_flags c;
    rational zero;
    for (int v = 0; v < t.nv(); ++v) {
        if (!t.interior_vertex(v)) continue;
        if (combinatorial_curvature(t, v) < zero) c.in_nng = false;
        for (int f : t.vertex_faces(v))
            if (corner_curvature(t, v, f) < zero) c.in_cc = false;
    }
    for (int e = 0; e < t.ne(); ++e)
        if (t.interior_edge(e) && psi_curvature(t, e) < zero) c.in_mm = false;
    return c;
}

// curvature of a hypothetical vertex with the given incident face degrees
inline rational pattern_curvature(const std::vector<int>& pattern) {
    rational phi = rat(1) - rat(static_cast<int>(pattern.size()), 2);
    for (int f : pattern) phi += rat(1, f);
    return phi;
}

} // namespace tess

#endif
