#ifndef TESS_MEDIAL_HPP
#define TESS_MEDIAL_HPP

// Medial graph: one vertex per (interior) edge, joined when two edges are
// consecutive along a common face. Faces split into vertex faces and face
// faces; in patch mode the frontier closes with one synthetic outer face.

#include <algorithm>
#include <map>
#include <vector>

#include "curvature.hpp"
#include "errors.hpp"
#include "map.hpp"

namespace tess {

struct medial_mapping {
    tessellation medial;
    std::vector<int> edge_to_vertex;  // primal edge -> medial vertex (-1 if dropped)
    std::vector<int> vertex_to_face;  // primal vertex -> its medial face (-1 if cut)
    std::vector<int> face_to_face;    // primal face -> its medial face (-1 if cut)
};

namespace detail {

inline void set_outer(tessellation& t, int f) {
    t.mode = graph_mode::patch;
    t.outer = f;
    classify_interior(t);
}

}  // namespace detail

inline medial_mapping medial_graph(const tessellation& t) {
    const bool patch = t.mode == graph_mode::patch;

    medial_mapping out;
    out.edge_to_vertex.assign(t.ne(), -1);
    std::vector<int> vertex_edge;  // medial vertex -> primal edge
    for (int e = 0; e < t.ne(); ++e) {
        if (patch && !t.interior_edge(e)) continue;
        out.edge_to_vertex[e] = static_cast<int>(vertex_edge.size());
        vertex_edge.push_back(e);
    }
    if (vertex_edge.empty()) fail(errc::empty_interior, "no interior edge to medialize");

    // neighbors of m(e): predecessor and successor within each of e's faces,
    // in counterclockwise order around the edge midpoint
    const int nm = static_cast<int>(vertex_edge.size());
    std::vector<std::vector<int>> rot(nm);
    for (int mv = 0; mv < nm; ++mv) {
        int e = vertex_edge[mv];
        for (int d : {2 * e, 2 * e + 1}) {
            for (int nd : {t.map.face_prev(d), t.map.face_next(d)}) {
                int w = out.edge_to_vertex[nd / 2];
                if (w != -1) rot[mv].push_back(w);
            }
        }
    }
    // trace as a sphere first; in patch mode the frontier orbit is found and
    // promoted to the outer face afterwards
    out.medial = build_from_rotation_system(rot, graph_mode::sphere);

    // match every medial face to the primal vertex or face it surrounds
    out.vertex_to_face.assign(t.nv(), -1);
    out.face_to_face.assign(t.nf(), -1);
    std::vector<char> matched(out.medial.nf(), 0);
    for (int f = 0; f < out.medial.nf(); ++f) {
        std::vector<int> es;
        for (int mv : out.medial.face_vertices(f)) es.push_back(vertex_edge[mv]);
        std::sort(es.begin(), es.end());
        if (es.empty() || std::adjacent_find(es.begin(), es.end()) != es.end()) continue;

        int e0 = es[0];
        for (int x : {t.edge_u(e0), t.edge_v(e0)}) {
            if (static_cast<int>(es.size()) != t.vertex_degree(x)) continue;
            bool all = true;
            for (int e : es)
                if (t.edge_u(e) != x && t.edge_v(e) != x) all = false;
            if (all && out.vertex_to_face[x] == -1) {
                out.vertex_to_face[x] = f;
                matched[f] = 1;
                break;
            }
        }
        if (matched[f]) continue;
        for (int sigma : {t.face_of[2 * e0], t.face_of[2 * e0 + 1]}) {
            if (static_cast<int>(es.size()) != t.face_degree(sigma)) continue;
            std::vector<int> fe;
            for (int d : t.faces[sigma]) fe.push_back(d / 2);
            std::sort(fe.begin(), fe.end());
            if (fe == es && out.face_to_face[sigma] == -1) {
                out.face_to_face[sigma] = f;
                matched[f] = 1;
                break;
            }
        }
    }

    std::vector<int> unmatched;
    for (int f = 0; f < out.medial.nf(); ++f)
        if (!matched[f]) unmatched.push_back(f);
    if (patch) {
        if (unmatched.size() != 1)
            fail(errc::empty_interior,
                 "window interior does not medialize to a disk (" +
                     std::to_string(unmatched.size()) + " frontier orbits)");
        detail::set_outer(out.medial, unmatched[0]);
    } else if (!unmatched.empty()) {
        fail(errc::invalid_parameter, "medial face failed to match a vertex or face");
    }
    return out;
}

// Psi(e) equals the medial curvature at m(e), checked wherever the medial
// vertex is itself interior
inline bool psi_medial_transfer_check(const tessellation& t) {
    medial_mapping m = medial_graph(t);
    for (int e = 0; e < t.ne(); ++e) {
        if (t.mode == graph_mode::patch && !t.interior_edge(e)) continue;
        int mv = m.edge_to_vertex[e];
        if (!m.medial.interior_vertex(mv)) continue;
        if (psi_curvature(t, e) != combinatorial_curvature(m.medial, mv)) return false;
    }
    return true;
}

// V_k + F_k on the compared region equals the medial face census there
inline bool census_transfer_check(const tessellation& t) {
    medial_mapping m = medial_graph(t);
    std::map<int, long long> lhs, rhs;
    for (int x = 0; x < t.nv(); ++x)
        if (m.vertex_to_face[x] != -1) ++lhs[t.vertex_degree(x)];
    for (int f = 0; f < t.nf(); ++f)
        if (m.face_to_face[f] != -1) ++lhs[t.face_degree(f)];
    for (int f = 0; f < m.medial.nf(); ++f) {
        if (m.medial.mode == graph_mode::patch && f == m.medial.outer) continue;
        ++rhs[m.medial.face_degree(f)];
    }
    return lhs == rhs;
}

}  // namespace tess

#endif
