#ifndef TESS_DUAL_HPP
#define TESS_DUAL_HPP

// Plane dual with the full correspondence maps. Sphere mode only: a window's
// dual is not determined without the rest of the infinite graph.

#include <algorithm>
#include <map>
#include <vector>

#include "errors.hpp"
#include "map.hpp"

namespace tess {

struct dual_mapping {
    tessellation dual;
    std::vector<int> face_to_vertex;  // primal face -> dual vertex
    std::vector<int> vertex_to_face;  // primal vertex -> dual face
    std::vector<int> edge_to_edge;    // primal edge -> dual edge
};

inline dual_mapping dual_graph(const tessellation& t) {
    if (t.mode != graph_mode::sphere)
        fail(errc::patch_mode_unsupported, "dual is defined for the sphere mode only");

    const int nf = t.nf();
    dual_mapping out;
    out.face_to_vertex.resize(nf);
    for (int f = 0; f < nf; ++f) out.face_to_vertex[f] = f;

    // the rotation at a dual vertex follows its face's dart cycle
    std::vector<std::vector<int>> rot(nf);
    for (int f = 0; f < nf; ++f) {
        rot[f].reserve(t.faces[f].size());
        for (int d : t.faces[f]) rot[f].push_back(t.face_of[combinatorial_map::twin(d)]);
    }
    out.dual = build_from_rotation_system(rot, graph_mode::sphere);

    std::map<std::pair<int, int>, int> dual_edge;
    for (int e = 0; e < out.dual.ne(); ++e) {
        int u = out.dual.edge_u(e), v = out.dual.edge_v(e);
        dual_edge[{std::min(u, v), std::max(u, v)}] = e;
    }
    out.edge_to_edge.resize(t.ne());
    for (int e = 0; e < t.ne(); ++e) {
        int f = t.face_of[2 * e], g = t.face_of[2 * e + 1];
        out.edge_to_edge[e] = dual_edge.at({std::min(f, g), std::max(f, g)});
    }

    // a primal vertex's face ring reappears as a dual face with that vertex set
    std::map<std::vector<int>, int> by_vertex_set;
    for (int f = 0; f < out.dual.nf(); ++f) {
        std::vector<int> vs = out.dual.face_vertices(f);
        std::sort(vs.begin(), vs.end());
        by_vertex_set[vs] = f;
    }
    out.vertex_to_face.resize(t.nv());
    for (int v = 0; v < t.nv(); ++v) {
        std::vector<int> ring = t.vertex_faces(v);
        std::sort(ring.begin(), ring.end());
        auto it = by_vertex_set.find(ring);
        if (it == by_vertex_set.end())
            fail(errc::invalid_parameter,
                 "dual face ring missing for vertex " + std::to_string(v));
        out.vertex_to_face[v] = it->second;
    }
    return out;
}

}  // namespace tess

#endif
