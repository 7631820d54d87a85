#ifndef TESS_VALIDATE_HPP
#define TESS_VALIDATE_HPP

#include <string>
#include <vector>

#include "map.hpp"

namespace tess {

struct violation {
    std::string condition;  // which invariant failed
    std::vector<int> ids;   // offending vertex/edge/face ids
};

struct validation_report {
    std::vector<violation> violations;
    bool empty() const { return violations.empty(); }
};

// Checks the tessellation conditions; in patch mode only interior elements
// are constrained, since boundary stars and cut faces are incomplete by design.
inline validation_report validate_tessellation(const tessellation& t) {
    validation_report rep;
    auto add = [&](const char* cond, std::vector<int> ids) {
        rep.violations.push_back({cond, std::move(ids)});
    };

    for (int v = 0; v < t.nv(); ++v)
        if (t.interior_vertex(v) && t.vertex_degree(v) < 3)
            add("vertex-degree", {v});

    for (int f = 0; f < t.nf(); ++f) {
        if (!t.interior_face(f)) continue;
        if (t.face_degree(f) < 3) add("face-degree", {f});
        // condition (i): a closed face is a closed disk, so its walk repeats no vertex
        auto vs = t.face_vertices(f);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) add("face-not-disk", {f});
    }

    // condition (ii): an edge lies on two distinct faces
    for (int e = 0; e < t.ne(); ++e) {
        if (!t.interior_edge(e)) continue;
        if (t.face_of[2 * e] == t.face_of[2 * e + 1]) add("edge-face-incidence", {e});
    }

    // condition (iii): two closed faces meet in nothing, one vertex, or one edge
    std::vector<int> inner;
    for (int f = 0; f < t.nf(); ++f)
        if (t.interior_face(f)) inner.push_back(f);
    for (size_t i = 0; i < inner.size(); ++i)
        for (size_t j = i + 1; j < inner.size(); ++j) {
            auto meet = detail::closure_intersection(t, inner[i], inner[j]);
            bool ok = (meet.edges.empty() && meet.verts.size() <= 1) ||
                      (meet.edges.size() == 1 && meet.verts.size() == 2);
            if (!ok) add("face-intersection", {inner[i], inner[j]});
        }

    return rep;
}

} // namespace tess

#endif
