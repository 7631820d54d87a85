#ifndef TESS_NEIGHBORHOOD_HPP
#define TESS_NEIGHBORHOOD_HPP

// 1-neighborhood of a face: its boundary vertices together with all their
// neighbors. Only complete (fully interior) neighborhoods are served.

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "map.hpp"

namespace tess {

struct neighborhood_set {
    int face = -1;
    std::vector<int> u1;        // sorted vertex ids
    std::vector<int> boundary;  // u1 minus the face's own boundary, sorted
};

inline neighborhood_set one_neighborhood(const tessellation& t, int sigma) {
    t.check_face(sigma);
    if (!t.interior_face(sigma))
        fail(errc::truncated_neighborhood,
             "face " + std::to_string(sigma) + " is not interior");
    std::vector<int> ring = t.face_vertices(sigma);
    std::vector<int> u1 = ring;
    for (int z : ring)
        for (int w : t.neighbors(z)) u1.push_back(w);
    std::sort(u1.begin(), u1.end());
    u1.erase(std::unique(u1.begin(), u1.end()), u1.end());
    for (int v : u1)
        if (!t.interior_vertex(v))
            fail(errc::truncated_neighborhood,
                 "1-neighborhood of face " + std::to_string(sigma) +
                     " reaches the outer face at vertex " + std::to_string(v));
    neighborhood_set out;
    out.face = sigma;
    out.u1 = u1;
    std::vector<int> rs = ring;
    std::sort(rs.begin(), rs.end());
    std::set_difference(u1.begin(), u1.end(), rs.begin(), rs.end(),
                        std::back_inserter(out.boundary));
    return out;
}

}  // namespace tess

#endif
