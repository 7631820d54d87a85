#ifndef TESS_CENSUS_HPP
#define TESS_CENSUS_HPP

// Degree censuses V_k and F_k, restricted to interior elements for patches.

#include <map>

#include "map.hpp"

namespace tess {

struct census_table {
    std::map<int, long long> v_k;
    std::map<int, long long> f_k;

    long long v(int k) const {
        auto it = v_k.find(k);
        return it == v_k.end() ? 0 : it->second;
    }
    long long f(int k) const {
        auto it = f_k.find(k);
        return it == f_k.end() ? 0 : it->second;
    }
};

inline census_table census(const tessellation& t) {
    census_table c;
    for (int v = 0; v < t.nv(); ++v)
        if (t.interior_vertex(v)) ++c.v_k[t.vertex_degree(v)];
    for (int f = 0; f < t.nf(); ++f)
        if (t.interior_face(f)) ++c.f_k[t.face_degree(f)];
    return c;
}

}  // namespace tess

#endif
