#ifndef TESS_DISCHARGE_HPP
#define TESS_DISCHARGE_HPP

// Curvature redistribution around big faces. Boundary vertices of a big face
// absorb half of the curvature of each neighbor one ring further out, so the
// redistributed curvature concentrates on the face boundary while the total
// over the interior is unchanged.

#include <algorithm>
#include <vector>

#include "curvature.hpp"
#include "errors.hpp"
#include "map.hpp"
#include "neighborhood.hpp"

namespace tess {

struct discharge_state {
    std::vector<int> big_faces;          // interior faces of degree 8..12
    std::vector<int> w;                  // union of their boundaries, sorted
    std::vector<int> w1;                 // union of their outer rings, sorted
    std::vector<rational> phi;           // per vertex, interior only
    std::vector<rational> phi_tilde;     // per vertex after redistribution
    rational total;                      // interior sum, same for both
    std::vector<rational> boundary_sum;  // per big face, over its boundary
};

inline discharge_state discharge(const tessellation& t) {
    if (t.mode != graph_mode::patch)
        fail(errc::mode_mismatch, "discharge redistributes over a patch window");
    rational zero;
    for (int v = 0; v < t.nv(); ++v) {
        if (!t.interior_vertex(v)) continue;
        if (t.vertex_degree(v) != 4)
            fail(errc::invalid_parameter,
                 "discharge needs a 4-regular window, vertex " + std::to_string(v) +
                     " has degree " + std::to_string(t.vertex_degree(v)));
        if (combinatorial_curvature(t, v) < zero)
            fail(errc::invalid_parameter,
                 "discharge needs nonnegative curvature, vertex " + std::to_string(v) +
                     " is negative");
    }

    discharge_state st;
    std::vector<std::vector<int>> boundaries, rings;
    for (int f = 0; f < t.nf(); ++f) {
        if (!t.interior_face(f)) continue;
        int deg = t.face_degree(f);
        if (deg < 8 || deg > 12) continue;
        neighborhood_set nb = one_neighborhood(t, f);  // throws when truncated
        st.big_faces.push_back(f);
        std::vector<int> bd = t.face_vertices(f);
        std::sort(bd.begin(), bd.end());
        boundaries.push_back(bd);
        rings.push_back(nb.boundary);
        st.w.insert(st.w.end(), bd.begin(), bd.end());
        st.w1.insert(st.w1.end(), nb.boundary.begin(), nb.boundary.end());
    }
    auto dedupe = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(st.w);
    dedupe(st.w1);

    st.phi.assign(t.nv(), zero);
    for (int v = 0; v < t.nv(); ++v)
        if (t.interior_vertex(v)) st.phi[v] = combinatorial_curvature(t, v);
    st.phi_tilde = st.phi;

    rational half = rat(1, 2);
    auto in = [](const std::vector<int>& s, int v) {
        return std::binary_search(s.begin(), s.end(), v);
    };
    for (int x : st.w) {
        rational gain;
        for (int y : t.neighbors(x))
            if (in(st.w1, y)) gain += st.phi[y];
        st.phi_tilde[x] += half * gain;
    }
    for (int y : st.w1) {
        long long k = 0;
        for (int x : t.neighbors(y))
            if (in(st.w, x)) ++k;
        st.phi_tilde[y] -= half * rat(k) * st.phi[y];
    }

    for (int v = 0; v < t.nv(); ++v)
        if (t.interior_vertex(v)) st.total += st.phi[v];
    for (const auto& bd : boundaries) {
        rational s;
        for (int v : bd) s += st.phi_tilde[v];
        st.boundary_sum.push_back(s);
    }
    return st;
}

struct local_discharge_state {
    std::vector<int> b;          // the chosen vertex set, sorted
    int sigma1 = -1, sigma2 = -1;
    long long receivers = 0;     // N, size of B meeting the two boundaries
    std::vector<rational> phi_prime;  // per vertex of b, donors keep their value
};

// Donors in B but on neither boundary spread their curvature evenly over the
// receivers in B on the boundaries.
inline local_discharge_state modified_curvature_B(const tessellation& t, int sigma1,
                                                  int sigma2, std::vector<int> B) {
    t.check_face(sigma1);
    t.check_face(sigma2);
    std::sort(B.begin(), B.end());
    B.erase(std::unique(B.begin(), B.end()), B.end());
    for (int v : B) {
        if (v < 0 || v >= t.nv())
            fail(errc::invalid_parameter, "vertex " + std::to_string(v) + " out of range");
        if (!t.interior_vertex(v))
            fail(errc::truncated_neighborhood,
                 "vertex " + std::to_string(v) + " of B is not interior");
    }
    std::vector<int> bd = t.face_vertices(sigma1), bd2 = t.face_vertices(sigma2);
    bd.insert(bd.end(), bd2.begin(), bd2.end());
    std::sort(bd.begin(), bd.end());

    local_discharge_state st;
    st.b = B;
    st.sigma1 = sigma1;
    st.sigma2 = sigma2;
    rational donated;
    std::vector<bool> receives(B.size(), false);
    for (size_t i = 0; i < B.size(); ++i) {
        if (std::binary_search(bd.begin(), bd.end(), B[i])) {
            receives[i] = true;
            ++st.receivers;
        } else {
            donated += combinatorial_curvature(t, B[i]);
        }
    }
    if (st.receivers == static_cast<long long>(B.size()))
        fail(errc::empty_donor_set, "every vertex of B lies on the two boundaries");
    if (st.receivers == 0)
        fail(errc::empty_receiver_set, "no vertex of B lies on the two boundaries");

    rational share = donated / rat(st.receivers);
    for (size_t i = 0; i < B.size(); ++i) {
        rational phi = combinatorial_curvature(t, B[i]);
        st.phi_prime.push_back(receives[i] ? phi + share : phi);
    }
    return st;
}

}  // namespace tess

#endif
