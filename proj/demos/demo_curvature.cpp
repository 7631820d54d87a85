// Walks the three curvature notions on a couple of small graphs: vertex
// curvature on the cube, edge curvature on the truncated cube, and the
// transfer of edge curvature onto the medial graph.

#include <iostream>

#include "tess/tess.hpp"

using namespace tess;

int main() {
    tessellation cube = platonic("cube");
    std::cout << "cube: " << cube.nv() << " vertices, each with curvature "
              << frac(combinatorial_curvature(cube, 0)) << ", total "
              << frac(total_curvature(cube)) << "\n\n";

    tessellation tc = truncated_cube();
    std::cout << "truncated cube edges by curvature:\n";
    for (int e = 0; e < tc.ne(); ++e) {
        int s1 = tc.face_of[2 * e], s2 = tc.face_of[2 * e + 1];
        if (tc.face_degree(s1) == 8 && tc.face_degree(s2) == 8) {
            std::cout << "  octagon|octagon edge " << e << ": psi = "
                      << frac(psi_curvature(tc, e)) << "\n";
            break;
        }
    }
    for (int e = 0; e < tc.ne(); ++e) {
        int s1 = tc.face_of[2 * e], s2 = tc.face_of[2 * e + 1];
        if (tc.face_degree(s1) == 3 || tc.face_degree(s2) == 3) {
            std::cout << "  triangle|octagon edge " << e << ": psi = "
                      << frac(psi_curvature(tc, e)) << "\n\n";
            break;
        }
    }

    medial_mapping m = medial_graph(tc);
    std::cout << "medial of the truncated cube has " << m.medial.nv()
              << " vertices; psi(e) reappears as the vertex curvature at m(e): "
              << (psi_medial_transfer_check(tc) ? "verified" : "BROKEN") << "\n";

    census_table c = census(m.medial);
    std::cout << "its face census counts both sides of the correspondence:\n";
    for (const auto& [k, count] : c.f_k)
        std::cout << "  " << count << " faces of degree " << k << "\n";
    return 0;
}
