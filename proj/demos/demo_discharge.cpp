// Builds the sharp window (a 12-gon padded by its triangle ring and square
// rings), then redistributes curvature so the whole budget shows up on the
// boundary of the big face.

#include <iostream>

#include "tess/tess.hpp"

using namespace tess;

int main() {
    tessellation t = sharp_big_face(12, 3);
    std::cout << "window: " << t.nv() << " vertices, interior total curvature "
              << frac(total_curvature(t)) << "\n";

    discharge_state d = discharge(t);
    std::cout << "big faces found: " << d.big_faces.size() << ", boundary vertices: "
              << d.w.size() << ", first ring outside: " << d.w1.size() << "\n\n";

    std::cout << "vertex  phi    phi~\n";
    for (int v : d.w)
        std::cout << "  " << v << "   " << frac(d.phi[v]) << "    " << frac(d.phi_tilde[v])
                  << "\n";

    rational before, after;
    for (const rational& x : d.phi) before += x;
    for (const rational& x : d.phi_tilde) after += x;
    std::cout << "\nconservation: " << frac(before) << " before, " << frac(after)
              << " after\n";
    std::cout << "curvature concentrated on the big face boundary: "
              << frac(d.boundary_sum[0]) << " (the bound asks for at least 1/2)\n";
    return 0;
}
