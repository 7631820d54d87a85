#ifndef TESS_PATTERNS_HPP
#define TESS_PATTERNS_HPP

// Brute-force enumeration of the positive-curvature vertex patterns of a
// fixed degree, grouped into families (a,b,c,k) with a closed-form tail.

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace tess {

struct pattern_family {
    std::vector<int> prefix;  // the three fixed face degrees
    int k_lo = 0;
    int k_hi = 0;        // largest k with positive curvature, if bounded
    bool unbounded = false;
    rational offset;     // curvature = 1/k + offset

    rational curvature_at(int k) const { return rat(1, k) + offset; }
};

struct pattern_enumeration {
    std::vector<pattern_family> positive;
    std::vector<std::vector<int>> vanishing;
};

inline pattern_enumeration enumerate_positive_patterns(int vertex_degree, int k_max) {
    if (vertex_degree != 4)
        fail(errc::invalid_parameter, "pattern enumeration covers degree 4");
    if (k_max < 12) fail(errc::invalid_parameter, "k_max must be >= 12");

    pattern_enumeration out;
    for (int a = 3; a <= k_max; ++a)
        for (int b = a; b <= k_max; ++b)
            for (int c = b; c <= k_max; ++c) {
                rational offset = rat(1, a) + rat(1, b) + rat(1, c) - rat(1);
                pattern_family fam;
                fam.prefix = {a, b, c};
                fam.offset = offset;
                bool any = false;
                for (int k = c; k <= k_max; ++k) {
                    rational phi = fam.curvature_at(k);
                    if (phi.num > 0) {
                        if (!any) fam.k_lo = k;
                        fam.k_hi = k;
                        any = true;
                    } else if (phi.num == 0) {
                        out.vanishing.push_back({a, b, c, k});
                    }
                }
                if (!any) continue;
                // a nonnegative offset keeps the tail positive for every k
                fam.unbounded = offset.num >= 0;
                out.positive.push_back(fam);
            }
    std::sort(out.vanishing.begin(), out.vanishing.end());
    return out;
}

}  // namespace tess

#endif
