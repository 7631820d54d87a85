#ifndef TESS_CHECKERS_HPP
#define TESS_CHECKERS_HPP

// Structure checks around big faces and the global theorem checkers. The
// structural checks report precondition failures (degree, curvature sign)
// alongside the structural violations instead of refusing to run.

#include <algorithm>
#include <string>
#include <vector>

#include "census.hpp"
#include "curvature.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "map.hpp"
#include "neighborhood.hpp"
#include "validate.hpp"

namespace tess {

// Every face sharing an edge with a big face must be a triangle or a square,
// two such squares must not meet at a vertex of the big face, and the
// leftover corners of the adjacent faces must all be distinct.
inline validation_report big_face_structure_check(const tessellation& t, int sigma) {
    t.check_face(sigma);
    const int deg = t.face_degree(sigma);
    if (deg < 8 || deg > 12)
        fail(errc::invalid_parameter,
             "face " + std::to_string(sigma) + " has degree " + std::to_string(deg) +
                 ", outside 8..12");
    neighborhood_set nb = one_neighborhood(t, sigma);

    validation_report rep;
    auto add = [&](const char* cond, std::vector<int> ids) {
        rep.violations.push_back({cond, std::move(ids)});
    };
    rational zero;
    for (int v : nb.u1) {
        if (t.vertex_degree(v) != 4) add("window-not-4-regular", {v});
        if (combinatorial_curvature(t, v) < zero) add("window-negative-curvature", {v});
    }

    std::vector<int> lower = faces_lower_adjacent_to(t, sigma);
    std::vector<int> sv = t.face_vertices(sigma);
    std::sort(sv.begin(), sv.end());
    std::vector<std::vector<int>> leftover(lower.size());
    for (size_t i = 0; i < lower.size(); ++i) {
        int tau = lower[i];
        int td = t.face_degree(tau);
        if (td != 3 && td != 4) add("lower-adjacent-degree", {sigma, tau});
        std::vector<int> tv = t.face_vertices(tau);
        std::sort(tv.begin(), tv.end());
        std::set_difference(tv.begin(), tv.end(), sv.begin(), sv.end(),
                            std::back_inserter(leftover[i]));
    }
    for (size_t i = 0; i < lower.size(); ++i)
        for (size_t j = i + 1; j < lower.size(); ++j) {
            if (t.face_degree(lower[i]) == 4 && t.face_degree(lower[j]) == 4 &&
                sigma_adjacent(t, sigma, lower[i], lower[j]))
                add("sigma-adjacent-squares", {sigma, lower[i], lower[j]});
            std::vector<int> shared;
            std::set_intersection(leftover[i].begin(), leftover[i].end(),
                                  leftover[j].begin(), leftover[j].end(),
                                  std::back_inserter(shared));
            for (int v : shared) add("identified-outer-corner", {lower[i], lower[j], v});
        }
    return rep;
}

// The 1-neighborhoods of any two big interior faces must not meet.
inline validation_report disjoint_neighborhoods_check(const tessellation& t) {
    validation_report rep;
    auto add = [&](const char* cond, std::vector<int> ids) {
        rep.violations.push_back({cond, std::move(ids)});
    };

    std::vector<neighborhood_set> nbs;
    for (int f = 0; f < t.nf(); ++f) {
        if (!t.interior_face(f)) continue;
        int deg = t.face_degree(f);
        if (deg < 8 || deg > 12) continue;
        try {
            nbs.push_back(one_neighborhood(t, f));
        } catch (const map_error& err) {
            if (err.code != errc::truncated_neighborhood) throw;
        }
    }
    rational zero;
    std::vector<int> flagged;
    for (const auto& nb : nbs)
        for (int v : nb.u1) {
            if (std::find(flagged.begin(), flagged.end(), v) != flagged.end()) continue;
            bool bad = t.vertex_degree(v) != 4 ||
                       combinatorial_curvature(t, v) < zero;
            if (bad) {
                flagged.push_back(v);
                if (t.vertex_degree(v) != 4) add("window-not-4-regular", {v});
                if (combinatorial_curvature(t, v) < zero)
                    add("window-negative-curvature", {v});
            }
        }
    for (size_t i = 0; i < nbs.size(); ++i)
        for (size_t j = i + 1; j < nbs.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(nbs[i].u1.begin(), nbs[i].u1.end(),
                                  nbs[j].u1.begin(), nbs[j].u1.end(),
                                  std::back_inserter(shared));
            for (int v : shared)
                add("overlapping-neighborhoods", {nbs[i].face, nbs[j].face, v});
        }
    return rep;
}

enum class check_status { pass, fail, skipped };

inline const char* status_name(check_status s) {
    switch (s) {
        case check_status::pass: return "pass";
        case check_status::fail: return "fail";
        default: return "skipped";
    }
}

// One row of the check bundle. "skipped" marks a bound that is exceeded on a
// graph outside the hypotheses of the statement being checked, so nothing is
// actually violated. The value is always the computed quantity.
struct theorem_check {
    std::string name;
    check_status status = check_status::pass;
    std::string value;
    std::vector<int> witnesses;
};

inline bool is_antiprism(const tessellation& t);

inline bool four_regular_interior(const tessellation& t) {
    for (int v = 0; v < t.nv(); ++v)
        if (t.interior_vertex(v) && t.vertex_degree(v) != 4) return false;
    return true;
}

inline theorem_check gauss_bonnet(const tessellation& t) {
    if (t.mode != graph_mode::sphere)
        fail(errc::mode_mismatch, "gauss_bonnet needs a sphere tessellation");
    theorem_check c;
    c.name = "gauss_bonnet";
    rational total = total_curvature(t);
    c.value = frac(total);
    c.status = total == rat(2) ? check_status::pass : check_status::fail;
    return c;
}

// Total interior curvature of a window of a nonnegatively curved
// tessellation never exceeds 1.
inline theorem_check cohn_vossen(const tessellation& t) {
    if (t.mode != graph_mode::patch)
        fail(errc::mode_mismatch, "cohn_vossen bounds a patch window");
    theorem_check c;
    c.name = "cohn_vossen";
    rational total = total_curvature(t);
    c.value = frac(total);
    if (total <= rat(1))
        c.status = check_status::pass;
    else
        c.status = classify(t).in_nng ? check_status::fail : check_status::skipped;
    return c;
}

// No interior face of a 4-regular nonnegatively curved graph exceeds degree
// 12; a sphere may carry one larger face exactly when it is an antiprism.
inline theorem_check max_face_degree(const tessellation& t) {
    theorem_check c;
    c.name = "max_face_degree";
    int best = 0, arg = -1;
    for (int f = 0; f < t.nf(); ++f)
        if (t.interior_face(f) && t.face_degree(f) > best) {
            best = t.face_degree(f);
            arg = f;
        }
    c.value = std::to_string(best);
    if (arg != -1) c.witnesses.push_back(arg);
    if (best <= 12) {
        c.status = check_status::pass;
        return c;
    }
    if (!four_regular_interior(t) || !classify(t).in_nng) {
        c.status = check_status::skipped;
        return c;
    }
    if (t.mode == graph_mode::sphere && is_antiprism(t)) {
        c.status = check_status::pass;
        return c;
    }
    c.status = check_status::fail;
    return c;
}

// F_5 <= 21, F_7 <= 15 and at most one interior face of degree 8..12 in a
// 4-regular nonnegatively curved window.
inline theorem_check face_count_bounds(const tessellation& t) {
    if (t.mode != graph_mode::patch)
        fail(errc::mode_mismatch, "face_count_bounds applies to patch windows");
    theorem_check c;
    c.name = "face_count_bounds";
    census_table cs = census(t);
    long long big = 0;
    for (int k = 8; k <= 12; ++k) big += cs.f(k);
    c.value = "f5=" + std::to_string(cs.f(5)) + " f7=" + std::to_string(cs.f(7)) +
              " f8..12=" + std::to_string(big);
    for (int f = 0; f < t.nf(); ++f)
        if (t.interior_face(f) && t.face_degree(f) >= 8 && t.face_degree(f) <= 12)
            c.witnesses.push_back(f);
    if (cs.f(5) <= 21 && cs.f(7) <= 15 && big <= 1)
        c.status = check_status::pass;
    else if (four_regular_interior(t) && classify(t).in_nng)
        c.status = check_status::fail;
    else
        c.status = check_status::skipped;
    return c;
}

// Two n-gons joined by a band of 2n triangles, every vertex (3,3,3,n).
inline bool is_antiprism(const tessellation& t) {
    if (t.mode != graph_mode::sphere)
        fail(errc::mode_mismatch, "is_antiprism classifies sphere tessellations");
    if (t.nv() % 2 != 0 || t.nv() < 6) return false;
    return isomorphic(t, antiprism(t.nv() / 2));
}

// The mode-appropriate slice of the bundle, ready for reporting.
inline std::vector<theorem_check> run_theorem_checkers(const tessellation& t) {
    std::vector<theorem_check> out;
    if (t.mode == graph_mode::sphere) {
        out.push_back(gauss_bonnet(t));
        out.push_back(max_face_degree(t));
        theorem_check ap;
        ap.name = "is_antiprism";
        ap.value = is_antiprism(t) ? "true" : "false";
        out.push_back(ap);
    } else {
        out.push_back(cohn_vossen(t));
        out.push_back(max_face_degree(t));
        out.push_back(face_count_bounds(t));
    }
    return out;
}

}  // namespace tess

#endif
