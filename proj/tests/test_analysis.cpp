#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "gadgets.hpp"
#include "oracles.hpp"
#include "tess/tess.hpp"

using namespace tess;

namespace {

void expect_code(errc want, const std::function<void()>& fn) {
    try {
        fn();
        FAIL("expected a map_error");
    } catch (const map_error& e) {
        CHECK(e.code == want);
    }
}

std::vector<std::vector<int>> rows(const validation_report& rep, const std::string& cond) {
    std::vector<std::vector<int>> out;
    for (const auto& v : rep.violations)
        if (v.condition == cond) out.push_back(v.ids);
    return out;
}

const theorem_check& row(const std::vector<theorem_check>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c;
    FAIL("no check named " + name);
    static theorem_check dummy;
    return dummy;
}

int interior_face_of_degree(const tessellation& t, int deg) {
    int f = gadget::face_of_degree(t, deg);
    REQUIRE(f >= 0);
    return f;
}

} // namespace

TEST_CASE("1-neighborhoods collect a face's vertices and their neighbors") {
    tessellation cube = platonic("cube");
    neighborhood_set nb = one_neighborhood(cube, 0);
    CHECK(nb.u1.size() == 8);  // a cube face plus its neighbors is everything
    CHECK(nb.boundary.size() == 4);

    tessellation sharp = sharp_big_face(12, 3);
    int big = interior_face_of_degree(sharp, 12);
    neighborhood_set snb = one_neighborhood(sharp, big);
    CHECK(snb.u1.size() == 24);
    CHECK(snb.boundary.size() == 12);
    for (int v : snb.boundary)
        CHECK(vertex_pattern(sharp, v) == std::vector<int>{3, 4, 4, 4});

    tessellation grid = square_lattice(6, 6);
    int complete = 0;
    neighborhood_set center;
    for (int f = 0; f < grid.nf(); ++f) {
        if (!grid.interior_face(f)) continue;
        try {
            center = one_neighborhood(grid, f);
            ++complete;
        } catch (const map_error& e) {
            CHECK(e.code == errc::truncated_neighborhood);
        }
    }
    // only the central square of a 6x6 grid has its full ring inside
    CHECK(complete == 1);
    CHECK(center.u1.size() == 12);
    CHECK(center.boundary.size() == 8);
}

TEST_CASE("1-neighborhoods refuse to cross the outer face") {
    tessellation grid = square_lattice(4, 4);
    int f = interior_face_of_degree(grid, 4);
    try {
        one_neighborhood(grid, f);
        FAIL("truncated neighborhood accepted");
    } catch (const map_error& e) {
        CHECK(e.code == errc::truncated_neighborhood);
        CHECK(std::string(e.what()).find("vertex") != std::string::npos);
    }
    // the outer face itself is refused outright
    expect_code(errc::truncated_neighborhood, [&] { one_neighborhood(grid, grid.outer); });
}

TEST_CASE("1-neighborhoods agree with the brute-force oracle") {
    std::vector<tessellation> graphs;
    graphs.push_back(platonic("cube"));
    graphs.push_back(antiprism(7));
    graphs.push_back(sharp_big_face(10, 3));
    for (const auto& t : graphs) {
        auto rot = oracle::neighbor_lists(t);
        for (int f = 0; f < t.nf(); ++f) {
            if (!t.interior_face(f)) continue;
            neighborhood_set nb;
            try {
                nb = one_neighborhood(t, f);
            } catch (const map_error&) {
                continue;
            }
            CHECK(nb.u1 == oracle::u1(rot, t.face_vertices(f)));
        }
    }
}

TEST_CASE("censuses count interior elements only and match the oracle") {
    census_table cc = census(platonic("cube"));
    CHECK(cc.v(3) == 8);
    CHECK(cc.f(4) == 6);
    CHECK(cc.v(4) == 0);

    tessellation grid = square_lattice(5, 4);
    census_table gc = census(grid);
    CHECK(gc.v(4) == 6);  // the 3x2 interior block
    CHECK(gc.f(4) == 2);  // strict rule: faces whose corners are all interior

    std::vector<tessellation> graphs;
    graphs.push_back(sharp_big_face(9, 3));
    graphs.push_back(trihexagonal(2));
    graphs.push_back(rhombille(2));
    graphs.push_back(grid);
    for (const auto& t : graphs) {
        auto rot = oracle::neighbor_lists(t);
        int d0 = t.faces[t.outer][0];
        auto cls = oracle::classify(rot, true, t.map.origin[d0], t.map.head(d0));
        census_table cs = census(t);
        CHECK(cs.v_k == cls.vertex_census);
        CHECK(cs.f_k == cls.face_census);
    }
    auto sphere_cls = oracle::classify(oracle::neighbor_lists(antiprism(6)), false);
    census_table ac = census(antiprism(6));
    CHECK(ac.v_k == sphere_cls.vertex_census);
    CHECK(ac.f_k == sphere_cls.face_census);
}

TEST_CASE("positive curvature patterns of degree four fall into four families") {
    pattern_enumeration pe = enumerate_positive_patterns(4, 30);
    REQUIRE(pe.positive.size() == 4);

    auto family = [&](std::vector<int> prefix) -> const pattern_family& {
        for (const auto& f : pe.positive)
            if (f.prefix == prefix) return f;
        FAIL("missing family");
        static pattern_family dummy;
        return dummy;
    };

    const pattern_family& f333 = family({3, 3, 3});
    CHECK(f333.unbounded);
    CHECK(f333.offset == rat(0));
    CHECK(f333.k_lo == 3);
    CHECK(f333.curvature_at(9) == rat(1, 9));

    const pattern_family& f334 = family({3, 3, 4});
    CHECK_FALSE(f334.unbounded);
    CHECK(f334.offset == rat(-1, 12));
    CHECK(f334.k_lo == 4);
    CHECK(f334.k_hi == 11);
    CHECK(f334.curvature_at(8) == pattern_curvature({3, 3, 4, 8}));

    const pattern_family& f335 = family({3, 3, 5});
    CHECK(f335.offset == rat(-2, 15));
    CHECK(f335.k_lo == 5);
    CHECK(f335.k_hi == 7);

    const pattern_family& f344 = family({3, 4, 4});
    CHECK(f344.offset == rat(-1, 6));
    CHECK(f344.k_lo == 4);
    CHECK(f344.k_hi == 5);

    std::vector<std::vector<int>> vanish{
        {3, 3, 4, 12}, {3, 3, 6, 6}, {3, 4, 4, 6}, {4, 4, 4, 4}};
    CHECK(pe.vanishing == vanish);
}

TEST_CASE("pattern enumeration is stable under a larger cutoff") {
    pattern_enumeration a = enumerate_positive_patterns(4, 30);
    pattern_enumeration b = enumerate_positive_patterns(4, 50);
    REQUIRE(a.positive.size() == b.positive.size());
    CHECK(a.vanishing == b.vanishing);
    for (size_t i = 0; i < a.positive.size(); ++i) {
        CHECK(a.positive[i].prefix == b.positive[i].prefix);
        CHECK(a.positive[i].unbounded == b.positive[i].unbounded);
        if (!a.positive[i].unbounded) CHECK(a.positive[i].k_hi == b.positive[i].k_hi);
    }
}

TEST_CASE("pattern enumeration rejects unsupported inputs") {
    expect_code(errc::invalid_parameter, [] { enumerate_positive_patterns(3, 30); });
    expect_code(errc::invalid_parameter, [] { enumerate_positive_patterns(4, 11); });
}

TEST_CASE("big face structure check flags the pinched window") {
    tessellation t = gadget::pinch_patch();
    int big = interior_face_of_degree(t, 9);
    validation_report rep = big_face_structure_check(t, big);

    auto not4 = rows(rep, "window-not-4-regular");
    auto neg = rows(rep, "window-negative-curvature");
    auto ident = rows(rep, "identified-outer-corner");
    CHECK(not4 == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(neg == std::vector<std::vector<int>>{{0}, {3}});
    for (const auto& ids : not4) CHECK(t.vertex_degree(ids[0]) == 3);
    for (const auto& ids : neg) CHECK(combinatorial_curvature(t, ids[0]) == rat(-1, 18));

    // three triangles share one apex, so every pair reports the same corner
    REQUIRE(ident.size() == 3);
    for (const auto& ids : ident) {
        REQUIRE(ids.size() == 3);
        CHECK(ids[2] == 9);
    }
    CHECK(rows(rep, "lower-adjacent-degree").empty());
    CHECK(rows(rep, "sigma-adjacent-squares").empty());
}

TEST_CASE("big face structure check flags the octagon domino") {
    tessellation t = gadget::domino_patch();
    std::vector<int> octs;
    for (int f = 0; f < t.nf(); ++f)
        if (t.interior_face(f) && t.face_degree(f) == 8) octs.push_back(f);
    REQUIRE(octs.size() == 2);

    validation_report rep = big_face_structure_check(t, octs[0]);
    auto low = rows(rep, "lower-adjacent-degree");
    REQUIRE(low.size() == 1);
    CHECK(low[0] == std::vector<int>{octs[0], octs[1]});

    auto neg = rows(rep, "window-negative-curvature");
    REQUIRE(neg.size() == 2);
    for (const auto& ids : neg) {
        CHECK(combinatorial_curvature(t, ids[0]) == rat(-1, 12));
        CHECK(vertex_pattern(t, ids[0]) == std::vector<int>{3, 3, 8, 8});
    }
    CHECK(rows(rep, "window-not-4-regular").empty());
    CHECK(rows(rep, "identified-outer-corner").empty());
}

TEST_CASE("big face structure check rejects small faces and truncated windows") {
    tessellation grid = square_lattice(6, 6);
    int square = interior_face_of_degree(grid, 4);
    expect_code(errc::invalid_parameter, [&] { big_face_structure_check(grid, square); });

    tessellation ap = gadget::antiprism_window(9);
    int bottom = interior_face_of_degree(ap, 9);
    expect_code(errc::truncated_neighborhood,
                [&] { big_face_structure_check(ap, bottom); });
}

TEST_CASE("neighborhood disjointness fires on the domino and not on clean windows") {
    tessellation t = gadget::domino_patch();
    validation_report rep = disjoint_neighborhoods_check(t);

    auto over = rows(rep, "overlapping-neighborhoods");
    std::set<int> shared;
    for (const auto& ids : over) {
        REQUIRE(ids.size() == 3);
        shared.insert(ids[2]);
    }
    // the octagon rings meet in the shared edge, its flanks and both end caps
    CHECK(over.size() == 8);
    CHECK(shared.size() == 8);
    CHECK(rows(rep, "window-negative-curvature").size() == 2);

    for (int k = 8; k <= 12; ++k) {
        CHECK(disjoint_neighborhoods_check(sharp_big_face(k, 3)).empty());
        CHECK(big_face_structure_check(sharp_big_face(k, 3),
                                       interior_face_of_degree(sharp_big_face(k, 3), k))
                  .empty());
    }
    CHECK(disjoint_neighborhoods_check(gadget::cone_chain(8, 2)).empty());
}

TEST_CASE("theorem checkers cover the reference sphere") {
    std::vector<theorem_check> checks = run_theorem_checkers(platonic("cube"));
    REQUIRE(checks.size() == 3);
    CHECK(row(checks, "gauss_bonnet").status == check_status::pass);
    CHECK(row(checks, "gauss_bonnet").value == "2/1");
    CHECK(row(checks, "max_face_degree").status == check_status::pass);
    CHECK(row(checks, "max_face_degree").value == "4");
    CHECK(row(checks, "is_antiprism").value == "false");
}

TEST_CASE("theorem checkers respect the tessellation mode") {
    tessellation cube = platonic("cube");
    tessellation grid = square_lattice(3, 3);
    expect_code(errc::mode_mismatch, [&] { gauss_bonnet(grid); });
    expect_code(errc::mode_mismatch, [&] { cohn_vossen(cube); });
    expect_code(errc::mode_mismatch, [&] { face_count_bounds(cube); });
    expect_code(errc::mode_mismatch, [&] { is_antiprism(grid); });
}

TEST_CASE("a face beyond degree twelve is tolerated exactly for antiprisms") {
    std::vector<theorem_check> big = run_theorem_checkers(antiprism(15));
    CHECK(row(big, "gauss_bonnet").status == check_status::pass);
    CHECK(row(big, "max_face_degree").status == check_status::pass);
    CHECK(row(big, "max_face_degree").value == "15");
    CHECK(row(big, "is_antiprism").value == "true");

    // same bound broken on a graph outside the hypotheses: nothing to report
    theorem_check pr = max_face_degree(prism(13));
    CHECK(pr.status == check_status::skipped);
    CHECK(pr.value == "13");

    // a window is never the antiprism escape hatch
    theorem_check win = max_face_degree(gadget::antiprism_window(13));
    CHECK(win.status == check_status::fail);
    CHECK(win.value == "13");
    REQUIRE(win.witnesses.size() == 1);
    CHECK(win.witnesses[0] == interior_face_of_degree(gadget::antiprism_window(13), 13));
}

TEST_CASE("face count bounds fire on chained cones") {
    tessellation five = gadget::cone_chain(5, 22);
    theorem_check cv = cohn_vossen(five);
    CHECK(cv.status == check_status::fail);
    CHECK(cv.value == "22/1");
    theorem_check fc = face_count_bounds(five);
    CHECK(fc.status == check_status::fail);
    CHECK(fc.value == "f5=22 f7=0 f8..12=0");

    CHECK(face_count_bounds(gadget::cone_chain(7, 16)).status == check_status::fail);
    CHECK(face_count_bounds(gadget::cone_chain(7, 15)).status == check_status::pass);

    tessellation two = gadget::cone_chain(8, 2);
    theorem_check fc8 = face_count_bounds(two);
    CHECK(fc8.status == check_status::fail);
    CHECK(fc8.value == "f5=0 f7=0 f8..12=2");
    CHECK(fc8.witnesses.size() == 2);
    CHECK(cohn_vossen(two).value == "2/1");
}

TEST_CASE("sharp windows pass every patch checker") {
    for (int k = 8; k <= 12; ++k) {
        std::vector<theorem_check> checks = run_theorem_checkers(sharp_big_face(k, 3));
        REQUIRE(checks.size() == 3);
        for (const auto& c : checks) CHECK(c.status == check_status::pass);
        CHECK(row(checks, "cohn_vossen").value == "1/1");
    }
}

TEST_CASE("discharge concentrates curvature on big face boundaries") {
    tessellation t = sharp_big_face(12, 3);
    discharge_state st = discharge(t);
    REQUIRE(st.big_faces.size() == 1);
    CHECK(st.w.size() == 12);
    CHECK(st.w1.size() == 12);
    CHECK(st.total == rat(1));
    REQUIRE(st.boundary_sum.size() == 1);
    CHECK(st.boundary_sum[0] == rat(1));
    for (int x : st.w) {
        CHECK(st.phi[x] == rat(0));
        CHECK(st.phi_tilde[x] == rat(1, 12));
    }
    for (int y : st.w1) {
        CHECK(st.phi[y] == rat(1, 12));
        CHECK(st.phi_tilde[y] == rat(0));
    }
    // vertices outside the face ring keep their curvature
    for (int v = 0; v < t.nv(); ++v) {
        if (!t.interior_vertex(v)) continue;
        if (std::binary_search(st.w.begin(), st.w.end(), v)) continue;
        if (std::binary_search(st.w1.begin(), st.w1.end(), v)) continue;
        CHECK(st.phi_tilde[v] == st.phi[v]);
    }

    for (int k = 8; k <= 12; ++k) {
        tessellation tk = sharp_big_face(k, 3);
        discharge_state sk = discharge(tk);
        rational redistributed;
        for (int v = 0; v < tk.nv(); ++v)
            if (tk.interior_vertex(v)) redistributed += sk.phi_tilde[v];
        CHECK(redistributed == sk.total);
        REQUIRE(sk.boundary_sum.size() == 1);
        CHECK(sk.boundary_sum[0] == rat(1));
        CHECK(sk.boundary_sum[0] > rat(1, 2));
    }
    CHECK(discharge(sharp_big_face(8, 3)).phi_tilde[0] == rat(1, 8));
}

TEST_CASE("discharge leaves windows without big faces alone") {
    tessellation grid = square_lattice(6, 6);
    discharge_state st = discharge(grid);
    CHECK(st.big_faces.empty());
    CHECK(st.w.empty());
    CHECK(st.w1.empty());
    CHECK(st.total == rat(0));
    CHECK(st.phi_tilde == st.phi);
}

TEST_CASE("discharge rejects windows outside its hypotheses") {
    expect_code(errc::mode_mismatch, [] { discharge(platonic("cube")); });
    try {
        discharge(rhombille(2));
        FAIL("mixed-degree window accepted");
    } catch (const map_error& e) {
        CHECK(e.code == errc::invalid_parameter);
        CHECK(std::string(e.what()).find("4-regular") != std::string::npos);
    }
    expect_code(errc::truncated_neighborhood, [] { discharge(gadget::antiprism_window(8)); });
    expect_code(errc::invalid_parameter, [] { discharge(gadget::domino_patch()); });
}

TEST_CASE("local redistribution spreads donor curvature over the boundaries") {
    tessellation cube = platonic("cube");
    int s1 = cube.face_of[0], s2 = cube.face_of[1];  // the two sides of edge 0
    std::vector<int> everyone{0, 1, 2, 3, 4, 5, 6, 7};
    local_discharge_state st = modified_curvature_B(cube, s1, s2, everyone);
    CHECK(st.receivers == 6);
    REQUIRE(st.phi_prime.size() == 8);
    int bumped = 0;
    for (size_t i = 0; i < st.b.size(); ++i) {
        if (st.phi_prime[i] == rat(1, 3)) ++bumped;
        else CHECK(st.phi_prime[i] == rat(1, 4));
    }
    CHECK(bumped == 6);

    int opposite = -1;
    std::vector<int> sv = cube.face_vertices(s1);
    std::sort(sv.begin(), sv.end());
    for (int f = 0; f < cube.nf(); ++f) {
        std::vector<int> fv = cube.face_vertices(f);
        if (std::none_of(fv.begin(), fv.end(), [&](int v) {
                return std::binary_search(sv.begin(), sv.end(), v);
            }))
            opposite = f;
    }
    REQUIRE(opposite >= 0);
    expect_code(errc::empty_donor_set,
                [&] { modified_curvature_B(cube, s1, opposite, everyone); });

    // donors only: both boundaries miss B entirely
    std::vector<int> off;
    for (int v = 0; v < 8; ++v)
        if (!std::binary_search(sv.begin(), sv.end(), v)) off.push_back(v);
    std::vector<int> sv2 = cube.face_vertices(s2);
    off.erase(std::remove_if(off.begin(), off.end(),
                             [&](int v) {
                                 return std::find(sv2.begin(), sv2.end(), v) != sv2.end();
                             }),
              off.end());
    REQUIRE(!off.empty());
    expect_code(errc::empty_receiver_set, [&] { modified_curvature_B(cube, s1, s2, off); });

    expect_code(errc::invalid_parameter, [&] { modified_curvature_B(cube, s1, s2, {99}); });
    tessellation grid = square_lattice(4, 4);
    int center = gadget::face_of_degree(grid, 4);
    expect_code(errc::truncated_neighborhood,
                [&] { modified_curvature_B(grid, center, center, {0}); });
}

TEST_CASE("local redistribution cancels the domino's negative ends") {
    tessellation t = gadget::domino_patch();
    std::vector<int> octs;
    for (int f = 0; f < t.nf(); ++f)
        if (t.interior_face(f) && t.face_degree(f) == 8) octs.push_back(f);
    REQUIRE(octs.size() == 2);

    std::vector<int> a = t.face_vertices(octs[0]), b = t.face_vertices(octs[1]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> ends;  // on both octagons: the shared edge
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ends));
    REQUIRE(ends.size() == 2);

    int donor = -1;  // the end cap vertex beside the shared edge
    std::vector<int> end_nbrs = t.neighbors(ends[0]);
    for (int v = 0; v < t.nv() && donor < 0; ++v)
        if (t.interior_vertex(v) && vertex_pattern(t, v) == std::vector<int>{3, 3, 4, 4} &&
            std::find(end_nbrs.begin(), end_nbrs.end(), v) != end_nbrs.end())
            donor = v;
    REQUIRE(donor >= 0);
    CHECK(combinatorial_curvature(t, donor) == rat(1, 6));

    local_discharge_state st =
        modified_curvature_B(t, octs[0], octs[1], {ends[0], ends[1], donor});
    CHECK(st.receivers == 2);
    for (size_t i = 0; i < st.b.size(); ++i) {
        if (st.b[i] == donor) CHECK(st.phi_prime[i] == rat(1, 6));
        else CHECK(st.phi_prime[i] == rat(0));
    }
}

TEST_CASE("local redistribution is the identity on a flat window") {
    tessellation grid = square_lattice(6, 6);
    std::vector<int> inner;
    for (int f = 0; f < grid.nf(); ++f)
        if (grid.interior_face(f)) inner.push_back(f);
    REQUIRE(inner.size() >= 2);
    std::vector<int> B = grid.face_vertices(inner[0]);
    for (int v = 0; v < grid.nv(); ++v)
        if (grid.interior_vertex(v)) B.push_back(v);
    local_discharge_state st = modified_curvature_B(grid, inner[0], inner[1], B);
    for (size_t i = 0; i < st.b.size(); ++i) CHECK(st.phi_prime[i] == rat(0));
}
