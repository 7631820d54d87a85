#include <catch2/catch_amalgamated.hpp>

#include "gadgets.hpp"
#include "oracles.hpp"
#include "tess/tess.hpp"

using namespace tess;

namespace {

// tetrahedron rotation system, counterclockwise at every vertex
std::vector<std::vector<int>> tetra_rot() {
    return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
}

} // namespace

TEST_CASE("a rotation system builds twin darts and full orbits") {
    tessellation t = build_from_rotation_system(tetra_rot(), graph_mode::sphere);
    CHECK(t.nv() == 4);
    CHECK(t.ne() == 6);
    CHECK(t.nf() == 4);
    for (int d = 0; d < t.map.nd(); ++d) {
        CHECK(combinatorial_map::twin(combinatorial_map::twin(d)) == d);
        CHECK(t.map.head(d) == t.map.origin[combinatorial_map::twin(d)]);
    }
    for (int v = 0; v < t.nv(); ++v) CHECK(t.vertex_degree(v) == 3);
    for (int f = 0; f < t.nf(); ++f) CHECK(t.face_degree(f) == 3);
}

TEST_CASE("face walks agree with a from-scratch trace on every generator") {
    std::vector<tessellation> graphs;
    graphs.push_back(platonic("cube"));
    graphs.push_back(platonic("dodecahedron"));
    graphs.push_back(antiprism(7));
    graphs.push_back(truncated_cube());
    graphs.push_back(square_lattice(5, 4));
    graphs.push_back(trihexagonal(2));
    graphs.push_back(rhombille(2));
    graphs.push_back(sharp_big_face(10, 3));
    for (const auto& t : graphs) {
        auto faces = oracle::trace_faces(oracle::neighbor_lists(t));
        CHECK(oracle::face_multiset(faces) == oracle::face_multiset(t));
    }
}

TEST_CASE("interior classification matches the naive rule") {
    for (const tessellation& t :
         {square_lattice(4, 4), trihexagonal(2), sharp_big_face(9, 2), gadget::domino_patch()}) {
        int u = t.map.origin[t.faces[t.outer][0]];
        int v = t.map.head(t.faces[t.outer][0]);
        auto cls = oracle::classify(oracle::neighbor_lists(t), true, u, v);
        REQUIRE(cls.outer >= 0);
        for (int w = 0; w < t.nv(); ++w) CHECK(t.interior_vertex(w) == cls.v_interior[w]);
    }
}

TEST_CASE("a 3x3 lattice has one interior vertex and no interior face") {
    tessellation t = square_lattice(3, 3);
    int vin = 0, fin = 0;
    for (int v = 0; v < t.nv(); ++v) vin += t.interior_vertex(v);
    for (int f = 0; f < t.nf(); ++f) fin += t.interior_face(f);
    CHECK(vin == 1);
    CHECK(fin == 0);

    // every face of the 4x4 lattice touching only the middle block is interior
    tessellation t4 = square_lattice(4, 4);
    int fin4 = 0;
    for (int f = 0; f < t4.nf(); ++f) fin4 += t4.interior_face(f);
    CHECK(fin4 == 1);
}

TEST_CASE("sphere tessellations treat everything as interior") {
    tessellation t = platonic("icosahedron");
    for (int v = 0; v < t.nv(); ++v) CHECK(t.interior_vertex(v));
    for (int e = 0; e < t.ne(); ++e) CHECK(t.interior_edge(e));
    for (int f = 0; f < t.nf(); ++f) CHECK(t.interior_face(f));
}

TEST_CASE("degenerate rotation systems are rejected") {
    CHECK_THROWS_AS(build_from_rotation_system({{1, 1}, {0, 0}}, graph_mode::sphere), map_error);
    CHECK_THROWS_AS(build_from_rotation_system({{0, 1}, {0}}, graph_mode::sphere), map_error);
    CHECK_THROWS_AS(build_from_rotation_system({}, graph_mode::sphere), map_error);

    try {
        // K5 admits no planar rotation system; Euler count catches any order
        std::vector<std::vector<int>> k5(5);
        for (int v = 0; v < 5; ++v)
            for (int w = 0; w < 5; ++w)
                if (v != w) k5[v].push_back(w);
        build_from_rotation_system(k5, graph_mode::sphere);
        FAIL("K5 accepted");
    } catch (const map_error& e) {
        CHECK(e.code == errc::euler_violation);
    }
}

TEST_CASE("patch mode needs a resolvable outer hint") {
    std::vector<std::vector<int>> sq{{1, 3}, {2, 0}, {3, 1}, {0, 2}};
    CHECK_THROWS_AS(build_from_rotation_system(sq, graph_mode::patch), map_error);
    CHECK_THROWS_AS(build_from_rotation_system(sq, graph_mode::patch, {0, 2}), map_error);
    tessellation t = build_from_rotation_system(sq, graph_mode::patch, {0, 1});
    CHECK(t.nf() == 2);
    CHECK(t.outer >= 0);
}

TEST_CASE("validation accepts every generator") {
    for (const tessellation& t :
         {platonic("tetrahedron"), platonic("octahedron"), prism(6), antiprism(9),
          truncated_cube(), square_lattice(5, 5), trihexagonal(2), rhombille(2),
          rhombitrihexagonal(2), tiling_3_12_12(2), sharp_big_face(12, 3)}) {
        CHECK(validate_tessellation(t).empty());
    }
}

TEST_CASE("validation reports a face meeting itself around a pinched corner") {
    // two triangles glued along two edges forms a sphere whose faces meet in
    // two edges, violating the intersection condition
    std::vector<std::vector<int>> rot{{1, 2}, {2, 0}, {0, 1}};
    tessellation t = build_from_rotation_system(rot, graph_mode::sphere);
    validation_report rep = validate_tessellation(t);
    REQUIRE_FALSE(rep.empty());
    bool saw = false;
    for (const auto& v : rep.violations) saw = saw || v.condition == "face-intersection";
    CHECK(saw);
}

TEST_CASE("the boundary builder grows disks and rejects bad paths") {
    patch_builder pb;
    std::vector<int> z = pb.first_face(4);
    CHECK(pb.boundary_cycle().size() == 4);
    int w = pb.attach({z[0], z[1]}, 1)[0];
    CHECK(pb.boundary_cycle().size() == 5);
    CHECK_THROWS_AS(pb.attach({z[0], z[2]}, 1), map_error);   // not consecutive
    CHECK_THROWS_AS(pb.attach({w, z[1]}, 0), map_error);      // too short to close
    tessellation t = pb.build();
    CHECK(t.nf() == 3);
    CHECK(t.nv() == 5);
    CHECK(validate_tessellation(t).empty());
}

TEST_CASE("lower adjacency and corner adjacency read the face relations") {
    tessellation t = sharp_big_face(9, 2);
    int big = gadget::face_of_degree(t, 9);
    REQUIRE(big >= 0);
    auto lower = faces_lower_adjacent_to(t, big);
    CHECK(lower.size() == 9);
    for (int f : lower) {
        CHECK(t.face_degree(f) == 3);
        CHECK(lower_adjacent_faces(t, big, f));
    }
    // exactly the consecutive triangle pairs share a big-face vertex
    int adjacent_pairs = 0;
    for (size_t i = 0; i < lower.size(); ++i)
        for (size_t j = i + 1; j < lower.size(); ++j)
            adjacent_pairs += sigma_adjacent(t, big, lower[i], lower[j]);
    CHECK(adjacent_pairs == 9);
}
