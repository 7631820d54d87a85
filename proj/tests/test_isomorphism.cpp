#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tess/tess.hpp"

using namespace tess;

namespace {

tessellation relabel(const tessellation& t, unsigned seed) {
    std::vector<int> perm(t.nv());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> rot(t.nv());
    for (int v = 0; v < t.nv(); ++v)
        for (int d : t.map.rot[v]) rot[perm[v]].push_back(perm[t.map.head(d)]);
    return build_from_rotation_system(rot, graph_mode::sphere);
}

tessellation mirror(const tessellation& t) {
    std::vector<std::vector<int>> rot(t.nv());
    for (int v = 0; v < t.nv(); ++v) {
        for (int d : t.map.rot[v]) rot[v].push_back(t.map.head(d));
        std::reverse(rot[v].begin(), rot[v].end());
    }
    return build_from_rotation_system(rot, graph_mode::sphere);
}

} // namespace

TEST_CASE("relabeling vertices preserves isomorphism") {
    for (const tessellation& t :
         {platonic("cube"), platonic("icosahedron"), antiprism(6), truncated_cube()}) {
        CHECK(isomorphic(t, relabel(t, 7)));
        CHECK(isomorphic(t, relabel(t, 99)));
    }
}

TEST_CASE("mirrored embeddings count as isomorphic") {
    for (const tessellation& t : {platonic("dodecahedron"), antiprism(5), prism(7)})
        CHECK(isomorphic(t, mirror(t)));
}

TEST_CASE("isomorphism identifies coincidences and separates near misses") {
    CHECK(isomorphic(platonic("cube"), prism(4)));
    CHECK(isomorphic(platonic("octahedron"), antiprism(3)));
    CHECK_FALSE(isomorphic(platonic("cube"), platonic("octahedron")));
    CHECK_FALSE(isomorphic(prism(6), antiprism(6)));
    CHECK_FALSE(isomorphic(antiprism(5), antiprism(6)));
}

TEST_CASE("isomorphism is defined on spheres only") {
    CHECK_THROWS_AS(isomorphic(square_lattice(3, 3), square_lattice(3, 3)), map_error);
}
