#ifndef TESS_ISOMORPHISM_HPP
#define TESS_ISOMORPHISM_HPP

#include <algorithm>
#include <vector>

#include "map.hpp"

namespace tess {
namespace detail {

// Breadth-first dart traversal from a root dart; relabeling vertices in
// discovery order makes the neighbor lists a canonical word for this choice
// of root and orientation.
inline std::vector<int> traversal_code(const combinatorial_map& m, int root, bool rev) {
    std::vector<int> newid(m.nv, -1), entry(m.nv, -1), order;
    order.reserve(m.nv);
    auto enumerate = [&](int v, auto&& fn) {
        const auto& r = m.rot[v];
        const int k = static_cast<int>(r.size());
        const int s = m.rot_pos[entry[v]];
        for (int i = 0; i < k; ++i) fn(r[rev ? (s - i % k + k) % k : (s + i) % k]);
    };
    int v0 = m.origin[root];
    newid[v0] = 0;
    entry[v0] = root;
    order.push_back(v0);
    std::vector<int> code;
    code.reserve(m.nd() + m.nv);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        code.push_back(-m.degree(v) - 1);  // separator carrying the degree
        enumerate(v, [&](int d) {
            int w = m.head(d);
            if (newid[w] < 0) {
                newid[w] = static_cast<int>(order.size());
                entry[w] = combinatorial_map::twin(d);
                order.push_back(w);
            }
            code.push_back(newid[w]);
        });
    }
    return code;
}

inline std::vector<int> canonical_code(const combinatorial_map& m) {
    std::vector<int> best;
    for (int d = 0; d < m.nd(); ++d)
        for (bool rev : {false, true}) {
            auto code = traversal_code(m, d, rev);
            if (best.empty() || code < best) best = std::move(code);
        }
    return best;
}

} // namespace detail

inline bool isomorphic(const tessellation& a, const tessellation& b) {
    if (a.mode != graph_mode::sphere || b.mode != graph_mode::sphere)
        fail(errc::mode_mismatch, "isomorphism is defined for sphere tessellations");
    if (a.nv() != b.nv() || a.ne() != b.ne() || a.nf() != b.nf()) return false;
    auto degs = [](const tessellation& t) {
        std::vector<int> d;
        for (int v = 0; v < t.nv(); ++v) d.push_back(t.vertex_degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    return detail::canonical_code(a.map) == detail::canonical_code(b.map);
}

} // namespace tess

#endif
