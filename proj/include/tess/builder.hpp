#ifndef TESS_BUILDER_HPP
#define TESS_BUILDER_HPP

#include <vector>

#include "map.hpp"

namespace tess {

// Grows a disk-shaped patch face by face. The boundary is kept as a simple
// directed cycle (the future outer walk); each boundary vertex's fan lists
// its neighbors counterclockwise from the boundary successor around to the
// boundary predecessor, so the open sector is always at the wrap.
struct patch_builder {
    std::vector<std::vector<int>> fan;
    std::vector<int> bnext, bprev;  // -1 once a vertex leaves the boundary
    int start = -1;

    int nv() const { return static_cast<int>(fan.size()); }

    int new_vertex() {
        fan.emplace_back();
        bnext.push_back(-1);
        bprev.push_back(-1);
        return nv() - 1;
    }

    bool on_boundary(int v) const { return bnext[v] != -1; }

    std::vector<int> first_face(int k) {
        if (nv() != 0) fail(errc::invalid_parameter, "builder already started");
        if (k < 3) fail(errc::invalid_parameter, "first face needs at least 3 vertices");
        std::vector<int> ids(k);
        for (int i = 0; i < k; ++i) ids[i] = new_vertex();
        for (int i = 0; i < k; ++i) {
            int s = (i + 1) % k, p = (i + k - 1) % k;
            fan[i] = {s, p};
            bnext[i] = s;
            bprev[i] = p;
        }
        start = 0;
        return ids;
    }

    // Attaches one face whose boundary is the given path (consecutive on the
    // current boundary, in boundary direction) closed through n_new fresh
    // vertices. Interior path vertices leave the boundary with their stars
    // complete. Returns the new vertex ids, in chain order from path.front().
    std::vector<int> attach(const std::vector<int>& path, int n_new) {
        const int m = static_cast<int>(path.size());
        if (m < 2 || (n_new == 0 && m < 3))
            fail(errc::invalid_parameter, "attach path too short");
        for (int i = 0; i < m; ++i) {
            if (!on_boundary(path[i]))
                fail(errc::invalid_parameter,
                     "attach vertex " + std::to_string(path[i]) + " not on boundary");
            if (i + 1 < m && bnext[path[i]] != path[i + 1])
                fail(errc::invalid_parameter, "attach path not consecutive on boundary");
        }
        int v0 = path.front(), vm = path.back();
        if (v0 == vm) fail(errc::invalid_parameter, "attach path wraps the boundary");
        if (n_new == 0 && bnext[vm] == v0)
            fail(errc::invalid_parameter, "closing edge already on boundary");

        std::vector<int> chain(n_new);
        for (int i = 0; i < n_new; ++i) chain[i] = new_vertex();

        if (n_new == 0) {
            fan[v0].insert(fan[v0].begin(), vm);
            fan[vm].push_back(v0);
        } else {
            fan[v0].insert(fan[v0].begin(), chain.front());
            fan[vm].push_back(chain.back());
            for (int i = 0; i < n_new; ++i) {
                int toward_vm = (i + 1 < n_new) ? chain[i + 1] : vm;
                int toward_v0 = (i > 0) ? chain[i - 1] : v0;
                fan[chain[i]] = {toward_vm, toward_v0};
            }
        }

        for (int i = 1; i + 1 < m; ++i) bnext[path[i]] = bprev[path[i]] = -1;
        if (n_new == 0) {
            bnext[v0] = vm;
            bprev[vm] = v0;
        } else {
            bnext[v0] = chain.front();
            bprev[chain.front()] = v0;
            for (int i = 0; i + 1 < n_new; ++i) {
                bnext[chain[i]] = chain[i + 1];
                bprev[chain[i + 1]] = chain[i];
            }
            bnext[chain.back()] = vm;
            bprev[vm] = chain.back();
        }
        start = v0;
        return chain;
    }

    std::vector<int> boundary_cycle() const {
        std::vector<int> cyc;
        int v = start;
        do {
            cyc.push_back(v);
            v = bnext[v];
        } while (v != start);
        return cyc;
    }

    tessellation build() const {
        if (start < 0) fail(errc::invalid_parameter, "builder is empty");
        return build_from_rotation_system(fan, graph_mode::patch, {start, bnext[start]});
    }
};

} // namespace tess

#endif
