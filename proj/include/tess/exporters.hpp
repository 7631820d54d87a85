#ifndef TESS_EXPORTERS_HPP
#define TESS_EXPORTERS_HPP

// DOT and SVG output. The SVG layout pins the outer face to a regular
// polygon and relaxes every other vertex to the average of its neighbors,
// which is a planar straight-line drawing whenever the graph is
// 3-connected. This is the only place floating point is allowed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "curvature.hpp"
#include "errors.hpp"
#include "map.hpp"

namespace tess {

inline std::string export_dot(const tessellation& t) {
    std::ostringstream out;
    out << "graph tessellation {\n";
    out << "  node [shape=point];\n";
    for (int e = 0; e < t.ne(); ++e)
        out << "  " << t.edge_u(e) << " -- " << t.edge_v(e) << ";\n";
    out << "}\n";
    return out.str();
}

struct layout_result {
    std::vector<double> x, y;
    bool fallback = false;      // rings were used instead of the harmonic solve
    std::string warning;
};

namespace detail {

// concentric rings by graph distance from vertex 0, used when pinning fails
inline layout_result ring_layout(const tessellation& t, std::string why) {
    layout_result lay;
    lay.fallback = true;
    lay.warning = std::move(why);
    int n = t.nv();
    lay.x.assign(n, 0.0);
    lay.y.assign(n, 0.0);
    std::vector<int> depth(n, -1);
    std::vector<std::vector<int>> ring;
    std::queue<int> q;
    depth[0] = 0;
    q.push(0);
    ring.push_back({0});
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v))
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                if (static_cast<int>(ring.size()) <= depth[w]) ring.emplace_back();
                ring[depth[w]].push_back(w);
                q.push(w);
            }
    }
    double rmax = static_cast<double>(ring.size() - 1);
    if (rmax < 1.0) rmax = 1.0;
    for (size_t r = 1; r < ring.size(); ++r)
        for (size_t i = 0; i < ring[r].size(); ++i) {
            double ang = 2.0 * M_PI * (static_cast<double>(i) + 0.3 * r) / ring[r].size();
            double rad = static_cast<double>(r) / rmax;
            lay.x[ring[r][i]] = rad * std::cos(ang);
            lay.y[ring[r][i]] = rad * std::sin(ang);
        }
    return lay;
}

} // namespace detail

inline layout_result tutte_layout(const tessellation& t) {
    int outer = t.outer;
    if (t.mode == graph_mode::sphere) {
        outer = 0;
        for (int f = 1; f < t.nf(); ++f)
            if (t.face_degree(f) > t.face_degree(outer)) outer = f;
    }
    std::vector<int> cycle = t.face_vertices(outer);
    {
        std::vector<int> s = cycle;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return detail::ring_layout(t, "outer face revisits a vertex, used ring layout");
    }

    int n = t.nv();
    layout_result lay;
    lay.x.assign(n, 0.0);
    lay.y.assign(n, 0.0);
    std::vector<bool> pinned(n, false);
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
        double ang = 2.0 * M_PI * i / k;
        lay.x[cycle[i]] = std::cos(ang);
        lay.y[cycle[i]] = std::sin(ang);
        pinned[cycle[i]] = true;
    }
    {
        std::vector<bool> reached = pinned;
        std::queue<int> q;
        for (int v : cycle) q.push(v);
        int cnt = k;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : t.neighbors(v))
                if (!reached[w]) {
                    reached[w] = true;
                    ++cnt;
                    q.push(w);
                }
        }
        if (cnt != n)
            fail(errc::layout_singular, "a vertex is disconnected from the outer face");
    }

    const double tol = 1e-9;
    const int max_sweeps = 200000;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double moved = 0.0;
        for (int v = 0; v < n; ++v) {
            if (pinned[v]) continue;
            double sx = 0.0, sy = 0.0;
            const auto& nb = t.map.rot[v];
            for (int d : nb) {
                int w = t.map.head(d);
                sx += lay.x[w];
                sy += lay.y[w];
            }
            sx /= nb.size();
            sy /= nb.size();
            moved = std::max(moved, std::abs(sx - lay.x[v]) + std::abs(sy - lay.y[v]));
            lay.x[v] = sx;
            lay.y[v] = sy;
        }
        if (moved <= tol * 0.1) {
            double resid = 0.0;
            for (int v = 0; v < n; ++v) {
                if (pinned[v]) continue;
                double sx = 0.0, sy = 0.0;
                const auto& nb = t.map.rot[v];
                for (int d : nb) {
                    int w = t.map.head(d);
                    sx += lay.x[w];
                    sy += lay.y[w];
                }
                sx /= nb.size();
                sy /= nb.size();
                resid = std::max(resid, std::hypot(sx - lay.x[v], sy - lay.y[v]));
            }
            converged = resid <= tol;
        }
    }
    if (!converged)
        return detail::ring_layout(t, "harmonic solve did not converge, used ring layout");
    return lay;
}

struct svg_options {
    bool color_curvature = false;
    double size = 720.0;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace detail

struct svg_document {
    std::string text;
    bool fallback = false;
    std::string warning;
};

inline svg_document export_svg(const tessellation& t, svg_options opt = {}) {
    layout_result lay = tutte_layout(t);
    double margin = opt.size * 0.06;
    double half = opt.size / 2.0;
    double scale = half - margin;
    auto px = [&](int v) { return half + scale * lay.x[v]; };
    auto py = [&](int v) { return half - scale * lay.y[v]; };

    int outer = t.outer;
    if (t.mode == graph_mode::sphere) {
        outer = 0;
        for (int f = 1; f < t.nf(); ++f)
            if (t.face_degree(f) > t.face_degree(outer)) outer = f;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << detail::fmt(opt.size) << " " << detail::fmt(opt.size) << "\">\n";
    for (int e = 0; e < t.ne(); ++e) {
        int u = t.edge_u(e), v = t.edge_v(e);
        out << "  <polyline fill=\"none\" stroke=\"#555\" stroke-width=\"1.2\" points=\""
            << detail::fmt(px(u)) << "," << detail::fmt(py(u)) << " "
            << detail::fmt(px(v)) << "," << detail::fmt(py(v)) << "\"/>\n";
    }
    for (int f = 0; f < t.nf(); ++f) {
        if (f == outer && !lay.fallback) continue;
        if (t.mode == graph_mode::patch && f == t.outer) continue;
        std::vector<int> vs = t.face_vertices(f);
        double cx = 0.0, cy = 0.0;
        for (int v : vs) {
            cx += px(v);
            cy += py(v);
        }
        cx /= vs.size();
        cy /= vs.size();
        out << "  <text x=\"" << detail::fmt(cx) << "\" y=\"" << detail::fmt(cy)
            << "\" font-size=\"" << detail::fmt(opt.size / 60.0)
            << "\" text-anchor=\"middle\" fill=\"#888\">" << t.face_degree(f)
            << "</text>\n";
    }
    for (int v = 0; v < t.nv(); ++v) {
        const char* color = "#222";
        if (opt.color_curvature) {
            if (!t.interior_vertex(v)) {
                color = "#bbb";
            } else {
                int s = combinatorial_curvature(t, v).sign();
                color = s > 0 ? "#c22" : s < 0 ? "#26c" : "#999";
            }
        }
        out << "  <circle cx=\"" << detail::fmt(px(v)) << "\" cy=\"" << detail::fmt(py(v))
            << "\" r=\"" << detail::fmt(opt.size / 240.0) << "\" fill=\"" << color
            << "\"/>\n";
    }
    out << "</svg>\n";

    svg_document doc;
    doc.text = out.str();
    doc.fallback = lay.fallback;
    doc.warning = lay.warning;
    return doc;
}

} // namespace tess

#endif
