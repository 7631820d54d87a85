#ifndef TESS_FORMAT_HPP
#define TESS_FORMAT_HPP

// The planar v1 text format. A file is the magic line, a mode line, one
// neighbor line per vertex in counterclockwise order, and for patches an
// outer line naming a dart on the outer face. Parsing checks syntax only;
// everything structural is left to the rotation-system builder so the same
// validation runs no matter where a graph came from.

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "map.hpp"

namespace tess {
namespace detail {

[[noreturn]] inline void bad_line(int line_no, const std::string& what) {
    fail(errc::syntax_error, "line " + std::to_string(line_no) + ": " + what);
}

inline bool parse_int(const std::string& tok, int& out) {
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto r = std::from_chars(b, e, out);
    return r.ec == std::errc() && r.ptr == e;
}

} // namespace detail

inline tessellation parse_planar(std::istream& in) {
    std::string raw;
    int line_no = 0;
    bool saw_magic = false;
    int mode_line = 0;
    graph_mode mode = graph_mode::sphere;
    std::vector<std::vector<int>> rot;
    std::vector<bool> seen;
    std::pair<int, int> outer{-1, -1};
    bool saw_outer = false;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;

        if (!saw_magic) {
            std::string second;
            if (head != "planar" || !(ls >> second) || second != "v1" || (ls >> second))
                detail::bad_line(line_no, "expected magic line \"planar v1\"");
            saw_magic = true;
            continue;
        }
        if (head == "mode:") {
            if (mode_line) detail::bad_line(line_no, "duplicate mode line");
            std::string word, extra;
            if (!(ls >> word) || (ls >> extra))
                detail::bad_line(line_no, "expected \"mode: sphere\" or \"mode: patch\"");
            if (word == "sphere") mode = graph_mode::sphere;
            else if (word == "patch") mode = graph_mode::patch;
            else detail::bad_line(line_no, "unknown mode \"" + word + "\"");
            mode_line = line_no;
            continue;
        }
        if (head == "outer:") {
            if (saw_outer) detail::bad_line(line_no, "duplicate outer line");
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra) ||
                !detail::parse_int(a, outer.first) || !detail::parse_int(b, outer.second))
                detail::bad_line(line_no, "expected \"outer: <vertex> <vertex>\"");
            saw_outer = true;
            continue;
        }
        if (head.size() < 2 || head[0] != 'v' || head.back() != ':')
            detail::bad_line(line_no, "unrecognized line \"" + head + "\"");
        int v = -1;
        if (!detail::parse_int(head.substr(1, head.size() - 2), v) || v < 0)
            detail::bad_line(line_no, "bad vertex id in \"" + head + "\"");
        if (v >= static_cast<int>(rot.size())) {
            rot.resize(v + 1);
            seen.resize(v + 1, false);
        }
        if (seen[v]) detail::bad_line(line_no, "duplicate line for vertex " + std::to_string(v));
        seen[v] = true;
        std::string tok;
        while (ls >> tok) {
            int w = -1;
            if (!detail::parse_int(tok, w))
                detail::bad_line(line_no, "bad neighbor token \"" + tok + "\"");
            rot[v].push_back(w);
        }
    }

    if (!saw_magic) fail(errc::syntax_error, "empty input, expected \"planar v1\"");
    if (!mode_line) fail(errc::syntax_error, "missing mode line");
    for (size_t v = 0; v < seen.size(); ++v)
        if (!seen[v])
            fail(errc::syntax_error, "no line for vertex " + std::to_string(v));
    if (mode == graph_mode::patch && !saw_outer)
        fail(errc::syntax_error, "patch mode needs an outer line");
    if (mode == graph_mode::sphere && saw_outer)
        fail(errc::syntax_error, "sphere mode forbids an outer line");
    return build_from_rotation_system(rot, mode, outer);
}

inline tessellation parse_planar(const std::string& text) {
    std::istringstream in(text);
    return parse_planar(in);
}

inline std::string serialize_planar(const tessellation& t) {
    std::ostringstream out;
    out << "planar v1\n";
    out << "mode: " << (t.mode == graph_mode::patch ? "patch" : "sphere") << "\n";
    for (int v = 0; v < t.nv(); ++v) {
        out << "v" << v << ":";
        for (int d : t.map.rot[v]) out << " " << t.map.head(d);
        out << "\n";
    }
    if (t.mode == graph_mode::patch) {
        int d = *std::min_element(t.faces[t.outer].begin(), t.faces[t.outer].end());
        out << "outer: " << t.map.origin[d] << " " << t.map.head(d) << "\n";
    }
    return out.str();
}

} // namespace tess

#endif
