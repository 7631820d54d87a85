#ifndef TESS_ERRORS_HPP
#define TESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tess {

enum class errc {
    asymmetric_adjacency,
    self_loop,
    multi_edge,
    disconnected,
    euler_violation,
    outer_face_not_found,
    unknown_face,
    mode_mismatch,
    boundary_vertex,
    not_a_corner,
    boundary_edge,
    patch_mode_unsupported,
    empty_interior,
    invalid_parameter,
    truncated_neighborhood,
    empty_donor_set,
    empty_receiver_set,
    syntax_error,
    layout_singular,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::asymmetric_adjacency:   return "AsymmetricAdjacency";
        case errc::self_loop:              return "SelfLoop";
        case errc::multi_edge:             return "MultiEdge";
        case errc::disconnected:           return "Disconnected";
        case errc::euler_violation:        return "EulerViolation";
        case errc::outer_face_not_found:   return "OuterFaceNotFound";
        case errc::unknown_face:           return "UnknownFace";
        case errc::mode_mismatch:          return "ModeMismatch";
        case errc::boundary_vertex:        return "BoundaryVertex";
        case errc::not_a_corner:           return "NotACorner";
        case errc::boundary_edge:          return "BoundaryEdge";
        case errc::patch_mode_unsupported: return "PatchModeUnsupported";
        case errc::empty_interior:         return "EmptyInterior";
        case errc::invalid_parameter:      return "InvalidParameter";
        case errc::truncated_neighborhood: return "TruncatedNeighborhood";
        case errc::empty_donor_set:        return "EmptyDonorSet";
        case errc::empty_receiver_set:     return "EmptyReceiverSet";
        case errc::syntax_error:           return "SyntaxError";
        case errc::layout_singular:        return "LayoutSingular";
    }
    return "?";
}

struct map_error : std::runtime_error {
    errc code;
    map_error(errc c, const std::string& detail)
        : std::runtime_error(std::string(errc_name(c)) + ": " + detail), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& detail) {
    throw map_error(c, detail);
}

} // namespace tess

#endif
