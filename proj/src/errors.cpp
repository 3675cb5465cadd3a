#include "netdrift/errors.hpp"

namespace netdrift {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::self_loop: return "self_loop";
        case Errc::duplicate_edge: return "duplicate_edge";
        case Errc::node_id_out_of_range: return "node_id_out_of_range";
        case Errc::too_many_edges: return "too_many_edges";
        case Errc::edge_not_found: return "edge_not_found";
        case Errc::edge_already_present: return "edge_already_present";
        case Errc::graph_full: return "graph_full";
        case Errc::dimension_mismatch: return "dimension_mismatch";
        case Errc::non_finite_state: return "non_finite_state";
        case Errc::parse_error: return "parse_error";
        case Errc::validation_error: return "validation_error";
        case Errc::io_error: return "io_error";
    }
    return "unknown";
}

}  // namespace netdrift
