#pragma once

#include <stdexcept>
#include <string>

namespace netdrift {

enum class Errc {
    self_loop,
    duplicate_edge,
    node_id_out_of_range,
    too_many_edges,
    edge_not_found,
    edge_already_present,
    graph_full,
    dimension_mismatch,
    non_finite_state,
    parse_error,
    validation_error,
    io_error,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying a machine-checkable error code plus a human message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace netdrift
