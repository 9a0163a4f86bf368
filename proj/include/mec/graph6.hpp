#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mec/graph.hpp"

namespace mec {

enum class Graph6ErrorKind {
    bad_header,     // header byte outside the format, or an unsupported order
    bad_payload,    // payload byte outside [63,126] or nonzero padding bits
    truncated,      // record ends before the bit payload is complete
    trailing_data,  // bytes left over after the payload
    too_large,      // n exceeds the configured node cap
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Graph6ErrorKind kind() const { return kind_; }

private:
    Graph6ErrorKind kind_;
};

/// Decode one standard short-form graph6 record (n < 63; capped at kMaxNodes).
/// Header byte is chr(n+63); then the upper-triangle bits x(0,1), x(0,2),
/// x(1,2), x(0,3), ... in column-major order, 6 bits per byte MSB first, each
/// byte offset by +63, zero-padded to a byte boundary.
Skeleton parse_graph6(std::string_view text);

/// Exact inverse of parse_graph6 on the same labeling.
std::string encode_graph6(const Skeleton& g);

}  // namespace mec
