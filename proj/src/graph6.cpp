#include "mec/graph6.hpp"

namespace mec {

namespace {

constexpr int kBias = 63;

[[noreturn]] void fail(Graph6ErrorKind kind, const std::string& what) {
    throw Graph6Error(kind, what);
}

}  // namespace

Skeleton parse_graph6(std::string_view text) {
    if (text.empty()) fail(Graph6ErrorKind::truncated, "empty graph6 record");

    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        fail(Graph6ErrorKind::too_large,
             "long-form graph6 header ('~'): n >= 63 exceeds the node cap");
    if (header < kBias || header > 126)
        fail(Graph6ErrorKind::bad_header,
             "header byte " + std::to_string(header) + " outside graph6 range");

    const int n = header - kBias;
    if (n < 1)
        fail(Graph6ErrorKind::bad_header, "graph6 record for the 0-node graph is not supported");
    if (n > kMaxNodes)
        fail(Graph6ErrorKind::too_large,
             "n = " + std::to_string(n) + " exceeds the node cap " + std::to_string(kMaxNodes));

    const int bits = n * (n - 1) / 2;
    const int payload_bytes = (bits + 5) / 6;
    if (static_cast<int>(text.size()) < 1 + payload_bytes)
        fail(Graph6ErrorKind::truncated,
             "payload has " + std::to_string(text.size() - 1) + " byte(s), needs " +
                 std::to_string(payload_bytes));
    if (static_cast<int>(text.size()) > 1 + payload_bytes)
        fail(Graph6ErrorKind::trailing_data,
             std::to_string(text.size() - 1 - payload_bytes) + " byte(s) after the payload");

    Skeleton g(n);
    int bit_index = 0;
    // Column-major upper triangle: column v, rows 0..v-1.
    int col = 1, row = 0;
    for (int b = 0; b < payload_bytes; ++b) {
        const unsigned char raw = static_cast<unsigned char>(text[1 + b]);
        if (raw < kBias || raw > 126)
            fail(Graph6ErrorKind::bad_payload,
                 "payload byte " + std::to_string(raw) + " outside graph6 range");
        const unsigned value = raw - kBias;
        for (int k = 5; k >= 0; --k, ++bit_index) {
            const bool set = (value >> k) & 1u;
            if (bit_index >= bits) {
                if (set)
                    fail(Graph6ErrorKind::bad_payload, "nonzero padding bits in final byte");
                continue;
            }
            if (set) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string encode_graph6(const Skeleton& g) {
    const int n = g.node_count();
    std::string out;
    out.push_back(static_cast<char>(n + kBias));

    unsigned acc = 0;
    int acc_bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1u : 0u);
            if (++acc_bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                acc_bits = 0;
            }
        }
    }
    if (acc_bits > 0) out.push_back(static_cast<char>((acc << (6 - acc_bits)) + kBias));
    return out;
}

}  // namespace mec
