#pragma once

#include "hadwiger/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace hadwiger {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest order expressible in the one-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one short-form graph6 record. A single trailing "\n" or "\r\n" is
/// accepted. Throws Graph6Error on a long-form header, characters outside
/// 63..126, wrong length or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ..., six
/// bits per character offset by 63, zero-padded. Vertex labels are kept.
std::string emit_graph6(const Graph& g);

/// FNV-1a over the order and adjacency rows, as 16 hex digits. Labelled:
/// isomorphic graphs with different labels hash differently.
std::string fingerprint(const Graph& g);

}  // namespace hadwiger
