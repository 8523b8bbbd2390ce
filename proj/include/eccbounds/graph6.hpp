#pragma once

#include <string>

#include "eccbounds/graph.hpp"

namespace ecc {

// graph6 codec for graphs on 1..64 vertices.
//
// Layout: a size header (one byte 63+n for n <= 62, otherwise '~' followed by
// three bytes carrying n in big-endian 6-bit groups), then the upper triangle
// of the adjacency matrix in column-major order -- bit (i,j) for j = 1..n-1,
// i = 0..j-1 -- packed six bits per byte, most significant bit first, padded
// with zeros, each byte offset by 63 into the printable range '?'..'~'.
//
// Decoding validates the header, the byte range, the exact payload length and
// that padding bits are zero; violations throw std::invalid_argument.

std::string graph6_encode(const Graph& g);

Graph graph6_decode(const std::string& text);

}  // namespace ecc
