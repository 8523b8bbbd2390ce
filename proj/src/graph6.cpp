#include "eccbounds/graph6.hpp"

#include <stdexcept>

namespace ecc {

namespace {

int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.n;
  if (n < 1 || n > 64) throw std::invalid_argument("graph6_encode: vertex count out of range");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    out += static_cast<char>(63 + ((n >> 12) & 63));
    out += static_cast<char>(63 + ((n >> 6) & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("graph6_decode: empty string");
  for (char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6_decode: byte outside printable range 63..126");

  std::size_t pos = 0;
  long n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw std::invalid_argument("graph6_decode: 8-byte size form exceeds supported range");
    if (text.size() < 4) throw std::invalid_argument("graph6_decode: truncated size header");
    n = (static_cast<long>(text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }
  if (n < 1 || n > 64)
    throw std::invalid_argument("graph6_decode: vertex count " + std::to_string(n) +
                                " outside supported range [1,64]");

  int nbits = triangle_bits(static_cast<int>(n));
  std::size_t payload = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != payload)
    throw std::invalid_argument("graph6_decode: payload length mismatch");

  Graph g(static_cast<int>(n));
  int bit = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (int b = nbits; b < static_cast<int>(payload) * 6; ++b) {
    int byte = text[pos + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1)
      throw std::invalid_argument("graph6_decode: nonzero padding bits");
  }
  return g;
}

}  // namespace ecc
