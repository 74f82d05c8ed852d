#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "ectf/graph.hpp"

namespace ectf {

// graph6 as defined in the nauty/Traces format notes: N(n) followed by the
// upper triangle of the adjacency matrix in column order, 6 bits per byte,
// each byte offset by 63.
namespace graph6_detail {

inline constexpr int kBias = 63;
inline constexpr std::string_view kHeader = ">>graph6<<";

inline void encode_size(std::size_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
  }
}

inline int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: unexpected end of input", pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126)
    throw ParseError("graph6: byte " + std::to_string(c) + " outside [63, 126]", pos);
  return c - kBias;
}

}  // namespace graph6_detail

inline std::string encode_graph6(const Graph& g) {
  using namespace graph6_detail;
  std::string out;
  const std::size_t n = g.order();
  encode_size(n, out);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

inline Graph decode_graph6(std::string_view s) {
  using namespace graph6_detail;
  std::size_t pos = 0;
  if (s.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  std::size_t n = 0;
  const int first = sextet(s, pos);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos += 1;
  } else if (sextet(s, pos + 1) < 63) {
    for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(s, pos + k));
    pos += 4;
  } else {
    for (int k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(s, pos + k));
    pos += 8;
  }
  if (n > kMaxExplicitOrder)
    throw CapacityError("graph6 order " + std::to_string(n) +
                        " exceeds the explicit representation limit of " +
                        std::to_string(kMaxExplicitOrder));

  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (s.size() - pos < body)
    throw ParseError("graph6: truncated adjacency data, expected " + std::to_string(body) +
                         " bytes",
                     s.size());
  if (s.size() - pos > body) throw ParseError("graph6: trailing bytes", pos + body);

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(s, pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  // Bytes holding only padding bits still have to be in range.
  for (std::size_t k = 0; k < body; ++k) sextet(s, pos + k);
  return std::move(b).build();
}

// One graph per line; blank lines are skipped. Offsets in errors are file offsets.
inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph6 file '" + path + "'", 0);
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_len = line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      try {
        out.push_back(decode_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("graph6 file '" + path + "': " + e.what(), offset + e.offset());
      }
    }
    offset += line_len;
  }
  return out;
}

inline void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing", 0);
  for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

// Label sidecar: one line per vertex, label coordinates separated by spaces.
inline void write_label_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing", 0);
  for (const VertexLabel& label : g.labels()) out << label_to_string(label) << '\n';
}

}  // namespace ectf
