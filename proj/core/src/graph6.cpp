#include "specjoin/graph6.hpp"

#include <cstddef>

namespace specjoin {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxSmallN = 62;
}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  while (!text.empty() && (text.front() == '\n' || text.front() == '\r' ||
                           text.front() == ' ' || text.front() == '\t')) {
    ++base;
    text.remove_prefix(1);
  }
  if (text.substr(0, kHeader.size()) == kHeader) {
    base += kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() &&
         (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
          text.back() == '\t'))
    text.remove_suffix(1);

  if (text.empty()) throw ParseError("empty graph6 string", base);

  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    throw ParseError("extended size header (n > 62) is not supported", base);
  if (header < kBias || header > kBias + kMaxSmallN)
    throw ParseError("invalid size header byte", base);
  int n = header - kBias;

  int bits = n * (n - 1) / 2;
  std::size_t body_bytes = (bits + 5) / 6;
  if (text.size() - 1 < body_bytes)
    throw ParseError("truncated graph6 body: expected " +
                         std::to_string(body_bytes) + " data bytes",
                     base + text.size());
  if (text.size() - 1 > body_bytes)
    throw ParseError("trailing garbage after graph6 body",
                     base + 1 + body_bytes);

  Graph g(n);
  int bit_index = 0;
  int col = 1, row = 0;
  for (std::size_t k = 0; k < body_bytes; ++k) {
    unsigned char c = static_cast<unsigned char>(text[1 + k]);
    if (c < kBias || c > 126)
      throw ParseError("data byte out of range", base + 1 + k);
    int group = c - kBias;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      int bit = (group >> b) & 1;
      if (bit_index >= bits) {
        if (bit) throw ParseError("nonzero padding bit", base + 1 + k);
        continue;
      }
      if (bit) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxSmallN)
    throw Error(ErrorKind::Size,
                "graph6 writer supports n <= 62, got n = " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(kBias + n));
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(kBias + group));
  }
  return out;
}

}  // namespace specjoin
