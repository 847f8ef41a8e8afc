#include "mntkit/graph6.hpp"

namespace mnt {

namespace {
constexpr int kBias = 63;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    // Extended header: '~' then n in three 6-bit groups, big-endian.
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kBias + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  // Upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    acc <<= (6 - filled);
    out.push_back(static_cast<char>(kBias + acc));
  }
  return out;
}

Graph from_graph6(const std::string& record) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (record.size() < pos + k)
      throw DecodeError("graph6 record truncated", record.size());
  };
  auto group = [&]() {
    need(1);
    unsigned char c = static_cast<unsigned char>(record[pos]);
    if (c < 63 || c > 126)
      throw DecodeError("invalid graph6 character", pos);
    ++pos;
    return static_cast<int>(c) - kBias;
  };

  need(1);
  int n;
  if (static_cast<unsigned char>(record[0]) == 126) {
    ++pos;
    need(1);
    if (static_cast<unsigned char>(record[pos]) == 126)
      throw DecodeError("graph order beyond supported range", pos);
    int a = group(), b = group(), c = group();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = group();
  }
  if (n < 1 || n > Graph::kMaxVertices)
    throw DecodeError("graph order " + std::to_string(n) +
                          " outside supported range [1, 128]",
                      0);

  Graph g(n);
  int acc = 0;
  int avail = 0;
  std::size_t group_at = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        group_at = pos;
        acc = group();
        avail = 6;
      }
      if ((acc >> (avail - 1)) & 1) g.add_edge(i, j);
      --avail;
    }
  }
  if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
    throw DecodeError("nonzero padding bits", group_at);
  if (pos != record.size())
    throw DecodeError("trailing bytes after graph6 record", pos);
  return g;
}

}  // namespace mnt
