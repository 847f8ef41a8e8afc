#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mntkit/graph.hpp"

namespace mnt {

// Malformed graph6 input; `offset` is the byte position of the first
// offending character (or the record length for truncation).
struct DecodeError : std::runtime_error {
  std::size_t offset;
  DecodeError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
        offset(off) {}
};

// Canonical-format graph6 (no header token, no padding slack): one record
// per graph, upper-triangle bits in column-major order, 6 bits per byte
// offset by 63. Orders 1..62 use the single-byte header, 63..128 the
// three-byte extended header.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& record);

}  // namespace mnt
