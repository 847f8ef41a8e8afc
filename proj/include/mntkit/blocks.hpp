#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "mntkit/graph.hpp"

namespace mnt::blocks {

// A building block for the hub construction: a cubic graph together with
// a designated vertex (where the block will be opened) and the labelling
// of that vertex's three neighbours as exits. exits[0] is the privileged
// exit that ends up wired to the hub.
struct BlockSpec {
  std::string name;
  Graph graph;
  int opened_at = 0;
  std::array<int, 3> exits{};
};

// Structural sanity: cubic graph, opened_at in range, exits are exactly
// its three neighbours, pairwise distinct. Throws PreconditionError.
void validate_block(const BlockSpec& spec);

// The 10-vertex Kneser graph K(5,2): outer 5-cycle 0..4, inner pentagram
// 5..9 (i ~ i+2), spokes i ~ i+5.
BlockSpec petersen();

// 28 vertices: three 7-cycles with step 1 (vertices 0..6), step 2 (7..13)
// and step 3 (14..20), plus seven hubs 21..27, hub 21+i joined to i, 7+i,
// 14+i. Girth 7.
BlockSpec coxeter();

// Flower snark on 4k vertices, k odd and at least 5. Vertex 4i is the
// claw centre of gadget i with leaves 4i+1 (outer), 4i+2 and 4i+3 (inner);
// the outer leaves form a k-cycle and the inner leaves one 2k-cycle.
BlockSpec flower_snark(int k);

// Block file format, also produced by the CLI `gen` command: one graph6
// line and one header line "z=<v> a=<v> b=<v> c=<v>", in either order;
// '#' lines and blank lines are ignored. The header keys name the opened
// vertex and the three exits.
BlockSpec load_block_file(std::istream& in, const std::string& name);
BlockSpec load_block_file_path(const std::string& path);
void write_block_file(std::ostream& out, const BlockSpec& spec);

// External 22-vertex block slot. The adjacency is not shipped with the
// toolkit; it is read from a block file and only its order and shape are
// checked here. Whether it actually qualifies as a building block is the
// verification layer's job.
BlockSpec snark22(const std::string& path);

}  // namespace mnt::blocks
