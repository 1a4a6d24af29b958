#pragma once

#include <string>
#include <vector>

#include "walkreg/graph.hpp"

namespace walkreg {

/// Named graph families with fixed, documented vertex labelings.
///
///   cycle(n)                   vertices 0..n-1 around the cycle
///   complete(n)
///   complete_multipartite(r,s) r parts of size s; vertex = part*s + index
///   cocktail_party(n)          K_{n x 2}; parts {2i, 2i+1}
///   hypercube(d)               vertex = bitmask, adjacency = Hamming distance 1
///   hamming(d,q)               vertex = base-q digit string, most significant first
///   rook(n) / L2(n)            n x n grid, vertex = row*n + col, same row/col adjacency
///   petersen
///   generalized_petersen(n,k)  outer 0..n-1 (step 1), inner n..2n-1 (step k), spokes
///   dodecahedron               generalized_petersen(10,2)
///   icosahedron                0 apex, 1..5 upper ring, 6..10 lower ring, 11 apex
///   octahedron                 complete_multipartite(3,2)
///   paley(q) / conference(q)   q prime, q = 1 mod 4; x ~ y iff x-y is a nonzero square
///
/// Throws InputError for unknown names or parameters out of range.
Graph catalog(const std::string& name, const std::vector<long long>& params = {});

std::vector<std::string> catalog_names();

}  // namespace walkreg
