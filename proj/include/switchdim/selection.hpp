#pragma once

// Switching-set specifications used on the command line:
//
//   empty             U = {}
//   clique:i          Johnson: {S : i in S}; Hamming: row i
//   rows:I            Hamming: union of rows in I (comma list)
//   cols:I            Hamming: union of columns in I
//   verts:3,7,12      explicit vertex indices
//   random:SEED       each vertex kept with probability 1/2
//   random:SEED:SIZE  SIZE distinct vertices
//
// Random selections use mt19937_64 with rejection sampling, so a seed gives
// the same set on every platform.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "switchdim/switchclass.hpp"

namespace switchdim {

VertexSet parse_switch_spec(const std::string& spec, const Graph& g, std::optional<Family> family, int m);

VertexSet random_subset(std::size_t n, std::uint64_t seed, std::optional<std::size_t> size);

/// "A..B" or "A".
std::pair<int, int> parse_range(const std::string& text);

}  // namespace switchdim
