#pragma once
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "vmc/instance.hpp"

namespace vmc {

// Instance files, line oriented:
//   c <comment>
//   p vmc <n> <m> <p>
//   e <u> <v>        one per edge, vertices 1-indexed
//   t <s> <t>        one per terminal pair
//   w <v>            optional, marks a W vertex
//   k <int>          optional budget
// Internally vertices are 0-indexed; printing adds 1 back.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedInstance {
  Graph graph;
  std::vector<VertexPair> pairs;
  VertexSet w_set;
  std::optional<int> k;

  MulticutInstance to_multicut(std::optional<int> k_override = std::nullopt) const;
  CompressionInstance to_compression(std::optional<int> k_override = std::nullopt) const;
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_file(const std::string& path);

std::string serialize_instance(const Graph& g, const std::vector<VertexPair>& pairs,
                               const VertexSet& w_set, std::optional<int> k);
std::string serialize_instance(const MulticutInstance& inst);
std::string serialize_instance(const CompressionInstance& inst);

}  // namespace vmc
