#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "blockcc/matrix.hpp"

namespace blockcc {

enum class GraphFamily {
  planted_components,
  erdos_renyi,
  path,
  cycle,
  complete,
  star,
  null_graph,
};

const char* family_name(GraphFamily family);
GraphFamily parse_family(const std::string& name);  // throws InvalidSpec

/// Reproducible generator recipe: the same spec always yields the same graph.
struct GraphSpec {
  GraphFamily family = GraphFamily::null_graph;
  std::size_t n = 0;                 // every family except planted_components
  std::vector<std::size_t> sizes;    // planted_components: one entry per block
  double edge_probability = 0.0;     // erdos_renyi; extra intra-block edges for planted
  std::uint64_t seed = 0;

  bool operator==(const GraphSpec&) const = default;
};

/// Synthesizes a validated graph. planted_components guarantees each planted
/// block connected (random spanning tree plus density-p extra edges), no
/// inter-block edges, and scrambles vertex labels with the seed so component
/// structure is never positionally aligned.
AdjacencyMatrix generate(const GraphSpec& spec);  // throws InvalidSpec

/// (n+1)-vertex copy of m whose new vertex is adjacent exactly to `neighbors`.
AdjacencyMatrix add_vertex(const AdjacencyMatrix& m,
                           const std::vector<std::size_t>& neighbors);  // throws UnknownNeighbor

/// Relabels vertices: vertex u of the input becomes vertex sigma[u].
AdjacencyMatrix relabel(const AdjacencyMatrix& m, const std::vector<std::size_t>& sigma);

std::vector<std::size_t> random_label_permutation(std::size_t n, std::uint64_t seed);
AdjacencyMatrix scramble_labels(const AdjacencyMatrix& m, std::uint64_t seed);

/// JSON recipe, e.g. {"family":"planted","sizes":[3,2],"p":0.5,"seed":7}.
GraphSpec graph_spec_from_json(const std::string& text);
std::string graph_spec_to_json(const GraphSpec& spec);

}  // namespace blockcc
