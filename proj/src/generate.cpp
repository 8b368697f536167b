#include "blockcc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "json.hpp"

namespace blockcc {

namespace {

const struct {
  GraphFamily family;
  const char* name;
} kFamilies[] = {
    {GraphFamily::planted_components, "planted"},
    {GraphFamily::erdos_renyi, "erdos_renyi"},
    {GraphFamily::path, "path"},
    {GraphFamily::cycle, "cycle"},
    {GraphFamily::complete, "complete"},
    {GraphFamily::star, "star"},
    {GraphFamily::null_graph, "null"},
};

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::InvalidSpec,
                "edge probability " + std::to_string(p) + " not in [0,1]");
}

std::vector<std::size_t> shuffled_identity(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

AdjacencyMatrix generate_planted(const GraphSpec& spec, std::mt19937_64& rng) {
  check_probability(spec.edge_probability);
  std::size_t n = 0;
  for (const std::size_t size : spec.sizes) {
    if (size == 0) throw Error(ErrorKind::InvalidSpec, "planted block of size 0");
    n += size;
  }

  AdjacencyMatrix m(n);
  std::bernoulli_distribution extra(spec.edge_probability);
  std::size_t offset = 0;
  for (const std::size_t size : spec.sizes) {
    // random spanning tree: attach each vertex to a random earlier one
    for (std::size_t t = 1; t < size; ++t) {
      std::uniform_int_distribution<std::size_t> earlier(0, t - 1);
      m.add_edge(offset + t, offset + earlier(rng));
    }
    if (spec.edge_probability > 0.0)
      for (std::size_t u = 0; u < size; ++u)
        for (std::size_t v = u + 1; v < size; ++v)
          if (extra(rng)) m.add_edge(offset + u, offset + v);
    offset += size;
  }
  return relabel(m, shuffled_identity(n, rng));
}

}  // namespace

const char* family_name(GraphFamily family) {
  for (const auto& entry : kFamilies)
    if (entry.family == family) return entry.name;
  return "?";
}

GraphFamily parse_family(const std::string& name) {
  for (const auto& entry : kFamilies)
    if (name == entry.name) return entry.family;
  if (name == "planted_components") return GraphFamily::planted_components;
  throw Error(ErrorKind::InvalidSpec, "unknown graph family '" + name + "'");
}

AdjacencyMatrix generate(const GraphSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const std::size_t n = spec.n;
  switch (spec.family) {
    case GraphFamily::planted_components:
      return generate_planted(spec, rng);
    case GraphFamily::erdos_renyi: {
      check_probability(spec.edge_probability);
      AdjacencyMatrix m(n);
      std::bernoulli_distribution coin(spec.edge_probability);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (coin(rng)) m.add_edge(u, v);
      return m;
    }
    case GraphFamily::path: {
      AdjacencyMatrix m(n);
      for (std::size_t u = 0; u + 1 < n; ++u) m.add_edge(u, u + 1);
      return m;
    }
    case GraphFamily::cycle: {
      if (n > 0 && n < 3)
        throw Error(ErrorKind::InvalidSpec, "cycle needs at least 3 vertices");
      AdjacencyMatrix m(n);
      for (std::size_t u = 0; u + 1 < n; ++u) m.add_edge(u, u + 1);
      if (n >= 3) m.add_edge(n - 1, 0);
      return m;
    }
    case GraphFamily::complete: {
      AdjacencyMatrix m(n);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) m.add_edge(u, v);
      return m;
    }
    case GraphFamily::star: {
      AdjacencyMatrix m(n);
      for (std::size_t v = 1; v < n; ++v) m.add_edge(0, v);
      return m;
    }
    case GraphFamily::null_graph:
      return AdjacencyMatrix(n);
  }
  throw Error(ErrorKind::InvalidSpec, "unknown graph family");
}

AdjacencyMatrix add_vertex(const AdjacencyMatrix& m, const std::vector<std::size_t>& neighbors) {
  const std::size_t n = m.size();
  for (const std::size_t v : neighbors)
    if (v >= n)
      throw Error(ErrorKind::UnknownNeighbor,
                  "neighbor " + std::to_string(v + 1) + " not a vertex of the graph", v + 1);

  AdjacencyMatrix grown(n + 1);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (m(u, v)) grown.add_edge(u, v);
  for (const std::size_t v : neighbors) grown.add_edge(n, v);
  return grown;
}

AdjacencyMatrix relabel(const AdjacencyMatrix& m, const std::vector<std::size_t>& sigma) {
  const std::size_t n = m.size();
  if (sigma.size() != n)
    throw Error(ErrorKind::InvalidSpec, "relabeling size does not match the graph");
  AdjacencyMatrix result(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (m(u, v)) result.add_edge(sigma[u], sigma[v]);
  return result;
}

std::vector<std::size_t> random_label_permutation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return shuffled_identity(n, rng);
}

AdjacencyMatrix scramble_labels(const AdjacencyMatrix& m, std::uint64_t seed) {
  return relabel(m, random_label_permutation(m.size(), seed));
}

GraphSpec graph_spec_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("recipe is not valid JSON: ") + e.what());
  }
  try {
    GraphSpec spec;
    spec.family = parse_family(doc.at("family").get<std::string>());
    if (doc.contains("n")) spec.n = doc.at("n").get<std::size_t>();
    if (doc.contains("sizes")) spec.sizes = doc.at("sizes").get<std::vector<std::size_t>>();
    if (doc.contains("p")) spec.edge_probability = doc.at("p").get<double>();
    if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
    if (spec.family == GraphFamily::planted_components && spec.sizes.empty())
      throw Error(ErrorKind::InvalidSpec, "planted recipe needs a nonempty \"sizes\" list");
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("bad recipe: ") + e.what());
  }
}

std::string graph_spec_to_json(const GraphSpec& spec) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(spec.family);
  if (spec.family == GraphFamily::planted_components)
    doc["sizes"] = spec.sizes;
  else
    doc["n"] = spec.n;
  if (spec.family == GraphFamily::planted_components || spec.family == GraphFamily::erdos_renyi)
    doc["p"] = spec.edge_probability;
  doc["seed"] = spec.seed;
  return doc.dump() + "\n";
}

}  // namespace blockcc
