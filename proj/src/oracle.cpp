#include "blockcc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace blockcc {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), size_(n, 1), count_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSet::unite(std::size_t a, std::size_t b) {
  std::size_t ra = find(a);
  std::size_t rb = find(b);
  if (ra == rb) return false;
  if (size_[ra] < size_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  size_[ra] += size_[rb];
  --count_;
  return true;
}

namespace {

std::vector<std::vector<std::size_t>> components_union_find(const AdjacencyMatrix& m) {
  const std::size_t n = m.size();
  DisjointSet ds(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j)) ds.unite(i, j);

  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t v = 0; v < n; ++v) by_root[ds.find(v)].push_back(v);

  std::vector<std::vector<std::size_t>> parts;
  for (auto& group : by_root)
    if (!group.empty()) parts.push_back(std::move(group));
  return parts;
}

std::vector<std::vector<std::size_t>> components_breadth_first(const AdjacencyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<char> visited(n, 0);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> part;
    std::queue<std::size_t> frontier;
    visited[start] = 1;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      part.push_back(v);
      const auto row = m.row(v);
      for (std::size_t w = 0; w < n; ++w)
        if (row[w] && !visited[w]) {
          visited[w] = 1;
          frontier.push(w);
        }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

PartitionOracleResult oracle_components(const AdjacencyMatrix& m, OracleMethod method) {
  PartitionOracleResult result;
  result.partition = normalize_partition(method == OracleMethod::union_find
                                             ? components_union_find(m)
                                             : components_breadth_first(m));
  result.num_components = result.partition.size();
  return result;
}

std::vector<std::vector<std::size_t>> normalize_partition(
    std::vector<std::vector<std::size_t>> partition) {
  for (auto& part : partition) std::sort(part.begin(), part.end());
  std::sort(partition.begin(), partition.end());
  return partition;
}

bool same_partition(const std::vector<std::vector<std::size_t>>& a,
                    const std::vector<std::vector<std::size_t>>& b) {
  return normalize_partition(a) == normalize_partition(b);
}

}  // namespace blockcc
