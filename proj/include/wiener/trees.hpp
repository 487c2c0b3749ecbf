#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wiener/multiset.hpp"

namespace wiener {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple tree on vertices 0..n-1. Construction validates the
// tree invariants (n-1 edges, connected, no loops or duplicate edges) and
// throws InvalidTree otherwise, so every Tree value is a tree.
class Tree {
 public:
  Tree(std::size_t n, std::vector<Edge> edges);

  static Tree path(std::size_t n);
  static Tree star(std::size_t n);

  std::size_t order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Degrees sorted nonincreasing.
  std::vector<std::int64_t> degree_sequence() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  // Compressed adjacency: neighbors of v are targets_[offsets_[v] .. offsets_[v+1]).
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Sum of d(u, v) over unordered vertex pairs, by one breadth-first traversal
// per vertex.
std::uint64_t wiener_index(const Tree& t);

// Caterpillar whose spine v_1..v_k has deg(v_i) = x_i + 1. Spine vertices are
// numbered 0..k-1 in order, then leaves grouped by host spine vertex.
// For k = 1 the single spine vertex receives x_1 + 1 leaves.
Tree caterpillar_from_arrangement(std::span<const std::int64_t> x);

// True iff deleting all leaves leaves a path (possibly empty or one vertex).
bool is_caterpillar(const Tree& t);

// True iff every entry is >= 1 and the entries sum to 2(n-1).
bool is_tree_graphic(std::span<const std::int64_t> degrees);

// Internal-vertex degrees minus one, grouped by value. Entry order of the
// input is irrelevant.
ValueMultiset decremented_sequence(std::span<const std::int64_t> degrees);

}  // namespace wiener
