#include "wiener/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "wiener/error.hpp"

namespace wiener {

namespace {

std::string edge_string(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

}  // namespace

Tree::Tree(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) {
    throw InvalidTree("a tree needs at least one vertex");
  }
  if (edges_.size() != n_ - 1) {
    throw InvalidTree("a tree on " + std::to_string(n_) + " vertices has " + std::to_string(n_ - 1) +
                      " edges, got " + std::to_string(edges_.size()));
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.first >= n_ || e.second >= n_) {
      throw InvalidTree("edge " + edge_string(e) + " references a vertex outside 0.." + std::to_string(n_ - 1));
    }
    if (e.first == e.second) {
      throw InvalidTree("self-loop at vertex " + std::to_string(e.first));
    }
    normalized.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end()); dup != normalized.end()) {
    throw InvalidTree("duplicate edge " + edge_string(*dup));
  }

  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.first + 1];
    ++offsets_[e.second + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    targets_[fill[e.first]++] = e.second;
    targets_[fill[e.second]++] = e.first;
  }

  // n-1 edges plus connectivity rules out cycles.
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n_) {
    throw InvalidTree("graph is disconnected (hence has a cycle): " + std::to_string(reached) + " of " +
                      std::to_string(n_) + " vertices reachable from vertex 0");
  }
}

Tree Tree::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return Tree(n, std::move(edges));
}

Tree Tree::star(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(Vertex{0}, static_cast<Vertex>(i));
  }
  return Tree(n, std::move(edges));
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
  return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
}

std::vector<std::int64_t> Tree::degree_sequence() const {
  std::vector<std::int64_t> d(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    d[v] = static_cast<std::int64_t>(degree(static_cast<Vertex>(v)));
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::uint64_t wiener_index(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> queue(n);
  std::uint64_t total = 0;
  constexpr auto kUnseen = ~std::uint32_t{0};
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[source] = 0;
    queue[0] = static_cast<Vertex>(source);
    std::size_t head = 0;
    std::size_t tail = 1;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : t.neighbors(v)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[v] + 1;
          total += dist[w];
          queue[tail++] = w;
        }
      }
    }
  }
  // Every unordered pair was counted from both ends.
  return total / 2;
}

Tree caterpillar_from_arrangement(std::span<const std::int64_t> x) {
  if (x.empty()) {
    throw InvalidArrangement("arrangement is empty");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1) {
      throw InvalidArrangement("spine weight x_" + std::to_string(i + 1) + " = " + std::to_string(x[i]) +
                               " is below 1");
    }
  }

  const std::size_t k = x.size();
  std::vector<std::size_t> leaves(k);
  if (k == 1) {
    leaves[0] = static_cast<std::size_t>(x[0]) + 1;
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      const bool end = (i == 0 || i + 1 == k);
      leaves[i] = static_cast<std::size_t>(end ? x[i] : x[i] - 1);
    }
  }
  const std::size_t n = k + std::accumulate(leaves.begin(), leaves.end(), std::size_t{0});

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < k; ++i) {
    edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  auto next = static_cast<Vertex>(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < leaves[i]; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), next++);
    }
  }
  return Tree(n, std::move(edges));
}

bool is_caterpillar(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    return true;
  }
  // The non-leaf vertices of a tree induce a subtree; it is a path iff no
  // vertex has three non-leaf neighbors.
  for (std::size_t v = 0; v < n; ++v) {
    if (t.degree(static_cast<Vertex>(v)) < 2) {
      continue;
    }
    std::size_t core_neighbors = 0;
    for (Vertex w : t.neighbors(static_cast<Vertex>(v))) {
      if (t.degree(w) >= 2) {
        ++core_neighbors;
      }
    }
    if (core_neighbors > 2) {
      return false;
    }
  }
  return true;
}

bool is_tree_graphic(std::span<const std::int64_t> degrees) {
  if (degrees.empty()) {
    return false;
  }
  std::int64_t sum = 0;
  for (auto d : degrees) {
    if (d < 1) {
      return false;
    }
    sum += d;
  }
  return sum == 2 * (static_cast<std::int64_t>(degrees.size()) - 1);
}

ValueMultiset decremented_sequence(std::span<const std::int64_t> degrees) {
  if (!is_tree_graphic(degrees)) {
    throw InvalidDegreeSequence("degree sequence is not the degree sequence of a tree");
  }
  std::vector<std::int64_t> internal;
  for (auto d : degrees) {
    if (d >= 2) {
      internal.push_back(d - 1);
    }
  }
  if (internal.empty()) {
    throw InvalidDegreeSequence("degree sequence has no internal vertices");
  }
  return ValueMultiset::from_values(internal);
}

}  // namespace wiener
