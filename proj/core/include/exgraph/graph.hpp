#ifndef EXGRAPH_GRAPH_HPP
#define EXGRAPH_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace exg {

/// Exact fraction type used wherever a density threshold must not drift.
using Rat = boost::rational<long long>;

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class too_large_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Requested path length is impossible in a bipartite host for parity
/// reasons; distinct from an ordinary "not found".
class parity_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Sorted, duplicate-free set of vertex ids. The common currency for
/// avoid-sets, neighbourhoods and certificate payloads.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) { normalize(); }

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }

  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void normalize();
  std::vector<int> ids_;
};

/// Simple path given as its vertex sequence; length is the edge count.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool empty() const { return vertices.empty(); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }

  /// Vertices strictly between the endpoints.
  std::vector<int> interior() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1. "Deleting"
/// vertices is always expressed through avoid-sets or induced subgraphs,
/// never mutation, so a Graph can be shared freely across threads.
class Graph {
public:
  Graph() = default;

  /// Builds from an edge list; edges are deduplicated, self-loops rejected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Parses the "n m" / "u v" edge-list document format.
  static Graph parse(std::string_view text);

  int order() const { return static_cast<int>(adj_.size()); }
  long long size() const { return static_cast<long long>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  bool adjacent(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_vertex(int v) const { return v >= 0 && v < order(); }

private:
  std::vector<std::vector<int>> adj_;        // sorted neighbour lists
  std::vector<std::pair<int, int>> edges_;   // u < v, sorted
};

struct DegreeStats {
  Rat average;
  int minimum;
};

/// d(G) = 2e(G)/|G| as an exact rational, plus the minimum degree.
DegreeStats degree_stats(const Graph& g);

/// N_G(X): vertices outside X with a neighbour in X.
VertexSet external_neighborhood(const Graph& g, const VertexSet& x);

/// All vertices reachable from A within r steps in G - avoid (A included).
VertexSet bfs_ball(const Graph& g, const VertexSet& a, int r, const VertexSet& avoid);

/// Girth witness in canonical form (starts at its minimum vertex, then the
/// lexicographically smaller direction), or nullopt on forests.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

/// Shortest even cycle found by per-edge BFS, canonicalized like
/// shortest_cycle. Exact on bipartite hosts; on general graphs it returns an
/// even cycle through some edge whose through-edge shortest cycle is even,
/// or nullopt.
std::optional<std::vector<int>> shortest_even_cycle(const Graph& g);

/// Proper 2-coloring, each component's minimum vertex placed on the left,
/// or nullopt when an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// --- shared plumbing used across modules ---

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;   // new id -> original id
  std::vector<int> from_original; // original id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// BFS distances from the seed set inside G - avoid; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& seeds,
                               const std::vector<char>& avoid);

bool is_connected_within(const Graph& g, const VertexSet& body);

bool path_in_graph(const Graph& g, const Path& p);

} // namespace exg

#endif
