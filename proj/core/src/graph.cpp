#include "exgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace exg {

void VertexSet::normalize() {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<int> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<int> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<int> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

std::vector<int> Path::interior() const {
  if (vertices.size() <= 2) return {};
  return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  std::vector<std::pair<int, int>> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  g.edges_ = std::move(norm);
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

namespace {

// Splits into non-empty whitespace-trimmed lines, tracking 1-based numbers.
std::vector<std::pair<int, std::string>> split_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = (nl == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
    ++lineno;
    std::string line(raw);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start != std::string::npos) out.emplace_back(lineno, line.substr(start));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::pair<long long, long long> parse_int_pair(const std::string& line, int lineno) {
  std::istringstream iss(line);
  long long a, b;
  std::string rest;
  if (!(iss >> a >> b)) throw parse_error("malformed line '" + line + "'", lineno);
  if (iss >> rest) throw parse_error("trailing tokens on line '" + line + "'", lineno);
  return {a, b};
}

} // namespace

Graph Graph::parse(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw parse_error("empty document", 1);
  auto [n, m] = parse_int_pair(lines[0].second, lines[0].first);
  if (n < 0 || m < 0) throw parse_error("negative count in header", lines[0].first);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw parse_error("expected " + std::to_string(m) + " edge lines, found " +
                          std::to_string(lines.size() - 1),
                      lines.empty() ? 1 : lines.back().first);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (size_t i = 1; i < lines.size(); ++i) {
    auto [lineno, line] = lines[i];
    auto [u, v] = parse_int_pair(line, lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("vertex id out of range", lineno);
    if (u == v) throw parse_error("self-loop", lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return from_edges(static_cast<int>(n), edges);
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("degree_stats on empty graph");
  int mindeg = g.degree(0);
  for (int v = 1; v < g.order(); ++v) mindeg = std::min(mindeg, g.degree(v));
  return {Rat(2 * g.size(), g.order()), mindeg};
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x(g.order(), 0);
  for (int v : x) {
    if (!g.has_vertex(v)) throw std::invalid_argument("vertex id out of range");
    in_x[v] = 1;
  }
  std::vector<int> out;
  std::vector<char> seen(g.order(), 0);
  for (int v : x)
    for (int w : g.neighbors(v))
      if (!in_x[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  return VertexSet(std::move(out));
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& seeds,
                               const std::vector<char>& avoid) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue;
  for (int s : seeds) {
    if (!avoid.empty() && avoid[s]) continue;
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] != -1) continue;
      if (!avoid.empty() && avoid[w]) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

VertexSet bfs_ball(const Graph& g, const VertexSet& a, int r, const VertexSet& avoid) {
  std::vector<char> blocked(g.order(), 0);
  for (int v : avoid) blocked[v] = 1;
  for (int v : a)
    if (blocked[v]) throw std::invalid_argument("bfs_ball: seed inside avoid set");
  auto dist = bfs_distances(g, a.ids(), blocked);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] >= 0 && dist[v] <= r) out.push_back(v);
  return VertexSet(std::move(out));
}

namespace {

// Canonical cycle form: rotate so the minimum vertex leads, then pick the
// direction with the lexicographically smaller sequence.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
  auto mn = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), mn, cyc.end());
  std::vector<int> rev(cyc.begin(), cyc.end());
  std::reverse(rev.begin() + 1, rev.end());
  return std::min(cyc, rev);
}

// Lexicographically smallest simple cycle of length exactly target through
// start as its minimum vertex; vertices below start are excluded. Ordered
// DFS with a BFS-distance feasibility prune.
bool lex_cycle_dfs(const Graph& g, int start, int target, std::vector<int>& seq,
                   std::vector<char>& used, const std::vector<int>& dist_to_start) {
  int cur = seq.back();
  int rem = target - static_cast<int>(seq.size()) + 1; // edges still to place
  if (rem == 1) {
    if (g.adjacent(cur, start) && static_cast<int>(seq.size()) >= 3) return true;
    return false;
  }
  for (int w : g.neighbors(cur)) {
    if (w <= start || used[w]) continue;
    if (dist_to_start[w] < 0 || dist_to_start[w] > rem - 1) continue;
    used[w] = 1;
    seq.push_back(w);
    if (lex_cycle_dfs(g, start, target, seq, used, dist_to_start)) return true;
    seq.pop_back();
    used[w] = 0;
  }
  return false;
}

std::optional<std::vector<int>> lex_smallest_cycle_of_length(const Graph& g, int target) {
  std::vector<char> none;
  for (int start = 0; start < g.order(); ++start) {
    // completion distances ignore `used`, so they only under-estimate; the
    // prune stays sound
    auto dist = bfs_distances(g, {start}, none);
    std::vector<int> seq{start};
    std::vector<char> used(g.order(), 0);
    used[start] = 1;
    if (lex_cycle_dfs(g, start, target, seq, used, dist)) return seq;
  }
  return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
  // girth by BFS from every vertex: a non-tree edge (u,v) closes a walk of
  // length d(u)+d(v)+1 which contains a cycle, so the minimum over all roots
  // and non-tree edges is exactly the girth
  int best = -1;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[w] != -1) continue;
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    for (auto [u, v] : g.edges()) {
      if (dist[u] < 0 || dist[v] < 0) continue;
      if (parent[u] == v || parent[v] == u) continue;
      int len = dist[u] + dist[v] + 1;
      if (best == -1 || len < best) best = len;
    }
  }
  if (best < 3) return std::nullopt;
  return canonical_cycle(lex_smallest_cycle_of_length(g, best).value());
}

std::optional<std::vector<int>> shortest_even_cycle(const Graph& g) {
  // shortest cycle through each edge: BFS between the endpoints with the
  // edge removed
  int best = -1;
  for (auto [u, v] : g.edges()) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(x)) {
        if (x == u && w == v) continue;
        if (x == v && w == u) continue;
        if (dist[w] != -1) continue;
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
    }
    if (dist[v] < 0) continue;
    int len = dist[v] + 1;
    if (len % 2 == 0 && (best == -1 || len < best)) best = len;
  }
  if (best < 0) return std::nullopt;
  auto c = lex_smallest_cycle_of_length(g, best);
  if (!c) return std::nullopt;
  return canonical_cycle(*c);
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<int> left, right;
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < g.order(); ++v)
    (color[v] == 0 ? left : right).push_back(v);
  return std::make_pair(VertexSet(std::move(left)), VertexSet(std::move(right)));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.from_original.assign(g.order(), -1);
  for (int v : keep) {
    if (!g.has_vertex(v)) throw std::invalid_argument("vertex id out of range");
    out.from_original[v] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int nu = out.from_original[u], nv = out.from_original[v];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.to_original.size()), edges);
  return out;
}

bool is_connected_within(const Graph& g, const VertexSet& body) {
  if (body.empty()) return true;
  std::vector<char> avoid(g.order(), 1);
  for (int v : body) avoid[v] = 0;
  auto dist = bfs_distances(g, {body.ids().front()}, avoid);
  for (int v : body)
    if (dist[v] < 0) return false;
  return true;
}

bool path_in_graph(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (int v : p.vertices) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
  return true;
}

} // namespace exg
