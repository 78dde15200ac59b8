#ifndef EXGRAPH_GADGETS_HPP
#define EXGRAPH_GADGETS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exgraph/graph.hpp"

namespace exg {

/// Structured check outcome: ok, or the first violated clause by name.
struct Verdict {
  bool ok = true;
  std::string clause;

  static Verdict pass() { return {true, ""}; }
  static Verdict fail(std::string c) { return {false, std::move(c)}; }
};

/// Two-layer star-of-stars: a center, h1 first-layer neighbours, and h2
/// private leaves behind each of them.
struct Hub {
  int center = -1;
  std::vector<int> first_layer;
  std::vector<std::vector<int>> second_layer; // parallel to first_layer

  VertexSet vertices() const;
  VertexSet second_layer_union() const;
};

Verdict validate_hub(const Graph& g, const Hub& hub, int h1, int h2);

/// Greedy hub construction in G - W: candidate centers by residual degree,
/// vertex-disjoint leaf stars grown under the first-fit rule.
std::optional<Hub> build_hub(const Graph& g, const VertexSet& w, int h1, int h2);

/// Core vertex joined by short disjoint spokes to h0 disjoint hubs. The
/// exterior (union of second layers) is the unit's consumable surface.
struct Unit {
  int core = -1;
  std::vector<Hub> hubs;
  std::vector<Path> spokes; // spokes[j] runs core -> hubs[j].center

  VertexSet vertices() const;
  VertexSet exterior() const;
  VertexSet interior() const;
};

Verdict validate_unit(const Graph& g, const Unit& unit, int h0, int h1, int h2, int h3);

std::optional<Unit> build_unit(const Graph& g, const VertexSet& w, int h0, int h1, int h2,
                               int h3);

/// Connected D-vertex set in which every vertex sits within distance
/// `radius` of the anchor (inside the body).
struct Expansion {
  int anchor = -1;
  VertexSet body;
  int radius = 0;

  int size() const { return body.size(); }
};

Verdict validate_expansion(const Graph& g, const Expansion& f);

/// Keeps the D0 vertices closest to the anchor (BFS layers, ties by id).
Expansion trim_expansion(const Graph& g, const Expansion& f, int d0);

/// BFS route from a body vertex back to the anchor, inside the body.
Path expansion_path_to_anchor(const Graph& g, const Expansion& f, int from);

/// Parity-tuning gadget: two anchored expansions plus a small center set that
/// realizes slack+1 core-to-core path lengths ell, ell+2, ..., ell+2*slack.
struct Adjuster {
  int core1 = -1, core2 = -1;
  Expansion end1, end2;
  VertexSet center;
  int slack = 0;           // the k of a (D,m,k)-adjuster
  int initial_length = 0;  // smallest realized core-to-core length

  VertexSet vertices() const;
};

enum class A4Status { verified, failed, unverified };

struct AdjusterReport {
  Verdict a1, a2, a3;
  A4Status a4 = A4Status::unverified;
  std::string a4_detail;
  int recomputed_initial_length = -1; // -1 when A4 was not exactly verified

  bool structural_ok() const { return a1.ok && a2.ok && a3.ok; }
  bool accepted() const { return structural_ok() && a4 != A4Status::failed; }
  bool fully_verified() const { return structural_ok() && a4 == A4Status::verified; }
};

/// Checks clauses A1-A4; A4 by exhaustive path-length enumeration inside
/// G[center + cores] when that graph has at most 24 vertices, otherwise
/// reported unverified rather than guessed.
AdjusterReport validate_adjuster(const Graph& g, const Adjuster& adj, int d, int m, int k);

/// All simple core-to-core path lengths realizable inside G[center + cores].
/// Exact; meant for small center sets.
std::set<int> adjuster_path_lengths(const Graph& g, int v1, int v2, const VertexSet& center);

/// Simple ((D,m,1)) adjuster from the shortest even cycle of G - W: cores at
/// distance r-1 on a 2r-cycle, expansions grown clear of the cycle.
std::optional<Adjuster> build_simple_adjuster(const Graph& g, const VertexSet& w, int d, int m);

/// Joins a (D,m,r)- and a (D,m,1)-adjuster through a short connecting path
/// into a (D,m,r+1)-adjuster on the two untouched ends.
std::optional<Adjuster> merge_adjusters(const Graph& g, const Adjuster& a1, const Adjuster& a2,
                                        const VertexSet& w);

/// Inductive construction: one simple adjuster per round, merged into the
/// running gadget, with used-vertex bookkeeping.
std::optional<Adjuster> build_adjuster(const Graph& g, const VertexSet& w, int d, int m, int r);

/// A core simple adjuster whose designated end is linked by short tentacle
/// paths to a family of disjoint simple adjusters.
struct Octopus {
  Adjuster core;
  int designated_end = 1; // 1 or 2: which end of the core is R
  std::vector<Adjuster> arms;
  std::vector<Path> tentacles;

  const Expansion& reach_end() const { return designated_end == 1 ? core.end1 : core.end2; }
};

Verdict validate_octopus(const Graph& g, const Octopus& oct, int r1, int r2, int r3, int r4);

} // namespace exg

#endif
