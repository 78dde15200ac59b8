#include "exgraph/generate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "exgraph/kst.hpp"

namespace exg {

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph make_hypercube(int dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("make_hypercube: bad dimension");
  int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("random_gnp: p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("random_bipartite: p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (coin(rng) < p) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

namespace {

// Finite field tables for q <= 9, generated at compile time. Prime fields
// use modular arithmetic; GF(4), GF(8), GF(9) use the irreducible
// polynomials x^2+x+1, x^3+x+1 and x^2+1 over their prime fields.
struct FieldTables {
  int q = 0;
  std::array<std::array<int, 9>, 9> add{};
  std::array<std::array<int, 9>, 9> mul{};
};

constexpr FieldTables make_prime_field(int p) {
  FieldTables f{};
  f.q = p;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      f.add[a][b] = (a + b) % p;
      f.mul[a][b] = (a * b) % p;
    }
  return f;
}

// Elements of GF(p^e) are base-p digit vectors encoded as integers; `red`
// encodes x^e as a polynomial in lower powers.
constexpr FieldTables make_extension_field(int p, int e, std::array<int, 3> red) {
  FieldTables f{};
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  f.q = q;
  auto digits = [&](int v, int* out) {
    for (int i = 0; i < e; ++i) {
      out[i] = v % p;
      v /= p;
    }
  };
  auto recode = [&](const int* in) {
    int v = 0, base = 1;
    for (int i = 0; i < e; ++i) {
      v += in[i] * base;
      base *= p;
    }
    return v;
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int da[3] = {0, 0, 0}, db[3] = {0, 0, 0};
      digits(a, da);
      digits(b, db);
      int sum[3] = {0, 0, 0};
      for (int i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add[a][b] = recode(sum);
      // schoolbook polynomial product, then reduce x^e (and x^{e+1}) via red
      int prod[5] = {0, 0, 0, 0, 0};
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int k = 2 * e - 2; k >= e; --k) {
        int c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (int i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + c * red[i]) % p;
      }
      f.mul[a][b] = recode(prod);
    }
  return f;
}

FieldTables field_for(int q) {
  switch (q) {
    case 2: return make_prime_field(2);
    case 3: return make_prime_field(3);
    case 5: return make_prime_field(5);
    case 7: return make_prime_field(7);
    case 4: return make_extension_field(2, 2, {1, 1, 0}); // x^2 = x + 1
    case 8: return make_extension_field(2, 3, {1, 1, 0}); // x^3 = x + 1
    case 9: return make_extension_field(3, 2, {2, 0, 0}); // x^2 = -1 = 2
    default:
      throw std::invalid_argument("pg_incidence: unsupported order " + std::to_string(q));
  }
}

} // namespace

Graph pg_incidence(int q) {
  FieldTables f = field_for(q);
  // canonical projective points: first nonzero coordinate equals 1
  std::vector<std::array<int, 3>> points;
  points.push_back({1, 0, 0});
  for (int a = 0; a < q; ++a) points.push_back({a, 1, 0});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) points.push_back({a, b, 1});
  const int np = static_cast<int>(points.size()); // q^2 + q + 1

  std::vector<std::pair<int, int>> edges;
  for (int pi = 0; pi < np; ++pi) {
    for (int li = 0; li < np; ++li) { // lines use the same representatives
      const auto& p = points[pi];
      const auto& l = points[li];
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = f.add[dot][f.mul[p[c]][l[c]]];
      if (dot == 0) edges.emplace_back(pi, np + li);
    }
  }
  Graph g = Graph::from_edges(2 * np, edges);

  // structural post-checks: bipartite, (q+1)-regular, girth 6
  if (!bipartition(g)) throw std::logic_error("pg_incidence: not bipartite");
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != q + 1) throw std::logic_error("pg_incidence: not (q+1)-regular");
  auto cyc = shortest_cycle(g);
  if (!cyc || cyc->size() != 6) throw std::logic_error("pg_incidence: girth is not 6");
  return g;
}

Graph kst_free_deletion(int n, double p, std::uint64_t seed, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("kst_free_deletion: need 1 <= s <= t");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);

  double combos = 1;
  for (int i = 0; i < s; ++i) combos = combos * (n - i) / (i + 1);
  const bool exhaustive = combos <= 2e5;
  const int budget = 50 * n;
  for (int round = 0; round < budget; ++round) {
    Graph g = Graph::from_edges(n, edges);
    KstResult res = exhaustive ? kst_free(g, s, t)
                               : kst_free_sampled(g, s, t, rng(), 512);
    if (res.verdict != KstVerdict::witness_found) break;
    // drop one witness edge: the lexicographically first S-T pair
    int u = res.witness->s_side.ids().front();
    int v = res.witness->t_side.ids().front();
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    edges.erase(std::remove(edges.begin(), edges.end(), key), edges.end());
  }
  return Graph::from_edges(n, edges);
}

Graph from_descriptor(const std::string& descriptor, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(descriptor);
  std::string piece;
  while (std::getline(ss, piece, ':')) parts.push_back(piece);
  if (parts.empty()) throw std::invalid_argument("empty generator descriptor");
  const std::string& kind = parts[0];
  auto arg = [&](size_t i) -> std::string {
    if (i >= parts.size())
      throw std::invalid_argument("generator '" + kind + "': missing argument " +
                                  std::to_string(i));
    return parts[i];
  };
  auto argi = [&](size_t i) { return std::stoi(arg(i)); };
  auto argd = [&](size_t i) { return std::stod(arg(i)); };

  if (kind == "complete") return make_complete(argi(1));
  if (kind == "cycle") return make_cycle(argi(1));
  if (kind == "path") return make_path(argi(1));
  if (kind == "hypercube") return make_hypercube(argi(1));
  if (kind == "complete-bipartite") return make_complete_bipartite(argi(1), argi(2));
  if (kind == "random-gnp") return random_gnp(argi(1), argd(2), seed);
  if (kind == "random-bipartite") return random_bipartite(argi(1), argi(2), argd(3), seed);
  if (kind == "pg-incidence") return pg_incidence(argi(1));
  if (kind == "kst-free-deletion")
    return kst_free_deletion(argi(1), argd(2), seed, argi(3), argi(4));
  throw std::invalid_argument("unknown generator kind '" + kind + "'");
}

} // namespace exg
