#include "cornerlab/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <sstream>

#include "cornerlab/errors.hpp"

namespace cornerlab {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

void require_small(const Graph& g, int limit, const char* what) {
  if (g.n() > limit) {
    fail(ErrorCode::TooLarge, std::string(what) + ": graph has " + std::to_string(g.n()) +
                                  " vertices, limit is " + std::to_string(limit));
  }
}

// Neighbourhoods in the complement: Bron–Kerbosch there lists maximal
// independent sets.
std::vector<Mask> non_neighbours(const Graph& g) {
  const int n = g.n();
  std::vector<Mask> nb(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !g.adjacent(i, j)) nb[i] |= bit(j);
  return nb;
}

void bron_kerbosch(const std::vector<Mask>& nb, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P u X with the most neighbours in P.
  int pivot = -1;
  int best = -1;
  for (Mask px = p | x; px != 0; px &= px - 1) {
    const int u = std::countr_zero(px);
    const int c = std::popcount(p & nb[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask cand = p & ~nb[pivot]; cand != 0; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    bron_kerbosch(nb, r | bit(v), p & nb[v], x & nb[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

std::vector<Mask> maximal_independent_masks(const Graph& g) {
  require_small(g, kMaxGraphVertices, "maximal independent sets");
  std::vector<Mask> out;
  if (g.n() == 0) return out;
  bron_kerbosch(non_neighbours(g), 0, full_mask(g.n()), 0, out);
  return out;
}

VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m != 0; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

std::vector<VertexSet> sorted_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> sets;
  sets.reserve(masks.size());
  for (Mask m : masks) sets.push_back(to_set(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::vector<double> indicator(const VertexSet& s, int n) {
  std::vector<double> v(n, 0.0);
  for (int i : s) v[i] = 1.0;
  return v;
}

// DSatur greedy colouring: an upper bound for chi.
int dsatur(const Graph& g) {
  const int n = g.n();
  std::vector<int> colour(n, -1);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      Mask seen = 0;
      int deg = 0;
      for (int u = 0; u < n; ++u) {
        if (u == v || !g.adjacent(u, v)) continue;
        if (colour[u] >= 0) seen |= bit(colour[u]);
        else ++deg;
      }
      const int sat = std::popcount(seen);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = 0;
    for (;; ++c) {
      bool clash = false;
      for (int u = 0; u < n && !clash; ++u) clash = u != pick && g.adjacent(u, pick) && colour[u] == c;
      if (!clash) break;
    }
    colour[pick] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), 0) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "graph size must be nonnegative");
}

std::size_t Graph::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) fail(ErrorCode::InvalidArgument, "vertex out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

void Graph::add_edge(int i, int j) {
  if (i == j) fail(ErrorCode::InvalidArgument, "self-loops are not allowed");
  adj_[index(i, j)] = 1;
  adj_[index(j, i)] = 1;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) e.emplace_back(i, j);
  return e;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.adjacent(i, j)) c.add_edge(i, j);
  return c;
}

namespace {

Graph product(const Graph& g, const Graph& h, bool strong) {
  const int n1 = g.n();
  const int n2 = h.n();
  Graph p(n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n2; ++k)
      for (int j = 0; j < n1; ++j)
        for (int l = 0; l < n2; ++l) {
          const int a = i * n2 + k;
          const int b = j * n2 + l;
          if (a >= b) continue;
          const bool gi = i == j || g.adjacent(i, j);
          const bool hk = k == l || h.adjacent(k, l);
          const bool edge = strong ? (gi && hk) : ((i != j && g.adjacent(i, j)) || (k != l && h.adjacent(k, l)));
          if (edge) p.add_edge(a, b);
        }
  return p;
}

}  // namespace

Graph strong_product(const Graph& g, const Graph& h) { return product(g, h, true); }
Graph disjunctive_product(const Graph& g, const Graph& h) { return product(g, h, false); }

Graph strong_power(const Graph& g, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "strong_power needs k >= 1");
  Graph p = g;
  for (int i = 1; i < k; ++i) p = strong_product(p, g);
  return p;
}

Graph graph_combinator(const Graph& g, const std::optional<Graph>& h, GraphOp op) {
  if (op == GraphOp::Complement) return complement(g);
  if (!h) fail(ErrorCode::MissingOperand, "graph product needs a second graph");
  return op == GraphOp::Strong ? strong_product(g, *h) : disjunctive_product(g, *h);
}

std::vector<VertexSet> independent_sets(const Graph& g, bool maximal_only) {
  if (maximal_only) return sorted_sets(maximal_independent_masks(g));
  require_small(g, kMaxAllSetsVertices, "independent sets");
  const auto nb = non_neighbours(g);
  std::vector<Mask> out;
  // Extend sets in increasing vertex order so each appears once.
  std::function<void(Mask, int)> grow = [&](Mask s, int next) {
    out.push_back(s);
    for (int v = next; v < g.n(); ++v) {
      if ((s & ~nb[v]) == 0) grow(s | bit(v), v + 1);
    }
  };
  grow(0, 0);
  return sorted_sets(out);
}

std::vector<VertexSet> maximal_cliques(const Graph& g) { return independent_sets(complement(g), true); }

int alpha(const Graph& g) {
  int best = 0;
  for (Mask m : maximal_independent_masks(g)) best = std::max(best, std::popcount(m));
  return best;
}

int omega(const Graph& g) { return alpha(complement(g)); }

int chi_exact(const Graph& g) {
  if (g.n() == 0) return 0;
  const auto sets = maximal_independent_masks(g);
  const int n = g.n();
  int best = dsatur(g);
  int lower = std::max(omega(g), (n + alpha(g) - 1) / alpha(g));
  if (lower >= best) return best;

  // Set cover by maximal independent sets: branch on the uncovered vertex with
  // the fewest distinct options.
  std::function<void(Mask, int)> search = [&](Mask uncovered, int depth) {
    if (uncovered == 0) {
      best = std::min(best, depth);
      return;
    }
    int largest = 0;
    for (Mask s : sets) largest = std::max(largest, std::popcount(s & uncovered));
    const int need = (std::popcount(uncovered) + largest - 1) / largest;
    if (depth + need >= best) return;
    int pick = -1;
    std::vector<Mask> options;
    for (Mask rest = uncovered; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      std::vector<Mask> opts;
      for (Mask s : sets)
        if (s & bit(v)) opts.push_back(s & uncovered);
      std::sort(opts.begin(), opts.end());
      opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
      if (pick < 0 || opts.size() < options.size()) {
        pick = v;
        options = std::move(opts);
      }
    }
    std::sort(options.begin(), options.end(),
              [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
    for (Mask s : options) {
      search(uncovered & ~s, depth + 1);
      if (best <= lower) return;
    }
  };
  search(full_mask(n), 0);
  return best;
}

int clique_cover_number(const Graph& g) { return chi_exact(complement(g)); }

std::optional<Rational> snap_rational(double x, long long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long long ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0;
    const long long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    if (std::abs(x - static_cast<double>(p2) / static_cast<double>(q2)) <= tol * std::max(1.0, std::abs(x))) {
      return Rational{p2, q2};
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (frac <= 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

ChiFResult chi_f_lp(const Graph& g) {
  require_small(g, kMaxGraphVertices, "chi_f_lp");
  ChiFResult res;
  const int n = g.n();
  if (n == 0) return res;
  res.sets = independent_sets(g, true);
  const int m = static_cast<int>(res.sets.size());
  std::vector<LinearConstraint> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i].coeffs.assign(m, 0.0);
    rows[i].rel = Relation::GreaterEq;
    rows[i].rhs = 1.0;
  }
  for (int k = 0; k < m; ++k)
    for (int i : res.sets[k]) rows[i].coeffs[k] = 1.0;
  const auto lp = lp_solve(std::vector<double>(m, 1.0), rows, Sense::Minimize);
  if (lp.status != Status::Converged) fail(ErrorCode::AssertionFailed, "chi_f LP did not converge");
  res.set_weights = lp.x;
  res.vertex_weights = lp.duals;
  res.exact = snap_rational(lp.value);
  res.value = res.exact ? static_cast<double>(res.exact->num) / static_cast<double>(res.exact->den) : lp.value;
  return res;
}

DiagonalCorner vp_corner(const Graph& g) {
  std::vector<std::vector<double>> v;
  for (const auto& s : independent_sets(g, true)) v.push_back(indicator(s, g.n()));
  return DiagonalCorner::vgen(g.n(), std::move(v));
}

DiagonalCorner fvp_polytope(const Graph& g) {
  std::vector<std::vector<double>> rows;
  for (const auto& c : maximal_cliques(g)) rows.push_back(indicator(c, g.n()));
  return DiagonalCorner::hpoly(g.n(), std::move(rows));
}

double korner_entropy(const Graph& g, const std::vector<double>& p, const SolverConfig& cfg) {
  if (static_cast<int>(p.size()) != g.n()) fail(ErrorCode::DimensionMismatch, "distribution length differs from n");
  const auto vp = vp_corner(g);
  return entropy_min_simplex_diag(vp.data(), p, cfg).value.value();
}

RateSequences rate_sequences(const Graph& g, int n_max) {
  if (n_max < 1 || n_max > 3) fail(ErrorCode::InvalidArgument, "rate_sequences needs 1 <= n_max <= 3");
  RateSequences out;
  out.chi_f_floor = chi_f_lp(g).value;
  out.omega_floor = omega(g);
  Graph strong = g;
  Graph disj = g;
  for (int k = 1; k <= n_max; ++k) {
    if (k > 1) {
      if (strong.n() * g.n() > kMaxGraphVertices) {
        out.truncated = true;
        out.note = "G^" + std::to_string(k) + " has " + std::to_string(strong.n() * g.n()) +
                   " vertices, beyond the exact limit of " + std::to_string(kMaxGraphVertices);
        break;
      }
      strong = strong_product(strong, g);
      disj = disjunctive_product(disj, g);
    }
    const double root = 1.0 / k;
    out.alpha_exact.push_back(alpha(strong));
    out.chi_exact.push_back(chi_exact(strong));
    out.chi_disj_exact.push_back(chi_exact(disj));
    out.alpha_seq.push_back(std::pow(static_cast<double>(out.alpha_exact.back()), root));
    out.chi_seq.push_back(std::pow(static_cast<double>(out.chi_exact.back()), root));
    out.chi_disj_seq.push_back(std::pow(static_cast<double>(out.chi_disj_exact.back()), root));
    if (out.chi_seq.back() < out.omega_floor - 1e-9) {
      fail(ErrorCode::AssertionFailed, "chi(G^k)^(1/k) fell below omega(G)");
    }
    if (out.chi_disj_seq.back() < out.chi_f_floor - 1e-9) {
      fail(ErrorCode::AssertionFailed, "chi(G^{*k})^(1/k) fell below chi_f(G)");
    }
  }
  return out;
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int declared = -1;
  int max_vertex = 0;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      int n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || n < 0) {
        fail(ErrorCode::ParseError, "bad problem line at line " + std::to_string(line_no));
      }
      declared = n;
    } else if (tag == "e") {
      int i = 0, j = 0;
      if (!(ls >> i >> j) || i < 1 || j < 1) {
        fail(ErrorCode::ParseError, "bad edge line at line " + std::to_string(line_no));
      }
      max_vertex = std::max({max_vertex, i, j});
      if (i != j) edges.emplace_back(i - 1, j - 1);
    } else {
      fail(ErrorCode::ParseError, "unknown line tag '" + tag + "' at line " + std::to_string(line_no));
    }
  }
  if (declared >= 0 && max_vertex > declared) fail(ErrorCode::ParseError, "edge endpoint exceeds declared vertex count");
  return Graph::from_edges(declared >= 0 ? declared : max_vertex, edges);
}

}  // namespace cornerlab
