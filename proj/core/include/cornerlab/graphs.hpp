#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cornerlab/corner.hpp"
#include "cornerlab/optcore.hpp"

namespace cornerlab {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int n = 0);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph petersen();

  int n() const noexcept { return n_; }
  bool adjacent(int i, int j) const { return adj_[index(i, j)] != 0; }
  void add_edge(int i, int j);
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  std::size_t index(int i, int j) const;
  int n_;
  std::vector<char> adj_;
};

enum class GraphOp { Complement, Strong, Disjunctive };

// Products pair (i, k) with vertex i * h.n() + k. MissingOperand without h.
Graph graph_combinator(const Graph& g, const std::optional<Graph>& h, GraphOp op);
Graph complement(const Graph& g);
Graph strong_product(const Graph& g, const Graph& h);
Graph disjunctive_product(const Graph& g, const Graph& h);
Graph strong_power(const Graph& g, int k);

// Enumeration limits: maximal sets up to 32 vertices, all sets up to 24.
inline constexpr int kMaxGraphVertices = 32;
inline constexpr int kMaxAllSetsVertices = 24;

using VertexSet = std::vector<int>;

// Sorted vertex lists in lexicographic order. TooLarge beyond the limits.
std::vector<VertexSet> independent_sets(const Graph& g, bool maximal_only);
std::vector<VertexSet> maximal_cliques(const Graph& g);

int alpha(const Graph& g);
int omega(const Graph& g);
int chi_exact(const Graph& g);
// Clique cover number, chi of the complement.
int clique_cover_number(const Graph& g);

struct Rational {
  long long num = 0;
  long long den = 1;
};
// Best p/q with q <= max_den within tol * max(1, |x|), if any.
std::optional<Rational> snap_rational(double x, long long max_den = 10000, double tol = 1e-9);

struct ChiFResult {
  double value = 0.0;  // snapped to a nearby small-denominator rational
  std::optional<Rational> exact;
  std::vector<VertexSet> sets;
  std::vector<double> set_weights;
  std::vector<double> vertex_weights;  // dual: optimal fractional clique weights
};

ChiFResult chi_f_lp(const Graph& g);

// Independent-set indicators (VGen) and maximal-clique rows (HPoly).
DiagonalCorner vp_corner(const Graph& g);
DiagonalCorner fvp_polytope(const Graph& g);

// min over vp(G) of -sum p_i log v_i.
double korner_entropy(const Graph& g, const std::vector<double>& p, const SolverConfig& cfg);

struct RateSequences {
  // Strong powers: alpha(G^k)^(1/k) and chi(G^k)^(1/k).
  std::vector<double> alpha_seq;
  std::vector<double> chi_seq;
  std::vector<int> alpha_exact;
  std::vector<int> chi_exact;
  // Disjunctive powers: chi(G^{*k})^(1/k), which tends to chi_f(G).
  std::vector<double> chi_disj_seq;
  std::vector<int> chi_disj_exact;
  double omega_floor = 0.0;   // omega(G) <= chi(G^k)^(1/k)
  double chi_f_floor = 0.0;   // chi_f(G) <= chi(G^{*k})^(1/k)
  bool truncated = false;     // a power exceeded the vertex limit
  std::string note;
};

// k = 1..n_max (n_max <= 3); stops early, flagged, when a power is too large.
RateSequences rate_sequences(const Graph& g, int n_max);

// ".col"-style text: "c" comments, optional "p edge n m", "e i j" 1-indexed.
Graph parse_dimacs(const std::string& text);

}  // namespace cornerlab
