#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxdet/matrix.hpp"

namespace maxdet {

/// Entry counts of a mu_3 vector given by exponents.
struct BalanceStats {
  int v1 = 0, v_w = 0, v_w2 = 0;
  bool balanced() const { return (v_w - v_w2) % 3 == 0; }
};

BalanceStats balance_vector_stats(const std::vector<int>& exps);
/// Every row and column balanced; ell must be 3.
bool is_balanced(const LogMatrix& m);

struct Balanced {
  LogMatrix matrix;
  std::vector<int> d1, d2;  // exponents of Delta_1, Delta_2
};

/// The unique Delta_1 M Delta_2 that is balanced (n = 1, 2 mod 3).
Balanced balance_matrix(const LogMatrix& m);

/// Literal reading of the standard-form definition (experimental).
bool standard_form_check(const GramMatrix& g);

/// Vertex-colored simple graph; colors are small integers, ordered.
struct ColoredGraph {
  int n = 0;
  std::vector<int> color;
  std::vector<std::pair<int, int>> edges;
};

/// P(G): rows, columns, one vertex per alphabet value, k^2 cell vertices.
/// Vertex order: r_1..r_k, c_1..c_k, g_1..g_f, (0,0), (0,1), ...
/// Colors: rows 0, columns 1, cells 2, value g_r gets 3 + r.
ColoredGraph gram_to_graph(const GramMatrix& g, const std::vector<CycInt>& alphabet);
/// gram_to_graph from precomputed value indices, row-major k x k;
/// -1 marks a diagonal entry with no value vertex.
ColoredGraph index_graph(int k, int f, const std::vector<int>& idx);
/// Same encoding for a LogMatrix, alphabet = exponents 0..ell-1.
ColoredGraph matrix_to_graph(const LogMatrix& m);

/// Canonical byte string; equal iff the graphs are color-isomorphic.
struct Certificate {
  std::string bytes;
  bool operator==(const Certificate&) const = default;
  auto operator<=>(const Certificate&) const = default;
  std::string hex() const;
};

Certificate canonical_certificate(const ColoredGraph& g);
/// Canonical labeling: lab[i] = vertex placed at position i.
std::vector<int> canonical_labeling(const ColoredGraph& g);

/// X1 = P X2 Q for permutation matrices P, Q; both inputs balanced.
bool permutation_equivalent(const LogMatrix& x1, const LogMatrix& x2);

}  // namespace maxdet
