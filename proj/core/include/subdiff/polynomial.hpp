// Copyright 2026 The subdiff Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBDIFF_POLYNOMIAL_HPP_
#define SUBDIFF_POLYNOMIAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subdiff/count.hpp"
#include "subdiff/graph.hpp"
#include "subdiff/sym_matrix.hpp"

namespace subdiff {

// Pattern size bound for polynomial evaluation (cost grows as n^k).
inline constexpr int kMaxBasisPatternNodes = 6;

// Edge monomial over k pattern nodes: prod over factors of W[u][v]^power.
// Unlike Pattern, a factor may repeat an edge (power > 1), which matters when
// W is real-valued.
struct Monomial {
  struct Factor {
    int u;
    int v;
    int power;
  };
  int num_nodes = 0;
  std::vector<Factor> factors;
  std::optional<Edge> marks;

  static Monomial FromPattern(const Pattern& p);
};

// n! * Q_S(W): sum over injective assignments of the k pattern nodes to
// [n] of the monomial. Evaluated in parallel over the first node's image and
// reduced with pairwise_sum, so the result is reproducible.
double injective_sum(const SymMatrix& w, const Monomial& m);

// Same sum on a binary adjacency in exact integer arithmetic. Powers are
// irrelevant on {0,1} entries.
Count injective_sum_exact(const Graph& a, const Monomial& m);

// Q_S(W) = injective_sum / n!. Returns 0 when k > n.
// Throws CapacityError when the pattern exceeds kMaxBasisPatternNodes.
double invariant_basis(const SymMatrix& w, const Pattern& p);
double invariant_basis(const SymMatrix& w, const Monomial& m);

// Entry (i, j) is (1/n!) * sum over injective assignments with the marked
// nodes pinned, c -> i and d -> j. The diagonal is zero. The result is only
// symmetric when some automorphism swaps the marks, hence SquareMatrix.
// Throws ContractError when the pattern has no marks.
SquareMatrix equivariant_basis(const SymMatrix& w, const Pattern& p);
SquareMatrix equivariant_basis(const SymMatrix& w, const Monomial& m);

// Pinned sums without the 1/n! factor.
SquareMatrix equivariant_sum(const SymMatrix& w, const Monomial& m);

// Index tuple a = (a_1, ..., a_2k) with optional roots (i, j); 0-based.
struct IndexTuple {
  std::vector<int> a;
  std::optional<Edge> roots;
};

enum class RootEdge { kInclude, kOmit };

// Graph built from an index tuple. Nodes are the distinct labels of the
// roots and of `a`, renumbered in ascending label order.
struct MonomialGraph {
  // Simple graph: parallel edges collapsed, self-loop factors dropped. Marks
  // hold the renumbered roots when they are distinct.
  Pattern pattern;
  // Same numbering with multiplicities kept.
  Monomial monomial;
  // labels[x] is the original index of pattern node x.
  std::vector<int> labels;
  // Set when a factor sits on the diagonal (a_{2l-1} == a_{2l}, or i == j
  // with the root edge included). Such a monomial is identically zero on
  // zero-diagonal matrices.
  bool vanishing = false;
  // Set when i == j; the marks are then omitted from `pattern`/`monomial`.
  bool coincident_roots = false;
};

// kInclude builds S_a (no roots) or S_{ij a} (roots plus the edge (i, j));
// kOmit builds T_{ij a}: the same node set and marks without the root edge.
// Throws ContractError if `a` has odd length.
MonomialGraph monomial_graph(const IndexTuple& t,
                             RootEdge root_edge = RootEdge::kInclude);

// For each pattern and each ordered adjacent pair (u, v), the pattern with
// edge {u, v} removed and (u, v) marked. Results are deduplicated up to
// mark-preserving isomorphism and keep first-seen order.
std::vector<Pattern> derive_marked_patterns(std::span<const Pattern> patterns);

// True iff there is an isomorphism mapping a's marks onto b's marks in order.
bool are_marked_isomorphic(const Pattern& a, const Pattern& b);

}  // namespace subdiff

#endif  // SUBDIFF_POLYNOMIAL_HPP_
