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

#include "subdiff/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "subdiff/error.hpp"

namespace subdiff {
namespace {

using Coloring = std::vector<int>;

int CountColors(const Coloring& c) {
  if (c.empty()) return 0;
  return *std::max_element(c.begin(), c.end()) + 1;
}

// One round of colour refinement applied jointly to several graphs so colour
// ids are comparable across them. New ids are assigned in sorted signature
// order, which makes the result independent of node labels.
void RefineJoint(std::span<const Graph* const> graphs,
                 std::span<Coloring> colors) {
  using Signature = std::vector<int>;
  int classes = 0;
  for (const auto& c : colors) classes = std::max(classes, CountColors(c));
  for (;;) {
    std::vector<std::vector<Signature>> sigs(graphs.size());
    std::map<Signature, int> ids;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      sigs[gi].resize(static_cast<std::size_t>(g.num_nodes()));
      for (int u = 0; u < g.num_nodes(); ++u) {
        Signature s;
        s.push_back(colors[gi][u]);
        std::vector<int> nb;
        for (NodeMask m = g.neighbors(u); m != 0; m &= m - 1) {
          nb.push_back(colors[gi][std::countr_zero(m)]);
        }
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        ids.emplace(s, 0);
        sigs[gi][u] = std::move(s);
      }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      for (std::size_t u = 0; u < sigs[gi].size(); ++u) {
        colors[gi][u] = ids.at(sigs[gi][u]);
      }
    }
    if (next == classes) return;
    classes = next;
  }
}

void Refine(const Graph& g, Coloring& colors) {
  const Graph* gs[] = {&g};
  RefineJoint(gs, std::span<Coloring>(&colors, 1));
}

// Backtracking search for colour-respecting bijections from `a` to `b`.
// Stops at the first bijection unless `count_all`.
class BijectionSearch {
 public:
  BijectionSearch(const Graph& a, const Graph& b, const Coloring& ca,
                  const Coloring& cb)
      : a_(a), b_(b), ca_(ca), cb_(cb), n_(a.num_nodes()) {
    image_.assign(static_cast<std::size_t>(n_), -1);
    BuildOrder();
  }

  std::uint64_t Run(bool count_all) {
    count_all_ = count_all;
    found_ = 0;
    Extend(0, 0);
    return found_;
  }

 private:
  void BuildOrder() {
    std::vector<int> class_size(static_cast<std::size_t>(CountColors(ca_)));
    for (int c : ca_) ++class_size[c];
    NodeMask placed = 0;
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      int best_links = -1;
      for (int u = 0; u < n_; ++u) {
        if ((placed >> u) & 1u) continue;
        const int links = std::popcount(a_.neighbors(u) & placed);
        if (best < 0 || links > best_links ||
            (links == best_links &&
             class_size[ca_[u]] < class_size[ca_[best]])) {
          best = u;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed |= NodeMask{1} << best;
    }
  }

  bool Extend(int depth, NodeMask used) {
    if (depth == n_) {
      ++found_;
      return !count_all_;
    }
    const int u = order_[depth];
    // Images of u's already-placed neighbours.
    NodeMask placed_nb_image = 0;
    NodeMask placed_image = 0;
    for (int d = 0; d < depth; ++d) {
      const int w = order_[d];
      placed_image |= NodeMask{1} << image_[w];
      if (a_.has_edge(u, w)) placed_nb_image |= NodeMask{1} << image_[w];
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      if (cb_[v] != ca_[u]) continue;
      if ((b_.neighbors(v) & placed_image) != placed_nb_image) continue;
      image_[u] = v;
      if (Extend(depth + 1, used | (NodeMask{1} << v))) return true;
    }
    image_[u] = -1;
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  const Coloring& ca_;
  const Coloring& cb_;
  int n_;
  std::vector<int> order_;
  std::vector<int> image_;
  bool count_all_ = false;
  std::uint64_t found_ = 0;
};

Coloring DegreeColoring(const Graph& g) {
  // Degrees are label-independent, so they are usable directly as colours.
  Coloring c(static_cast<std::size_t>(g.num_nodes()));
  for (int u = 0; u < g.num_nodes(); ++u) c[u] = g.degree(u);
  return c;
}

// --- canonical labeling -----------------------------------------------------

using Certificate = std::vector<NodeMask>;

Certificate LeafCertificate(const Graph& g, const Coloring& discrete) {
  const int n = g.num_nodes();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) at[discrete[u]] = u;
  Certificate rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.has_edge(at[i], at[j])) rows[i] |= NodeMask{1} << (n - 1 - j);
    }
  }
  return rows;
}

bool AreTwins(const Graph& g, int u, int w) {
  const NodeMask mu = g.neighbors(u) & ~(NodeMask{1} << w);
  const NodeMask mw = g.neighbors(w) & ~(NodeMask{1} << u);
  return mu == mw;
}

void SearchCanonical(const Graph& g, Coloring colors,
                     std::optional<Certificate>& best) {
  Refine(g, colors);
  const int n = g.num_nodes();
  const int classes = CountColors(colors);
  if (classes == n) {
    Certificate cert = LeafCertificate(g, colors);
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  // First non-singleton cell in colour order.
  std::vector<int> size(static_cast<std::size_t>(classes), 0);
  for (int c : colors) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;
  std::vector<int> cell;
  for (int u = 0; u < n; ++u) {
    if (colors[u] == target) cell.push_back(u);
  }
  std::vector<int> tried;
  for (int v : cell) {
    bool redundant = false;
    for (int w : tried) {
      if (AreTwins(g, v, w)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    tried.push_back(v);
    Coloring child(colors.size());
    for (int u = 0; u < n; ++u) child[u] = 2 * colors[u] + 1;
    child[v] = 2 * colors[v];
    SearchCanonical(g, std::move(child), best);
  }
}

}  // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges()) {
    return false;
  }
  if (g1.degree_sequence() != g2.degree_sequence()) return false;
  std::vector<Coloring> colors = {Coloring(g1.num_nodes(), 0),
                                  Coloring(g2.num_nodes(), 0)};
  const Graph* gs[] = {&g1, &g2};
  RefineJoint(gs, colors);
  Coloring s1 = colors[0];
  Coloring s2 = colors[1];
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;
  BijectionSearch search(g1, g2, colors[0], colors[1]);
  return search.Run(/*count_all=*/false) > 0;
}

std::uint64_t automorphism_count(const Graph& g) {
  if (g.num_nodes() > kMaxAutomorphismNodes) {
    throw CapacityError("automorphism_count supports at most " +
                        std::to_string(kMaxAutomorphismNodes) + " nodes, got " +
                        std::to_string(g.num_nodes()));
  }
  const Coloring deg = DegreeColoring(g);
  BijectionSearch search(g, g, deg, deg);
  return search.Run(/*count_all=*/true);
}

std::string canonical_form(const Graph& g) {
  const int n = g.num_nodes();
  std::optional<Certificate> best;
  if (n > 0) SearchCanonical(g, Coloring(static_cast<std::size_t>(n), 0), best);
  std::string out;
  out.push_back(static_cast<char>(n));
  unsigned char byte = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool bit = ((*best)[i] >> (n - 1 - j)) & 1u;
      byte = static_cast<unsigned char>((byte << 1) | (bit ? 1 : 0));
      if (++bits == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(byte << (8 - bits)));
  return out;
}

std::string canonical_hex(const Graph& g) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : canonical_form(g)) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

}  // namespace subdiff
