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

#include "subdiff/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "subdiff/error.hpp"
#include "subdiff/parallel.hpp"

namespace subdiff {
namespace {

void CheckBasisSize(int k) {
  if (k > kMaxBasisPatternNodes) {
    throw CapacityError("polynomial basis evaluation supports at most " +
                        std::to_string(kMaxBasisPatternNodes) +
                        " pattern nodes, got " + std::to_string(k));
  }
}

double InverseFactorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f /= static_cast<double>(i);
  return f;
}

// Visit order over monomial nodes plus, for each slot, the factors that
// close on an earlier slot. Marked nodes (when pinned) come first.
struct Plan {
  struct Link {
    int earlier_slot;
    int power;
  };
  std::vector<int> order;
  std::vector<std::vector<Link>> links;  // per slot
  bool has_self_factor = false;
};

Plan MakePlan(const Monomial& m, bool pin_marks) {
  const int k = m.num_nodes;
  Plan plan;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (const auto& f : m.factors) {
    if (f.u == f.v) {
      plan.has_self_factor = true;
      continue;
    }
    adj[f.u].push_back(f.v);
    adj[f.v].push_back(f.u);
  }
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  auto place = [&](int u) {
    plan.order.push_back(u);
    placed[u] = true;
  };
  if (pin_marks) {
    place(m.marks->first);
    place(m.marks->second);
  }
  while (static_cast<int>(plan.order.size()) < k) {
    int best = -1;
    int best_links = -1;
    for (int u = 0; u < k; ++u) {
      if (placed[u]) continue;
      int links = 0;
      for (int w : adj[u]) links += placed[w] ? 1 : 0;
      if (links > best_links) {
        best = u;
        best_links = links;
      }
    }
    place(best);
  }
  std::vector<int> slot_of(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) slot_of[plan.order[s]] = s;
  plan.links.resize(static_cast<std::size_t>(k));
  for (const auto& f : m.factors) {
    if (f.u == f.v) continue;
    const int su = slot_of[f.u];
    const int sv = slot_of[f.v];
    plan.links[std::max(su, sv)].push_back({std::min(su, sv), f.power});
  }
  return plan;
}

template <typename Value, typename EntryFn>
class Enumerator {
 public:
  Enumerator(int n, const Plan& plan, EntryFn entry)
      : n_(n), plan_(plan), entry_(entry),
        image_(plan.order.size(), -1) {}

  // Sum over completions given images for the first fixed.size() slots.
  Value Sum(std::span<const int> fixed) {
    if (plan_.has_self_factor) return Value{0};
    std::uint64_t used = 0;
    Value product{1};
    for (std::size_t s = 0; s < fixed.size(); ++s) {
      const int x = fixed[s];
      if ((used >> x) & 1u) return Value{0};
      image_[s] = x;
      used |= std::uint64_t{1} << x;
      product *= SlotFactor(static_cast<int>(s));
      if (product == Value{0}) return Value{0};
    }
    return Extend(static_cast<int>(fixed.size()), used, product);
  }

 private:
  Value SlotFactor(int slot) {
    Value f{1};
    const int x = image_[slot];
    for (const auto& link : plan_.links[slot]) {
      const Value e = entry_(x, image_[link.earlier_slot]);
      for (int p = 0; p < link.power; ++p) f *= e;
    }
    return f;
  }

  Value Extend(int slot, std::uint64_t used, Value product) {
    if (slot == static_cast<int>(plan_.order.size())) return product;
    Value total{0};
    for (int x = 0; x < n_; ++x) {
      if ((used >> x) & 1u) continue;
      image_[slot] = x;
      const Value next = product * SlotFactor(slot);
      if (next == Value{0}) continue;
      total += Extend(slot + 1, used | (std::uint64_t{1} << x), next);
    }
    return total;
  }

  int n_;
  const Plan& plan_;
  EntryFn entry_;
  std::vector<int> image_;
};

template <typename Value, typename EntryFn>
Enumerator<Value, EntryFn> MakeEnumerator(int n, const Plan& plan,
                                          EntryFn entry) {
  return Enumerator<Value, EntryFn>(n, plan, entry);
}

void CheckMonomial(const Monomial& m) {
  for (const auto& f : m.factors) {
    if (f.u < 0 || f.v < 0 || f.u >= m.num_nodes || f.v >= m.num_nodes ||
        f.power < 1) {
      throw ContractError("monomial factor out of range");
    }
  }
}

}  // namespace

Monomial Monomial::FromPattern(const Pattern& p) {
  Monomial m;
  m.num_nodes = p.num_nodes();
  for (const auto& [u, v] : p.graph.edges()) m.factors.push_back({u, v, 1});
  m.marks = p.marks;
  return m;
}

double injective_sum(const SymMatrix& w, const Monomial& m) {
  CheckMonomial(m);
  CheckBasisSize(m.num_nodes);
  const int n = w.dim();
  if (m.num_nodes > n) return 0.0;
  if (m.num_nodes == 0) return 1.0;
  const Plan plan = MakePlan(m, /*pin_marks=*/false);
  auto entry = [&w](int x, int y) { return w(x, y); };
  std::vector<double> partial(static_cast<std::size_t>(n), 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t x) {
    auto e = MakeEnumerator<double>(n, plan, entry);
    const int fixed[] = {static_cast<int>(x)};
    partial[x] = e.Sum(fixed);
  });
  return pairwise_sum(partial);
}

Count injective_sum_exact(const Graph& a, const Monomial& m) {
  CheckMonomial(m);
  const int n = a.num_nodes();
  if (m.num_nodes > n) return 0;
  if (m.num_nodes == 0) return 1;
  const Plan plan = MakePlan(m, /*pin_marks=*/false);
  auto entry = [&a](int x, int y) -> Count { return a.has_edge(x, y) ? 1 : 0; };
  auto e = MakeEnumerator<Count>(n, plan, entry);
  return e.Sum({});
}

double invariant_basis(const SymMatrix& w, const Monomial& m) {
  return injective_sum(w, m) * InverseFactorial(w.dim());
}

double invariant_basis(const SymMatrix& w, const Pattern& p) {
  return invariant_basis(w, Monomial::FromPattern(p));
}

SquareMatrix equivariant_sum(const SymMatrix& w, const Monomial& m) {
  if (!m.marks) {
    throw ContractError("equivariant basis requires a marked pattern");
  }
  CheckMonomial(m);
  CheckBasisSize(m.num_nodes);
  const int n = w.dim();
  SquareMatrix out(n);
  if (m.num_nodes > n) return out;
  const Plan plan = MakePlan(m, /*pin_marks=*/true);
  auto entry = [&w](int x, int y) { return w(x, y); };
  std::vector<double> rows(static_cast<std::size_t>(n) * n, 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    auto e = MakeEnumerator<double>(n, plan, entry);
    for (int j = 0; j < n; ++j) {
      if (j == static_cast<int>(i)) continue;
      const int fixed[] = {static_cast<int>(i), j};
      rows[i * n + j] = e.Sum(fixed);
    }
  });
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = rows[i * n + j];
  }
  return out;
}

SquareMatrix equivariant_basis(const SymMatrix& w, const Monomial& m) {
  SquareMatrix out = equivariant_sum(w, m);
  out *= InverseFactorial(w.dim());
  return out;
}

SquareMatrix equivariant_basis(const SymMatrix& w, const Pattern& p) {
  if (!p.marks) {
    throw ContractError("equivariant basis requires a marked pattern");
  }
  return equivariant_basis(w, Monomial::FromPattern(p));
}

MonomialGraph monomial_graph(const IndexTuple& t, RootEdge root_edge) {
  if (t.a.size() % 2 != 0) {
    throw ContractError("index tuple must have even length");
  }
  for (int x : t.a) {
    if (x < 0) throw ContractError("index tuple entries must be non-negative");
  }
  MonomialGraph out;
  std::vector<int> labels = t.a;
  if (t.roots) {
    labels.push_back(t.roots->first);
    labels.push_back(t.roots->second);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index_of = [&](int label) {
    return static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  const int k = static_cast<int>(labels.size());

  // Multiset of pairs, keyed by the unordered pair.
  std::map<Edge, int> multiplicity;
  auto add_pair = [&](int x, int y) {
    if (x == y) {
      out.vanishing = true;
      return;
    }
    ++multiplicity[{std::min(x, y), std::max(x, y)}];
  };
  for (std::size_t l = 0; l + 1 < t.a.size(); l += 2) {
    add_pair(index_of(t.a[l]), index_of(t.a[l + 1]));
  }
  std::optional<Edge> marks;
  if (t.roots) {
    const int ri = index_of(t.roots->first);
    const int rj = index_of(t.roots->second);
    if (ri == rj) {
      out.coincident_roots = true;
      if (root_edge == RootEdge::kInclude) out.vanishing = true;
    } else {
      marks = Edge{ri, rj};
      if (root_edge == RootEdge::kInclude) add_pair(ri, rj);
    }
  }

  std::vector<Edge> simple;
  out.monomial.num_nodes = k;
  out.monomial.marks = marks;
  for (const auto& [e, mult] : multiplicity) {
    simple.push_back(e);
    out.monomial.factors.push_back({e.first, e.second, mult});
  }
  out.pattern = make_pattern(Graph::FromEdges(k, simple), {}, marks);
  out.labels = std::move(labels);
  return out;
}

bool are_marked_isomorphic(const Pattern& a, const Pattern& b) {
  if (!a.marks || !b.marks) {
    throw ContractError("are_marked_isomorphic requires marked patterns");
  }
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) {
    return false;
  }
  // An injective edge-preserving map between graphs with equal node and edge
  // counts is an isomorphism.
  return count_rooted(b.graph, b.marks->first, b.marks->second, a) > 0;
}

std::vector<Pattern> derive_marked_patterns(std::span<const Pattern> patterns) {
  std::vector<Pattern> out;
  for (const auto& s : patterns) {
    if (s.marks) {
      throw ContractError("derive_marked_patterns expects unmarked patterns");
    }
    for (int u = 0; u < s.num_nodes(); ++u) {
      for (int v = 0; v < s.num_nodes(); ++v) {
        if (u == v || !s.graph.has_edge(u, v)) continue;
        Pattern candidate =
            make_pattern(s.graph.WithoutEdge(u, v),
                         s.name + "[" + std::to_string(u + 1) + "," +
                             std::to_string(v + 1) + "]",
                         Edge{u, v});
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& p) {
          return are_marked_isomorphic(candidate, p);
        });
        if (!seen) out.push_back(std::move(candidate));
      }
    }
  }
  return out;
}

}  // namespace subdiff
