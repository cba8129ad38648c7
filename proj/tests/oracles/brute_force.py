# Copyright 2026 The subdiff Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent brute-force oracle for the frozen values in the C++ tests.

Everything here enumerates permutations / injective maps directly with
itertools; nothing is shared with the C++ implementation. Run:

    python3 tests/oracles/brute_force.py [--check frozen_values.txt]

With --check the output must match the frozen file line for line.
"""
import itertools
import math
import sys


def edges_of(n, pairs):
    return {frozenset(p) for p in pairs}

def cycle(k):
    return k, {frozenset((i, (i + 1) % k)) for i in range(k)}

def path(k):
    return k, {frozenset((i, i + 1)) for i in range(k - 1)}

def complete(k):
    return k, {frozenset(p) for p in itertools.combinations(range(k), 2)}

def fused(a, b):
    k = a + b - 2
    e = {frozenset((i, (i + 1) % a)) for i in range(a)}
    prev = 1
    for v in range(a, k):
        e.add(frozenset((prev, v)))
        prev = v
    e.add(frozenset((prev, 0)))
    return k, e

def inj_maps(host, pat, pinned=None):
    n, he = host
    k, pe = pat
    total = 0
    for img in itertools.permutations(range(n), k):
        if pinned and any(img[c] != i for c, i in pinned.items()):
            continue
        if all(frozenset((img[a], img[b])) in he for a, b in map(tuple, pe)):
            total += 1
    return total

def aut(pat):
    return inj_maps(pat, pat)

def subgraphs(host, pat):
    return inj_maps(host, pat) // aut(pat)

def isomorphic(g1, g2):
    n1, e1 = g1
    n2, e2 = g2
    if n1 != n2 or len(e1) != len(e2):
        return False
    for p in itertools.permutations(range(n1)):
        if {frozenset((p[a], p[b])) for a, b in map(tuple, e1)} == e2:
            return True
    return False

LINES = []


def show(label, value):
    LINES.append(f"{label:55s} {value}")
    print(LINES[-1])

K3, K4 = complete(3), complete(4)
C6 = cycle(6)
show("count_subgraphs(K4, c4)", subgraphs(K4, cycle(4)))
show("count_injective_homs(K4, c4)", inj_maps(K4, cycle(4)))
show("count_subgraphs(C6, l5)", subgraphs(C6, path(5)))
show("count_rooted(K3, 0->0, 1->1, triangle marked (0,1))",
     inj_maps(K3, cycle(3), {0: 0, 1: 1}))
show("count_rooted(C6, 0->0, 1->1, c6 marked (0,1))",
     inj_maps(C6, cycle(6), {0: 0, 1: 1}))
show("unordered-root variant for C6 (both orientations)",
     inj_maps(C6, cycle(6), {0: 0, 1: 1}) + inj_maps(C6, cycle(6), {0: 1, 1: 0}))
# Stabiliser of the ordered marked pair inside Aut(c6).
stab = inj_maps(cycle(6), cycle(6), {0: 0, 1: 1})
show("|Aut(c6)|, |Stab_(0,1)(Aut(c6))|", (aut(cycle(6)), stab))
show("c3c4 nodes, edges, |Aut|", (fused(3, 4)[0], len(fused(3, 4)[1]), aut(fused(3, 4))))
for a, b in [(5, 5), (5, 6), (6, 6)]:
    g = fused(a, b)
    show(f"c{a}c{b} nodes, edges, |Aut|", (g[0], len(g[1]), aut(g)))
for k in range(3, 9):
    show(f"|Aut(c{k})|", aut(cycle(k)))
for k in range(5, 8):
    show(f"|Aut(l{k})|", aut(path(k)))

# Two 6-node trees with equal degree sequence.
tree_a = (6, edges_of(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]))
tree_b = (6, edges_of(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]))
def degseq(g):
    n, e = g
    return sorted((sum(1 for x in e if v in x) for v in range(n)), reverse=True)
show("tree degree sequences", (degseq(tree_a), degseq(tree_b)))
show("trees isomorphic", isomorphic(tree_a, tree_b))
show("C4 vs P4 isomorphic", isomorphic(cycle(4), path(4)))

# Invariant basis on K3 with c3: (1/3!) * sum over injective maps.
show("Q_c3(K3)", inj_maps(K3, cycle(3)) / math.factorial(3))

# Marked-edge equivariant basis entry on K4: pinned sum / n!.
show("n! * Qt_edge(K4)[0][1] (k=2, not padded)", inj_maps(K4, (2, {frozenset((0, 1))}), {0: 0, 1: 1}))

# Histogram of {K3, K4} for c3.
show("c3 counts K3, K4", (subgraphs(K3, cycle(3)), subgraphs(K4, cycle(3))))

# l5 planted on 6 nodes with one pendant: which attachment points keep a
# single 5-node path?
for parent in range(5):
    n, e = path(5)
    g = (6, e | {frozenset((parent, 5))})
    show(f"l5 count, pendant on path node {parent}", subgraphs(g, path(5)))

# Schedule: alpha at t = 1 with (0.1, 20).
alpha = math.exp(-0.25 * (20 - 0.1) - 0.5 * 0.1)
show("alpha(t=1)", alpha)
show("beta(t=1)", math.sqrt(1 - alpha * alpha))

if len(sys.argv) == 3 and sys.argv[1] == "--check":
    with open(sys.argv[2]) as f:
        frozen = f.read().splitlines()
    if frozen != LINES:
        diff = [(a, b) for a, b in zip(frozen, LINES) if a != b]
        print("oracle output differs from frozen values:", diff or "length")
        sys.exit(1)
    print("matches frozen values")
