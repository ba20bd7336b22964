"""
Empty bisector graph tour
=========================

The bisector of two vertices is the set of vertices equidistant from both.
The empty bisector graph joins exactly the pairs whose bisector is empty;
its vertex covers drive everything else in this package.  This script walks
a few instructive graphs.
"""

from equidim import (
    bisector,
    empty_bisector_graph,
    independence_number,
    vertex_cover_number,
    xi_total,
)
from equidim.families import cycle_graph, fish_graph, k5_leaves_graph


def show(name, g):
    ghat = empty_bisector_graph(g).graph
    beta = vertex_cover_number(ghat)
    alpha = independence_number(ghat)
    labeled = [(g.label_of(u), g.label_of(v)) for u, v in ghat.edges]
    print(f"{name}: n={g.n}")
    print(f"  empty-bisector edges: {labeled or '(none)'}")
    print(f"  cover number {beta.value} (witness {sorted(g.label_of(v) for v in beta.witness)})"
          f", independence number {alpha.value}")
    total = xi_total(g)
    print(f"  total equidistant dimension: {total.value}")
    print()


# An odd cycle: every pair of vertices has someone equidistant from both,
# so the empty bisector graph has no edges and the total variant is finite.
show("C5", cycle_graph(5))

# An even cycle: opposite-parity pairs have empty bisectors, and the empty
# bisector graph is complete bipartite on the two color classes.
show("C6", cycle_graph(6))

# The fish graph: exactly two bad pairs, both involving vertex 4, so a
# single vertex covers them.
fish = fish_graph()
show("fish", fish)
print("bisector of 4 and 5 in the fish graph:",
      sorted(bisector(fish, fish.index_of(4), fish.index_of(5))) or "(empty)")
print("bisector of 1 and 2 in the fish graph:",
      sorted(fish.label_of(w) for w in bisector(fish, fish.index_of(1), fish.index_of(2))))
print()

# A clique with a pendant leaf per vertex: each leaf pairs badly only with
# its own support vertex, giving a perfect matching.
show("K5 with leaves", k5_leaves_graph())
