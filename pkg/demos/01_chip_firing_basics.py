#!/usr/bin/env python3
"""Tour of the divisor core: firing moves, reduced forms, equivalence.

A divisor puts an integer number of chips on each vertex.  Firing a vertex
pushes one chip down every incident edge; a whole equivalence theory falls
out of that one move.
"""

from gonality import (
    FiringScript,
    apply_firing,
    canonical_divisor,
    cycle_graph,
    divisor,
    effective_representative,
    linearly_equivalent,
    path_graph,
    q_reduce,
    rank,
)

g = cycle_graph(5)
print(f"the 5-cycle: {g.n} vertices, edges {g.edges}")

d = divisor(3, 0, -1, 0, 0)
print(f"\nstart with chips {d.chips} (degree {d.degree})")

fired = apply_firing(g, d, FiringScript((1, 0, 0, 0, 0)))
print(f"fire vertex 0 once:     {fired.chips}")
fired = apply_firing(g, d, FiringScript((1, 1, 0, 0, 0)))
print(f"fire the set {{0, 1}}:    {fired.chips}")

# the q-reduced form is the canonical representative of the equivalence
# class relative to a base vertex: debt-free away from the base and unable
# to fire any subset away from it
red = q_reduce(g, d, q=0)
print(f"\n0-reduced form:         {red.chips}")
print(f"same class?             {linearly_equivalent(g, d, red)}")

# vertex 2 is in debt above, yet the class contains effective divisors
rep = effective_representative(g, d)
print(f"an effective one:       {rep.chips}")

# no amount of firing fixes a divisor whose class is too poor
poor = divisor(1, 0, 0, 0, -2)
print(f"\nchips {poor.chips} -> effective representative: "
      f"{effective_representative(g, poor)}")

# the canonical divisor and the rank function drive everything downstream
tree = path_graph(4)
print(f"\ncanonical divisor of a path:  {canonical_divisor(tree).chips}")
print(f"canonical divisor of a cycle: {canonical_divisor(g).chips}")
print(f"rank of one chip on a tree:   {rank(tree, divisor(1, 0, 0, 0))}")
print(f"rank of one chip on a cycle:  {rank(g, divisor(1, 0, 0, 0, 0))}")
