"""Bounding machinery: exact treewidth, tree-decomposition validation,
maximum independent sets, and the random-graph independence estimate.

Treewidth bounds gonality from below; ``n - alpha`` bounds it from above.
Both sides come with checkable artifacts: a tree decomposition that the
validator accepts, and an independent set whose independence is re-checked
on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import EdgeCountError, GonalityError, MalformedHeaderError, SizeLimitError
from .graphs import Graph, degeneracy

_VALIDATION_ORDER = ("tree structure", "property 1", "property 2", "property 3")


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags of vertices arranged in a tree (edges join bag indices)."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of tree-decomposition validation.

    ``violation`` names the first failed requirement: "tree structure",
    "property 1" (every vertex in a bag), "property 2" (bags holding a
    vertex form a subtree), or "property 3" (every edge inside a bag).
    """

    valid: bool
    violation: Optional[str]
    width: int

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class IndependentSet:
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class MISResult:
    """Search outcome; ``exact`` is False when the node budget ran out and
    the set is only a certified lower bound for alpha."""

    independent: IndependentSet
    exact: bool
    nodes_explored: int

    @property
    def alpha(self) -> int:
        return self.independent.size


def validate_tree_decomposition(graph: Graph, td: TreeDecomposition) -> ValidationReport:
    """Check tree-ness and the three decomposition properties, in that order,
    reporting the first violation by name."""
    k = len(td.bags)
    width = td.width

    # tree structure: valid indices, no loops or duplicates, connected, acyclic
    seen = set()
    for a, b in td.tree_edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            return ValidationReport(False, "tree structure", width)
        key = (min(a, b), max(a, b))
        if key in seen:
            return ValidationReport(False, "tree structure", width)
        seen.add(key)
    if k == 0 or len(td.tree_edges) != k - 1 or not _nodes_connected(k, td.tree_edges):
        return ValidationReport(False, "tree structure", width)

    # property 1 also catches bag members outside the vertex range
    covered = frozenset().union(*td.bags)
    if covered != frozenset(range(graph.n)):
        return ValidationReport(False, "property 1", width)

    for v in range(graph.n):
        holding = [i for i, bag in enumerate(td.bags) if v in bag]
        if not _induced_connected(holding, td.tree_edges):
            return ValidationReport(False, "property 2", width)

    for u, v in graph.edges:
        if not any(u in bag and v in bag for bag in td.bags):
            return ValidationReport(False, "property 3", width)

    return ValidationReport(True, None, width)


def treewidth_exact(graph: Graph, size_limit: int = 16) -> tuple[int, TreeDecomposition]:
    """Exact treewidth with a witness decomposition.

    Dynamic programming over subsets of eliminated vertices: the width of
    the best elimination order with prefix S satisfies
    ``f(S) = min_v max(f(S - v), backdegree(S - v, v))`` where the
    back-degree counts neighbors of v's component within the prefix.  The
    optimal order is then turned into bags by simulated elimination with
    fill-in.  Refuses graphs above ``size_limit`` (memory grows as 2^n).
    """
    n = graph.n
    if n > size_limit:
        raise SizeLimitError(f"treewidth_exact limited to n <= {size_limit}, got {n}")
    if n == 0:
        return -1, TreeDecomposition((frozenset(),), ())
    adj = graph.adjacency_bits
    size = 1 << n
    f = [0] * size
    choice = [0] * size
    for s in range(1, size):
        best = n + 1
        bestv = -1
        m = s
        while m:
            low = m & -m
            v = low.bit_length() - 1
            t = s ^ low
            w = f[t]
            if w < best:
                back = _back_degree(adj, t, v)
                if back > w:
                    w = back
                if w < best:
                    best = w
                    bestv = v
            m ^= low
        f[s] = best
        choice[s] = bestv
    order = []
    s = size - 1
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    td = _decomposition_from_order(graph, order)
    if td.width != f[size - 1]:
        raise GonalityError("decomposition width disagrees with DP value; this is a bug")
    return f[size - 1], td


def treewidth_lower_bound(graph: Graph) -> int:
    """Certified lower bound: the degeneracy (dominates minimum degree)."""
    return degeneracy(graph)


def maximum_independent_set(graph: Graph, budget: Optional[int] = None) -> MISResult:
    """Exact maximum independent set by branch and bound.

    Branches on a maximum-degree vertex (exclude it, or include it and drop
    its closed neighborhood), primed with a greedy incumbent and pruned with
    a greedy clique-cover bound.  A node ``budget`` turns exhaustion into a
    flagged lower bound instead of an error.
    """
    n = graph.n
    adj = graph.adjacency_bits
    if n == 0:
        return MISResult(IndependentSet(frozenset()), True, 0)

    by_desc_degree = sorted(range(n), key=lambda v: (-graph.degree(v), v))

    # greedy incumbent: take vertices in ascending degree, skip conflicts
    chosen = 0
    blocked = 0
    for v in sorted(range(n), key=lambda u: (graph.degree(u), u)):
        b = 1 << v
        if not (blocked & b):
            chosen |= b
            blocked |= b | adj[v]
    best_mask = [chosen]
    best_size = [chosen.bit_count()]
    nodes = [0]
    truncated = [False]

    def cover_bound(pool: int) -> int:
        rem = pool
        k = 0
        while rem:
            k += 1
            u = next(c for c in by_desc_degree if rem & (1 << c))
            clique = 1 << u
            inter = adj[u] & rem
            while inter:
                w = next(c for c in by_desc_degree if inter & (1 << c))
                clique |= 1 << w
                inter &= adj[w]
            rem &= ~clique
        return k

    def bb(pool: int, picked: int, size: int) -> None:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            truncated[0] = True
            return
        if not pool:
            if size > best_size[0]:
                best_size[0] = size
                best_mask[0] = picked
            return
        if size + cover_bound(pool) <= best_size[0]:
            return
        v, vdeg = -1, -1
        m = pool
        while m:
            low = m & -m
            u = low.bit_length() - 1
            d = (adj[u] & pool).bit_count()
            if d > vdeg:
                vdeg = d
                v = u
            m ^= low
        b = 1 << v
        bb(pool & ~(adj[v] | b), picked | b, size + 1)
        if not truncated[0]:
            bb(pool & ~b, picked, size)

    bb((1 << n) - 1, 0, 0)
    vertices = frozenset(v for v in range(n) if best_mask[0] & (1 << v))
    return MISResult(IndependentSet(vertices), not truncated[0], nodes[0])


def frieze_alpha_estimate(n: int, c: float) -> float:
    """Typical independence number of G(n, c/n) for large sparse graphs:
    ``(2/p) (ln c - ln ln c - ln 2 + 1)`` with ``p = c/n``.

    Requires ``c > e`` so the double logarithm is positive; smaller c is
    outside the estimate's regime and rejected.
    """
    if n < 1:
        raise GonalityError(f"need n >= 1, got {n}")
    if c <= math.e:
        raise GonalityError(f"estimate needs c > e ~ 2.718, got {c}")
    p = c / n
    return (2.0 / p) * (math.log(c) - math.log(math.log(c)) - math.log(2.0) + 1.0)


def serialize_tree_decomposition(td: TreeDecomposition) -> str:
    """Format: header ``k width``, k bag lines, then k-1 tree-edge lines."""
    lines = [f"{len(td.bags)} {td.width}"]
    for bag in td.bags:
        lines.append(" ".join(str(v) for v in sorted(bag)))
    for a, b in td.tree_edges:
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def parse_tree_decomposition(text: str) -> TreeDecomposition:
    lines = text.splitlines()
    if not lines:
        raise MalformedHeaderError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedHeaderError(f"expected header 'k width', got {lines[0]!r}")
    k = int(header[0])
    expected = 1 + k + max(k - 1, 0)
    if len(lines) < expected:
        raise EdgeCountError(f"expected {expected} lines, found {len(lines)}")
    bags = tuple(
        frozenset(int(tok) for tok in lines[1 + i].split()) for i in range(k)
    )
    edges = tuple(
        (int(a), int(b))
        for a, b in (lines[1 + k + i].split() for i in range(max(k - 1, 0)))
    )
    return TreeDecomposition(bags, edges)


# -- internals ---------------------------------------------------------------

def _nodes_connected(k: int, edges: tuple[tuple[int, int], ...]) -> bool:
    if k == 0:
        return False
    nbr: list[list[int]] = [[] for _ in range(k)]
    for a, b in edges:
        nbr[a].append(b)
        nbr[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in nbr[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


def _induced_connected(nodes: list[int], edges: tuple[tuple[int, int], ...]) -> bool:
    if not nodes:
        return False
    keep = set(nodes)
    nbr = {u: [] for u in keep}
    for a, b in edges:
        if a in keep and b in keep:
            nbr[a].append(b)
            nbr[b].append(a)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        u = stack.pop()
        for w in nbr[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keep)


def _back_degree(adj: tuple[int, ...], prefix: int, v: int) -> int:
    """Neighbors outside the prefix of v's component within prefix + v."""
    comp = 1 << v
    nb = adj[v]
    while True:
        grow = nb & prefix & ~comp
        if not grow:
            break
        comp |= grow
        while grow:
            low = grow & -grow
            nb |= adj[low.bit_length() - 1]
            grow ^= low
    return (nb & ~prefix & ~(1 << v)).bit_count()


def _decomposition_from_order(graph: Graph, order: list[int]) -> TreeDecomposition:
    """Bags from simulated elimination with fill-in along the given order."""
    n = graph.n
    adj = list(graph.adjacency_bits)
    alive = (1 << n) - 1
    position = {v: i for i, v in enumerate(order)}
    bags = []
    parents: list[Optional[int]] = []
    for i, v in enumerate(order):
        nbrs = adj[v] & alive & ~(1 << v)
        bag = {v}
        parent: Optional[int] = None
        best_pos = n + 1
        m = nbrs
        while m:
            low = m & -m
            u = low.bit_length() - 1
            bag.add(u)
            if position[u] < best_pos:
                best_pos = position[u]
                parent = position[u]
            adj[u] |= nbrs & ~low
            m ^= low
        bags.append(frozenset(bag))
        parents.append(parent)
        alive ^= 1 << v
    edges = [(i, p) for i, p in enumerate(parents) if p is not None]
    roots = [i for i, p in enumerate(parents) if p is None]
    # isolated-at-elimination bags start their own subtree; chain the roots
    # so the result is a single tree (safe: the linked bags share no vertex)
    edges.extend((roots[j], roots[j + 1]) for j in range(len(roots) - 1))
    return TreeDecomposition(tuple(bags), tuple(edges))
