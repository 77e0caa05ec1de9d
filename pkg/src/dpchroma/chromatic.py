"""Exact chromatic polynomials and coloring counts.

Generic graphs go through deletion-contraction with forests as closed-form
base cases.  Generalized Theta graphs additionally get the classical
closed form, which the rest of the package cross-checks against the
generic route.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .errors import BadPathIndex, GraphTooLarge, InexactDivision
from .graphs import (
    EdgeSubset,
    Graph,
    ThetaSpec,
    _components,
    build_generalized_theta,
    component_count,
)
from .poly import M, IntPoly, constant, falling_factorial, prod

DEFAULT_VERTEX_LIMIT = 16


def chromatic_polynomial(g: Graph, limit: int = DEFAULT_VERTEX_LIMIT) -> IntPoly:
    """Exact chromatic polynomial by deletion-contraction.

    The pivot is always an edge lying on a cycle, so the recursion depth is
    the cyclomatic number and every leaf is a forest with closed form
    m^(components) (m-1)^(edges).
    """
    if g.n > limit:
        raise GraphTooLarge(f"{g.n} vertices exceeds limit {limit}")
    return _chrom(g.n, list(g.edges))


def _chrom(n: int, edges: list[tuple[int, int]]) -> IntPoly:
    if any(a == b for a, b in edges):
        return IntPoly()  # a loop admits no proper coloring
    # Dedupe parallel edges produced by contraction.
    edges = sorted(set((min(e), max(e)) for e in edges))
    cycle_edge = _edge_on_cycle(n, edges)
    if cycle_edge is None:
        roots = _components(n, edges)
        return (M ** len(set(roots))) * ((M - 1) ** len(edges))
    deleted = [e for e in edges if e != cycle_edge]
    contracted = _contract(n, deleted, cycle_edge)
    return _chrom(n, deleted) - _chrom(n - 1, contracted)


def _edge_on_cycle(n: int, edges: list[tuple[int, int]]) -> tuple[int, int] | None:
    """First DFS back edge, i.e. an edge on a cycle, or None for forests."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    state = [0] * n
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, -1)]
        while stack:
            v, parent = stack.pop()
            if state[v]:
                continue
            state[v] = 1
            for nxt in adj[v]:
                if nxt == parent:
                    continue  # the unique tree edge back; parallels were deduped
                if state[nxt]:
                    return (min(v, nxt), max(v, nxt))
                stack.append((nxt, v))
    return None


def _contract(
    n: int, edges: list[tuple[int, int]], merged: tuple[int, int]
) -> list[tuple[int, int]]:
    a, b = merged  # b is merged into a, indices above b shift down

    def remap(x: int) -> int:
        if x == b:
            x = a
        return x - 1 if x > b else x

    return [(remap(p), remap(q)) for p, q in edges]


def _cycle_factor(length: int, a: IntPoly) -> IntPoly:
    """(m-1)^len + (-1)^len (m-1), the chromatic polynomial of C_len."""
    return a**length + constant((-1) ** length) * a


def theta_closed_form(lengths: tuple[int, ...]) -> IntPoly:
    """Classical closed form for P(Theta(l_1,...,l_k), m); k = 1 is a path."""
    k = len(lengths)
    a = M - 1
    first = prod(a ** (l + 1) + constant((-1) ** (l + 1)) * a for l in lengths)
    second = prod(a**l + constant((-1) ** l) * a for l in lengths)
    first = first.exact_div((M * a) ** (k - 1))
    second = second.exact_div(M ** (k - 1))
    return first + second


def theta_chromatic(spec: ThetaSpec) -> IntPoly:
    """Chromatic polynomial of a generalized Theta graph, closed form."""
    return theta_closed_form(spec.lengths)


def theta_edge_deleted_chromatic(spec: ThetaSpec, path: int) -> IntPoly:
    """P(G - e, m) for e the u-incident edge of the given path (1-based).

    Deleting that edge leaves the Theta graph on the remaining paths with a
    pendant path of length l_path - 1 hanging from w, hence the product
    with (m-1)^(l_path - 1).
    """
    if not 1 <= path <= spec.k:
        raise BadPathIndex(f"path index {path} not in 1..{spec.k}")
    rest = spec.lengths[: path - 1] + spec.lengths[path:]
    return theta_closed_form(rest) * (M - 1) ** (spec.lengths[path - 1] - 1)


@dataclass(frozen=True)
class EdgePairGraphs:
    """The five graphs obtained by surgery on the two u-edges of paths 1, 2.

    With a1 = the u-neighbor on path 1 and a3 = the u-neighbor on path 2:
    g1 drops the edge u-a1, g2 drops u-a3, g0 drops both, gstar adds the
    chord a1-a3 to the full graph.
    """

    g: Graph
    g0: Graph
    g1: Graph
    g2: Graph
    gstar: Graph


def theta_edge_pair_graphs(l1: int, l2: int, l3: int) -> EdgePairGraphs:
    """Build the surgery family for Theta(l1, l2, l3) with 2 <= l1 <= l2 <= l3."""
    if not 2 <= l1 <= l2 <= l3:
        raise ValueError("need 2 <= l1 <= l2 <= l3")
    g = build_generalized_theta(ThetaSpec((l1, l2, l3)))
    e1 = g.edge_index("u", "v_1_1")
    e2 = g.edge_index("u", "v_2_1")
    return EdgePairGraphs(
        g=g,
        g0=g.without_edges([e1, e2]),
        g1=g.without_edges([e1]),
        g2=g.without_edges([e2]),
        gstar=g.with_edge("v_1_1", "v_2_1"),
    )


@dataclass(frozen=True)
class EdgePairPolynomials:
    """Chromatic polynomials of the surgery family, in the same order."""

    g: IntPoly
    g0: IntPoly
    g1: IntPoly
    g2: IntPoly
    gstar: IntPoly

    def as_tuple(self) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly, IntPoly]:
        return (self.g, self.g0, self.g1, self.g2, self.gstar)


def theta_edge_pair_polynomials(l1: int, l2: int, l3: int) -> EdgePairPolynomials:
    """Closed forms for the surgery family of Theta(l1, l2, l3).

    Every division written below is exact; a remainder raises.
    """
    if not 2 <= l1 <= l2 <= l3:
        raise ValueError("need 2 <= l1 <= l2 <= l3")
    a = M - 1
    total = l1 + l2 + l3

    def sgn(e: int) -> IntPoly:
        return constant((-1) ** e)

    p_g = (
        a**total
        + sgn(total) * a * (M - 2)
        + sgn(l1 + l2) * a ** (l3 + 1)
        + sgn(l1 + l3) * a ** (l2 + 1)
        + sgn(l2 + l3) * a ** (l1 + 1)
    ).exact_div(M)
    p_g0 = M * a ** (total - 2)
    p_g1 = a ** (total - 1) + sgn(l2 + l3) * a**l1
    p_g2 = a ** (total - 1) + sgn(l1 + l3) * a**l2
    p_gstar = (
        (M - 2)
        * (
            a ** (total - 1)
            + sgn(l2 + l3) * a**l1
            + sgn(l1 + l3) * a**l2
            + sgn(l1 + l2 + 1) * a ** (l3 + 1)
            + 2 * sgn(total) * a
        )
    ).exact_div(M)
    return EdgePairPolynomials(p_g, p_g0, p_g1, p_g2, p_gstar)


@dataclass(frozen=True)
class Precoloring:
    """Fixed colors on a subset of vertices.

    Colors are 1-based and bounded by `bound`, which must be at least the
    number of vertices of the graph the precoloring is applied to.
    """

    assignment: Mapping[str, int]
    bound: int

    def __post_init__(self):
        for v, c in self.assignment.items():
            if not 1 <= c <= self.bound:
                raise ValueError(f"color {c} for {v!r} outside 1..{self.bound}")


def _check_precoloring(g: Graph, pc: Precoloring):
    for v in pc.assignment:
        if v not in g.index:
            raise ValueError(f"precolored vertex {v!r} not in graph")
    if pc.bound < g.n:
        raise ValueError("precoloring bound smaller than the vertex count")


def _conflicts(g: Graph, pc: Precoloring) -> bool:
    get = pc.assignment.get
    for a, b in g.edges:
        ca, cb = get(g.vertices[a]), get(g.vertices[b])
        if ca is not None and ca == cb:
            return True
    return False


def precolored_count(g: Graph, pc: Precoloring, m: int) -> int:
    """Number of proper m-colorings of g agreeing with the precoloring.

    Forests are counted by dynamic programming over each tree; anything
    else falls back to brute-force enumeration under the size limit.
    """
    if m < 1:
        raise ValueError("m must be positive")
    _check_precoloring(g, pc)
    if any(c > m for c in pc.assignment.values()):
        return 0
    if g.is_forest():
        return _forest_precolored_count(g, pc, m)
    if m**g.n > 4_000_000:
        raise GraphTooLarge("brute-force precolored count too large")
    fixed = {g.index[v]: c - 1 for v, c in pc.assignment.items()}
    total = 0
    for colors in product(range(m), repeat=g.n):
        if any(colors[v] != c for v, c in fixed.items()):
            continue
        if all(colors[a] != colors[b] for a, b in g.edges):
            total += 1
    return total


def _forest_precolored_count(g: Graph, pc: Precoloring, m: int) -> int:
    fixed = {g.index[v]: c - 1 for v, c in pc.assignment.items()}
    roots = _components(g.n, g.edges)
    comps: dict[int, list[int]] = {}
    for v, r in enumerate(roots):
        comps.setdefault(r, []).append(v)
    total = 1
    for members in comps.values():
        total *= _tree_count(g, members[0], fixed, m)
    return total


def _tree_count(g: Graph, root: int, fixed: dict[int, int], m: int) -> int:
    """Count colorings of the tree component containing root.

    counts[v][c] = colorings of the subtree below v given f(v) = c; a fixed
    vertex contributes only its own color.
    """
    order: list[tuple[int, int]] = []  # (vertex, parent)
    stack = [(root, -1)]
    seen = {root}
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for nxt in g.adjacency[v]:
            if nxt != parent and nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, v))
    counts: dict[int, list[int]] = {}
    for v, parent in reversed(order):
        vec = [1] * m
        if v in fixed:
            vec = [1 if c == fixed[v] else 0 for c in range(m)]
        for nxt in g.adjacency[v]:
            if nxt != parent and nxt in counts:
                child = counts[nxt]
                s = sum(child)
                vec = [vec[c] * (s - child[c]) for c in range(m)]
        counts[v] = vec
    return sum(counts[root])


def precolored_polynomial(g: Graph, pc: Precoloring) -> IntPoly:
    """Polynomial p with p(m) = precolored_count(g, pc, m) for m >= bound.

    Obtained by making the precolored vertices a clique, contracting the
    like-colored ones, and dividing the resulting chromatic polynomial by
    the falling factorial that fixes the clique's colors.  A conflicting
    precoloring short-circuits to the zero polynomial.
    """
    _check_precoloring(g, pc)
    if _conflicts(g, pc):
        return IntPoly()
    if not pc.assignment:
        return chromatic_polynomial(g, limit=max(DEFAULT_VERTEX_LIMIT, g.n))
    class_of: dict[int, int] = {}  # vertex index -> merged class index
    colors = sorted(set(pc.assignment.values()))
    taken = set(g.vertices)
    labels: list[str] = []
    for c in colors:
        name = f"<{c}>"
        while name in taken:
            name = "<" + name
        taken.add(name)
        labels.append(name)
    for pos, c in enumerate(colors):
        for v, cv in pc.assignment.items():
            if cv == c:
                class_of[g.index[v]] = pos
    for v, lab in enumerate(g.vertices):
        if v not in class_of:
            class_of[v] = len(labels)
            labels.append(lab)
    edges = set()
    for a, b in g.edges:
        p, q = class_of[a], class_of[b]
        if p != q:
            edges.add((min(p, q), max(p, q)))
    s = len(colors)
    for i in range(s):  # clique on the merged color classes
        for j in range(i + 1, s):
            edges.add((i, j))
    merged = Graph(tuple(labels), tuple(sorted(edges)))
    p_star = chromatic_polynomial(merged, limit=max(DEFAULT_VERTEX_LIMIT, merged.n))
    try:
        return p_star.exact_div(falling_factorial(s))
    except InexactDivision as exc:  # pragma: no cover - clique guarantees division
        raise InexactDivision(f"contracted graph lost its clique: {exc}") from exc


def subset_agreement_count(g: Graph, subset: EdgeSubset, m: int) -> int:
    """Number of m-colorings whose endpoints agree on every subset edge.

    This is m^c with c the number of components of the spanning subgraph.
    """
    return m ** component_count(g, subset)


def chromatic_by_inclusion_exclusion(g: Graph, m: int) -> int:
    """P(g, m) via the alternating sum over all edge subsets."""
    if len(g.edges) > 20:
        raise GraphTooLarge("more than 20 edges in the subset sum")
    total = 0
    for mask in range(1 << len(g.edges)):
        sign = -1 if bin(mask).count("1") & 1 else 1
        total += sign * subset_agreement_count(g, mask, m)
    return total
