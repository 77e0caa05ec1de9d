"""Independent brute-force oracles for the test suite.

Everything here enumerates: no closed forms, no transfer counting, no
deletion-contraction.  Tests freeze expected values computed by these
oracles or compare the fast paths against them directly.
"""

from fractions import Fraction
from itertools import combinations, permutations, product

from dpchroma.covers import FullCover
from dpchroma.graphs import Graph
from dpchroma.poly import IntPoly


def proper_coloring_count(g: Graph, m: int) -> int:
    total = 0
    for colors in product(range(m), repeat=g.n):
        if all(colors[a] != colors[b] for a, b in g.edges):
            total += 1
    return total


def brute_force_cover_count(g: Graph, cover: FullCover) -> int:
    perms = cover.edge_perms()
    total = 0
    for colors in product(range(cover.m), repeat=g.n):
        ok = True
        for i, (a, b) in enumerate(g.edges):
            image = perms[i][colors[a]]
            if image is not None and image == colors[b]:
                ok = False
                break
        if ok:
            total += 1
    return total


def interpolated_chromatic(g: Graph) -> IntPoly:
    """Chromatic polynomial from brute-force counts at m = 0..n (Lagrange)."""
    points = [(m, proper_coloring_count(g, m)) for m in range(g.n + 1)]
    coeffs = [Fraction(0)] * (g.n + 1)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            denom *= xi - xj
            grown = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):  # multiply basis by (x - xj)
                grown[d] -= c * xj
                grown[d + 1] += c
            basis = grown
        scale = Fraction(yi) / denom
        for d, c in enumerate(basis):
            coeffs[d] += c * scale
    assert all(c.denominator == 1 for c in coeffs)
    return IntPoly([int(c) for c in coeffs])


def simple_cycles_by_enumeration(g: Graph, mask: int) -> list[int]:
    """Cycle lengths by trying every vertex subset and every tour of it.

    Distinct cycles on the same vertex set are separated by their edge
    sets, so the result is exact for any graph small enough to enumerate.
    """
    chosen = [i for i in range(len(g.edges)) if mask >> i & 1]
    adj: dict[int, set[int]] = {}
    for i in chosen:
        a, b = g.edges[i]
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    vertices = sorted(adj)
    lengths = []
    for size in range(3, len(vertices) + 1):
        for subset in combinations(vertices, size):
            first = subset[0]
            seen_edge_sets = set()
            for order in permutations(subset[1:]):
                walk = (first,) + order
                if all(
                    walk[(i + 1) % size] in adj.get(walk[i], ())
                    for i in range(size)
                ):
                    edge_set = frozenset(
                        frozenset((walk[i], walk[(i + 1) % size]))
                        for i in range(size)
                    )
                    seen_edge_sets.add(edge_set)
            lengths.extend([size] * len(seen_edge_sets))
    return sorted(lengths)
