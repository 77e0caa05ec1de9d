"""Full m-fold covers as permutation twists, exact coloring counts, and the
exhaustive minimization behind the DP color function.

A cover is stored in tree-canonical form: matchings on a fixed spanning
tree are the identity and each cotree edge carries one permutation of the
fold [m] (oriented from the lexicographically smaller endpoint).  Any
assignment of permutations to all edges can be brought into this form by
relabeling fibers, which never changes the number of colorings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import (
    AssumptionViolated,
    CoverMismatch,
    FoldTooSmall,
    GraphTooLarge,
    SearchBudgetExceeded,
)
from .graphs import (
    EdgeSubset,
    FeedbackVertex,
    Graph,
    StarDecomposition,
    ThetaSpec,
    _bits,
    _components,
    find_feedback_vertex,
)

# A twist is a tuple of images; None marks a fiber vertex with no cross edge,
# which only occurs in non-full covers.
Perm = tuple[int | None, ...]

BRUTE_FORCE_LIMIT = 2_000_000


def identity_perm(m: int) -> Perm:
    return tuple(range(m))


def invert_perm(p: Perm) -> Perm:
    out: list[int | None] = [None] * len(p)
    for i, v in enumerate(p):
        if v is not None:
            out[v] = i
    return tuple(out)


def compose(outer: Perm, inner: Perm) -> Perm:
    """outer after inner; None propagates."""
    return tuple(
        None if v is None else outer[v] for v in inner
    )


def is_permutation(p: Sequence[int | None], m: int) -> bool:
    if len(p) != m:
        return False
    seen = [v for v in p if v is not None]
    return all(0 <= v < m for v in seen) and len(set(seen)) == len(seen)


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Ascending cycle lengths of a full permutation."""
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, size = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths))


def _ascending_partitions(total: int, minimum: int = 1) -> Iterable[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(minimum, total + 1):
        for rest in _ascending_partitions(total - first, first):
            yield (first,) + rest


def cycle_type_representatives(m: int) -> list[Perm]:
    """Lexicographically least permutation of each cycle type, sorted.

    The least representative places cycles on consecutive blocks in
    ascending length order, each block a forward shift.
    """
    reps = []
    for part in _ascending_partitions(m):
        perm: list[int] = []
        start = 0
        for size in part:
            perm.extend(start + (i + 1) % size for i in range(size))
            start += size
        reps.append(tuple(perm))
    return sorted(reps)


def standard_tree(g: Graph) -> frozenset[int]:
    """The spanning tree (forest) that twists are normalized against.

    For a generalized Theta graph this is everything except the u-incident
    edges of paths 2..k, so exactly those edges carry twists.  Other graphs
    use the greedy tree in edge order.
    """
    if g.theta is not None:
        k = g.theta.k
        return frozenset(i for i in range(len(g.edges)) if not 1 <= i < k)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for i, (a, b) in enumerate(g.edges):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            tree.append(i)
    return frozenset(tree)


@dataclass(frozen=True)
class FullCover:
    """An m-fold cover in tree-canonical form.

    `twists` maps each cotree edge index to the permutation realized by its
    matching, read from the lexicographically smaller endpoint.
    """

    graph: Graph
    m: int
    tree_edges: frozenset[int]
    twists: Mapping[int, Perm]

    def __post_init__(self):
        g = self.graph
        if self.m < 1:
            raise CoverMismatch("fold must be at least 1")
        edge_ids = set(range(len(g.edges)))
        if not set(self.tree_edges) <= edge_ids:
            raise CoverMismatch("tree edge outside the graph")
        roots = _components(g.n, g.edges)
        want = g.n - len(set(roots))
        tree_roots = _components(g.n, (g.edges[i] for i in self.tree_edges))
        if len(self.tree_edges) != want or len(set(tree_roots)) != len(set(roots)):
            raise CoverMismatch("tree edges do not form a spanning forest")
        if set(self.twists) != edge_ids - set(self.tree_edges):
            raise CoverMismatch("twists must cover exactly the cotree edges")
        for p in self.twists.values():
            if not is_permutation(p, self.m):
                raise CoverMismatch("twist is not an injection on the fold")

    @cached_property
    def is_full(self) -> bool:
        return all(None not in p for p in self.twists.values())

    def edge_perms(self) -> list[Perm]:
        ident = identity_perm(self.m)
        return [
            self.twists.get(i, ident) for i in range(len(self.graph.edges))
        ]

    def conjugated(self, tau: Perm) -> "FullCover":
        """Relabel every fiber by tau; counts are invariant under this."""
        inv = invert_perm(tau)
        return FullCover(
            self.graph,
            self.m,
            self.tree_edges,
            {e: compose(tau, compose(p, inv)) for e, p in self.twists.items()},
        )

    @classmethod
    def from_edge_perms(
        cls,
        g: Graph,
        m: int,
        perms: Mapping[int, Perm],
        tree: frozenset[int] | None = None,
    ) -> "FullCover":
        """Canonicalize an arbitrary edge -> permutation assignment.

        Fibers are relabeled along the spanning tree so tree matchings
        become the identity; cotree twists pick up the conjugations.
        """
        tree = standard_tree(g) if tree is None else tree
        full = [perms.get(i, identity_perm(m)) for i in range(len(g.edges))]
        relabel = _tree_relabeling(g, m, tree, full)
        twists = {}
        for i, (a, b) in enumerate(g.edges):
            if i in tree:
                continue
            twists[i] = compose(relabel[b], compose(full[i], invert_perm(relabel[a])))
        return cls(g, m, tree, twists)


def _tree_relabeling(
    g: Graph, m: int, tree: frozenset[int], perms: Sequence[Perm]
) -> list[Perm]:
    """Fiber relabelings making every tree matching the identity."""
    for i in tree:
        if None in perms[i]:
            raise CoverMismatch("tree matchings must be perfect to canonicalize")
    ident = identity_perm(m)
    relabel: list[Perm | None] = [None] * g.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i in tree:
        a, b = g.edges[i]
        adj[a].append((b, i))
        adj[b].append((a, i))
    for start in range(g.n):
        if relabel[start] is not None:
            continue
        relabel[start] = ident
        stack = [start]
        while stack:
            x = stack.pop()
            for y, e in adj[x]:
                if relabel[y] is not None:
                    continue
                a, b = g.edges[e]
                sigma = perms[e] if (a, b) == (x, y) else invert_perm(perms[e])
                # want relabel[y] o sigma o relabel[x]^-1 == identity
                relabel[y] = compose(relabel[x], invert_perm(sigma))
                stack.append(y)
    return relabel  # type: ignore[return-value]


def identity_cover(g: Graph, m: int) -> FullCover:
    """The cover with every matching diagonal; counts proper m-colorings."""
    tree = standard_tree(g)
    ident = identity_perm(m)
    twists = {i: ident for i in range(len(g.edges)) if i not in tree}
    return FullCover(g, m, tree, twists)


def random_cover(g: Graph, m: int, rng) -> FullCover:
    """Uniformly random twist on each cotree edge."""
    tree = standard_tree(g)
    twists = {}
    for i in range(len(g.edges)):
        if i not in tree:
            p = list(range(m))
            rng.shuffle(p)
            twists[i] = tuple(p)
    return FullCover(g, m, tree, twists)


def _oriented(g: Graph, perms: Sequence[Perm], x: int, y: int) -> Perm:
    """Permutation from the fiber of x to the fiber of y along edge xy."""
    e = g.pair_index[(min(x, y), max(x, y))]
    a, _ = g.edges[e]
    return perms[e] if a == x else invert_perm(perms[e])


def _theta_paths(g: Graph) -> list[list[int]]:
    spec = g.theta
    paths = []
    u, w = g.index["u"], g.index["w"]
    for i, length in enumerate(spec.lengths, start=1):
        path = [u]
        path.extend(g.index[f"v_{i}_{j}"] for j in range(1, length))
        path.append(w)
        paths.append(path)
    return paths


def _theta_composites(g: Graph, perms: Sequence[Perm]) -> list[Perm]:
    composites = []
    for path in _theta_paths(g):
        comp = identity_perm(len(perms[0]))
        for x, y in zip(path, path[1:]):
            comp = compose(_oriented(g, perms, x, y), comp)
        composites.append(comp)
    return composites


def _theta_transfer_count(
    m: int, lengths: Sequence[int], composites: Sequence[Perm]
) -> int:
    """Count transversals by conditioning on the colors of u and w.

    For fixed endpoint colors (a, b) a path of length l contributes
    base_l + (-1)^l [composite(a) == b] where base_l = ((m-1)^l - (-1)^l)/m,
    the closed-form count of proper color walks along the path.
    """
    base = [((m - 1) ** l - (-1) ** l) // m for l in lengths]
    bonus = [(-1) ** l for l in lengths]
    k = len(lengths)
    all_off = 1
    for v in base:
        all_off *= v
    total = 0
    for a in range(m):
        hits: dict[int, list[int]] = {}
        for i, comp in enumerate(composites):
            hits.setdefault(comp[a], []).append(i)
        row = (m - len(hits)) * all_off
        for paths in hits.values():
            term = 1
            marked = set(paths)
            for i in range(k):
                term *= base[i] + bonus[i] if i in marked else base[i]
            row += term
        total += row
    return total


def _forest_full_count(g: Graph, m: int) -> int:
    roots = _components(g.n, g.edges)
    return m ** len(set(roots)) * (m - 1) ** len(g.edges)


def _component_members(g: Graph, skip: int | None = None) -> list[list[int]]:
    pairs = [e for e in g.edges if skip not in e]
    roots = _components(g.n, pairs)
    comps: dict[int, list[int]] = {}
    for v, r in enumerate(roots):
        if v != skip:
            comps.setdefault(r, []).append(v)
    return list(comps.values())


def _tree_dp_vector(
    g: Graph,
    m: int,
    perms: Sequence[Perm],
    members: list[int],
    blocked: dict[int, int | None],
    skip: int | None,
) -> int:
    """Count colorings of a tree component under per-vertex blocked colors."""
    member_set = set(members)
    root = members[0]
    order: list[tuple[int, int]] = []
    stack = [(root, -1)]
    seen = {root}
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for nxt in g.adjacency[v]:
            if nxt != parent and nxt != skip and nxt in member_set and nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, v))
    counts: dict[int, list[int]] = {}
    sums: dict[int, int] = {}
    for v, parent in reversed(order):
        vec = [1] * m
        b = blocked.get(v)
        if b is not None:
            vec[b] = 0
        for nxt in g.adjacency[v]:
            if nxt == parent or nxt == skip or nxt not in counts:
                continue
            rho = _oriented(g, perms, v, nxt)
            child, s = counts[nxt], sums[nxt]
            vec = [
                vec[c] * (s - (child[rho[c]] if rho[c] is not None else 0))
                for c in range(m)
            ]
        counts[v] = vec
        sums[v] = sum(vec)
    return sums[root]


def _fvs_conditioned_count(g: Graph, m: int, perms: Sequence[Perm], pivot: int) -> int:
    """Count transversals by conditioning on the pivot's color.

    The pivot is a feedback vertex, so each remaining component is a tree
    whose DP only sees the pivot through blocked colors on its neighbors.
    """
    comps = _component_members(g, skip=pivot)
    touching = []
    free_product = 1
    pivot_neighbors = set(g.adjacency[pivot])
    for members in comps:
        if pivot_neighbors & set(members):
            touching.append(members)
        else:
            free_product *= _tree_dp_vector(g, m, perms, members, {}, pivot)
    total = 0
    for a in range(m):
        blocked: dict[int, int | None] = {}
        for y in g.adjacency[pivot]:
            rho = _oriented(g, perms, pivot, y)
            blocked[y] = rho[a]
        prod = free_product
        for members in touching:
            prod *= _tree_dp_vector(g, m, perms, members, blocked, pivot)
        total += prod
    return total


def _brute_force_count(g: Graph, m: int, perms: Sequence[Perm]) -> int:
    if m**g.n > BRUTE_FORCE_LIMIT:
        raise GraphTooLarge("transversal enumeration too large")
    oriented = [(a, b, perms[i]) for i, (a, b) in enumerate(g.edges)]
    total = 0
    colors = [0] * g.n

    def rec(v: int):
        nonlocal total
        if v == g.n:
            total += 1
            return
        for c in range(m):
            colors[v] = c
            ok = True
            for a, b, sigma in oriented:
                if b == v and a < v and sigma[colors[a]] == c:
                    ok = False
                    break
                if a == v and b < v:
                    img = sigma[c]
                    if img is not None and img == colors[b]:
                        ok = False
                        break
            if ok:
                rec(v + 1)

    rec(0)
    return total


def count_from_edge_perms(g: Graph, m: int, perms: Sequence[Perm]) -> int:
    """Exact number of transversals avoiding every matched cross pair."""
    full = all(None not in p for p in perms)
    if g.theta is not None and full:
        return _theta_transfer_count(
            m, g.theta.lengths, _theta_composites(g, perms)
        )
    pivot = find_feedback_vertex(g)
    if pivot is FeedbackVertex.NONE_NEEDED:
        if full:
            return _forest_full_count(g, m)
        total = 1
        for members in _component_members(g):
            total *= _tree_dp_vector(g, m, perms, members, {}, None)
        return total
    if isinstance(pivot, str):
        return _fvs_conditioned_count(g, m, perms, g.index[pivot])
    return _brute_force_count(g, m, perms)


def count_colorings(g: Graph, cover: FullCover) -> int:
    """Exact number of cover colorings (independent transversals)."""
    if cover.graph != g:
        raise CoverMismatch("cover belongs to a different graph")
    return count_from_edge_perms(g, cover.m, cover.edge_perms())


def subset_agreement_count(g: Graph, cover: FullCover, subset: EdgeSubset) -> int:
    """Transversals whose choice is matched across every subset edge.

    Within a component of the subset graph the choice at one vertex forces
    all others; the count is the number of starting values consistent with
    every cycle, times m for each untouched component.
    """
    if cover.graph != g:
        raise CoverMismatch("cover belongs to a different graph")
    if not cover.is_full:
        raise CoverMismatch("agreement counts require a full cover")
    m = cover.m
    perms = cover.edge_perms()
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i in _bits(subset):
        a, b = g.edges[i]
        adj[a].append(b)
        adj[b].append(a)
    rho: list[Perm | None] = [None] * g.n
    total = 1
    for start in range(g.n):
        if rho[start] is not None:
            continue
        rho[start] = identity_perm(m)
        stack = [start]
        closing: list[tuple[int, int]] = []
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if rho[y] is None:
                    rho[y] = compose(_oriented(g, perms, x, y), rho[x])
                    stack.append(y)
                else:
                    closing.append((x, y))
        allowed = [True] * m
        for x, y in closing:
            step = _oriented(g, perms, x, y)
            rx, ry = rho[x], rho[y]
            for j in range(m):
                if allowed[j] and step[rx[j]] != ry[j]:
                    allowed[j] = False
        total *= sum(allowed)
    return total


def cover_count_by_inclusion_exclusion(g: Graph, cover: FullCover) -> int:
    """Cover coloring count via the alternating sum over edge subsets."""
    if len(g.edges) > 20:
        raise GraphTooLarge("more than 20 edges in the subset sum")
    total = 0
    for mask in range(1 << len(g.edges)):
        sign = -1 if bin(mask).count("1") & 1 else 1
        total += sign * subset_agreement_count(g, cover, mask)
    return total


@dataclass(frozen=True)
class TwistProfile:
    """Per-path twist statistics of a cover of a generalized Theta graph.

    mismatch_counts[i] is the number of cross edges on the u-edge of path
    i+2 that land off the diagonal.  first_twisted is the smallest such
    path index (0 when the cover is canonical), equal_length_paths the
    number of paths sharing that path's length, and mismatch_mass the
    mismatch total over those paths.
    """

    mismatch_counts: tuple[int, ...]
    first_twisted: int
    equal_length_paths: int
    mismatch_mass: int


def twist_profile(spec: ThetaSpec, cover: FullCover) -> TwistProfile:
    """Read off the twist statistics from a tree-canonical cover."""
    if any((l - spec.lengths[0]) % 2 == 0 for l in spec.lengths[1:]):
        raise AssumptionViolated(
            "profile requires the first path length to differ in parity from all others"
        )
    if not spec.sorted_for_analysis():
        raise AssumptionViolated("paths 2..k must be sorted with l_2 >= max(l_1, 2)")
    g = cover.graph
    if g.theta != spec:
        raise CoverMismatch("cover is not over this theta graph")
    if cover.tree_edges != standard_tree(g):
        raise CoverMismatch("cover is not canonical for the standard theta tree")
    counts = []
    for i in range(2, spec.k + 1):
        sigma = cover.twists[i - 1]
        counts.append(sum(1 for j, v in enumerate(sigma) if v != j))
    mu = 0
    for i, x in enumerate(counts, start=2):
        if x > 0:
            mu = i
            break
    if mu == 0:
        return TwistProfile(tuple(counts), 0, 0, 0)
    target = spec.lengths[mu - 1]
    ties = sum(1 for l in spec.lengths if l == target)
    mass = sum(
        x for i, x in enumerate(counts, start=2) if spec.lengths[i - 1] == target
    )
    return TwistProfile(tuple(counts), mu, ties, mass)


@dataclass(frozen=True)
class PartitionSpec:
    """Ordered partition of a star's vertices; part index = fiber shift."""

    parts: tuple[frozenset[str], ...]

    def __post_init__(self):
        if not self.parts or any(not p for p in self.parts):
            raise ValueError("parts must be nonempty")
        union: set[str] = set()
        for p in self.parts:
            if union & p:
                raise ValueError("parts must be disjoint")
            union |= p

    @cached_property
    def shift(self) -> dict[str, int]:
        return {v: r for r, part in enumerate(self.parts) for v in part}

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.shift)


def partitions_of(labels: Sequence[str]) -> list[PartitionSpec]:
    """All partitions in restricted-growth-string order; labels[0] sits in part 0."""
    out: list[PartitionSpec] = []
    k = len(labels)
    rgs = [0] * k

    def rec(i: int, used: int):
        if i == k:
            parts: list[set[str]] = [set() for _ in range(used)]
            for j, r in enumerate(rgs):
                parts[r].add(labels[j])
            out.append(PartitionSpec(tuple(frozenset(p) for p in parts)))
            return
        for value in range(used + 1):
            rgs[i] = value
            rec(i + 1, max(used, value + 1))

    rec(1 if k else 0, 1 if k else 0)
    return out


def shift_cover(
    g: Graph, decomposition: StarDecomposition, partition: PartitionSpec, m: int
) -> FullCover:
    """Cyclic-shift cover attached to a star + forest decomposition.

    The star edge from the center to a leaf in part r carries the shift
    j -> j + r (mod m); every forest edge is an identity matching.  The
    result is renormalized onto the standard spanning tree.
    """
    if decomposition.graph != g:
        raise CoverMismatch("decomposition belongs to a different graph")
    if partition.vertex_set != frozenset(decomposition.alphas):
        raise ValueError("partition must cover exactly the star's vertices")
    if decomposition.center not in partition.parts[0]:
        raise ValueError("the center must sit in part 0")
    if m < len(partition.parts):
        raise FoldTooSmall(f"fold {m} smaller than {len(partition.parts)} parts")
    center = g.index[decomposition.center]
    perms: dict[int, Perm] = {}
    for e in _bits(decomposition.star_edges):
        a, b = g.edges[e]
        leaf = g.vertices[b if a == center else a]
        r = partition.shift[leaf]
        shift = tuple((j + r) % m for j in range(m))
        perms[e] = shift if a == center else invert_perm(shift)
    return FullCover.from_edge_perms(g, m, perms)


@dataclass(frozen=True)
class MinimizationResult:
    value: int
    cover: FullCover
    candidates: int


def _first_edge_options(m: int, symmetry: str) -> list[Perm]:
    if symmetry == "tree-canonical+conjugacy":
        return cycle_type_representatives(m)
    return list(permutations(range(m)))


def worker_count() -> int:
    env = os.environ.get("DPCHROMA_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def min_over_covers(
    g: Graph,
    m: int,
    symmetry: str = "tree-canonical+conjugacy",
    budget: int = 10_000_000,
    workers: int | None = None,
) -> MinimizationResult:
    """Exhaustive minimum of the coloring count over full m-fold covers.

    symmetry levels:
      "none"                      permutations on every edge (validation mode);
      "tree-canonical"            twists on cotree edges only;
      "tree-canonical+conjugacy"  additionally fixes the first twist to the
                                  least representative of its cycle type.
    All levels return the same minimum; the witness is the first attaining
    cover in enumeration order.
    """
    if symmetry not in ("none", "tree-canonical", "tree-canonical+conjugacy"):
        raise ValueError(f"unknown symmetry level {symmetry!r}")
    tree = standard_tree(g)
    if symmetry == "none":
        free_edges = list(range(len(g.edges)))
        first_options = list(permutations(range(m)))
    else:
        free_edges = sorted(set(range(len(g.edges))) - tree)
        first_options = (
            _first_edge_options(m, symmetry) if free_edges else [identity_perm(m)]
        )
    fact = 1
    for i in range(2, m + 1):
        fact *= i
    rest = max(len(free_edges) - 1, 0)
    candidates = (len(first_options) if free_edges else 1) * fact**rest
    if candidates > budget:
        raise SearchBudgetExceeded(
            f"{candidates} covers exceed the budget of {budget}"
        )
    chunks = [(first,) for first in first_options] if free_edges else [()]
    if workers is None:
        workers = worker_count()
    if workers > 1 and len(chunks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        args = [(g, m, free_edges, chunk) for chunk in chunks]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_search_chunk, args))
    else:
        partials = [_search_chunk((g, m, free_edges, chunk)) for chunk in chunks]
    best_value, best_assignment = None, None
    for value, assignment in partials:
        if best_value is None or value < best_value:
            best_value, best_assignment = value, assignment
    perms = dict(zip(free_edges, best_assignment))
    witness = FullCover.from_edge_perms(g, m, perms, tree=tree)
    return MinimizationResult(best_value, witness, candidates)


def _search_chunk(args) -> tuple[int, tuple[Perm, ...]]:
    """Minimum over all assignments extending a fixed prefix, with memoized
    counting keyed on the theta path composites when available."""
    g, m, free_edges, prefix = args
    ident = identity_perm(m)
    perms: list[Perm] = [ident] * len(g.edges)
    for e, p in zip(free_edges, prefix):
        perms[e] = p
    options = list(permutations(range(m)))
    remaining = free_edges[len(prefix) :]
    best: tuple[int, tuple[Perm, ...]] | None = None
    theta_paths = _theta_paths(g) if g.theta is not None else None
    cache: dict[tuple[Perm, ...], int] = {}

    def evaluate() -> int:
        if theta_paths is None:
            return count_from_edge_perms(g, m, perms)
        key = tuple(_theta_composites(g, perms))
        value = cache.get(key)
        if value is None:
            value = _theta_transfer_count(m, g.theta.lengths, key)
            cache[key] = value
        return value

    def rec(i: int):
        nonlocal best
        if i == len(remaining):
            value = evaluate()
            if best is None or value < best[0]:
                best = (value, tuple(perms[e] for e in free_edges))
            return
        for p in options:
            perms[remaining[i]] = p
            rec(i + 1)

    rec(0)
    return best


def cover_to_json(cover: FullCover) -> dict:
    """Stable JSON form: fold, tree edges, and 1-based twist image arrays."""
    g = cover.graph
    return {
        "m": cover.m,
        "tree_edges": [list(g.edge_labels(i)) for i in sorted(cover.tree_edges)],
        "twists": [
            {
                "edge": list(g.edge_labels(i)),
                "perm": [None if v is None else v + 1 for v in cover.twists[i]],
            }
            for i in sorted(cover.twists)
        ],
    }
