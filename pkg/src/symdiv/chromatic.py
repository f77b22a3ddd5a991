"""Chromatic symmetric functions and the statistic Phi_k."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Iterator

from .divmaps import rowdiv
from .partitions import Partition, sort_partition
from .qsym import QSymFunc, composition_of
from .symfunc import SymFunc, convert

MAX_VERTICES = 9


class ResourceLimitError(RuntimeError):
    """Input exceeds a configured size bound."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1..n``; edges are sorted pairs."""

    n: int
    edges: frozenset

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            u, v = sorted(e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not 1 <= u < v <= self.n:
                raise ValueError(f"edge {(u, v)} out of range for n={self.n}")
            clean.add((u, v))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        return cls.from_edges(data["n"], data["edges"])


def parse_graph(text: str) -> Graph:
    """JSON ``{"n":.., "edges":[[u,v],..]}`` or edge-list lines ``u v``
    (vertex count taken from an optional ``n N`` line or the largest label)."""
    text = text.strip()
    if text.startswith("{"):
        return Graph.from_json(json.loads(text))
    n, edges = 0, []
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        a, b = line.split()
        if a == "n":
            n = int(b)
            continue
        edges.append((int(a), int(b)))
        n = max(n, int(a), int(b))
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def _check_bound(g: Graph):
    if g.n > MAX_VERTICES:
        raise ResourceLimitError(f"graph has {g.n} vertices; bound is {MAX_VERTICES}")


# ---------------------------------------------------------------- stable partitions

def stable_partitions(g: Graph) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of the vertices into independent sets, blocks ordered
    by their smallest element."""
    blocks: list[list[int]] = []

    def rec(v: int):
        if v > g.n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            if not any(g.adjacent(u, v) for u in b):
                b.append(v)
                yield from rec(v + 1)
                b.pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(1)


def augmented_m(lam: Partition) -> SymFunc:
    c = 1
    for part in set(lam):
        c *= factorial(lam.count(part))
    return SymFunc("m", {lam: c})


def chromatic_sym(g: Graph) -> SymFunc:
    """``X_G`` as a sum of augmented monomials over stable partitions (m basis)."""
    _check_bound(g)
    out: dict[Partition, int] = {}
    for pi in stable_partitions(g):
        lam = sort_partition(len(b) for b in pi)
        out[lam] = out.get(lam, 0) + 1
    return SymFunc("m", {lam: c * augmented_m(lam).coeff(lam) for lam, c in out.items()})


def rowdiv_chromatic(g: Graph, k: int) -> SymFunc:
    """Sum over stable partitions with every block size divisible by ``k`` of
    the augmented monomial of the divided block sizes."""
    _check_bound(g)
    out: dict[Partition, Fraction] = {}
    for pi in stable_partitions(g):
        sizes = [len(b) for b in pi]
        if all(x % k == 0 for x in sizes):
            lam = sort_partition(x // k for x in sizes)
            out[lam] = out.get(lam, 0) + augmented_m(lam).coeff(lam)
    return SymFunc("m", out)


# ---------------------------------------------------------------- Phi_k

def phi_k_stable(g: Graph, k: int) -> int:
    """Signed count over stable partitions with k-divisible blocks."""
    _check_bound(g)
    if g.n % k:
        return 0
    total = 0
    for pi in stable_partitions(g):
        sizes = [len(b) for b in pi]
        if all(x % k == 0 for x in sizes):
            total += (-1) ** (g.n // k - len(sizes)) * factorial(len(sizes))
    return total


def phi_k_eta(g: Graph, k: int) -> int:
    """Sum of e-coefficients of ``rowdiv(X_G, k)``."""
    if g.n % k:
        return 0
    return int(sum(convert(rowdiv(chromatic_sym(g), k), "e").terms.values()))


def _orientation_of(g: Graph, order: tuple[int, ...]) -> frozenset:
    pos = {v: i for i, v in enumerate(order)}
    return frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges)


@lru_cache(maxsize=4096)
def _decreasing_labeling(n: int, arcs: frozenset) -> dict:
    # label along the lexicographically first topological order, n down to 1
    indeg = {v: 0 for v in range(1, n + 1)}
    for _, v in arcs:
        indeg[v] += 1
    ready = sorted(v for v in indeg if indeg[v] == 0)
    label, nxt = {}, n
    while ready:
        v = ready.pop(0)
        label[v] = nxt
        nxt -= 1
        for a, b in arcs:
            if a == v:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        ready.sort()
    return label


def orientation_extension_pairs(g: Graph) -> Iterator[tuple[frozenset, tuple[int, ...]]]:
    """All pairs (acyclic orientation, labeled linear extension).

    Every vertex ordering is a linear extension of exactly one acyclic
    orientation, so the pairs are indexed by orderings."""
    for order in permutations(range(1, g.n + 1)):
        arcs = _orientation_of(g, order)
        label = _decreasing_labeling(g.n, arcs)
        yield arcs, tuple(label[v] for v in order)


def descents(w: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def p_partition_expansion(g: Graph) -> QSymFunc:
    """``sum F_{n, Des(w)}`` over orientation/extension pairs."""
    _check_bound(g)
    out: dict = {}
    for _, w in orientation_extension_pairs(g):
        alpha = composition_of(g.n, descents(w))
        out[alpha] = out.get(alpha, 0) + 1
    return QSymFunc("F", out)


def phi_k_orientations(g: Graph, k: int) -> int:
    """Pairs whose descent set is exactly ``{k, 2k, .., n-k}``."""
    _check_bound(g)
    if g.n % k:
        return 0
    target = frozenset(range(k, g.n, k))
    return sum(1 for _, w in orientation_extension_pairs(g) if descents(w) == target)


def phi_k_chromatic(g: Graph, k: int) -> tuple[int, int]:
    """``Phi_k(X_G)`` by stable partitions and by orientation/extension pairs."""
    return phi_k_stable(g, k), phi_k_orientations(g, k)


def acyclic_orientations(g: Graph) -> int:
    """Direct enumeration over all ``2^|E|`` orientations."""
    _check_bound(g)
    edges = sorted(g.edges)
    count = 0
    for flips in product((False, True), repeat=len(edges)):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
        if _is_acyclic(g.n, arcs):
            count += 1
    return count


def _is_acyclic(n: int, arcs) -> bool:
    indeg = [0] * (n + 1)
    out: dict[int, list[int]] = {}
    for a, b in arcs:
        indeg[b] += 1
        out.setdefault(a, []).append(b)
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for b in out.get(v, ()):
            indeg[b] -= 1
            if indeg[b] == 0:
                stack.append(b)
    return seen == n
