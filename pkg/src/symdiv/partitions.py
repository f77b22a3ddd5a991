"""Partitions, compositions and skew shapes.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.  Compositions are tuples of positive
integers.  Skew shapes are :class:`SkewShape` pairs of partitions.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, NamedTuple, Optional, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a partition tuple (zeros dropped)."""
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts!r}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"{parts!r} is not weakly decreasing")
    return out


def as_composition(parts: Sequence[int]) -> Composition:
    out = tuple(int(p) for p in parts)
    if any(p < 1 for p in out):
        raise ValueError(f"composition parts must be positive: {parts!r}")
    return out


def sort_partition(parts: Sequence[int]) -> Partition:
    """Sort any sequence of nonnegative integers into a partition."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (both partitions of the same size)."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes, got {mu} and {lam}")
    a = b = 0
    for j in range(max(len(mu), len(lam))):
        a += lam[j] if j < len(lam) else 0
        b += mu[j] if j < len(mu) else 0
        if a < b:
            return False
    return True


def multiplicities(p: Sequence[int]) -> Counter:
    return Counter(p)


def z_of(p: Partition) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(p).items())


def scale(p: Partition, k: int) -> Partition:
    """The partition ``k*p`` (every part multiplied by ``k``)."""
    if k < 1:
        raise ValueError("k must be positive")
    return tuple(k * x for x in p)


def thicken(p: Partition, k: int) -> Partition:
    """Repeat every part ``k`` times."""
    if k < 1:
        raise ValueError("k must be positive")
    return tuple(x for x in p for _ in range(k))


def staircase(l: int) -> Partition:
    """``(l-1, l-2, ..., 1)``; trailing zero not stored."""
    return tuple(range(l - 1, 0, -1))


def divide_parts(p: Partition, k: int) -> Optional[Partition]:
    """``p/k`` when every part is divisible by ``k``, else None."""
    if all(x % k == 0 for x in p):
        return tuple(x // k for x in p)
    return None


def divide_multiplicities(p: Partition, k: int) -> Optional[Partition]:
    """``(p'/k)'``: divide every multiplicity by ``k``; None if not possible."""
    conj = conjugate(p)
    if all(x % k == 0 for x in conj):
        return conjugate(tuple(x // k for x in conj))
    return None


def padded(p: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(p) + (0,) * (length - len(p))


class SkewShape(NamedTuple):
    """Skew shape ``outer/inner``; ``inner`` may be empty."""

    outer: Partition
    inner: Partition = ()

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_bounds(self) -> list[tuple[int, int]]:
        """Half-open column range ``[start, stop)`` of each row."""
        inner = padded(self.inner, len(self.outer))
        return [(inner[i], self.outer[i]) for i in range(len(self.outer))]

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, (a, b) in enumerate(self.row_bounds()) for c in range(a, b)]

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def is_straight(self) -> bool:
        return not self.inner

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data) -> "SkewShape":
        if isinstance(data, list):
            return skew_shape(data)
        return skew_shape(data["outer"], data.get("inner", ()))


def skew_shape(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    """Validated constructor for :class:`SkewShape`."""
    o, i = as_partition(outer), as_partition(inner)
    if len(i) > len(o) or any(i[j] > o[j] for j in range(len(i))):
        raise ValueError(f"{inner!r} is not contained in {outer!r}")
    return SkewShape(o, i)


def normalize_skew(shape: SkewShape) -> SkewShape:
    """Translate a skew shape so its first nonempty row is row 0 and its
    leftmost cell sits in column 0 (a translate has the same skew Schur
    function)."""
    bounds = shape.row_bounds()
    rows = [r for r, (a, b) in enumerate(bounds) if b > a]
    if not rows:
        return SkewShape((), ())
    bounds = bounds[rows[0]:rows[-1] + 1]
    shift = min(a for a, b in bounds if b > a)
    return SkewShape(as_partition([b - shift for a, b in bounds]),
                     as_partition([a - shift for a, b in bounds]))


def shape_from_cells(cells) -> SkewShape:
    """Skew shape (in normalized position) occupied by a set of cells."""
    cells = set(cells)
    if not cells:
        return SkewShape((), ())
    r0 = min(r for r, _ in cells)
    c0 = min(c for _, c in cells)
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r - r0, []).append(c - c0)
    nrows = max(rows) + 1
    outer, inner = [], []
    for r in range(nrows):
        cols = sorted(rows.get(r, []))
        if cols and cols != list(range(cols[0], cols[-1] + 1)):
            raise ValueError("row is not contiguous")
        outer.append(cols[-1] + 1 if cols else None)
        inner.append(cols[0] if cols else None)
    # empty interior rows: make them zero-length at a consistent column
    for r in range(nrows):
        if outer[r] is None:
            nxt = next(outer[j] for j in range(r + 1, nrows) if outer[j] is not None)
            outer[r] = inner[r] = nxt
    return skew_shape(outer, inner)


def a_shape(lam: Partition, k: int) -> SkewShape:
    """``(k*lam + (k-1)*rho) / (k-1)*rho`` with ``rho = staircase(len(lam))``."""
    if k < 1:
        raise ValueError("k must be positive")
    l = len(lam)
    rho = padded(staircase(l), l)
    outer = tuple(k * lam[i] + (k - 1) * rho[i] for i in range(l))
    inner = as_partition((k - 1) * x for x in rho)
    return SkewShape(outer, inner)


def sh_shape(n: int, k: int, i: int) -> SkewShape:
    """Ribbon whose columns, left to right, have heights ``k(i+1), k, ..., k``.

    Consecutive columns share one row: the top cell of a column is level
    with the bottom cell of the column to its right.
    """
    if not 0 <= i <= n - 1:
        raise ValueError(f"need 0 <= i <= n-1, got i={i}, n={n}")
    ncols = n - i
    heights = [k * (i + 1)] + [k] * (ncols - 1)
    tops = [0] * ncols
    for j in range(ncols - 2, -1, -1):
        tops[j] = tops[j + 1] + k - 1
    nrows = tops[0] + heights[0]
    outer, inner = [], []
    for r in range(nrows):
        cols = [j for j in range(ncols) if tops[j] <= r < tops[j] + heights[j]]
        outer.append(max(cols) + 1)
        inner.append(min(cols))
    return SkewShape(as_partition(outer), as_partition(inner))


def sh_columns(n: int, k: int, i: int) -> list[list[tuple[int, int]]]:
    """Cells of each column of ``sh_shape(n, k, i)``, left to right, top to bottom."""
    shape = sh_shape(n, k, i)
    by_col: dict[int, list[tuple[int, int]]] = {}
    for r, c in shape.cells():
        by_col.setdefault(c, []).append((r, c))
    return [sorted(by_col[c]) for c in sorted(by_col)]


class KQuotient(NamedTuple):
    components: tuple[Partition, ...]
    sign: Optional[int]  # None when the shape is not tileable by k-ribbons


def _beta_to_partition(beads: Sequence[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    n = len(beads)
    return as_partition([b - (n - 1 - i) for i, b in enumerate(beads)])


def k_quotient(lam: Partition, k: int) -> KQuotient:
    """k-quotient by the abacus on the beta-set ``{lam_i + l - i}``.

    Component ``r`` is read off runner ``r`` (beads congruent to ``r`` mod k).
    The sign is that of any k-ribbon tiling and is None unless the k-core is
    empty.
    """
    l = len(lam)
    beads = {lam[i] + l - 1 - i for i in range(l)}
    comps = tuple(_beta_to_partition([b // k for b in beads if b % k == r]) for r in range(k))
    # slide beads up their runners, tracking the ribbon sign
    sign = 1
    current = set(beads)
    moved = True
    while moved:
        moved = False
        for b in sorted(current):
            if b - k >= 0 and b - k not in current:
                between = sum(1 for x in current if b - k < x < b)
                sign *= (-1) ** between
                current.remove(b)
                current.add(b - k)
                moved = True
                break
    core = _beta_to_partition(current)
    return KQuotient(comps, sign if not core else None)


def k_core(lam: Partition, k: int) -> Partition:
    l = len(lam)
    current = {lam[i] + l - 1 - i for i in range(l)}
    for r in range(k):
        runner = sorted(b for b in current if b % k == r)
        current -= set(runner)
        current |= {r + k * j for j in range(len(runner))}
    return _beta_to_partition(current)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part: Optional[int] = None,
                  max_length: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``n`` in the canonical order: lexicographically
    decreasing, which refines dominance ((n) first, (1^n) last)."""
    if n < 0:
        return
    for p in _partitions(n, n if max_part is None else max_part):
        if max_length is None or len(p) <= max_length:
            yield p


def compositions_of(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, lexicographically decreasing."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


def add_partitions(*ps: Partition) -> Partition:
    l = max((len(p) for p in ps), default=0)
    return as_partition([sum(padded(p, l)[i] for p in ps) for i in range(l)])
