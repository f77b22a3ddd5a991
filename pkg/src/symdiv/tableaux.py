"""Tableau enumeration on skew shapes and the combinatorial models built on it.

All enumerators fill cells in reverse reading order (top row right to left,
then the next row down) so that ballot conditions on the reverse reading
word can be checked one letter at a time.  Results are returned sorted by
row words, so output order is deterministic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .partitions import (
    Partition,
    SkewShape,
    a_shape,
    as_partition,
    padded,
    sh_shape,
    skew_shape,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape; ``rows[r]`` lists the entries of row ``r``
    from column ``inner[r]`` to ``outer[r] - 1``."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        bounds = self.shape.row_bounds()
        if len(self.rows) != len(bounds) or any(
            len(row) != b - a for row, (a, b) in zip(self.rows, bounds)
        ):
            raise ValueError("rows do not match the shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> "Tableau":
        inner = padded(as_partition(inner), len(rows))
        outer = [inner[i] + len(r) for i, r in enumerate(rows)]
        return cls(skew_shape(outer, inner), tuple(tuple(r) for r in rows))

    def entries(self) -> dict[tuple[int, int], int]:
        out = {}
        for r, (row, (a, _)) in enumerate(zip(self.rows, self.shape.row_bounds())):
            for j, v in enumerate(row):
                out[(r, a + j)] = v
        return out

    def content(self) -> Counter:
        return Counter(v for row in self.rows for v in row)

    def is_semistandard(self) -> bool:
        e = self.entries()
        for (r, c), v in e.items():
            if v < 1:
                return False
            if (r, c + 1) in e and e[(r, c + 1)] < v:
                return False
            if (r + 1, c) in e and e[(r + 1, c)] <= v:
                return False
        return True

    def reading_word(self) -> Word:
        """Rows read left to right, starting from the bottom row."""
        return tuple(v for row in reversed(self.rows) for v in row)

    def reverse_reading_word(self) -> Word:
        return tuple(reversed(self.reading_word()))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def reverse_reading_word(t: Tableau) -> Word:
    return t.reverse_reading_word()


# ---------------------------------------------------------------- ballot words

def is_k_ballot(w: Iterable[int], k: int) -> bool:
    """Every prefix has at most ``k-1`` more ``i+1``'s than ``i``'s, for i >= 1."""
    counts: Counter = Counter()
    for v in w:
        counts[v] += 1
        if v >= 2 and counts[v] > counts[v - 1] + k - 1:
            return False
    return True


def ballot_padding(k: int, n: int) -> Word:
    """``1^{n(k-1)} 2^{(n-1)(k-1)} ... n^{k-1}``."""
    return tuple(i for i in range(1, n + 1) for _ in range((n + 1 - i) * (k - 1)))


def prefix_ballot_equivalence_check(w: Sequence[int], k: int, n: int) -> bool:
    """True iff the k-ballot test on ``w`` agrees with the ordinary ballot
    test on the padded word."""
    if any(not 1 <= v <= n for v in w):
        raise ValueError(f"letters must lie in [1, {n}]")
    return is_k_ballot(w, k) == is_k_ballot(ballot_padding(k, n) + tuple(w), 1)


# ---------------------------------------------------------------- enumeration

def _fill(shape: SkewShape, content: Optional[Sequence[int]], k: Optional[int],
          max_letter: Optional[int] = None, count_only: bool = False):
    """Backtracking core.  ``content=None`` means free content with letters
    up to ``max_letter``; ``k`` enables the k-ballot test."""
    bounds = shape.row_bounds()
    order = [(r, c) for r, (a, b) in enumerate(bounds) for c in range(b - 1, a - 1, -1)]
    if content is not None:
        remaining = [0] + list(content)
        letters = len(content)
    else:
        letters = max_letter if max_letter is not None else len(bounds)
        remaining = [0] + [len(order)] * letters
    used = [0] * (letters + 2)
    grid: dict[tuple[int, int], int] = {}
    inner = padded(shape.inner, len(bounds))
    results = []
    total = 0

    def rec(pos: int):
        nonlocal total
        if pos == len(order):
            if count_only:
                total += 1
            else:
                rows = tuple(
                    tuple(grid[(r, c)] for c in range(a, b)) for r, (a, b) in enumerate(bounds)
                )
                results.append(rows)
            return
        r, c = order[pos]
        hi = grid.get((r, c + 1), letters)
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = grid[(r - 1, c)] + 1
        for v in range(lo, hi + 1):
            if remaining[v] == 0:
                continue
            if k is not None and v >= 2 and used[v] + 1 > used[v - 1] + k - 1:
                continue
            remaining[v] -= 1
            used[v] += 1
            grid[(r, c)] = v
            rec(pos + 1)
            del grid[(r, c)]
            used[v] -= 1
            remaining[v] += 1

    rec(0)
    if count_only:
        return total
    results.sort()
    return [Tableau(shape, rows) for rows in results]


def _check_size(shape: SkewShape, content: Sequence[int]):
    if shape.size() != sum(content):
        raise ValueError(f"shape has {shape.size()} cells but content sums to {sum(content)}")
    if any(c < 0 for c in content):
        raise ValueError("content must be nonnegative")


def _as_shape(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return skew_shape(shape)


def enumerate_ssyt(shape, content: Sequence[int]) -> list[Tableau]:
    """All semistandard fillings of ``shape`` with ``content[i]`` entries
    equal to ``i + 1``."""
    shape = _as_shape(shape)
    _check_size(shape, content)
    return _fill(shape, tuple(content), None)


def count_ssyt(shape, content: Sequence[int]) -> int:
    shape = _as_shape(shape)
    _check_size(shape, content)
    return _fill(shape, tuple(content), None, count_only=True)


def enumerate_yssyt_k(shape, content: Sequence[int], k: int) -> list[Tableau]:
    """Semistandard fillings whose reverse reading word is k-ballot."""
    shape = _as_shape(shape)
    _check_size(shape, content)
    return _fill(shape, tuple(content), k)


def count_yssyt_k(shape, content: Sequence[int], k: int) -> int:
    shape = _as_shape(shape)
    _check_size(shape, content)
    return _fill(shape, tuple(content), k, count_only=True)


@lru_cache(maxsize=None)
def _lr(outer: Partition, inner: Partition, nu: Partition) -> int:
    return _fill(SkewShape(outer, inner), nu, 1, count_only=True)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``c^lam_{mu,nu}``: ballot fillings of ``lam/mu`` with content ``nu``."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        raise ValueError("need |lam| = |mu| + |nu|")
    if len(mu) > len(lam) or any(mu[i] > lam[i] for i in range(len(mu))):
        return 0
    return _lr(lam, mu, nu)


def lr_tableaux(shape: SkewShape) -> list[Tableau]:
    """All ballot fillings of a skew shape (free content)."""
    return _fill(shape, None, 1)


@lru_cache(maxsize=None)
def skew_lr_expansion(shape: SkewShape) -> dict[Partition, int]:
    """``{nu: c}`` with ``s_shape = sum_nu c * s_nu``."""
    out: Counter = Counter()
    for t in _fill(shape, None, 1):
        c = t.content()
        out[tuple(c[i] for i in range(1, len(c) + 1))] += 1
    return dict(out)


# ---------------------------------------------------------------- standard tableaux

def _is_standard(t: Tableau) -> bool:
    word = sorted(v for row in t.rows for v in row)
    return word == list(range(1, len(word) + 1)) and t.is_semistandard()


def descent_set(t: Tableau) -> frozenset[int]:
    """``{i : i+1 lies in a strictly lower row than i}``."""
    if not _is_standard(t):
        raise ValueError("descent set needs a standard tableau")
    row_of = {v: r for r, row in enumerate(t.rows) for v in row}
    return frozenset(i for i in row_of if i + 1 in row_of and row_of[i + 1] > row_of[i])


def enumerate_syt(shape) -> list[Tableau]:
    shape = _as_shape(shape)
    return _fill(shape, (1,) * shape.size(), None)


def enumerate_syt_k(lam, k: int) -> list[Tableau]:
    """Standard tableaux whose descents are all multiples of ``k``."""
    shape = _as_shape(lam)
    if shape.size() % k:
        raise ValueError(f"k={k} does not divide {shape.size()}")
    return [t for t in enumerate_syt(shape) if all(d % k == 0 for d in descent_set(t))]


# ---------------------------------------------------------------- companion map

def companion_map(t: Tableau, k: int) -> Tableau:
    """Send a k-Yamanouchi tableau of shape ``lam`` and content ``k*mu`` to a
    ballot tableau of shape ``a_shape(mu, k)`` and content ``lam``.

    The ``j``-th cell of row ``p`` of the image holds the row index (1-based)
    in which the ``j``-th occurrence of letter ``p`` sits, reading ``t`` in
    reverse reading order.
    """
    if not t.shape.is_straight():
        raise ValueError("companion map needs a straight shape")
    if not t.is_semistandard() or not is_k_ballot(t.reverse_reading_word(), k):
        raise ValueError("input is not k-Yamanouchi")
    content = t.content()
    letters = max(content, default=0)
    if any(content[i] % k for i in range(1, letters + 1)) or any(
        content[i] == 0 for i in range(1, letters + 1)
    ):
        raise ValueError("content is not k times a composition")
    mu = tuple(content[i] // k for i in range(1, letters + 1))
    mu = as_partition(mu)
    occ: dict[int, list[int]] = {}
    for r, row in enumerate(t.rows):
        for v in reversed(row):
            occ.setdefault(v, []).append(r + 1)
    shape = a_shape(mu, k)
    return Tableau(shape, tuple(tuple(occ[p + 1]) for p in range(len(mu))))


def companion_inverse(u: Tableau, k: int) -> Tableau:
    """Inverse of :func:`companion_map`: rebuild rows from the letter/row data."""
    nrows = max((v for row in u.rows for v in row), default=0)
    # reverse reading order processes rows top to bottom, so the j-th
    # occurrence of each letter can be dealt out row by row
    rows: list[list[int]] = [[] for _ in range(nrows)]
    for p, row in enumerate(u.rows):
        for r in row:
            rows[r - 1].append(p + 1)
    return Tableau.from_rows([sorted(r) for r in rows])


# ---------------------------------------------------------------- jeu de taquin

def _slide(cells: dict, corner: tuple[int, int]) -> dict:
    cells = dict(cells)
    r, c = corner
    while True:
        right, below = (r, c + 1), (r + 1, c)
        cand = [p for p in (right, below) if p in cells]
        if not cand:
            return cells
        if len(cand) == 2:
            nxt = below if cells[below] <= cells[right] else right
        else:
            nxt = cand[0]
        cells[(r, c)] = cells.pop(nxt)
        r, c = nxt


def rectify(t: Tableau, order: str = "reverse") -> Tableau:
    """Jeu de taquin rectification.  ``order`` picks the inner corner to slide
    into next: ``"reverse"`` takes the last corner in reading order,
    ``"forward"`` the first."""
    cells = t.entries()
    inner = list(t.shape.inner)
    while inner:
        corners = [
            (i, inner[i] - 1)
            for i in range(len(inner))
            if inner[i] > 0 and (i + 1 >= len(inner) or inner[i + 1] < inner[i])
        ]
        corner = corners[-1] if order == "reverse" else corners[0]
        cells = _slide(cells, corner)
        inner[corner[0]] -= 1
        while inner and inner[-1] == 0:
            inner.pop()
    nrows = max((r for r, _ in cells), default=-1) + 1
    rows = []
    for r in range(nrows):
        rows.append([cells[(r, c)] for c in sorted(c for (rr, c) in cells if rr == r)])
    while rows and not rows[-1]:
        rows.pop()
    return Tableau.from_rows(rows)


# ---------------------------------------------------------------- special rim hooks

def _rim_cells(lam: Partition) -> list[tuple[int, int]]:
    """Rim of ``lam`` from the bottom cell of column 0, moving up and right."""
    l = len(lam)
    out = []
    for i in range(l - 1, -1, -1):
        start = max(lam[i + 1] - 1, 0) if i + 1 < l else 0
        out.extend((i, c) for c in range(start, lam[i]))
    return out


def _remove_cells(lam: Partition, cells) -> Optional[Partition]:
    rows = list(lam)
    for r, c in cells:
        rows[r] -= 1
    rest = tuple(x for x in rows)
    if any(rest[i] < rest[i + 1] for i in range(len(rest) - 1)):
        return None
    # removed cells must be the right end of each row
    for r in {r for r, _ in cells}:
        if max(c for rr, c in cells if rr == r) != lam[r] - 1:
            return None
    return tuple(x for x in rest if x)


def enumerate_srht(shape: Partition, type_: Partition) -> list[tuple[tuple[frozenset, ...], int]]:
    """Special rim hook tableaux of ``shape`` and type ``type_`` with signs.

    Each hook starts in column 0; hooks are listed from the bottom one up.
    The signed count is ``K^{-1}_{type_, shape}``.
    """
    shape, type_ = as_partition(shape), as_partition(type_)
    if sum(shape) != sum(type_):
        raise ValueError("shape and type must have the same size")
    out = []

    def rec(lam: Partition, left: Counter, hooks: tuple, sign: int):
        if not lam:
            if not +left:
                out.append((hooks, sign))
            return
        rim = _rim_cells(lam)
        for length in sorted(v for v in left if left[v] > 0):
            if length > len(rim):
                continue
            cells = rim[:length]
            rest = _remove_cells(lam, cells)
            if rest is None:
                continue
            rows = len({r for r, _ in cells})
            left2 = left.copy()
            left2[length] -= 1
            rec(rest, left2, hooks + (frozenset(cells),), sign * (-1) ** (rows - 1))

    rec(shape, Counter(type_), (), 1)
    return out


@lru_cache(maxsize=None)
def inverse_kostka(type_: Partition, shape: Partition) -> int:
    """``K^{-1}_{type_, shape}`` as a signed count of special rim hook tableaux."""
    return sum(s for _, s in enumerate_srht(shape, type_))


# ---------------------------------------------------------------- SH tableaux and blocks

Columns = tuple[tuple[int, ...], ...]


def sh_columns_of(t: Tableau) -> Columns:
    """Columns (left to right, entries top to bottom) of a ribbon tableau."""
    by_col: dict[int, list[tuple[int, int]]] = {}
    for (r, c), v in t.entries().items():
        by_col.setdefault(c, []).append((r, v))
    return tuple(tuple(v for _, v in sorted(by_col[c])) for c in sorted(by_col))


def _ribbon_ok(cols: Sequence[Sequence[int]]) -> bool:
    # top of each column shares a row with the bottom of the next one
    return all(cols[j][0] <= cols[j + 1][-1] for j in range(len(cols) - 1))


def _strict(col: Sequence[int]) -> bool:
    return all(col[i] < col[i + 1] for i in range(len(col) - 1))


def sh_tableau(cols: Sequence[Sequence[int]], k: int) -> Tableau:
    """Build the tableau on ``SH(i)`` whose columns are ``cols``."""
    n_blocks = sum(len(c) for c in cols) // k
    i = len(cols[0]) // k - 1
    shape = sh_shape(n_blocks, k, i)
    cells = {}
    col_cells: dict[int, list[tuple[int, int]]] = {}
    for r, c in shape.cells():
        col_cells.setdefault(c, []).append((r, c))
    for c, col in enumerate(cols):
        for cell, v in zip(sorted(col_cells[c]), col):
            cells[cell] = v
    rows = tuple(
        tuple(cells[(r, c)] for c in range(a, b)) for r, (a, b) in enumerate(shape.row_bounds())
    )
    return Tableau(shape, rows)


def enumerate_sh_columns(n: int, k: int, i: int, content: Sequence[int]) -> list[Columns]:
    """Semistandard fillings of ``SH(i)`` as column tuples."""
    if sum(content) != k * n:
        raise ValueError("content must have k*n entries")
    ncols = n - i
    lens = [k * (i + 1)] + [k] * (ncols - 1)
    remaining = list(content)
    letters = len(content)
    out: list[Columns] = []
    cols: list[tuple[int, ...]] = []

    def choose(length: int, start: int, acc: list):
        if len(acc) == length:
            yield tuple(acc)
            return
        for v in range(start, letters + 1 - (length - len(acc) - 1)):
            if remaining[v - 1] > 0:
                remaining[v - 1] -= 1
                acc.append(v)
                yield from choose(length, v + 1, acc)
                acc.pop()
                remaining[v - 1] += 1

    def rec(j: int):
        if j == ncols:
            out.append(tuple(cols))
            return
        for col in choose(lens[j], 1, []):
            if j and cols[-1][0] > col[-1]:
                continue
            cols.append(col)
            rec(j + 1)
            cols.pop()

    rec(0)
    return out


def count_sh(n: int, k: int, i: int, content: Sequence[int]) -> int:
    """``K_{SH(i), content}``."""
    return len(enumerate_sh_columns(n, k, i, content))


@dataclass(frozen=True)
class BlockTableau:
    """A filling of ``SH(r-1)`` cut into vertical k-blocks.

    ``columns[0]`` is the first column (``r`` blocks, listed top to bottom);
    every other column is a single upper-right block.  ``blue`` holds the
    indices (into ``columns``) of blocks that were moved out of the first
    column.
    """

    columns: Columns
    k: int
    blue: frozenset = field(default_factory=frozenset)

    @property
    def first_column_blocks(self) -> int:
        return len(self.columns[0]) // self.k

    def first_blocks(self) -> list[tuple[int, ...]]:
        c0, k = self.columns[0], self.k
        return [c0[j:j + k] for j in range(0, len(c0), k)]

    def tableau(self) -> Tableau:
        return sh_tableau(self.columns, self.k)

    def to_json(self) -> dict:
        return {"rows": self.tableau().to_json(), "k": self.k, "blue": sorted(self.blue)}


def blockify(t: Tableau, k: int) -> BlockTableau:
    cols = sh_columns_of(t)
    if any(len(c) % k for c in cols):
        raise ValueError(f"column heights must be divisible by k={k}")
    if any(len(c) != k for c in cols[1:]):
        raise ValueError("only the first column may hold more than one block")
    return BlockTableau(cols, k)


def insertion_index(cols: Columns, block: tuple[int, ...]) -> int:
    """Smallest index ``j >= 1`` at which ``block`` can be inserted as a new
    column keeping the ribbon semistandard; the end if there is none."""
    for j in range(1, len(cols) + 1):
        if _ribbon_ok(cols[:j] + (block,) + cols[j:]):
            return j
    return len(cols)


def movable_blocks(b: BlockTableau) -> frozenset[int]:
    """Upper-right blocks that could have been moved out of the first column:
    removing the block leaves a semistandard ribbon, the block sits where
    insertion would have put it, and it fits into an empty block slot below
    the top block of the first column."""
    cols, k = b.columns, b.k
    c0 = cols[0]
    r = len(c0) // k
    out = set()
    for j in range(1, len(cols)):
        block = cols[j]
        rest = cols[:j] + cols[j + 1:]
        if not _ribbon_ok(rest) or insertion_index(rest, block) != j:
            continue
        if any(_strict(c0[:m * k] + block + c0[m * k:]) for m in range(1, r + 1)):
            out.add(j)
    return frozenset(out)


def is_fixed_point(b: BlockTableau) -> bool:
    return not movable_blocks(b)


def build_block_tableau(cols: Columns, keep: Iterable[int], k: int) -> BlockTableau:
    """Keep the top first-column block and the blocks indexed by ``keep``
    (1-based, below the top); move the others, top to bottom, into the
    upper-right region at their insertion index, marking them blue."""
    keep = set(keep)
    c0 = cols[0]
    blocks = [c0[j:j + k] for j in range(0, len(c0), k)]
    kept = [blocks[0]] + [blocks[j] for j in range(1, len(blocks)) if j in keep]
    moved = [blocks[j] for j in range(1, len(blocks)) if j not in keep]
    current: Columns = (tuple(v for blk in kept for v in blk),) + tuple(cols[1:])
    blue: list[int] = []
    for blk in moved:
        j = insertion_index(current, blk)
        current = current[:j] + (blk,) + current[j:]
        blue = [x + 1 if x >= j else x for x in blue] + [j]
    return BlockTableau(current, k, frozenset(blue))


def count_fixed_points(n: int, k: int, r: int, content: Sequence[int]) -> int:
    """Fixed-point block tableaux in ``SSYT(SH(r-1), content)``."""
    return sum(
        1 for cols in enumerate_sh_columns(n, k, r - 1, content)
        if is_fixed_point(BlockTableau(cols, k))
    )


# ---------------------------------------------------------------- greedy intervals

def r_min_columns(cols: Sequence[Sequence[int]]) -> int:
    """Greedy left-to-right segmentation of the extreme intervals."""
    segments = 0
    lo = hi = None
    for col in cols:
        a, b = min(col), max(col)
        if lo is None or b < lo or a > hi:
            segments += 1
            lo, hi = a, b
        else:
            lo, hi = min(lo, a), max(hi, b)
    return segments


def r_min(t: Tableau, k: int) -> int:
    cols = sh_columns_of(t)
    if any(len(c) != k for c in cols):
        raise ValueError("r_min needs a tableau on SH(0)")
    return r_min_columns(cols)
