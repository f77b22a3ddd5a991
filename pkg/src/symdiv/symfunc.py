"""Symmetric functions over the rationals in the m, e, h, p and s bases.

Every conversion passes through the monomial basis unless a cheaper
classical identity applies (h to s by Kostka numbers, s to h by special rim
hooks, and their images under omega).  Coefficients out of m are obtained by
triangular solves along the canonical partition order.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Mapping, Optional, Union

from .partitions import (
    Partition,
    SkewShape,
    as_partition,
    conjugate,
    normalize_skew,
    partitions_of,
    sort_partition,
    z_of,
)
from .tableaux import inverse_kostka

BASES = ("m", "e", "h", "p", "s")
Number = Union[int, Fraction]


class SymFunc:
    """Sparse, basis-tagged element of the ring of symmetric functions.

    Terms of different degrees may coexist; zero coefficients are dropped.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Optional[Mapping[Partition, Number]] = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[as_partition(lam)] = clean.get(as_partition(lam), 0) + c
        self.terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def single(cls, basis: str, lam, coeff: Number = 1) -> "SymFunc":
        return cls(basis, {as_partition(lam): coeff})

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("not homogeneous")
        return degs.pop() if degs else 0

    def coeff(self, lam) -> Fraction:
        return self.terms.get(as_partition(lam), Fraction(0))

    def __getitem__(self, lam) -> Fraction:
        return self.coeff(lam)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    def _aligned(self, other: "SymFunc") -> "SymFunc":
        return other if other.basis == self.basis else convert(other, self.basis)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = self._aligned(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c: Number) -> "SymFunc":
        return SymFunc(self.basis, {lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self:
            name = f"{self.basis}{''.join(map(str, lam)) if max(lam, default=0) < 10 else lam}"
            parts.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(parts)

    def to_json(self) -> dict:
        degs = self.degrees()
        return {
            "basis": self.basis,
            "degree": degs.pop() if len(degs) == 1 else None,
            "terms": [{"partition": list(lam), "coeff": str(c)} for lam, c in self],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        terms = {}
        for t in data["terms"]:
            lam = as_partition(t["partition"])
            terms[lam] = terms.get(lam, 0) + Fraction(str(t["coeff"]))
        return cls(data["basis"], terms)


def m(*lam) -> SymFunc:
    return SymFunc.single("m", _args(lam))


def e(*lam) -> SymFunc:
    return SymFunc.single("e", _args(lam))


def h(*lam) -> SymFunc:
    return SymFunc.single("h", _args(lam))


def p(*lam) -> SymFunc:
    return SymFunc.single("p", _args(lam))


def s(*lam) -> SymFunc:
    return SymFunc.single("s", _args(lam))


def _args(lam) -> Partition:
    if len(lam) == 1 and not isinstance(lam[0], int):
        return as_partition(lam[0])
    return as_partition(lam)


# ---------------------------------------------------------------- transition coefficients

@lru_cache(maxsize=None)
def _horizontal_strips(outer: Partition, inner: Partition, size: int) -> tuple[Partition, ...]:
    """Partitions ``nu`` with ``inner <= nu <= outer`` and ``outer/nu`` a
    horizontal strip of ``size`` cells."""
    l = len(outer)
    inn = inner + (0,) * (l - len(inner))
    out = []

    def rec(i: int, left: int, acc: list):
        if i == l:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        lo = max(outer[i + 1] if i + 1 < l else 0, inn[i])
        for v in range(outer[i], lo - 1, -1):
            take = outer[i] - v
            if take > left:
                break
            acc.append(v)
            rec(i + 1, left - take, acc)
            acc.pop()

    rec(0, size, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _kostka(outer: Partition, inner: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if outer == inner else 0
    last = content[-1]
    return sum(_kostka(nu, inner, content[:-1]) for nu in _horizontal_strips(outer, inner, last))


def kostka(lam, mu) -> int:
    """``K_{lam,mu}``; ``mu`` may be any composition (zeros ignored)."""
    lam = as_partition(lam)
    mu = sort_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("Kostka numbers need |lam| = |mu|")
    return _kostka(lam, (), mu)


def skew_kostka(shape: SkewShape, mu) -> int:
    mu = sort_partition(mu)
    if shape.size() != sum(mu):
        raise ValueError("content size does not match the shape")
    shape = normalize_skew(shape)
    return _kostka(shape.outer, shape.inner, mu)


@lru_cache(maxsize=None)
def _binary_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """0/1 matrices with the given row and column sums (cols kept sorted)."""
    if not rows:
        return 1 if not any(cols) else 0
    r, rest = rows[0], rows[1:]
    groups = sorted(Counter(c for c in cols if c).items(), reverse=True)
    total = 0

    def rec(g: int, left: int, acc: list, ways: int):
        nonlocal total
        if g == len(groups):
            if left == 0:
                total += ways * _binary_matrices(rest, sort_partition(acc))
            return
        val, mult = groups[g]
        for take in range(min(mult, left) + 1):
            rec(g + 1, left - take, acc + [val - 1] * take + [val] * (mult - take),
                ways * comb(mult, take))

    rec(0, r, [], 1)
    return total


def bcm_count(lam, mu) -> int:
    """Number of 0/1 matrices with row sums ``lam`` and column sums ``mu``."""
    return _binary_matrices(tuple(lam), sort_partition(mu))


@lru_cache(maxsize=None)
def _int_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if not rows:
        return 1 if not any(cols) else 0
    r, rest = rows[0], rows[1:]
    cols_l = list(cols)
    total = 0

    def rec(j: int, left: int, acc: list):
        nonlocal total
        if j == len(cols_l):
            if left == 0:
                total += _int_matrices(rest, sort_partition(acc))
            return
        for take in range(min(cols_l[j], left) + 1):
            acc.append(cols_l[j] - take)
            rec(j + 1, left - take, acc)
            acc.pop()

    rec(0, r, [])
    return total


def int_matrix_count(lam, mu) -> int:
    """Nonnegative integer matrices with row sums ``lam`` and column sums ``mu``."""
    return _int_matrices(tuple(lam), sort_partition(mu))


@lru_cache(maxsize=None)
def _p_in_m(lam: Partition, bins: tuple[int, ...]) -> int:
    # ways to send the parts of lam into bins with prescribed sums
    if not lam:
        return 1 if not any(bins) else 0
    first, rest = lam[0], lam[1:]
    total = 0
    seen: Counter = Counter(bins)
    for val, mult in seen.items():
        if val >= first:
            nb = list(bins)
            nb.remove(val)
            nb.append(val - first)
            total += mult * _p_in_m(rest, sort_partition(nb) + (0,) * 0)
    return total


def p_in_m(lam, mu) -> int:
    """``[m_mu] p_lam``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        return 0
    return _p_in_m(lam, mu)


def transition_to_m(basis: str, lam: Partition, mu: Partition) -> int:
    """``[m_mu] b_lam`` for a basis element ``b_lam``."""
    if sum(lam) != sum(mu):
        return 0
    if basis == "m":
        return int(lam == mu)
    if basis == "s":
        return kostka(lam, mu)
    if basis == "e":
        return bcm_count(lam, mu)
    if basis == "h":
        return int_matrix_count(lam, mu)
    if basis == "p":
        return p_in_m(lam, mu)
    raise ValueError(basis)


@lru_cache(maxsize=None)
def _parts(n: int) -> tuple[Partition, ...]:
    return tuple(partitions_of(n))


@lru_cache(maxsize=None)
def basis_in_m(basis: str, lam: Partition) -> dict[Partition, int]:
    if basis == "m":
        return {lam: 1}
    out = {}
    for mu in _parts(sum(lam)):
        c = transition_to_m(basis, lam, mu)
        if c:
            out[mu] = c
    return out


# ---------------------------------------------------------------- conversions

def _by_degree(terms: Mapping[Partition, Fraction]) -> dict[int, dict[Partition, Fraction]]:
    out: dict[int, dict[Partition, Fraction]] = {}
    for lam, c in terms.items():
        out.setdefault(sum(lam), {})[lam] = c
    return out


def _to_m(f: SymFunc) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        for mu, v in basis_in_m(f.basis, lam).items():
            out[mu] = out.get(mu, 0) + c * v
    return out


def _m_to_s(n: int, fm: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    a: dict[Partition, Fraction] = {}
    for mu in _parts(n):
        v = fm.get(mu, 0) - sum(c * kostka(lam, mu) for lam, c in a.items())
        if v:
            a[mu] = Fraction(v)
    return a


def _m_to_e(n: int, fm: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    # leading monomial of e_lam is m_{lam'}
    a: dict[Partition, Fraction] = {}
    for mu in _parts(n):
        v = fm.get(mu, 0) - sum(c * bcm_count(lam, mu) for lam, c in a.items())
        if v:
            a[conjugate(mu)] = Fraction(v)
    return a


def _m_to_p(n: int, fm: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    # p_lam involves only m_mu with mu coarser than lam; diagonal prod m_i!
    a: dict[Partition, Fraction] = {}
    for mu in reversed(_parts(n)):
        v = fm.get(mu, 0) - sum(c * p_in_m(lam, mu) for lam, c in a.items())
        if v:
            a[mu] = Fraction(v) / prod(factorial(x) for x in Counter(mu).values())
    return a


def _s_to_h(terms: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for lam, c in terms.items():
        for nu in _parts(sum(lam)):
            k = inverse_kostka(nu, lam)
            if k:
                out[nu] = out.get(nu, 0) + c * k
    return out


def _h_to_s(terms: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for lam, c in terms.items():
        for nu in _parts(sum(lam)):
            k = kostka(nu, lam)
            if k:
                out[nu] = out.get(nu, 0) + c * k
    return out


def _conj_keys(terms: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    return {conjugate(lam): c for lam, c in terms.items()}


def _from_m(fm: Mapping[Partition, Fraction], target: str) -> dict[Partition, Fraction]:
    if target == "m":
        return dict(fm)
    out: dict[Partition, Fraction] = {}
    for n, part in _by_degree(fm).items():
        if target == "s":
            out.update(_m_to_s(n, part))
        elif target == "e":
            out.update(_m_to_e(n, part))
        elif target == "p":
            out.update(_m_to_p(n, part))
        elif target == "h":
            out.update(_s_to_h(_m_to_s(n, part)))
    return out


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-express ``f`` in the basis ``target``."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    src = f.basis
    if src == target:
        return f
    if (src, target) == ("h", "s"):
        return SymFunc("s", _h_to_s(f.terms))
    if (src, target) == ("e", "s"):
        return SymFunc("s", _conj_keys(_h_to_s(f.terms)))
    if (src, target) == ("s", "h"):
        return SymFunc("h", _s_to_h(f.terms))
    if (src, target) == ("s", "e"):
        return SymFunc("e", _s_to_h(_conj_keys(f.terms)))
    if (src, target) in (("e", "h"), ("h", "e")):
        return convert(convert(f, "s"), target)
    return SymFunc(target, _from_m(_to_m(f), target))


def coefficient(f: SymFunc, basis: str, lam) -> Fraction:
    return convert(f, basis).coeff(lam)


# ---------------------------------------------------------------- products

@lru_cache(maxsize=None)
def _schur_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    from .tableaux import lr_coefficient

    if len(mu) < len(nu) or (len(mu) == len(nu) and mu < nu):
        mu, nu = nu, mu
    n = sum(mu) + sum(nu)
    out = []
    for lam in _parts(n):
        if len(lam) < len(mu) or any(lam[i] < mu[i] for i in range(len(mu))):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Ring product, returned in the basis of ``f``.

    e, h and p are multiplicative bases; Schur products use LR coefficients;
    m products are carried out in the e basis.
    """
    basis = f.basis
    g = convert(g, basis)
    out: dict[Partition, Fraction] = {}
    if basis in ("e", "h", "p"):
        for a, c in f.terms.items():
            for b, d in g.terms.items():
                lam = sort_partition(a + b)
                out[lam] = out.get(lam, 0) + c * d
        return SymFunc(basis, out)
    if basis == "s":
        for a, c in f.terms.items():
            for b, d in g.terms.items():
                for lam, lr in _schur_product(a, b):
                    out[lam] = out.get(lam, 0) + c * d * lr
        return SymFunc("s", out)
    return convert(multiply(convert(f, "e"), convert(g, "e")), basis)


def power(f: SymFunc, k: int) -> SymFunc:
    out = SymFunc(f.basis, {(): 1})
    for _ in range(k):
        out = multiply(out, f)
    return out


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """``<f, g>`` with ``<m_lam, h_mu> = delta``."""
    fm = convert(f, "m").terms
    gh = convert(g, "h").terms
    return sum((c * gh.get(lam, 0) for lam, c in fm.items()), Fraction(0))


# ---------------------------------------------------------------- involutions

def omega(f: SymFunc) -> SymFunc:
    """The ring involution swapping e and h."""
    if f.basis == "e":
        return SymFunc("h", f.terms)
    if f.basis == "h":
        return SymFunc("e", f.terms)
    if f.basis == "s":
        return SymFunc("s", _conj_keys(f.terms))
    if f.basis == "p":
        return SymFunc("p", {lam: c * (-1) ** (sum(lam) - len(lam)) for lam, c in f.terms.items()})
    return convert(SymFunc("h", convert(f, "e").terms), "m")


def hat_omega(f: SymFunc) -> SymFunc:
    """The linear involution ``m_mu -> m_{mu'}``; result in the input basis."""
    return convert(SymFunc("m", _conj_keys(convert(f, "m").terms)), f.basis)


# ---------------------------------------------------------------- predicates

def is_positive(f: SymFunc, basis: str) -> bool:
    return all(c >= 0 for c in convert(f, basis).terms.values())


def is_integral(f: SymFunc, basis: Optional[str] = None) -> bool:
    g = convert(f, basis) if basis else f
    return all(c.denominator == 1 for c in g.terms.values())


def sum_of_coeffs(f: SymFunc, basis: str) -> Fraction:
    return sum(convert(f, basis).terms.values(), Fraction(0))


def from_terms(basis: str, pairs: Iterable[tuple[Iterable[int], Number]]) -> SymFunc:
    out: dict[Partition, Fraction] = {}
    for lam, c in pairs:
        lam = as_partition(lam)
        out[lam] = out.get(lam, 0) + Fraction(c)
    return SymFunc(basis, out)


def z(lam) -> int:
    return z_of(as_partition(lam))
