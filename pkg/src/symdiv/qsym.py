"""Quasisymmetric functions in the monomial (M) and fundamental (F) bases,
plus Stanley's functional Theta with values in :class:`UniPoly`."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence, Union

from .partitions import Composition, as_composition, sort_partition
from .symfunc import SymFunc, convert
from .tableaux import descent_set, enumerate_syt

Number = Union[int, Fraction]


class UniPoly:
    """Polynomial in ``t`` with rational coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t_power(cls, k: int, c: Number = 1) -> "UniPoly":
        return cls([0] * k + [c])

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


T = UniPoly([0, 1])


class QSymFunc:
    """Sparse element of QSym in the M or F basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Optional[Mapping[Composition, Number]] = None):
        if basis not in ("M", "F"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean: dict[Composition, Fraction] = {}
        for a, c in (terms or {}).items():
            a = as_composition(a)
            clean[a] = clean.get(a, 0) + Fraction(c)
        self.terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def single(cls, basis: str, alpha, coeff: Number = 1) -> "QSymFunc":
        return cls(basis, {as_composition(alpha): coeff})

    def coeff(self, alpha) -> Fraction:
        return self.terms.get(as_composition(alpha), Fraction(0))

    def __add__(self, other: "QSymFunc") -> "QSymFunc":
        other = other if other.basis == self.basis else to_basis(other, self.basis)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return QSymFunc(self.basis, out)

    def scale(self, c: Number) -> "QSymFunc":
        return QSymFunc(self.basis, {a: c * v for a, v in self.terms.items()})

    def __sub__(self, other: "QSymFunc") -> "QSymFunc":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = to_basis(other, self.basis)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*{self.basis}{a}" if c != 1 else f"{self.basis}{a}"
            for a, c in sorted(self.terms.items(), reverse=True)
        )

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"composition": list(a), "coeff": str(c)} for a, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QSymFunc":
        return cls(data["basis"], {tuple(t["composition"]): Fraction(str(t["coeff"])) for t in data["terms"]})


def F(*alpha) -> QSymFunc:
    return QSymFunc.single("F", alpha)


def M(*alpha) -> QSymFunc:
    return QSymFunc.single("M", alpha)


# ---------------------------------------------------------------- descent sets

def descents_of(alpha: Composition) -> frozenset[int]:
    """``S_alpha = {alpha_1, alpha_1 + alpha_2, ...}`` (last partial sum excluded)."""
    out, acc = set(), 0
    for a in alpha[:-1]:
        acc += a
        out.add(acc)
    return frozenset(out)


def composition_of(n: int, S) -> Composition:
    """Inverse of :func:`descents_of` for compositions of ``n``."""
    cuts = [0] + sorted(S) + [n]
    if any(not 0 < x < n for x in S):
        raise ValueError("descent set must lie in [1, n-1]")
    if n == 0:
        return ()
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def _supersets(n: int, S: frozenset):
    free = [i for i in range(1, n) if i not in S]
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            yield S | frozenset(extra), r


def f_to_m(q: QSymFunc) -> QSymFunc:
    if q.basis == "M":
        return q
    out: dict[Composition, Fraction] = {}
    for alpha, c in q.terms.items():
        n = sum(alpha)
        for T, _ in _supersets(n, descents_of(alpha)):
            beta = composition_of(n, T)
            out[beta] = out.get(beta, 0) + c
    return QSymFunc("M", out)


def m_to_f(q: QSymFunc) -> QSymFunc:
    if q.basis == "F":
        return q
    out: dict[Composition, Fraction] = {}
    for alpha, c in q.terms.items():
        n = sum(alpha)
        for T, r in _supersets(n, descents_of(alpha)):
            beta = composition_of(n, T)
            out[beta] = out.get(beta, 0) + c * (-1) ** r
    return QSymFunc("F", out)


def to_basis(q: QSymFunc, basis: str) -> QSymFunc:
    return f_to_m(q) if basis == "M" else m_to_f(q)


# ---------------------------------------------------------------- embedding of Sym

def schur_to_f(lam) -> QSymFunc:
    """``s_lam = sum_T F_{Des(T)}`` over standard tableaux."""
    lam = tuple(lam)
    n = sum(lam)
    out: dict[Composition, int] = {}
    for t in enumerate_syt(lam):
        alpha = composition_of(n, descent_set(t))
        out[alpha] = out.get(alpha, 0) + 1
    return QSymFunc("F", out)


def sym_to_f(f: SymFunc) -> QSymFunc:
    out = QSymFunc("F")
    for lam, c in convert(f, "s").terms.items():
        out = out + schur_to_f(lam).scale(c)
    return out


def _rearrangements(lam):
    lam = tuple(lam)
    if not lam:
        yield ()
        return
    for v in sorted(set(lam), reverse=True):
        rest = list(lam)
        rest.remove(v)
        for r in _rearrangements(rest):
            yield (v,) + r


def sym_to_m(f: SymFunc) -> QSymFunc:
    """``m_lam = sum of M_alpha`` over distinct rearrangements of ``lam``."""
    out: dict[Composition, Fraction] = {}
    for lam, c in convert(f, "m").terms.items():
        for alpha in _rearrangements(lam):
            out[alpha] = out.get(alpha, 0) + c
    return QSymFunc("M", out)


def qsym_to_sym(q: QSymFunc) -> SymFunc:
    """Recover a symmetric function (m basis) from its M-expansion;
    raises if ``q`` is not symmetric."""
    qm = f_to_m(q)
    out = {}
    for alpha, c in qm.terms.items():
        lam = sort_partition(alpha)
        if lam in out and out[lam] != c:
            raise ValueError("not symmetric")
        out[lam] = c
    res = SymFunc("m", out)
    if sym_to_m(res) != qm:
        raise ValueError("not symmetric")
    return res


# ---------------------------------------------------------------- division maps

def rowdiv_f(q: QSymFunc, k: int) -> QSymFunc:
    """``F_alpha -> F_{alpha/k}`` when ``k`` divides every part, else 0."""
    q = m_to_f(q)
    return QSymFunc("F", {
        tuple(a // k for a in alpha): c
        for alpha, c in q.terms.items() if all(a % k == 0 for a in alpha)
    })


def rowdiv_m(q: QSymFunc, k: int) -> QSymFunc:
    q = f_to_m(q)
    return QSymFunc("M", {
        tuple(a // k for a in alpha): c
        for alpha, c in q.terms.items() if all(a % k == 0 for a in alpha)
    })


def _unthicken(alpha: Composition, k: int) -> Optional[Composition]:
    if len(alpha) % k:
        return None
    out = []
    for i in range(0, len(alpha), k):
        block = alpha[i:i + k]
        if len(set(block)) != 1:
            return None
        out.append(block[0])
    return tuple(out)


def coldiv_m(q: QSymFunc, k: int) -> QSymFunc:
    """``M_alpha -> M_beta`` when ``alpha`` is ``beta`` with every part
    repeated ``k`` times in a row, else 0.  On symmetric functions this
    agrees with ``m_mu -> m_{(mu'/k)'}``."""
    q = f_to_m(q)
    out: dict[Composition, Fraction] = {}
    for alpha, c in q.terms.items():
        beta = _unthicken(alpha, k)
        if beta is not None:
            out[beta] = out.get(beta, 0) + c
    return QSymFunc("M", out)


# ---------------------------------------------------------------- Theta

def _theta_f(alpha: Composition) -> UniPoly:
    if not alpha:
        return UniPoly([1])
    if all(a == 1 for a in alpha[1:]):
        return T * UniPoly([-1, 1]) ** (alpha[0] - 1)
    return UniPoly()


def theta(f: Union[SymFunc, QSymFunc]) -> UniPoly:
    """Stanley's functional: ``e_mu -> t^{l(mu)}``; on QSym,
    ``F_{(a, 1^m)} -> t (t-1)^{a-1}`` and other F's vanish."""
    out = UniPoly()
    if isinstance(f, QSymFunc):
        for alpha, c in m_to_f(f).terms.items():
            out = out + _theta_f(alpha) * c
        return out
    for lam, c in convert(f, "e").terms.items():
        out = out + UniPoly.t_power(len(lam), c)
    return out


def hook(a: int, legs: int) -> tuple[int, ...]:
    return (a,) + (1,) * legs


def theta_hook(i: int) -> UniPoly:
    """``t (t-1)^i``."""
    return T * UniPoly([-1, 1]) ** i

