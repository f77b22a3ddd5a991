"""Polynomials in finitely many variables, divided differences, key and
atom polynomials."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Mapping, Optional, Sequence, Union

from . import linalg
from .partitions import weak_compositions
from .symfunc import SymFunc, convert

Number = Union[int, Fraction]
Exponent = tuple[int, ...]


class MultivarPoly:
    """Sparse polynomial in ``x_1..x_nvars`` with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, Number]] = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for a, c in (terms or {}).items():
            a = tuple(a)
            if len(a) != nvars or any(x < 0 for x in a):
                raise ValueError(f"bad exponent {a} for {nvars} variables")
            clean[a] = clean.get(a, 0) + Fraction(c)
        self.terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff: Number = 1) -> "MultivarPoly":
        return cls(len(alpha), {tuple(alpha): coeff})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultivarPoly":
        return cls.monomial(tuple(1 if j == i - 1 else 0 for j in range(nvars)))

    def _same(self, other: "MultivarPoly"):
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other: "MultivarPoly") -> "MultivarPoly":
        self._same(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return MultivarPoly(self.nvars, out)

    def scale(self, c: Number) -> "MultivarPoly":
        return MultivarPoly(self.nvars, {a: c * v for a, v in self.terms.items()})

    def __neg__(self) -> "MultivarPoly":
        return self.scale(-1)

    def __sub__(self, other: "MultivarPoly") -> "MultivarPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultivarPoly":
        if not isinstance(other, MultivarPoly):
            return self.scale(other)
        self._same(other)
        out: dict[Exponent, Fraction] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out.get(key, 0) + c * d
        return MultivarPoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, MultivarPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {sum(a) for a in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{a}" for a, c in sorted(self.terms.items(), reverse=True))

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exponent": list(a), "coeff": str(c)} for a, c in sorted(self.terms.items())],
        }


def _check_index(f: MultivarPoly, i: int):
    if not 1 <= i < f.nvars:
        raise ValueError(f"need 1 <= i < {f.nvars}, got {i}")


def swap(f: MultivarPoly, i: int) -> MultivarPoly:
    """``s_i f``: exchange ``x_i`` and ``x_{i+1}``."""
    _check_index(f, i)
    out = {}
    for a, c in f.terms.items():
        b = list(a)
        b[i - 1], b[i] = b[i], b[i - 1]
        out[tuple(b)] = c
    return MultivarPoly(f.nvars, out)


def divided_difference(f: MultivarPoly, i: int) -> MultivarPoly:
    """``(f - s_i f) / (x_i - x_{i+1})``, using the quotient of each monomial:
    ``(x^p y^q - x^q y^p)/(x - y) = sum_j x^{p-1-j} y^{q+j}`` for ``p > q``."""
    _check_index(f, i)
    out: dict[Exponent, Fraction] = {}
    for a, c in f.terms.items():
        p, q = a[i - 1], a[i]
        if p == q:
            continue
        sign = 1 if p > q else -1
        hi, lo = max(p, q), min(p, q)
        for j in range(hi - lo):
            b = list(a)
            b[i - 1], b[i] = hi - 1 - j, lo + j
            key = tuple(b)
            out[key] = out.get(key, 0) + sign * c
    return MultivarPoly(f.nvars, out)


def pi_op(f: MultivarPoly, i: int) -> MultivarPoly:
    """``pi_i f = d_i(x_i f)``."""
    return divided_difference(MultivarPoly.var(i, f.nvars) * f, i)


def theta_op(f: MultivarPoly, i: int) -> MultivarPoly:
    """``theta_i f = x_{i+1} d_i f``."""
    return MultivarPoly.var(i + 1, f.nvars) * divided_difference(f, i)


def reduced_word(alpha: Sequence[int], strategy: str = "first") -> list[int]:
    """Indices ``i_1, .., i_m`` with ``kappa_alpha = pi_{i_1} .. pi_{i_m} x^lam``.

    Built by bubble-sorting ``alpha`` into decreasing order; each step swaps
    an ascent (the first or the last one, per ``strategy``)."""
    a = list(alpha)
    word = []
    while True:
        ascents = [i for i in range(len(a) - 1) if a[i] < a[i + 1]]
        if not ascents:
            return word
        i = ascents[0] if strategy == "first" else ascents[-1]
        a[i], a[i + 1] = a[i + 1], a[i]
        word.append(i + 1)


def _apply_word(alpha: Sequence[int], op, strategy: str) -> MultivarPoly:
    lam = tuple(sorted(alpha, reverse=True))
    f = MultivarPoly.monomial(lam)
    for i in reversed(reduced_word(alpha, strategy)):
        f = op(f, i)
    return f


@lru_cache(maxsize=None)
def _key(alpha: Exponent, strategy: str) -> MultivarPoly:
    return _apply_word(alpha, pi_op, strategy)


@lru_cache(maxsize=None)
def _atom(alpha: Exponent, strategy: str) -> MultivarPoly:
    return _apply_word(alpha, theta_op, strategy)


def key_polynomial(alpha: Sequence[int], strategy: str = "first") -> MultivarPoly:
    """Demazure character ``kappa_alpha`` in ``len(alpha)`` variables."""
    return _key(tuple(alpha), strategy)


def atom_polynomial(alpha: Sequence[int], strategy: str = "first") -> MultivarPoly:
    return _atom(tuple(alpha), strategy)


def rowdiv_poly(f: MultivarPoly, k: int) -> MultivarPoly:
    """Keep monomials whose exponents are all divisible by ``k``, divide them."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return MultivarPoly(f.nvars, {
        tuple(x // k for x in a): c for a, c in f.terms.items() if all(x % k == 0 for x in a)
    })


def _basis_expand(f: MultivarPoly, family) -> dict[Exponent, Fraction]:
    out: dict[Exponent, Fraction] = {}
    for d in sorted(f.degrees()):
        part = MultivarPoly(f.nvars, {a: c for a, c in f.terms.items() if sum(a) == d})
        index = list(weak_compositions(d, f.nvars))
        coeffs = linalg.solve([family(a).terms for a in index], part.terms)
        if coeffs is None:
            raise ValueError("polynomial is outside the span of the basis")
        for i, c in coeffs.items():
            out[index[i]] = c
    return dict(sorted(out.items(), reverse=True))


def key_basis_expand(f: MultivarPoly) -> dict[Exponent, Fraction]:
    return _basis_expand(f, key_polynomial)


def atom_basis_expand(f: MultivarPoly) -> dict[Exponent, Fraction]:
    return _basis_expand(f, atom_polynomial)


def from_expansion(expansion: Mapping[Exponent, Number], family=key_polynomial) -> MultivarPoly:
    items = list(expansion.items())
    if not items:
        raise ValueError("empty expansion has no variable count")
    out = MultivarPoly(len(items[0][0]))
    for a, c in items:
        out = out + family(a).scale(c)
    return out


def symfunc_to_poly(f: SymFunc, nvars: int) -> MultivarPoly:
    """Restrict a symmetric function to ``x_1..x_nvars``."""
    out: dict[Exponent, Fraction] = {}
    for lam, c in convert(f, "m").terms.items():
        if len(lam) > nvars:
            continue
        padded = lam + (0,) * (nvars - len(lam))
        for a in set(permutations(padded)):
            out[a] = out.get(a, 0) + c
    return MultivarPoly(nvars, out)


def compositions_bounded(bound: int):
    """Weak compositions with nonzero last part, ``|alpha| <= bound``."""
    for total in range(1, bound + 1):
        for length in range(1, total + 1):
            for a in weak_compositions(total, length):
                if a[-1]:
                    yield a


def atom_positivity_scan(bound: int, k: int) -> dict:
    """Atom expansion of ``rowdiv_poly(kappa_alpha, k)`` for all ``|alpha| <= bound``."""
    checked, violations = 0, []
    for alpha in compositions_bounded(bound):
        image = rowdiv_poly(key_polynomial(alpha), k)
        checked += 1
        if not image:
            continue
        exp = atom_basis_expand(image)
        if any(c < 0 for c in exp.values()):
            violations.append({
                "alpha": list(alpha),
                "atoms": [{"alpha": list(a), "coeff": str(c)} for a, c in exp.items()],
            })
    return {"k": k, "bound": bound, "checked": checked, "violations": violations}


def schur_poly(lam, nvars: int) -> MultivarPoly:
    return symfunc_to_poly(SymFunc.single("s", tuple(lam)), nvars)
