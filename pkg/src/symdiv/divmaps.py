"""Partition division maps, their adjoints, Verschiebung and Adams operators."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .partitions import (
    Partition,
    a_shape,
    k_quotient,
    normalize_skew,
    partitions_of,
    scale,
    thicken,
)
from .symfunc import SymFunc, convert, multiply, transition_to_m
from .tableaux import inverse_kostka, skew_lr_expansion


def _check_k(k: int):
    if k < 1:
        raise ValueError("k must be a positive integer")


def _divide(f: SymFunc, k: int, stretch) -> SymFunc:
    # [m_mu] of the image is [m_{stretch(mu)}] of f, read off each basis element
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        n, r = divmod(sum(lam), k)
        if r:
            continue
        for mu in partitions_of(n):
            v = transition_to_m(f.basis, lam, stretch(mu, k))
            if v:
                out[mu] = out.get(mu, 0) + c * v
    return SymFunc("m", out)


def rowdiv(f: SymFunc, k: int, basis: Optional[str] = None) -> SymFunc:
    """``m_mu -> m_{mu/k}`` if ``k`` divides every part of ``mu``, else 0.

    The result is returned in ``basis`` (default: the basis of ``f``).
    """
    _check_k(k)
    return convert(_divide(f, k, scale), basis or f.basis)


def coldiv(f: SymFunc, k: int, basis: Optional[str] = None) -> SymFunc:
    """``m_mu -> m_{(mu'/k)'}`` if ``k`` divides every multiplicity, else 0."""
    _check_k(k)
    return convert(_divide(f, k, thicken), basis or f.basis)


def _on_h(f: SymFunc, rule) -> SymFunc:
    out: dict[Partition, Fraction] = {}
    for lam, c in convert(f, "h").terms.items():
        nu = rule(lam)
        if nu is not None:
            out[nu] = out.get(nu, 0) + c
    return convert(SymFunc("h", out), f.basis)


def row_adjoint(f: SymFunc, k: int) -> SymFunc:
    """Ring map ``h_r -> h_{kr}``; adjoint of :func:`rowdiv`."""
    _check_k(k)
    return _on_h(f, lambda lam: scale(lam, k))


def col_adjoint(f: SymFunc, k: int) -> SymFunc:
    """Ring map ``h_r -> h_r^k``; adjoint of :func:`coldiv`."""
    _check_k(k)
    return _on_h(f, lambda lam: thicken(lam, k))


def row_adjoint_schur(lam, k: int) -> SymFunc:
    """``s_{a_lam}`` for the skew shape ``(k lam + (k-1) rho)/(k-1) rho``,
    expanded into straight Schur functions by LR fillings."""
    _check_k(k)
    shape = normalize_skew(a_shape(tuple(lam), k))
    return SymFunc("s", skew_lr_expansion(shape))


def verschiebung(f: SymFunc, k: int) -> SymFunc:
    """Ring map ``h_m -> h_{m/k}`` (0 unless ``k | m``), equivalently
    ``p_m -> k p_{m/k}``.  Schur input is expanded through special rim hook
    tableaux whose hooks all have length divisible by ``k``."""
    _check_k(k)
    if f.basis == "s":
        out: dict[Partition, Fraction] = {}
        for lam, c in f.terms.items():
            n, r = divmod(sum(lam), k)
            if r:
                continue
            for nu in partitions_of(n):
                v = inverse_kostka(scale(nu, k), lam)
                if v:
                    out[nu] = out.get(nu, 0) + c * v
        return convert(SymFunc("h", out), "s")
    return _on_h(f, lambda lam: tuple(x // k for x in lam) if all(x % k == 0 for x in lam) else None)


def verschiebung_p(f: SymFunc, k: int) -> SymFunc:
    """Verschiebung computed on the power-sum basis."""
    _check_k(k)
    out: dict[Partition, Fraction] = {}
    for lam, c in convert(f, "p").terms.items():
        if all(x % k == 0 for x in lam):
            nu = tuple(x // k for x in lam)
            out[nu] = out.get(nu, 0) + c * k ** len(lam)
    return convert(SymFunc("p", out), f.basis)


def adams(f: SymFunc, k: int) -> SymFunc:
    """``p_lam -> p_{k lam}``."""
    _check_k(k)
    out = {scale(lam, k): c for lam, c in convert(f, "p").terms.items()}
    return convert(SymFunc("p", out), f.basis)


def albion_product(lam, k: int) -> SymFunc:
    """``sign * prod_r s_{lam^(r)}`` over the k-quotient of ``lam``; zero when
    ``lam`` has a nonempty k-core."""
    q = k_quotient(tuple(lam), k)
    if q.sign is None:
        return SymFunc("s")
    out = SymFunc("s", {(): q.sign})
    for comp in q.components:
        out = multiply(out, SymFunc("s", {comp: 1}))
    return out
