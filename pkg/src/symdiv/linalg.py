"""Exact rational linear algebra on sparse vectors (dicts keyed by any hashable)."""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Optional, Sequence

Vector = Mapping[Hashable, Fraction]


def _eliminate(columns: Sequence[Vector]):
    """Row-reduce the columns; returns pivot rows and the reduced basis, each
    reduced vector carrying its combination of original columns."""
    reduced: list[tuple[Hashable, dict, dict]] = []
    for idx, col in enumerate(columns):
        vec = {key: Fraction(v) for key, v in col.items() if v}
        combo = {idx: Fraction(1)}
        for pivot, rvec, rcombo in reduced:
            c = vec.get(pivot)
            if c:
                for key, v in rvec.items():
                    vec[key] = vec.get(key, 0) - c * v
                for key, v in rcombo.items():
                    combo[key] = combo.get(key, 0) - c * v
                vec = {key: v for key, v in vec.items() if v}
        if vec:
            pivot = min(vec, key=repr)
            scale = vec[pivot]
            vec = {key: v / scale for key, v in vec.items()}
            combo = {key: v / scale for key, v in combo.items()}
            # keep earlier rows reduced against the new pivot
            new_reduced = []
            for p, rvec, rcombo in reduced:
                c = rvec.get(pivot)
                if c:
                    rvec = {key: rvec.get(key, 0) - c * vec.get(key, 0) for key in set(rvec) | set(vec)}
                    rvec = {key: v for key, v in rvec.items() if v}
                    rcombo = {key: rcombo.get(key, 0) - c * combo.get(key, 0) for key in set(rcombo) | set(combo)}
                new_reduced.append((p, rvec, rcombo))
            reduced = new_reduced + [(pivot, vec, combo)]
    return reduced


def rank(columns: Sequence[Vector]) -> int:
    return len(_eliminate(columns))


def solve(columns: Sequence[Vector], target: Vector) -> Optional[dict[int, Fraction]]:
    """Coefficients ``c`` with ``sum_i c[i] columns[i] == target``, or None."""
    reduced = _eliminate(columns)
    vec = {key: Fraction(v) for key, v in target.items() if v}
    out: dict[int, Fraction] = {}
    for pivot, rvec, rcombo in reduced:
        c = vec.get(pivot)
        if c:
            for key, v in rvec.items():
                vec[key] = vec.get(key, 0) - c * v
            for key, v in rcombo.items():
                out[key] = out.get(key, 0) + c * v
    if any(vec.values()):
        return None
    return {i: c for i, c in out.items() if c}
