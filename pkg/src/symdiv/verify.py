"""Named verification checks, each a cross-check of independent routes."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from . import chromatic as chrom
from .chromatic import ResourceLimitError
from . import demazure as dz
from . import expansions as ex
from .divmaps import albion_product, coldiv, rowdiv, verschiebung, verschiebung_p
from .partitions import k_quotient, partitions_of, scale
from .qsym import sym_to_f, theta
from .symfunc import SymFunc, convert, is_positive


@dataclass
class RunConfig:
    nmax: int = 4
    k_values: tuple[int, ...] = (2, 3)
    workers: int = 1
    fmt: str = "json"
    seed: int = 0
    bound: int = 5
    max_degree: int = 12

    def __post_init__(self):
        self.k_values = tuple(self.k_values)
        if self.nmax < 1 or self.bound < 1 or self.max_degree < 1:
            raise ValueError("bounds must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if any(k < 1 for k in self.k_values):
            raise ValueError("k values must be positive")
        if self.fmt not in ("json", "tsv", "pretty"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class CheckResult:
    tag: str
    passed: bool
    details: dict = field(default_factory=dict)
    seconds: float = 0.0


def _degree_guard(cfg: RunConfig, degree: int):
    if degree > cfg.max_degree:
        raise ResourceLimitError(f"degree {degree} exceeds the configured bound {cfg.max_degree}")


def _s(lam) -> SymFunc:
    return SymFunc.single("s", tuple(lam))


def _e(mu) -> SymFunc:
    return SymFunc.single("e", tuple(mu))


# ---------------------------------------------------------------- checks

def check_schur_expansion(cfg: RunConfig) -> dict:
    expected = SymFunc("s", {(2, 2, 1): 1, (2, 1, 1, 1): 1, (1, 1, 1, 1, 1): 7})
    a, b = ex.rowdiv_schur_two_ways((4, 4, 2), 2)
    direct = rowdiv(_s((4, 4, 2)), 2, "s")
    fexp = ex.rowdiv_schur_f_expansion((4, 4, 2), 2)
    ok = a == b == direct == expected and fexp == sym_to_f(expected)
    failures = []
    for k in cfg.k_values:
        for n in range(1, cfg.nmax + 1):
            _degree_guard(cfg, k * n)
            for lam in partitions_of(k * n):
                y, l = ex.rowdiv_schur_two_ways(lam, k)
                d = rowdiv(_s(lam), k, "s")
                if not (y == l == d and is_positive(d, "s")):
                    failures.append(list(lam))
    return {"passed": ok and not failures, "failures": failures}


def check_e_expansion(cfg: RunConfig) -> dict:
    mu = (4, 3, 2, 2, 2, 1)
    f = rowdiv(_e(mu), 2)
    m_ok = convert(f, "m") == SymFunc("m", {
        (3, 2, 1, 1): 7, (3, 1, 1, 1, 1): 108, (2, 2, 2, 1): 87,
        (2, 2, 1, 1, 1): 1298, (2, 1, 1, 1, 1, 1): 17040, (1,) * 7: 216300})
    e_ok = convert(f, "e") == SymFunc("e", {
        (4, 2, 1): 7, (4, 3): 66, (5, 1, 1): 80, (5, 2): 863, (6, 1): 10940, (7,): 115192})
    mc = ex.minimal_coefficient(mu, 2)
    small = (
        rowdiv(_e((2, 1, 1)), 2, "s") == SymFunc("s", {(1, 1): 2})
        and rowdiv(_e((2, 2, 2, 1, 1)), 2, "e") == SymFunc("e", {(4,): 136, (2, 2): 2, (3, 1): 14})
        and rowdiv(_e((2,) + (1,) * 7), 3, "e") == SymFunc("e", {(2, 1): 21, (3,): 567})
    )
    schur_route = ex.rowdiv_e_schur(mu, 2) == convert(f, "s")
    minimal = mc.kappa == (4, 2, 1) and mc.value == 7 and mc.agrees
    return {"passed": m_ok and e_ok and small and schur_route and minimal,
            "m_expansion": m_ok, "e_expansion": e_ok, "small_examples": small,
            "schur_route": schur_route, "minimal_coefficient": minimal}


def check_sum_by_length(cfg: RunConfig) -> dict:
    mu = (2,) + (1,) * 6
    r = ex.sum_e_by_length(mu, 2, 2)
    k_sh = (ex.count_sh(4, 2, 1, mu), ex.count_sh(4, 2, 2, mu))
    non_fixed = k_sh[0] - r.fixed_points
    r2 = ex.sum_e_by_length((1,) * 6, 2, 1)
    ok = r.agree and r.direct == 112 and k_sh == (124, 6) and non_fixed == 12 and r2.agree and r2.direct == 48
    return {"passed": ok, "values": list(r), "K_SH": list(k_sh), "non_fixed": non_fixed, "ones": list(r2)}


def check_euler(cfg: RunConfig) -> dict:
    e61 = [ex.euler_number((1,) * 6, 2, m) for m in "abc"]
    e588 = [ex.euler_number((2,) + (1,) * 7, 3, m) for m in "abc"]
    ok = e61 == [61] * 3 == [ex.down_up_count(6)] * 3 and e588 == [588] * 3
    failures = []
    for k in cfg.k_values:
        for n in range(1, cfg.nmax + 1):
            if k * n > 8:
                continue
            for mu in partitions_of(k * n):
                vals = {ex.euler_number(mu, k, m) for m in "abc"}
                vals.add(ex.euler_number(mu[::-1], k, "c"))
                if len(vals) != 1:
                    failures.append([k, list(mu)])
    return {"passed": ok and not failures, "E_2_1^6": e61, "E_3_21^7": e588, "failures": failures}


def check_coldiv_negativity(cfg: RunConfig) -> dict:
    f = coldiv(_s((10, 10, 2, 2)), 2, "s")
    g = coldiv(_s((9, 9, 2, 2, 1, 1)), 2, "s")
    negatives = sorted(lam for lam, c in f.terms.items() if c < 0)
    witness = f.coeff((3, 3, 3, 3))
    ok = negatives == [(3, 3, 3, 3)] and witness == -14 and g.coeff((3, 3, 3, 3)) == -20
    return {"passed": ok, "witness": str(witness), "second_witness": str(g.coeff((3, 3, 3, 3))),
            "terms": len(f.terms)}


V2_IMAGES = {
    (5,): {(5,): 1},
    (4, 1): {(5,): 1, (4, 1): 1},
    (3, 2): {(5,): 1, (3, 2): 1, (4, 1): 1},
    (3, 1, 1): {(3, 2): 1, (4, 1): 1, (3, 1, 1): 1},
    (2, 2, 1): {(3, 2): 1, (4, 1): 1, (2, 2, 1): 1, (3, 1, 1): 1},
    (2, 1, 1, 1): {(3, 2): 1, (2, 2, 1): 1, (3, 1, 1): 1, (2, 1, 1, 1): 1},
    (1, 1, 1, 1, 1): {(2, 2, 1): 1, (2, 1, 1, 1): 1, (1, 1, 1, 1, 1): 1},
}


def check_verschiebung(cfg: RunConfig) -> dict:
    shown = all(verschiebung(_s(scale(lam, 2)), 2) == SymFunc("s", v) for lam, v in V2_IMAGES.items())
    h_fail, albion_fail = [], []
    for k in range(1, 5):
        for n in range(1, 6):
            for lam in partitions_of(n):
                if k >= len(lam) and verschiebung(_s(scale(lam, k)), k) != SymFunc("h", {lam: 1}):
                    h_fail.append([k, list(lam)])
    for n in range(0, 7, 2):
        for lam in partitions_of(n):
            if k_quotient(lam, 2).sign is None:
                continue
            v = verschiebung(_s(lam), 2)
            if v != albion_product(lam, 2) or v != verschiebung_p(_s(lam), 2):
                albion_fail.append(list(lam))
    return {"passed": shown and not h_fail and not albion_fail, "displayed": shown,
            "h_failures": h_fail, "albion_failures": albion_fail}


def check_gamma(cfg: RunConfig) -> dict:
    closed = all(ex.gamma_coeffs(n, 2) == ex.gamma_closed_form_k2(n) for n in range(0, 11))
    nonneg = all(
        all(g >= 0 for g in ex.gamma_coeffs(n, k)) and ex.gamma_identity_holds(n, k, ex.gamma_coeffs(n, k))
        for k in range(1, 5) for n in range(0, 9)
    )
    via = all(ex.gamma_via_rowdiv(n, 2) == ex.gamma_coeffs(n, 2) for n in range(1, 5))
    return {"passed": closed and nonneg and via, "closed_form": closed, "nonnegative": nonneg,
            "rowdiv_route": via}


def check_ass(cfg: RunConfig) -> dict:
    hpos = all(is_positive(convert(ex.omega_rowdiv_e((1,) * (2 * n), 2), "h"), "h") for n in range(1, 6))
    phi = all(ex.ass_check(n, 2) for n in range(1, 5))
    series = all(ex.a_nk_series(n, 2) == ex.omega_rowdiv_e((1,) * (2 * n), 2) for n in range(1, 5))
    return {"passed": hpos and phi and series, "h_positive": hpos, "phi_match": phi,
            "generating_function": series}


def check_p_positivity(cfg: RunConfig) -> dict:
    failures = []
    for k in (2, 3):
        for n in range(1, 8 // k + 1):
            for mu in partitions_of(k * n):
                for nu in partitions_of(n):
                    a = ex.a_coefficient(mu, nu, k)
                    if a < 0 or a.denominator != 1:
                        failures.append(["a", k, list(mu), list(nu)])
                if ex.p_expansion_omega_rowdiv_e(mu, k) != ex.omega_rowdiv_e(mu, k):
                    failures.append(["p", k, list(mu)])
    for k in range(1, 9):
        for r in range(1, 8 // k + 1):
            a, b, c = ex.f_kr_three_ways(k, r)
            if not (a == b == c and is_positive(c, "m")):
                failures.append(["f", k, r])
    return {"passed": not failures, "failures": failures}


def check_properties(cfg: RunConfig) -> dict:
    failures = []
    for n in range(0, min(cfg.max_degree, 8) + 1):
        for lam in partitions_of(n):
            for b in "mehps":
                f = SymFunc.single(b, lam)
                if any(convert(convert(f, t), b) != f for t in "mehps"):
                    failures.append(["round-trip", b, list(lam)])
    for n in range(1, cfg.nmax + 1):
        for k in cfg.k_values:
            if k * n > cfg.max_degree:
                continue
            for lam in partitions_of(k * n):
                if not is_positive(rowdiv(_s(lam), k, "s"), "s"):
                    failures.append(["schur-positivity", k, list(lam)])
    thetas = all(
        theta(rowdiv(_e(mu), k)) == ex.theta_sh_formula(mu, k)
        for k in (2, 3) for n in range(1, 8 // k + 1) for mu in partitions_of(k * n)
    )
    if not thetas:
        failures.append(["theta"])
    return {"passed": not failures, "failures": failures}


def check_chromatic(cfg: RunConfig) -> dict:
    failures = []
    for n in range(1, 6):
        for g in chrom.all_graphs(n):
            if chrom.phi_k_stable(g, 1) != chrom.acyclic_orientations(g):
                failures.append(["ao", g.to_json()])
    for n in range(1, min(cfg.nmax, 6) + 1):
        for g in chrom.all_graphs(n) if n <= 4 else [chrom.path_graph(n), chrom.complete_graph(n)]:
            for k in (1, 2, 3):
                a, b = chrom.phi_k_chromatic(g, k)
                if a != b or (n % k and a != 0):
                    failures.append(["phi", k, g.to_json()])
    return {"passed": not failures, "failures": failures}


def check_demazure(cfg: RunConfig) -> dict:
    image = dz.rowdiv_poly(dz.key_polynomial((0, 3, 1, 4)), 2)
    keys = dz.key_basis_expand(image) == {
        (0, 2, 1, 1): 1, (1, 1, 0, 2): 1, (1, 1, 1, 1): 1, (1, 2, 0, 1): -1}
    atoms = dz.atom_basis_expand(image) == {a: 1 for a in [
        (0, 2, 1, 1), (1, 1, 0, 2), (1, 1, 1, 1), (1, 1, 2, 0), (1, 2, 0, 1),
        (1, 2, 1, 0), (2, 0, 1, 1), (2, 1, 0, 1), (2, 1, 1, 0)]}
    scan = dz.atom_positivity_scan(cfg.bound, 2)
    return {"passed": keys and atoms and not scan["violations"], "keys": keys, "atoms": atoms,
            "scan_checked": scan["checked"], "violations": scan["violations"]}


CHECKS: dict[str, Callable[[RunConfig], dict]] = {
    "thm-schur-expansion": check_schur_expansion,
    "e-expansion": check_e_expansion,
    "sum-by-length": check_sum_by_length,
    "euler": check_euler,
    "coldiv-negativity": check_coldiv_negativity,
    "verschiebung": check_verschiebung,
    "gamma": check_gamma,
    "ass": check_ass,
    "p-positivity": check_p_positivity,
    "properties": check_properties,
    "chromatic": check_chromatic,
    "demazure": check_demazure,
}


def run_checks(tags: list[str], cfg: RunConfig, clock: Optional[Callable[[], float]] = None) -> list[CheckResult]:
    """Run the named checks in the given order (``all`` expands to every tag)."""
    if "all" in tags:
        tags = list(CHECKS)
    unknown = [t for t in tags if t not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    clock = clock or time.perf_counter
    results = []
    for tag in tags:
        start = clock()
        details = CHECKS[tag](cfg)
        results.append(CheckResult(tag, bool(details.pop("passed")), details, clock() - start))
    return results

