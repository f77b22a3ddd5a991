"""Expansions of division-map images, each computed by independent routes
that are compared against each other."""
from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import NamedTuple, Optional, Sequence

from .divmaps import rowdiv
from .partitions import (
    Partition,
    SkewShape,
    a_shape,
    compositions_of,
    conjugate,
    dominance_leq,
    padded,
    partitions_of,
    scale,
    skew_shape,
    sort_partition,
    staircase,
    z_of,
)
from .qsym import QSymFunc, UniPoly, composition_of, theta_hook
from .symfunc import SymFunc, convert, kostka, multiply, omega, skew_kostka, transition_to_m
from .tableaux import (
    count_fixed_points,
    count_sh,
    count_yssyt_k,
    descent_set,
    enumerate_sh_columns,
    enumerate_syt_k,
    lr_coefficient,
    r_min_columns,
    skew_lr_expansion,
)


def _check_divides(k: int, size: int):
    if k < 1:
        raise ValueError("k must be a positive integer")
    if size % k:
        raise ValueError(f"k={k} does not divide {size}")


def skew_schur(shape: SkewShape) -> SymFunc:
    return SymFunc("s", skew_lr_expansion(shape))


# ---------------------------------------------------------------- Schur expansions

def rowdiv_schur_two_ways(shape, k: int) -> tuple[SymFunc, SymFunc]:
    """Schur expansion of ``rowdiv(s_shape, k)`` by counting k-Yamanouchi
    fillings and by Littlewood-Richardson coefficients."""
    if not isinstance(shape, SkewShape):
        shape = skew_shape(shape)
    _check_divides(k, shape.size())
    n = shape.size() // k
    yam = {nu: count_yssyt_k(shape, scale(nu, k), k) for nu in partitions_of(n)}
    pieces = skew_lr_expansion(shape)
    lr: dict[Partition, int] = {}
    for nu in partitions_of(n):
        a = a_shape(nu, k)
        lr[nu] = sum(c * lr_coefficient(a.outer, a.inner, theta) for theta, c in pieces.items())
    return SymFunc("s", yam), SymFunc("s", lr)


def rowdiv_schur_f_expansion(lam, k: int) -> QSymFunc:
    """``sum F_{Des(T)/k}`` over standard tableaux with every descent a multiple of k."""
    lam = tuple(lam)
    n = sum(lam)
    _check_divides(k, n)
    out: dict = {}
    for t in enumerate_syt_k(lam, k):
        alpha = composition_of(n // k, {d // k for d in descent_set(t)})
        out[alpha] = out.get(alpha, 0) + 1
    return QSymFunc("F", out)


def rowdiv_e_schur(mu, k: int) -> SymFunc:
    """``sum_lam K_{a_lam', mu} s_lam``."""
    mu = tuple(mu)
    _check_divides(k, sum(mu))
    out = {}
    for lam in partitions_of(sum(mu) // k):
        c = skew_kostka(a_shape(lam, k).conjugate(), mu)
        if c:
            out[lam] = c
    return SymFunc("s", out)


class MinimalCoefficient(NamedTuple):
    kappa: Optional[Partition]
    value: Fraction
    agrees: bool


def minimal_coefficient(mu, k: int) -> MinimalCoefficient:
    """Leading monomial term ``m_{kappa'}`` of ``rowdiv(e_mu, k)`` (its
    support is dominated by ``kappa'``) and whether its coefficient equals
    ``[e_kappa] rowdiv(e_mu, k)``, ``kappa`` being the dominance-least e-term.
    A zero image gives ``kappa = None`` and value 0 on both sides."""
    f = rowdiv(SymFunc.single("e", sort_partition(mu)), k, "m")
    if not f:
        return MinimalCoefficient(None, Fraction(0), True)
    support = list(f.terms)
    top = [a for a in support if all(dominance_leq(b, a) for b in support)]
    if not top:
        raise ValueError("monomial support has no dominance-greatest element")
    lead = top[0]
    kappa = conjugate(lead)
    value = f.terms[lead]
    return MinimalCoefficient(kappa, value, value == convert(f, "e").coeff(kappa))


# ---------------------------------------------------------------- Euler numbers

def _count_block_words(content: Sequence[int], k: int) -> int:
    # strict descents inside each k-block, weak ascents between blocks
    remaining = list(content)
    total_len = sum(content)

    def rec(pos: int, prev: int) -> int:
        if pos == total_len:
            return 1
        count = 0
        inside = pos % k != 0
        for v in range(len(remaining)):
            if not remaining[v]:
                continue
            if pos and (v >= prev if inside else v < prev):
                continue
            remaining[v] -= 1
            count += rec(pos + 1, v)
            remaining[v] += 1
        return count

    return rec(0, -1)


def euler_number(mu, k: int, model: str = "a") -> int:
    """``E_{k,mu}``: (a) fillings of SH(0), (b) sum of e-coefficients of
    ``rowdiv(e_mu, k)``, (c) block-descent words with content ``mu``."""
    mu = tuple(mu)
    _check_divides(k, sum(mu))
    n = sum(mu) // k
    if model == "a":
        return count_sh(n, k, 0, mu)
    if model == "b":
        total = sum(rowdiv(SymFunc.single("e", sort_partition(mu)), k, "e").terms.values())
        return int(total)
    if model == "c":
        return _count_block_words(mu, k)
    raise ValueError(f"unknown model {model!r}")


def disjoint_columns(heights: Sequence[int]) -> SkewShape:
    """Skew shape made of columns of the given heights, each strictly
    north-east of the previous one; its Schur function is ``e_heights``."""
    heights = [c for c in heights if c]
    outer, inner = [], []
    for j in range(len(heights) - 1, -1, -1):
        outer += [j + 1] * heights[j]
        inner += [j] * heights[j]
    return skew_shape(outer, inner)


def euler_via_yamanouchi(mu, k: int) -> int:
    """``[s_{1^n}] rowdiv(e_mu, k)`` as a count of k-Yamanouchi fillings."""
    mu = tuple(mu)
    _check_divides(k, sum(mu))
    n = sum(mu) // k
    return count_yssyt_k(disjoint_columns(mu), (k,) * n, k)


def down_up_count(n: int) -> int:
    """Brute-force count of permutations ``w_1 > w_2 < w_3 > ...`` of [n]."""
    return sum(
        1 for w in permutations(range(n))
        if all((w[i] > w[i + 1]) == (i % 2 == 0) for i in range(n - 1))
    )


# ---------------------------------------------------------------- sums by length

def alternating_sum(mu, k: int, r: int) -> int:
    mu = tuple(mu)
    n = sum(mu) // k
    return sum(
        (-1) ** (i - r + 1) * comb(i, r - 1) * count_sh(n, k, i, mu)
        for i in range(r - 1, n)
    )


class SumByLength(NamedTuple):
    direct: int
    alternating: int
    fixed_points: int
    greedy: int

    @property
    def agree(self) -> bool:
        return len(set(self)) == 1


def sum_e_by_length(mu, k: int, r: int) -> SumByLength:
    """``sum_{l(nu)=r} [e_nu] rowdiv(e_mu, k)`` computed four ways."""
    mu = tuple(mu)
    _check_divides(k, sum(mu))
    n = sum(mu) // k
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= {n}")
    f = rowdiv(SymFunc.single("e", sort_partition(mu)), k, "e")
    direct = sum(c for nu, c in f.terms.items() if len(nu) == r)
    greedy = sum(1 for cols in enumerate_sh_columns(n, k, 0, mu) if r_min_columns(cols) == r)
    return SumByLength(int(direct), alternating_sum(mu, k, r), count_fixed_points(n, k, r, mu), greedy)


def theta_sh_formula(mu, k: int) -> UniPoly:
    """``sum_i K_{SH(i),mu} t (t-1)^i``."""
    mu = tuple(mu)
    n = sum(mu) // k
    out = UniPoly()
    for i in range(n):
        out = out + theta_hook(i) * count_sh(n, k, i, mu)
    return out


# ---------------------------------------------------------------- series in t

class SeriesInT:
    """Truncated power series in ``t`` with symmetric-function coefficients;
    terms of order ``>= order`` are discarded."""

    def __init__(self, coeffs: Sequence[SymFunc], order: int, basis: str = "e"):
        self.order = order
        self.basis = basis
        cs = [convert(c, basis) for c in list(coeffs)[:order]]
        self.coeffs = cs + [SymFunc(basis)] * (order - len(cs))

    def __getitem__(self, i: int) -> SymFunc:
        return self.coeffs[i] if 0 <= i < self.order else SymFunc(self.basis)

    def __add__(self, other: "SeriesInT") -> "SeriesInT":
        n = min(self.order, other.order)
        return SeriesInT([self[i] + other[i] for i in range(n)], n, self.basis)

    def scale(self, c) -> "SeriesInT":
        return SeriesInT([x.scale(c) for x in self.coeffs], self.order, self.basis)

    def __mul__(self, other: "SeriesInT") -> "SeriesInT":
        n = min(self.order, other.order)
        out = [SymFunc(self.basis) for _ in range(n)]
        for i in range(n):
            if not self[i]:
                continue
            for j in range(n - i):
                if other[j]:
                    out[i + j] = out[i + j] + multiply(self[i], other[j])
        return SeriesInT(out, n, self.basis)

    def log(self) -> "SeriesInT":
        """``log(1 + X)`` for a series with constant term 1."""
        one = SymFunc.single(self.basis, ())
        if self[0] != one:
            raise ValueError("log needs constant term 1")
        x = SeriesInT([SymFunc(self.basis)] + self.coeffs[1:], self.order, self.basis)
        out = SeriesInT([], self.order, self.basis)
        power = x
        for j in range(1, self.order):
            out = out + power.scale(Fraction((-1) ** (j + 1), j))
            power = power * x
        return out


def b_series(k: int, order: int) -> SeriesInT:
    """``B_k = sum_m (-1)^m e_{km} t^m`` truncated below ``t^order``."""
    return SeriesInT([SymFunc.single("e", (k * m,) if m else (), (-1) ** m) for m in range(order)], order)


# ---------------------------------------------------------------- f_{k,r}

def f_kr(k: int, r: int) -> SymFunc:
    """Alternating sum over compositions of ``r`` (e basis)."""
    out: dict[Partition, Fraction] = {}
    for alpha in compositions_of(r):
        j = len(alpha)
        lam = sort_partition(scale(alpha, k))
        out[lam] = out.get(lam, 0) + Fraction((-1) ** (r + j) * r, j)
    return SymFunc("e", out)


def f_kr_log(k: int, r: int) -> SymFunc:
    """``-r [t^r] log B_k``."""
    return b_series(k, r + 1).log()[r].scale(-r)


def _count_cyclic_words(content: Sequence[int], k: int) -> int:
    length = sum(content)
    remaining = list(content)
    word = [0] * length

    def rec(pos: int) -> int:
        if pos == length:
            return 1 if word[-1] >= word[0] else 0
        count = 0
        for v in range(len(remaining)):
            if not remaining[v]:
                continue
            if pos % k and v <= word[pos - 1]:
                continue
            if pos and pos % k == 0 and v > word[pos - 1]:
                continue
            remaining[v] -= 1
            word[pos] = v
            count += rec(pos + 1)
            remaining[v] += 1
        return count

    return rec(0)


def f_kr_cyclic(k: int, r: int, nvars: Optional[int] = None) -> SymFunc:
    """Content generating function of (k,r)-cyclic words, m basis.

    Letters lie in ``[nvars]`` (default ``k*r``, which is faithful)."""
    nvars = k * r if nvars is None else nvars
    if nvars < k * r:
        raise ValueError("need nvars >= k*r")
    out = {}
    for mu in partitions_of(k * r, max_length=nvars):
        c = _count_cyclic_words(mu, k)
        if c:
            out[mu] = c
    return SymFunc("m", out)


def f_kr_three_ways(k: int, r: int) -> tuple[SymFunc, SymFunc, SymFunc]:
    return f_kr(k, r), f_kr_log(k, r), f_kr_cyclic(k, r)


# ---------------------------------------------------------------- power sums

def a_coefficient(mu, nu, k: int) -> Fraction:
    """``a^{(k)}_{mu,nu} = [m_mu] prod_j f_{k,nu_j}``."""
    prod_e = SymFunc.single("e", ())
    for r in nu:
        prod_e = multiply(prod_e, f_kr(k, r))
    mu = sort_partition(mu)
    return sum((c * transition_to_m("e", lam, mu) for lam, c in prod_e.terms.items()), Fraction(0))


def p_expansion_omega_rowdiv_e(mu, k: int) -> SymFunc:
    """``sum_nu a^{(k)}_{mu,nu} / z_nu p_nu``."""
    mu = sort_partition(mu)
    _check_divides(k, sum(mu))
    out = {}
    for nu in partitions_of(sum(mu) // k):
        a = a_coefficient(mu, nu, k)
        if a:
            out[nu] = a / z_of(nu)
    return SymFunc("p", out)


def omega_rowdiv_e(mu, k: int) -> SymFunc:
    return omega(rowdiv(SymFunc.single("e", sort_partition(mu)), k, "p"))


def bernoulli_table(n: int) -> list[Fraction]:
    """``B_0 .. B_n`` with ``B_1 = -1/2``."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b


def phi(lam) -> Fraction:
    """``(2n)! prod_i (1/m_i!) (4^i (4^i - 1) B_{2i} / (2i (2i)!))^{m_i}``."""
    lam = tuple(lam)
    n = sum(lam)
    b = bernoulli_table(2 * max(lam, default=0))
    out = Fraction(factorial(2 * n))
    for i in set(lam):
        mi = lam.count(i)
        base = Fraction(4**i * (4**i - 1)) * b[2 * i] / (2 * i * factorial(2 * i))
        out *= base**mi / factorial(mi)
    return out


def a_nk_series(n: int, k: int) -> SymFunc:
    """``A_{n,k}`` from its product generating function, m basis."""
    # 1 / sum_m (-1)^m u^m / (km)!, coefficients g_0..g_n
    a = [Fraction((-1) ** m, factorial(k * m)) for m in range(n + 1)]
    g = [Fraction(1)]
    for j in range(1, n + 1):
        g.append(-sum(a[i] * g[j - i] for i in range(1, j + 1)))
    out = {}
    for mu in partitions_of(n):
        c = Fraction(factorial(n * k))
        for part in mu:
            c *= g[part]
        out[mu] = c
    return SymFunc("m", out)


def ass_check(n: int, k: int = 2) -> bool:
    """p-coefficients of ``omega(rowdiv(e_1^{kn}, k))`` against ``|phi|``."""
    if k != 2:
        warnings.warn("the phi formula is only established for k = 2", stacklevel=2)
    f = omega_rowdiv_e((1,) * (k * n), k)
    return all(f.coeff(lam) == abs(phi(lam)) for lam in partitions_of(n))


# ---------------------------------------------------------------- gamma coefficients

def gamma_coeffs(n: int, k: int) -> list[int]:
    """Solve ``C(nk, mk) = sum_d gamma_d C(n-2d, m-d)`` for ``gamma``."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0, k >= 1")
    g: list[int] = []
    for m in range(n // 2 + 1):
        g.append(comb(n * k, m * k) - sum(g[d] * comb(n - 2 * d, m - d) for d in range(m)))
    if not gamma_identity_holds(n, k, g):
        raise ArithmeticError("gamma system is inconsistent")
    return g


def gamma_identity_holds(n: int, k: int, g: Sequence[int]) -> bool:
    return all(
        comb(n * k, m * k) == sum(g[d] * comb(n - 2 * d, m - d) for d in range(min(m, len(g) - 1) + 1))
        for m in range(n + 1)
    )


def gamma_closed_form_k2(n: int) -> list[int]:
    return [4**d * comb(n, 2 * d) for d in range(n // 2 + 1)]


def gamma_via_rowdiv(n: int, k: int) -> list[int]:
    """``[e_{2^d 1^{n-2d}}] rowdiv(e_1^{kn}, k)``."""
    f = rowdiv(SymFunc.single("e", (1,) * (k * n)), k, "e")
    return [int(f.coeff((2,) * d + (1,) * (n - 2 * d))) for d in range(n // 2 + 1)]


# ---------------------------------------------------------------- two-row support

def two_row_coefficients(c: int, k: int) -> Optional[list[Fraction]]:
    """``[A_0, .., A_c]`` with ``rowdiv(e_c^{2k}, k) = sum_t A_t e_{(c+t, c-t)}``;
    None if the image has other support."""
    f = rowdiv(SymFunc.single("e", (c,) * (2 * k)), k, "e")
    allowed = {sort_partition((c + t, c - t)): t for t in range(c + 1)}
    if any(lam not in allowed for lam in f.terms):
        return None
    return [f.coeff(sort_partition((c + t, c - t))) for t in range(c + 1)]


def two_row_support_check(c: int, k: int) -> bool:
    a = two_row_coefficients(c, k)
    b = two_row_coefficients(c + 1, k)
    return a is not None and b is not None and a == b[:c + 1]


# ---------------------------------------------------------------- determinants

def _h_entry(parts: Sequence[int]) -> SymFunc:
    if any(x < 0 for x in parts):
        return SymFunc("h")
    return SymFunc.single("h", sort_partition(parts))


def _det(matrix: Sequence[Sequence[SymFunc]]) -> SymFunc:
    size = len(matrix)
    out = SymFunc("h", {(): 1}) if size == 0 else SymFunc("h")
    for perm in permutations(range(size)):
        term = SymFunc("h", {(): 1})
        for i, j in enumerate(perm):
            term = multiply(term, matrix[i][j])
            if not term:
                break
        if term:
            inversions = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
            out = out + term.scale((-1) ** inversions)
    return out


def star_product_det(lams: Sequence[Partition]) -> SymFunc:
    """``det`` of the star product of the Jacobi-Trudi matrices (h basis)."""
    l = max((len(x) for x in lams), default=0)
    padded_lams = [padded(x, l) for x in lams]
    k = len(lams)
    matrix = [
        [_h_entry([sum(x[i] for x in padded_lams) - k * i + k * j]) for j in range(l)]
        for i in range(l)
    ]
    return _det(matrix)


def star_product_shape(lams: Sequence[Partition]) -> SkewShape:
    l = max((len(x) for x in lams), default=0)
    k = len(lams)
    rho = padded(staircase(l), l)
    total = [sum(padded(x, l)[i] for x in lams) for i in range(l)]
    return skew_shape([total[i] + (k - 1) * rho[i] for i in range(l)], [(k - 1) * r for r in rho])


def star_product_check(lams: Sequence[Partition]) -> bool:
    return convert(star_product_det(lams), "s") == skew_schur(star_product_shape(lams))


def hadamard_adjoint(lam, k: int) -> SymFunc:
    """``det`` of the k-th Hadamard power of ``H(lam)`` (h basis)."""
    lam = tuple(lam)
    l = len(lam)
    matrix = [[_h_entry([lam[i] - i + j] * k) for j in range(l)] for i in range(l)]
    return _det(matrix)


def schur_coefficient(f: SymFunc, lam) -> Fraction:
    """``[s_lam] f`` for ``f`` in the h basis, via Kostka numbers."""
    if f.basis != "h":
        f = convert(f, "h")
    lam = tuple(lam)
    return sum((c * kostka(lam, nu) for nu, c in f.terms.items() if sum(nu) == sum(lam)), Fraction(0))


# ---------------------------------------------------------------- scans

def _e_positivity_task(args):
    mu, k = args
    f = rowdiv(SymFunc.single("e", mu), k, "e")
    bad = any(c < 0 for c in f.terms.values())
    return mu, bad, f


def e_positivity_scan(nmax: int, k: int, workers: int = 1) -> dict:
    """Test e-positivity of ``rowdiv(e_mu, k)`` for every ``mu |- kn``, ``n <= nmax``."""
    tasks = [(mu, k) for n in range(1, nmax + 1) for mu in partitions_of(k * n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_e_positivity_task, tasks))
    else:
        results = [_e_positivity_task(t) for t in tasks]
    violations = [{"mu": list(mu), "expansion": f.to_json()} for mu, bad, f in results if bad]
    return {"k": k, "nmax": nmax, "checked": len(results), "violations": violations}
