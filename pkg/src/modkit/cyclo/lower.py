"""Rewriting cyclotomic numbers over the smallest possible field Q(zeta_M)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .number import CycNum, _reduce
from .polys import lcm, phi_degree_of, prime_factors


@lru_cache(maxsize=None)
def _section(n: int, m: int):
    """Left inverse of the lift Q(zeta_m) -> Q(zeta_n) restricted to pivot rows.

    Returns ``(pivot_rows, inverse)`` where ``inverse`` maps the pivot-row
    coefficients of a lifted value back to its reduced coefficients mod Phi_m.
    """
    dn, dm = phi_degree_of(n), phi_degree_of(m)
    step = n // m
    cols = []
    for u in range(dm):
        col = [Fraction(0)] * dn
        for k, c in _reduce(n, [(u * step, 1)]).items():
            col[k] = Fraction(c)
        cols.append(col)
    # rows of the dn x dm matrix
    mat = [[cols[u][r] for u in range(dm)] for r in range(dn)]
    pivots: list[int] = []
    basis: list[list[Fraction]] = []
    # greedy row selection via incremental elimination
    reduced: list[tuple[int, list[Fraction]]] = []
    for r in range(dn):
        v = list(mat[r])
        for pc, pv in reduced:
            if v[pc]:
                f = v[pc] / pv[pc]
                v = [a - f * b for a, b in zip(v, pv)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is not None:
            reduced.append((lead, v))
            pivots.append(r)
            basis.append(mat[r])
            if len(pivots) == dm:
                break
    # invert the dm x dm pivot block by Gauss-Jordan
    aug = [row[:] + [Fraction(int(i == j)) for j in range(dm)] for i, row in enumerate(basis)]
    for col in range(dm):
        piv = next(r for r in range(col, dm) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [a / pv for a in aug[col]]
        for r in range(dm):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    inverse = tuple(tuple(row[dm:]) for row in aug)
    return tuple(pivots), inverse


def lower(x: CycNum, m: int) -> CycNum | None:
    """``x`` rewritten over Q(zeta_m), or None if ``x`` is not in that field."""
    n = x.conductor
    if n % m:
        raise ValueError(f"{m} does not divide conductor {n}")
    if m == n:
        return x
    if x.is_rational():
        return CycNum.rational(x.to_fraction(), m)
    step = n // m
    if all(e % step == 0 for e, _ in x.terms):
        return CycNum._build(m, _reduce(m, [(e // step, c) for e, c in x.terms]), x.den)
    pivots, inverse = _section(n, m)
    coeffs = dict(x.terms)
    rhs = [Fraction(coeffs.get(r, 0), x.den) for r in pivots]
    y = {u: sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for u, row in enumerate(inverse)}
    cand = CycNum(m, y)
    return cand if cand.lift(n) == x else None


def minimal_conductor(values: Iterable[CycNum]) -> tuple[int, list[CycNum]]:
    """Smallest M with every value in Q(zeta_M), and the values rewritten over it."""
    vals = list(values)
    n = 1
    for v in vals:
        n = lcm(n, v.conductor)
    vals = [v.lift(n) for v in vals]
    uniq: dict[tuple, CycNum] = {}
    for v in vals:
        uniq.setdefault(v.key(), v)
    progress = True
    while progress and n > 1:
        progress = False
        for p in prime_factors(n):
            m = n // p
            lowered = {}
            for k, v in uniq.items():
                w = lower(v, m)
                if w is None:
                    break
                lowered[k] = w
            else:
                vals = [lowered[v.key()] for v in vals]
                uniq = {v.key(): v for v in vals}
                n = m
                progress = True
                break
    return n, vals


def common_conductor(values: Sequence[CycNum]) -> int:
    n = 1
    for v in values:
        n = lcm(n, v.conductor)
    return n
